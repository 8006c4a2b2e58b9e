#!/usr/bin/python
# -*- coding: utf-8 -*- 

# Copyright (c) 2026, so3sr developers
# All rights reserved. 
# 
# Redistribution and use in source and binary forms, with or without 
# modification, are permitted provided that the following conditions are met: 
# 
#     * Redistributions of source code must retain the above copyright notice, 
#       this list of conditions and the following disclaimer. 
#     * Redistributions in binary form must reproduce the above copyright 
#       notice,this list of conditions and the following disclaimer in the 
#       documentation and/or other materials provided with the distribution. 
#     * Neither the name of the copyright holder nor the names of its 
#       contributors may be used to endorse or promote products derived from 
#       this software without specific prior written permission. 
# 
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS" 
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE 
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE 
# ARE DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT OWNER OR CONTRIBUTORS BE 
# LIABLE FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR 
# CONSEQUENTIAL DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF 
# SUBSTITUTE GOODS OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS 
# INTERRUPTION) HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN 
# CONTRACT, STRICT LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) 
# ARISING IN ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE 
# POSSIBILITY OF SUCH DAMAGE. 

"""
Wigner D-functions and moment vectors of point measures.

C{D^l_{k,m}(alpha, beta, gamma) = e^{-ik alpha} P^l_{k,m}(cos beta) e^{-im gamma}}
in Euler ZXZ angles, with C{P^l_{k,m}(cos beta) = i^{k-m} d^l_{k,m}(beta)}.
The real small-d matrices come from an upward three-term recursion in C{l},
seeded on the border C{max(|k|, |m|) = l} by the closed forms evaluated in
log space.

@group Small d:
    iterSmallD, smallD

@group D-functions:
    wignerDRow, wignerD, wignerDMatrix, momentMatrix

@group Zonal identities:
    additionKernel, additionKernelSum

@group Moments:
    MomentVector, PointMeasure, moments, momentCount, momentIndex
"""

__revision__ = "$Id$"

__all__ = [
           "iterSmallD",
           "smallD",
           "wignerDRow",
           "wignerD",
           "wignerDMatrix",
           "momentMatrix",
           "additionKernel",
           "additionKernelSum",
           "MomentVector",
           "PointMeasure",
           "moments",
           "momentCount",
           "momentIndex",
           ]

from . import consts
from . import excep
from . import so3core
from . import utils

import csv
import logging
import math

import numpy as np
from scipy import special

logger = logging.getLogger(__name__)

_IPOW = np.array([1.0, 1.0j, -1.0, -1.0j])

def _checkDegree(l):
    if l < 0:
        raise excep.DomainException("degree must be non-negative, got %r" % (l,))
    if l > consts.MAX_DEGREE:
        raise excep.CapabilityException("degree %d exceeds the supported maximum %d" % (l, consts.MAX_DEGREE))

def _border(l, cosHalf, sinHalf):
    """
    Closed forms on the border of the order-C{l} matrix.

    C{E(l, m) = (-1)^{l-m} sqrt(C(2l, l+m)) cos^{l+m}(beta/2) sin^{l-m}(beta/2)} is
    the row C{k = l}; the other three sides follow from
    C{d_{k,m} = (-1)^{m-k} d_{m,k} = d_{-m,-k}}.
    """
    m = np.arange(-l, l + 1)
    logBinom = 0.5 * (special.gammaln(2 * l + 1) - special.gammaln(l + m + 1) - special.gammaln(l - m + 1))
    logs = logBinom + special.xlogy((l + m)[np.newaxis], cosHalf[:, np.newaxis]) + special.xlogy((l - m)[np.newaxis], sinHalf[:, np.newaxis])
    return np.where((l - m) % 2 == 0, 1.0, -1.0) * np.exp(logs)

def iterSmallD(lmax, beta):
    """
    Yields C{(l, d)} for C{l = 0..lmax}, where C{d[n, k+l, m+l] = d^l_{k,m}(beta[n])}.

    @type lmax: int
    @param lmax: Largest degree, at most 128.

    @type beta: array-like
    @param beta: Angles in M{[0, pi]}.

    @raise CapabilityException: C{lmax} above 128.
    """
    _checkDegree(lmax)
    beta = np.atleast_1d(np.asarray(beta, dtype=float))
    cosBeta = np.cos(beta)
    cosHalf = np.cos(0.5 * beta)
    sinHalf = np.sin(0.5 * beta)
    n = len(beta)

    previous = np.ones((n, 1, 1))
    yield 0, previous
    if lmax == 0:
        return
    older = None
    for l in range(1, lmax + 1):
        size = 2 * l + 1
        current = np.zeros((n, size, size))
        if l >= 2:
            k = np.arange(-(l - 1), l)
            kk, mm = np.meshgrid(k, k, indexing="ij")
            a = (2 * l - 1) * ((l - 1) * l * cosBeta[:, None, None] - (kk * mm)[None])
            b = l * np.sqrt(((l - 1) ** 2 - kk ** 2) * ((l - 1) ** 2 - mm ** 2))
            denom = (l - 1) * np.sqrt((l * l - kk ** 2) * (l * l - mm ** 2))
            padded = np.zeros((n, 2 * l - 1, 2 * l - 1))
            padded[:, 1:-1, 1:-1] = older
            inner = a * previous - b[None] * padded
            current[:, 1:-1, 1:-1] = inner / denom[None]
        else:
            current[:, 1, 1] = cosBeta
        edge = _border(l, cosHalf, sinHalf)
        m = np.arange(-l, l + 1)
        current[:, -1, :] = edge
        current[:, :, -1] = np.where((l - m) % 2 == 0, 1.0, -1.0) * edge
        reflected = edge[:, ::-1]
        current[:, 0, :] = np.where((l + m) % 2 == 0, 1.0, -1.0) * reflected
        current[:, :, 0] = reflected
        older, previous = previous, current
        yield l, current

def smallD(l, beta):
    """Real matrix C{d^l(beta)} indexed C{[k+l, m+l]}."""
    for degree, d in iterSmallD(l, [beta]):
        if degree == l:
            return d[0]

def _phase(l):
    k = np.arange(-l, l + 1)
    return _IPOW[np.subtract.outer(k, k) % 4]

def wignerDRow(l, beta):
    """
    Matrix of C{P^l_{k,m}(cos beta)} for C{-l <= k, m <= l}.

    @type l: int
    @param l: Degree, at most 128.

    @type beta: float
    @param beta: Angle in M{[0, pi]}.

    @rtype: ndarray
    @return: Complex C{(2l+1, 2l+1)} matrix indexed C{[k+l, m+l]}.

    @raise CapabilityException: Degree beyond 128.
    @raise DomainException: Angle outside M{[0, pi]}.
    """
    _checkDegree(l)
    if not 0.0 <= beta <= math.pi:
        raise excep.DomainException("beta must lie in [0, pi], got %r" % (beta,))
    return _phase(l) * smallD(l, beta)

def wignerDMatrix(l, x):
    """The full matrix C{D^l(x)} indexed C{[k+l, m+l]}."""
    euler = so3core.eulerOf(x)
    k = np.arange(-l, l + 1)
    left = np.exp(-1j * k * euler.alpha)
    right = np.exp(-1j * k * euler.gamma)
    return left[:, None] * wignerDRow(l, euler.beta) * right[None, :]

def wignerD(l, k, m, x):
    """
    A single Wigner D-function value C{D^l_{k,m}(x)}.

    @raise DomainException: Index out of range.
    """
    if l < 0 or abs(k) > l or abs(m) > l:
        raise excep.DomainException("need |k|, |m| <= l, got (l, k, m) = (%r, %r, %r)" % (l, k, m))
    return complex(wignerDMatrix(l, x)[k + l, m + l])

def additionKernel(l, omega):
    """
    Character C{chi_l(omega) = sin((2l+1) omega/2)/sin(omega/2) = U_{2l}(cos(omega/2))},
    equal to C{2l+1} at C{omega = 0}.
    """
    return special.eval_chebyu(2 * l, np.cos(0.5 * np.asarray(omega, dtype=float)))

def additionKernelSum(N, omega):
    """
    C{sum_{l<=N} chi_l(omega) = sin^2((N+1) omega/2)/sin^2(omega/2)}, which is
    C{(N+1)^2} at C{omega = 0}.
    """
    return special.eval_chebyu(N, np.cos(0.5 * np.asarray(omega, dtype=float))) ** 2

def momentCount(N):
    """Number of moments up to degree C{N}, C{(N+1)(2N+1)(2N+3)/3}."""
    return (N + 1) * (2 * N + 1) * (2 * N + 3) // 3

def momentIndex(l, k, m):
    """Position of C{(l, k, m)} in lexicographic storage order."""
    return l * (2 * l - 1) * (2 * l + 1) // 3 + (k + l) * (2 * l + 1) + (m + l)

def momentMatrix(rotations, N, workers=None):
    """
    Columns C{(D^l_{k,m}(g_j))} for a stack of rotations, rows in lexicographic
    C{(l, k, m)} order.

    @type rotations: list or ndarray
    @param rotations: L{Rotation} list, L{SupportSet} or C{(G, 3, 3)} array.

    @type N: int
    @param N: Degree.

    @rtype: ndarray
    @return: Complex matrix of shape C{(momentCount(N), G)}.
    """
    _checkDegree(N)
    mats = so3core.asMatrices(rotations)
    G = len(mats)
    out = np.empty((momentCount(N), G), dtype=complex)
    if G == 0:
        return out
    alpha, beta, gamma = so3core.eulerArrays(mats)

    def fill(start, stop):
        offset = 0
        for l, d in iterSmallD(N, beta[start:stop]):
            k = np.arange(-l, l + 1)
            left = np.exp(-1j * np.outer(alpha[start:stop], k))
            right = np.exp(-1j * np.outer(gamma[start:stop], k))
            block = left[:, :, None] * _phase(l)[None] * d * right[:, None, :]
            size = (2 * l + 1) ** 2
            out[offset:offset + size, start:stop] = block.reshape(stop - start, size).T
            offset += size

    utils.mapChunks(fill, G, consts.WIGNER_CHUNK, workers)
    return out

class MomentVector(object):
    """
    Moments C{<mu, D^l_{k,m}>} for C{l <= N}, stored in lexicographic C{(l, k, m)} order.
    """
    def __init__(self, degree, entries):
        """
        @type degree: int
        @param degree: Maximal degree C{N}.

        @type entries: array-like
        @param entries: Complex values, C{momentCount(N)} of them.

        @raise DomainException: Wrong number of entries.
        """
        self.degree = int(degree)
        self.entries = np.array(entries, dtype=complex)
        if self.entries.shape != (momentCount(self.degree),):
            raise excep.DomainException("degree %d needs %d entries, got %r" % (self.degree, momentCount(self.degree), self.entries.shape))
        self.entries.setflags(write=False)

    def __len__(self):
        return len(self.entries)

    def __add__(self, other):
        self._checkCompatible(other)
        return MomentVector(self.degree, self.entries + other.entries)

    def __sub__(self, other):
        self._checkCompatible(other)
        return MomentVector(self.degree, self.entries - other.entries)

    def __mul__(self, scalar):
        return MomentVector(self.degree, self.entries * scalar)

    __rmul__ = __mul__

    def _checkCompatible(self, other):
        if not isinstance(other, MomentVector) or other.degree != self.degree:
            raise excep.DomainException("moment vectors must share the same degree")

    def entry(self, l, k, m):
        if not 0 <= l <= self.degree or abs(k) > l or abs(m) > l:
            raise excep.DomainException("no moment (%r, %r, %r) up to degree %d" % (l, k, m, self.degree))
        return complex(self.entries[momentIndex(l, k, m)])

    def norm(self):
        return float(np.linalg.norm(self.entries))

    def truncate(self, degree):
        """Moments up to a lower degree (a prefix in storage order)."""
        if not 0 <= degree <= self.degree:
            raise excep.DomainException("cannot truncate degree %d moments to degree %r" % (self.degree, degree))
        return MomentVector(degree, self.entries[:momentCount(degree)])

    def labels(self):
        """Yields C{(l, k, m)} in storage order."""
        for l in range(self.degree + 1):
            for k in range(-l, l + 1):
                for m in range(-l, l + 1):
                    yield l, k, m

    def rows(self):
        for (l, k, m), value in zip(self.labels(), self.entries):
            yield l, k, m, float(value.real), float(value.imag)

    def toCsv(self, path):
        """Writes columns C{l,k,m,re,im}, one row per entry."""
        utils.writeCsvAtomic(path, ["l", "k", "m", "re", "im"], self.rows())

    @classmethod
    def fromCsv(cls, path):
        """
        Reads a file written by L{toCsv}.

        @raise DomainException: Rows out of storage order or incomplete.
        """
        values = []
        with open(path, "r") as stream:
            reader = csv.DictReader(stream)
            for row in reader:
                values.append((int(row["l"]), int(row["k"]), int(row["m"]), float(row["re"]) + 1j * float(row["im"])))
        degree = values[-1][0] if values else 0
        vector = cls(degree, [v[3] for v in values]) if len(values) == momentCount(degree) else None
        if vector is None or [v[:3] for v in values] != list(vector.labels()):
            raise excep.DomainException("%s does not hold complete lexicographic moments" % path)
        return vector

class PointMeasure(object):
    """
    Discrete measure C{sum_i c_i delta_{x_i}} with pairwise distinct centers and
    real coefficients.
    """
    def __init__(self, centers, coeffs):
        """
        @type centers: L{SupportSet} or list
        @param centers: Support points.

        @type coeffs: array-like
        @param coeffs: One real coefficient per center.

        @raise DomainException: Length mismatch or repeated centers.
        """
        if not isinstance(centers, so3core.SupportSet):
            centers = so3core.SupportSet(centers)
        coeffs = np.array(coeffs, dtype=float).reshape(-1)
        if len(coeffs) != len(centers):
            raise excep.DomainException("%d coefficients for %d centers" % (len(coeffs), len(centers)))
        if len(centers) > 1 and not centers.separation > 0.0:
            raise excep.DomainException("centers of a point measure must be pairwise distinct")
        coeffs.setflags(write=False)
        self.centers = centers
        self.coeffs = coeffs

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return "PointMeasure(%d spikes, tv=%r)" % (len(self), self.tvNorm())

    def tvNorm(self):
        return float(np.sum(np.abs(self.coeffs)))

    def scaled(self, factor):
        return PointMeasure(self.centers, factor * self.coeffs)

def moments(mu, N):
    """
    Moments C{sum_i c_i D^l_{k,m}(x_i)} for C{l <= N}.

    @type mu: L{PointMeasure}

    @type N: int
    @param N: Degree.

    @rtype: L{MomentVector}
    """
    if N < 0:
        raise excep.DomainException("degree must be non-negative, got %r" % (N,))
    entries = momentMatrix(mu.centers, N).dot(mu.coeffs.astype(complex))
    entries[0] = math.fsum(mu.coeffs)
    return MomentVector(N, entries)
