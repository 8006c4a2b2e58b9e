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
The localized zonal kernel C{sigma_N(x, y) = sigma~_N(omega(y^{-1} x))} and its
derivative kernels, plus numerical verification of the localization bounds.

Notation: C{A = y^{-1} x} with angle C{omega} and axis C{e}; C{f = sigma~_N};
C{c(omega) = (1 + cos omega)/(2 sin omega)}; C{P = I - e e^T};
C{E_ab = eps_abk e_k}. Derivatives are C{X_i^x} (right translation of C{x}) and
C{X_n^y} (right translation of C{y}).

@group Kernel:
    ZonalKernel, KernelJet, buildKernel, rotationAxisDerivative, LEVI_CIVITA

@group Verification:
    BoundCheck, LocalizationReport, verifyLocalization, OffdiagReport,
    verifyOffdiagSums, thirdPattern
"""

__revision__ = "$Id$"

__all__ = [
           "ZonalKernel",
           "KernelJet",
           "buildKernel",
           "rotationAxisDerivative",
           "LEVI_CIVITA",
           "thirdPattern",
           "BoundCheck",
           "LocalizationReport",
           "verifyLocalization",
           "OffdiagReport",
           "verifyOffdiagSums",
           ]

from . import caching
from . import consts
from . import excep
from . import filters
from . import so3core
from . import utils
from . import wigner

from collections import OrderedDict
import logging
import math
import warnings

import numpy as np

logger = logging.getLogger(__name__)

# X_i^x e_n = c (delta_in - e_i e_n) + sign/2 e_j for the pair (i, n) -> (sign, j)
_AXIS_TABLE = {
    (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
    (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }

def _leviCivita():
    eps = np.zeros((3, 3, 3))
    for (i, n), (sign, j) in _AXIS_TABLE.items():
        eps[i - 1, n - 1, j - 1] = sign
    eps.setflags(write=False)
    return eps

LEVI_CIVITA = _leviCivita()

def rotationAxisDerivative(e, omega):
    """
    The table C{T[i, n] = X_i^x e_n(y^{-1} x)} for a relative rotation with
    axis C{e} and angle C{omega}.

    @type e: array-like
    @param e: Unit axis.

    @type omega: float
    @param omega: Angle in M{(0, pi]}.

    @rtype: ndarray
    @return: 3x3 array indexed C{[i-1, n-1]}.

    @raise DomainException: C{omega} too close to 0, where the axis is not differentiable.
    """
    if not consts.SMALL_ANGLE <= omega <= math.pi:
        raise excep.DomainException("the rotation axis is differentiable for omega in (0, pi], got %r" % (omega,))
    e = np.asarray(e, dtype=float)
    c = 0.5 / math.tan(0.5 * omega)
    table = np.empty((3, 3))
    for i in range(1, 4):
        for n in range(1, 4):
            if i == n:
                table[i - 1, n - 1] = c * (1.0 - e[i - 1] ** 2)
            else:
                sign, j = _AXIS_TABLE[(i, n)]
                table[i - 1, n - 1] = -c * e[i - 1] * e[n - 1] + 0.5 * sign * e[j - 1]
    return table

_PATTERNS = ("iik", "iii", "jin", "jii", "jij")

def thirdPattern(pattern):
    """
    Classifies an index triple C{(j, i, k)} (1-based) of a third derivative
    C{X_j^x X_i^x X_k^y sigma}.

    C{"iik"} and C{"iii"} are the plain diagonal terms; C{"jin"}, C{"jii"} and
    C{"jij"} (with C{j != i}) are the combinations corrected by
    C{-1/2 eps_jin X_n^x X_k^y sigma}.

    @raise DomainException: Not a triple of indices in 1..3.
    """
    try:
        j, i, k = [int(v) for v in pattern]
    except (TypeError, ValueError):
        raise excep.DomainException("a third-derivative pattern is an index triple (j, i, k), got %r" % (pattern,))
    if not all(1 <= v <= 3 for v in (j, i, k)):
        raise excep.DomainException("pattern indices must lie in 1..3, got %r" % (pattern,))
    if j == i:
        return "iii" if k == i else "iik"
    if k == i:
        return "jii"
    if k == j:
        return "jij"
    return "jin"

def _single(x):
    return isinstance(x, so3core.Rotation) or np.ndim(x) == 2

def _stack(x):
    return so3core.asMatrices(x)

class KernelJet(object):
    """
    Values C{sigma~, sigma~', sigma~'', sigma~'''} at the angles of a stack of
    relative rotations, plus the regularized coefficient functions the
    derivative kernels are built from.

    Below C{omega = 1e-6} the coefficients containing C{c(omega)} come from their
    Taylor series in C{f''(0)} and C{f''''(0)}.
    """
    def __init__(self, omega, axis, values, zero):
        """
        @type omega: ndarray
        @param omega: Angles.

        @type axis: ndarray
        @param axis: Axes, shape C{omega.shape + (3,)}.

        @type values: tuple
        @param values: C{(st0, st1, st2, st3)} at C{omega}.

        @type zero: tuple
        @param zero: C{(f''(0), f''''(0))}.
        """
        self.omega = omega
        self.axis = axis
        self.st0, self.st1, self.st2, self.st3 = values
        f2, f4 = zero
        small = omega < consts.SMALL_ANGLE
        safe = np.where(small, 1.0, omega)
        c = 0.5 / np.tan(0.5 * safe)
        dc = -0.25 / np.sin(0.5 * safe) ** 2
        o2 = omega * omega
        st1, st2 = self.st1, self.st2
        self.fc = np.where(small, f2 + o2 * (f4 / 6.0 - f2 / 12.0), st1 * c)
        self.a2 = np.where(small, omega * (f2 / 12.0 + f4 / 3.0), st2 * c - st1 * c * c)
        self.a3 = np.where(small, omega * (-f2 / 6.0 + f4 / 3.0), st2 * c + st1 * dc)
        self.a4 = np.where(small, o2 * (f4 / 3.0 + f2 / 12.0), st2 - st1 * c)

    def projector(self):
        e = self.axis
        return np.eye(3) - e[..., :, None] * e[..., None, :]

    def cross(self):
        return np.einsum("abk,...k->...ab", LEVI_CIVITA, self.axis)

class ZonalKernel(object):
    """
    Kernel of a filter. Accepts single L{so3core.Rotation} values or stacks of
    matrices for C{x} and C{y}; the pair dimensions broadcast.
    """
    def __init__(self, spec):
        """
        @type spec: L{filters.FilterSpec}
        @param spec: The filter.
        """
        self.spec = spec
        self.s = spec.s
        self.N = spec.N
        self.coefficients = spec.cosineWeights
        self.frequencies = np.arange(spec.N + 1, dtype=float)
        self.zero = (spec.evenDerivativeAtZero(2), spec.evenDerivativeAtZero(4))

    def __repr__(self):
        return "ZonalKernel(s=%d, N=%d)" % (self.s, self.N)

    def derivativeAtZero(self, order):
        """
        C{sigma~^{(order)}(0)}: zero for odd orders, the direct cosine sum for
        even orders up to 6.

        @raise CapabilityException: C{order > 6}.
        """
        if order < 0:
            raise excep.DomainException("derivative order must be non-negative, got %r" % (order,))
        if order > consts.MAX_ZERO_ORDER:
            raise excep.CapabilityException("derivatives at zero are available up to order %d, got %d" % (consts.MAX_ZERO_ORDER, order))
        if order % 2:
            return 0.0
        return self.spec.evenDerivativeAtZero(order)

    def values(self, t):
        """
        C{(sigma~, sigma~', sigma~'', sigma~''')} at the angles C{t}.

        @rtype: ndarray
        @return: Array of shape C{(4,) + t.shape}.
        """
        t = np.asarray(t, dtype=float)
        flat = t.ravel()
        k = self.frequencies
        w = self.coefficients
        weights = np.stack([w, -w * k, -w * k ** 2, w * k ** 3])
        out = np.empty((4, flat.size))
        for start in range(0, flat.size, consts.KERNEL_CHUNK):
            stop = min(start + consts.KERNEL_CHUNK, flat.size)
            kt = np.multiply.outer(flat[start:stop], k)
            cos = np.cos(kt)
            sin = np.sin(kt)
            out[0, start:stop] = cos.dot(weights[0])
            out[1, start:stop] = sin.dot(weights[1])
            out[2, start:stop] = cos.dot(weights[2])
            out[3, start:stop] = sin.dot(weights[3])
        return out.reshape((4,) + t.shape)

    def sigmaTilde(self, t, order=0):
        """
        C{sigma~_N^{(order)}(t)} by direct cosine summation.

        @type t: float or ndarray
        @param t: Angles in radians.

        @type order: int
        @param order: Derivative order 0..3.

        @raise CapabilityException: C{order > 3}.
        """
        if order < 0:
            raise excep.DomainException("derivative order must be non-negative, got %r" % (order,))
        if order > consts.MAX_DERIVATIVE_ORDER:
            raise excep.CapabilityException("sigma~ derivatives are available up to order %d, got %d" % (consts.MAX_DERIVATIVE_ORDER, order))
        value = self.values(t)[order]
        return float(value) if np.ndim(value) == 0 else value

    def jet(self, x, y):
        """
        L{KernelJet} of the pairs C{(x, y)}.
        """
        relative = np.matmul(np.swapaxes(_stack(y), -1, -2), _stack(x))
        if _single(x) and _single(y):
            relative = relative[0]
        axis, omega = so3core.axisAngleArrays(relative)
        return KernelJet(omega, axis, tuple(self.values(omega)), self.zero)

    def sigma(self, x, y):
        """C{sigma_N(x, y)}."""
        jet = self.jet(x, y)
        value = jet.st0
        return float(value) if np.ndim(value) == 0 else value

    def gradY(self, x, y, jet=None):
        """C{(X_n^y sigma_N(x, y))_n = -sigma~'(omega) e}."""
        jet = jet or self.jet(x, y)
        return -jet.st1[..., None] * jet.axis

    def gradX(self, x, y, jet=None):
        """C{(X_n^x sigma_N(x, y))_n = sigma~'(omega) e}."""
        jet = jet or self.jet(x, y)
        return jet.st1[..., None] * jet.axis

    def mixed(self, x, y, jet=None):
        """
        C{M[i, n] = X_i^x X_n^y sigma_N = -f'' e_i e_n - f' c P_in - f'/2 E_in}.
        At C{x = y} this is C{-sigma~''(0) I}.
        """
        jet = jet or self.jet(x, y)
        e = jet.axis
        return (-jet.st2[..., None, None] * e[..., :, None] * e[..., None, :]
                - jet.fc[..., None, None] * jet.projector()
                - 0.5 * jet.st1[..., None, None] * jet.cross())

    def mixedSigma(self, x, y, i, n):
        """
        A single mixed derivative C{X_i^x X_n^y sigma_N(x, y)}, axes 1..3.
        """
        so3core.generator(i)
        so3core.generator(n)
        value = self.mixed(x, y)[..., i - 1, n - 1]
        return float(value) if np.ndim(value) == 0 else value

    def secondX(self, x, y, jet=None):
        """C{S[j, i] = X_j^x X_i^x sigma_N = f'' e_j e_i + f' c P_ji + f'/2 E_ji}."""
        jet = jet or self.jet(x, y)
        e = jet.axis
        return (jet.st2[..., None, None] * e[..., :, None] * e[..., None, :]
                + jet.fc[..., None, None] * jet.projector()
                + 0.5 * jet.st1[..., None, None] * jet.cross())

    def hessianSigma(self, x, y, jet=None):
        """
        Hessian of C{sigma_N(., y)} at C{x}: C{X_j X_i - 1/2 eps_jik X_k}, which is
        the symmetric matrix C{f'' e e^T + f' c P}.
        """
        jet = jet or self.jet(x, y)
        e = jet.axis
        return (jet.st2[..., None, None] * e[..., :, None] * e[..., None, :]
                + jet.fc[..., None, None] * jet.projector())

    def third(self, x, y, jet=None):
        """
        C{T[j, i, n] = X_j^x X_i^x X_n^y sigma_N}, shape C{(..., 3, 3, 3)}.
        """
        jet = jet or self.jet(x, y)
        e = jet.axis
        P = jet.projector()
        E = jet.cross()
        eee = np.einsum("...j,...i,...n->...jin", e, e, e)
        pe = np.einsum("...ji,...n->...jin", P, e) + np.einsum("...i,...jn->...jin", e, P)
        ep = np.einsum("...j,...in->...jin", e, P)
        ee = np.einsum("...ji,...n->...jin", E, e) + np.einsum("...i,...jn->...jin", e, E)
        eE = np.einsum("...j,...in->...jin", e, E)
        epsP = np.einsum("ink,...jk->...jin", LEVI_CIVITA, P)
        epsE = np.einsum("ink,...jk->...jin", LEVI_CIVITA, E)

        def w(a):
            return a[..., None, None, None]

        return (-w(jet.st3) * eee - w(jet.a2) * pe - w(jet.a3) * ep
                - 0.5 * w(jet.a4) * ee - 0.5 * w(jet.st2) * eE
                - 0.5 * w(jet.fc) * epsP - 0.25 * w(jet.st1) * epsE)

    def correctedThird(self, x, y, jet=None):
        """
        C{C[j, i, k] = X_j^x X_i^x X_k^y sigma_N - 1/2 eps_jin X_n^x X_k^y sigma_N}:
        the Hessian in C{x} of C{X_k^y sigma_N(x, y)}. It vanishes at C{x = y}.
        """
        jet = jet or self.jet(x, y)
        return self.third(x, y, jet) - 0.5 * np.einsum("jin,...nk->...jik", LEVI_CIVITA, self.mixed(x, y, jet))

    def thirdSigmaTerms(self, x, y, pattern):
        """
        One third-derivative combination.

        @type pattern: tuple
        @param pattern: C{(j, i, k)}, 1-based. For C{j == i} the plain term
            C{X_i^x X_i^x X_k^y sigma_N}; otherwise the corrected combination
            C{X_j^x X_i^x X_k^y sigma_N - 1/2 eps_jin X_n^x X_k^y sigma_N}.

        @raise DomainException: Unknown pattern.
        """
        kind = thirdPattern(pattern)
        j, i, k = [int(v) - 1 for v in pattern]
        jet = self.jet(x, y)
        tensor = self.third(x, y, jet) if kind in ("iik", "iii") else self.correctedThird(x, y, jet)
        value = tensor[..., j, i, k]
        return float(value) if np.ndim(value) == 0 else value

    def sigmaFromWigner(self, x, y):
        """
        C{sum_l h_N(l) sum_{k,m} D^l_{k,m}(x) conj(D^l_{k,m}(y))}, the kernel
        through its Wigner expansion.
        """
        total = 0.0
        for l, h in enumerate(self.spec.weights):
            total += h * np.vdot(wigner.wignerDMatrix(l, y), wigner.wignerDMatrix(l, x)).real
        return float(total)

@caching.cached("kernel")
def buildKernel(s, N):
    """
    Builds (or fetches) the kernel for C{(s, N)}.

    @rtype: L{ZonalKernel}
    """
    return ZonalKernel(filters.filterSpec(s, N))

class BoundCheck(object):
    """Worst ratio measured/bound of one inequality over a sample set."""
    def __init__(self, name, s, N, worstRatio, argAtWorst, samples, applicable=True):
        self.name = name
        self.s = s
        self.N = N
        self.worstRatio = worstRatio
        self.argAtWorst = argAtWorst
        self.samples = samples
        self.applicable = applicable

    def __repr__(self):
        return "BoundCheck(%s, ratio=%r)" % (self.name, self.worstRatio)

    @property
    def holds(self):
        return (not self.applicable) or self.worstRatio <= 1.0

    def row(self):
        if not self.applicable:
            return [self.name, self.s, self.N, "not applicable", "not applicable"]
        return [self.name, self.s, self.N, self.worstRatio, self.argAtWorst]

class LocalizationReport(object):
    """Result of L{verifyLocalization}."""
    header = ["bound_name", "s", "N", "worst_ratio", "arg_at_worst"]

    def __init__(self, checks):
        self.checks = list(checks)

    def __iter__(self):
        return iter(self.checks)

    def __getitem__(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def passed(self):
        return all(check.holds for check in self.checks)

    @property
    def violations(self):
        return [check for check in self.checks if not check.holds]

    def rows(self):
        return [check.row() for check in self.checks]

    def toCsv(self, path):
        utils.writeCsvAtomic(path, self.header, self.rows())

def _worst(ratios, args):
    ratios = np.asarray(ratios, dtype=float).ravel()
    if ratios.size == 0:
        return None
    index = int(np.argmax(ratios))
    return float(ratios[index]), float(np.asarray(args).ravel()[index])

def _merge(parts):
    best = None
    for part in parts:
        if part is not None and (best is None or part[0] > best[0]):
            best = part
    return best

_OFF = ~np.eye(3, dtype=bool)

def _offDiagonal(matrices):
    return matrices[..., _OFF]

def _offDiagonalThird(tensors):
    # entries [j, i, k] with j != i
    return tensors[..., _OFF, :]

def _farRatios(kernel, x, y):
    s, N = kernel.s, kernel.N
    c0, c1, c2, c3 = kernel.spec.localization
    jet = kernel.jet(x, y)
    omega = jet.omega
    scale = omega ** s
    third = kernel.third(x, y, jet)
    corrected = kernel.correctedThird(x, y, jet)
    diagonal = np.stack([third[..., i, i, :] for i in range(3)], axis=-2)
    out = OrderedDict()
    out["grad_y"] = np.abs(kernel.gradY(x, y, jet)).max(axis=-1) * (N + 1) ** (s - 1) * scale / c1
    out["mixed"] = np.abs(kernel.mixed(x, y, jet)).reshape(-1, 9).max(axis=-1) * (N + 1) ** (s - 2) * scale / c2
    out["hessian_offdiag"] = np.abs(_offDiagonal(kernel.hessianSigma(x, y, jet))).max(axis=-1) * (N + 1) ** (s - 2) * scale / c2
    bound3 = consts.OFFDIAG_THIRD_SLACK * c3
    out["third_diag"] = np.abs(diagonal).reshape(-1, 9).max(axis=-1) * (N + 1) ** (s - 3) * scale / bound3
    out["third_corrected"] = np.abs(_offDiagonalThird(corrected)).reshape(-1, 18).max(axis=-1) * (N + 1) ** (s - 3) * scale / bound3
    return omega, out

def _nearRatios(kernel, x, y):
    N = kernel.N
    b = kernel.spec.zeroBounds
    dt, ct = b["dt_s"], b["ct_s"]
    jet = kernel.jet(x, y)
    omega = jet.omega
    delta = (N + 1) * omega
    second = kernel.secondX(x, y, jet)
    third = kernel.third(x, y, jet)
    corrected = kernel.correctedThird(x, y, jet)
    f2 = kernel.zero[0]
    diag2 = np.abs(np.diagonal(second, axis1=-2, axis2=-1) - f2).max(axis=-1)
    diag3 = np.abs(np.stack([third[..., i, i, :] for i in range(3)], axis=-2)).reshape(-1, 9).max(axis=-1)
    off2 = np.abs(_offDiagonal(kernel.hessianSigma(x, y, jet))).max(axis=-1)
    off3 = np.abs(_offDiagonalThird(corrected)).reshape(-1, 18).max(axis=-1)
    thirdBound = dt * ((N + 1) ** 3 * delta + 0.25 * (N + 1) ** 2 * delta ** 2) + 0.25 * ct * (N + 1) * delta
    out = OrderedDict()
    out["lip_second_diag"] = diag2 / (0.5 * dt * (N + 1) ** 2 * delta ** 2)
    out["lip_third_diag"] = diag3 / thirdBound
    out["lip_hessian_offdiag"] = off2 / (0.25 * dt * (N + 1) ** 2 * delta ** 2)
    out["lip_third_corrected"] = off3 / thirdBound
    return omega, out

_FAR_NAMES = ("grad_y", "mixed", "hessian_offdiag", "third_diag", "third_corrected")
_NEAR_NAMES = ("lip_second_diag", "lip_third_diag", "lip_hessian_offdiag", "lip_third_corrected")

def verifyLocalization(spec, t=None, samples=consts.LOCALIZATION_SAMPLES, rng=None, workers=None):
    """
    Checks the localization bounds of the kernel and its derivatives.

        - C{trig_l}, C{l = 0..3}: C{|sigma~^{(l)}(t)| <= c_{l,s}/((N+1)^{s-l} t^s)} on
          C{t in [pi/(2(N+1)), pi]};
        - C{grad_y}, C{mixed}, C{hessian_offdiag}, C{third_diag},
          C{third_corrected}: the pair bounds with C{c_{1,s}}, C{c_{2,s}} and
          C{1.2 c_{3,s}} on random pairs with C{omega >= pi/(2(N+1))};
        - C{lip_*}: the Lipschitz-type bounds on C{omega <= delta/(N+1)},
          C{delta <= pi/2}, evaluated with C{delta = (N+1) omega}. They use the
          zero-derivative constants and are not applicable for C{s < 8}.

    @type spec: L{filters.FilterSpec}
    @param spec: The filter.

    @type t: ndarray
    @param t: (Optional) Explicit angles. When given they serve as the
        angle grid of every check; angles outside a hypothesis region are
        dropped from that check.

    @type samples: int
    @param samples: Samples per check when C{t} is not given.

    @type rng: C{numpy.random.Generator}
    @param rng: (Optional) Random stream for angles and pairs.

    @type workers: int
    @param workers: (Optional) Thread count.

    @rtype: L{LocalizationReport}
    """
    kernel = buildKernel(spec.s, spec.N)
    s, N = spec.s, spec.N
    rng = rng if rng is not None else utils.streamFor(consts.DEFAULT_SEED, "localization")
    edge = math.pi / (2.0 * (N + 1))

    if t is None:
        far = np.sort(rng.uniform(edge, math.pi, samples))
        near = np.sort(rng.uniform(0.0, edge, samples))
        near = near[near > 0.0]
    else:
        t = np.abs(np.asarray(t, dtype=float).ravel())
        far = t[(t >= edge) & (t <= math.pi)]
        near = t[(t > 0.0) & (t <= edge)]

    checks = []
    values = kernel.values(far)
    for l, c in enumerate(spec.localization):
        if far.size == 0:
            checks.append(BoundCheck("trig_%d" % l, s, N, None, None, 0, applicable=False))
            continue
        ratio = np.abs(values[l]) * (N + 1) ** (s - l) * far ** s / c
        worst = _worst(ratio, far)
        checks.append(BoundCheck("trig_%d" % l, s, N, worst[0], worst[1], far.size))

    def pairChecks(names, angles, evaluate):
        if angles.size == 0:
            return [BoundCheck(name, s, N, None, None, 0, applicable=False) for name in names]
        y = so3core.haarSamples(rng, angles.size)
        axes = rng.standard_normal((angles.size, 3))
        axes /= np.linalg.norm(axes, axis=1, keepdims=True)
        x = np.matmul(y, so3core.expMap(axes * angles[:, None]))

        def work(start, stop):
            omega, ratios = evaluate(kernel, x[start:stop], y[start:stop])
            return dict((name, _worst(ratios[name], omega)) for name in names)

        parts = utils.mapChunks(work, angles.size, consts.KERNEL_CHUNK // 4, workers)
        out = []
        for name in names:
            worst = _merge(part[name] for part in parts)
            out.append(BoundCheck(name, s, N, worst[0], worst[1], angles.size))
        return out

    checks.extend(pairChecks(_FAR_NAMES, far, _farRatios))
    if spec.zeroBounds is None:
        checks.extend(BoundCheck(name, s, N, None, None, 0, applicable=False) for name in _NEAR_NAMES)
    else:
        checks.extend(pairChecks(_NEAR_NAMES, near, _nearRatios))

    report = LocalizationReport(checks)
    for check in report.violations:
        logger.warning("bound %s violated for s=%d N=%d: ratio %.6g at %.6g", check.name, s, N, check.worstRatio, check.argAtWorst)
        warnings.warn("bound %s violated (ratio %.6g)" % (check.name, check.worstRatio), excep.BoundWarning)
    logger.info("verified %d localization bounds for s=%d N=%d", len(checks), s, N)
    return report

class OffdiagReport(object):
    """Result of L{verifyOffdiagSums}."""
    header = ["name", "measured", "bound", "ratio"]

    def __init__(self, nu, epsilon, aEpsilon, sums, rings):
        self.nu = nu
        self.epsilon = epsilon
        self.aEpsilon = aEpsilon
        self.sums = sums
        self.rings = rings

    @property
    def passed(self):
        return all(row["ratio"] <= 1.0 for row in self.sums.values()) and all(r["count"] <= r["bound"] for r in self.rings)

    def rows(self):
        return [[name, row["measured"], row["bound"], row["ratio"]] for (name, row) in self.sums.items()]

    def toDict(self):
        return OrderedDict([("nu", self.nu), ("epsilon", self.epsilon), ("a_epsilon", self.aEpsilon), ("sums", self.sums), ("rings", self.rings), ("passed", self.passed)])

def verifyOffdiagSums(support, x, spec, epsilon, nu=None):
    """
    Sums of kernel terms over the support points other than the one nearest to
    C{x}, against their stated right-hand sides, plus the ring counts.

    Each sum is taken for every index combination; the worst is reported.

    @type support: L{so3core.SupportSet}
    @param support: Support with separation at least C{nu/(N+1)}.

    @type x: L{so3core.Rotation}
    @param x: Evaluation point within C{epsilon nu/(N+1)} of a support point.

    @type spec: L{filters.FilterSpec}
    @param spec: The filter.

    @type epsilon: float
    @param epsilon: Offset factor in M{[0, 1/2]}.

    @type nu: float
    @param nu: (Optional) Super-resolution factor, at least M{pi}. Defaults to
        C{(N+1)} times the separation (L{consts.DEFAULT_NU} for one point).

    @rtype: L{OffdiagReport}

    @raise DomainException: A hypothesis fails; the message names it.
    """
    if not isinstance(support, so3core.SupportSet):
        support = so3core.SupportSet(support)
    s, N = spec.s, spec.N
    if not 0.0 <= epsilon <= 0.5:
        raise excep.DomainException("hypothesis 0 <= epsilon <= 1/2 fails: epsilon = %r" % (epsilon,))
    if nu is None:
        nu = support.separation * (N + 1) if len(support) > 1 else consts.DEFAULT_NU
    if nu < math.pi:
        raise excep.DomainException("hypothesis nu >= pi fails: nu = %r" % (nu,))
    if len(support) > 1 and support.separation < nu / (N + 1) * (1.0 - 1e-12):
        raise excep.DomainException("hypothesis separation >= nu/(N+1) fails: %.6g < %.6g" % (support.separation, nu / (N + 1)))

    distances = so3core.distanceMatrix(x.matrix, support.matrices, accurate=True)[0]
    nearest = int(np.argmin(distances))
    if distances[nearest] > epsilon * nu / (N + 1) * (1.0 + 1e-12):
        raise excep.DomainException("hypothesis d(x, x_j) <= epsilon nu/(N+1) fails: %.6g > %.6g" % (distances[nearest], epsilon * nu / (N + 1)))

    constants = filters.offdiagConstants(s, epsilon)
    a = constants["a_eps"]
    C0, C1, C2, C3 = [constants["C_%d" % l] for l in range(4)]
    others = np.delete(support.matrices, nearest, axis=0)
    kernel = buildKernel(s, N)
    scale = a / nu ** s
    bounds = OrderedDict([
        ("sigma", C0 * scale),
        ("grad_y", C1 * scale * (N + 1)),
        ("mixed", C2 * scale * (N + 1) ** 2),
        ("third_diag", consts.OFFDIAG_THIRD_SLACK * C3 * scale * (N + 1) ** 3),
        ("hessian_offdiag", C2 * scale * (N + 1) ** 2),
        ("third_corrected", consts.OFFDIAG_THIRD_SLACK * C3 * scale * (N + 1) ** 3),
        ])
    measured = OrderedDict((name, 0.0) for name in bounds)
    if len(others):
        xs = np.broadcast_to(x.matrix, others.shape)
        jet = kernel.jet(xs, others)
        third = kernel.third(xs, others, jet)
        measured["sigma"] = float(np.abs(jet.st0).sum())
        measured["grad_y"] = float(np.abs(kernel.gradY(xs, others, jet)).sum(axis=0).max())
        measured["mixed"] = float(np.abs(kernel.mixed(xs, others, jet)).sum(axis=0).max())
        measured["third_diag"] = float(max(np.abs(third[:, i, i, :]).sum(axis=0).max() for i in range(3)))
        measured["hessian_offdiag"] = float(np.abs(_offDiagonal(kernel.hessianSigma(xs, others, jet))).sum(axis=0).max())
        measured["third_corrected"] = float(np.abs(_offDiagonalThird(kernel.correctedThird(xs, others, jet))).sum(axis=0).max())
    sums = OrderedDict()
    for name, bound in bounds.items():
        sums[name] = OrderedDict([("measured", measured[name]), ("bound", bound), ("ratio", measured[name] / bound)])

    rings = []
    if len(others):
        fromX = np.delete(distances, nearest)
        m = np.floor(fromX * (N + 1) / nu).astype(int)
        for ring in range(int(m.max()) + 1):
            limit = consts.RING_FIRST if ring == 0 else 48 * ring * ring + 48 * ring + 28
            rings.append(OrderedDict([("m", ring), ("count", int(np.sum(m == ring))), ("bound", limit)]))

    report = OffdiagReport(nu, epsilon, a, sums, rings)
    if not report.passed:
        logger.warning("off-diagonal sums exceed their bounds: %r", [n for (n, r) in sums.items() if r["ratio"] > 1.0])
    return report
