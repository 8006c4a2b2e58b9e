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
Dual certificates: the Hermite interpolation system, its direct solution,
evaluation of the certificate polynomial and its verification on near and far
sample sets.

The certificate is C{q(x) = sum_j a0_j sigma(x, x_j) + sum_{m,j} a_mj X_m^y sigma(x, x_j)}
with the coefficients chosen so that C{q(x_i) = u_i} and C{X_n^x q(x_i) = 0}.
Unknowns and conditions are both ordered by block: index C{(n, i)} sits at
C{n * M + i}.

@group Interpolation:
    InterpolationSystem, assemble, Certificate, solveCertificate

@group Evaluation:
    evalQ, evalGradQ, hessianQTerms, valueDesign, gradientDesign, hessianDesign

@group Bounds:
    SchurReport, checkSchurBounds, taylorEnvelope, analyticBandBounds

@group Verification:
    CertificateVerifier, VerificationReport, verifyCertificate,
    PatternSummary, enumerateSignPatterns
"""

__revision__ = "$Id$"

__all__ = [
           "InterpolationSystem",
           "assemble",
           "Certificate",
           "solveCertificate",
           "evalQ",
           "evalGradQ",
           "hessianQTerms",
           "valueDesign",
           "gradientDesign",
           "hessianDesign",
           "SchurReport",
           "checkSchurBounds",
           "taylorEnvelope",
           "analyticBandBounds",
           "CertificateVerifier",
           "VerificationReport",
           "verifyCertificate",
           "PatternSummary",
           "enumerateSignPatterns",
           ]

from . import consts
from . import excep
from . import filters
from . import kernel as kernelmod
from . import so3core
from . import utils

from collections import OrderedDict
import logging
import math
import warnings

import numpy as np
from scipy import linalg

logger = logging.getLogger(__name__)

BAND_NAMES = ("band_1", "band_2", "band_3", "band_4")
_OFF = ~np.eye(3, dtype=bool)

def _single(x):
    return isinstance(x, so3core.Rotation) or np.ndim(x) == 2

def _pairJet(kern, samples, centers):
    n = len(samples)
    M = len(centers)
    xs = np.repeat(samples, M, axis=0)
    ys = np.tile(centers, (n, 1, 1))
    return xs, ys, kern.jet(xs, ys)

def _chunked(build, samples, workers):
    parts = utils.mapChunks(lambda start, stop: build(samples[start:stop]), len(samples), consts.EVAL_CHUNK, workers)
    return np.concatenate(parts) if parts else None

def valueDesign(kern, samples, centers, workers=None):
    """
    Rows C{(sigma(x, x_j), X_1^y sigma(x, x_j), ...)} in block order, one per sample.

    @type kern: L{kernel.ZonalKernel}

    @type samples: ndarray
    @param samples: Stack of evaluation points.

    @type centers: ndarray
    @param centers: Stack of centers.

    @rtype: ndarray
    @return: Array of shape C{(n, 4M)}.
    """
    centers = so3core.asMatrices(centers)
    M = len(centers)

    def build(chunk):
        n = len(chunk)
        xs, ys, jet = _pairJet(kern, chunk, centers)
        gy = kern.gradY(xs, ys, jet).reshape(n, M, 3)
        return np.concatenate([jet.st0.reshape(n, M)] + [gy[:, :, m] for m in range(3)], axis=1)

    out = _chunked(build, so3core.asMatrices(samples), workers)
    return out if out is not None else np.zeros((0, 4 * M))

def gradientDesign(kern, samples, centers, workers=None):
    """
    Rows of C{X_a^x} applied to every basis function.

    @rtype: ndarray
    @return: Array of shape C{(n, 3, 4M)}.
    """
    centers = so3core.asMatrices(centers)
    M = len(centers)

    def build(chunk):
        n = len(chunk)
        xs, ys, jet = _pairJet(kern, chunk, centers)
        gx = kern.gradX(xs, ys, jet).reshape(n, M, 3).transpose(0, 2, 1)
        mixed = kern.mixed(xs, ys, jet).reshape(n, M, 3, 3)
        return np.concatenate([gx] + [mixed[..., m].transpose(0, 2, 1) for m in range(3)], axis=2)

    out = _chunked(build, so3core.asMatrices(samples), workers)
    return out if out is not None else np.zeros((0, 3, 4 * M))

def hessianDesign(kern, samples, centers, workers=None):
    """
    Hessian C{X_a X_b - 1/2 eps_abk X_k} applied to every basis function: the
    kernel Hessian for the C{a0} block and the corrected third derivatives for
    the C{a_m} blocks.

    @rtype: ndarray
    @return: Array of shape C{(n, 3, 3, 4M)}.
    """
    centers = so3core.asMatrices(centers)
    M = len(centers)

    def build(chunk):
        n = len(chunk)
        xs, ys, jet = _pairJet(kern, chunk, centers)
        hs = kern.hessianSigma(xs, ys, jet).reshape(n, M, 3, 3).transpose(0, 2, 3, 1)
        corrected = kern.correctedThird(xs, ys, jet).reshape(n, M, 3, 3, 3)
        return np.concatenate([hs] + [corrected[..., m].transpose(0, 2, 3, 1) for m in range(3)], axis=3)

    out = _chunked(build, so3core.asMatrices(samples), workers)
    return out if out is not None else np.zeros((0, 3, 3, 4 * M))

class InterpolationSystem(object):
    """
    The matrix C{K[(n, i), (m, j)] = X_n^x X_m^y sigma(x_i, x_j)} (C{X_0} the
    identity) of a support set.

    Coincidence values are exact: unit diagonal in block C{(0, 0)}, zero
    diagonals in the gradient blocks and C{-sigma~''(0)} on the diagonal of
    the blocks C{(n, n)}. C{K} is symmetric with
    C{block(0, m) = -block(m, 0) = block(m, 0)^T}.
    """
    def __init__(self, centers, spec, matrix):
        self.centers = centers
        self.spec = spec
        self.kernel = kernelmod.buildKernel(spec.s, spec.N)
        self.matrix = matrix
        self.matrix.setflags(write=False)
        self.M = len(centers)
        self._lu = None
        self._condition = None

    def __repr__(self):
        return "InterpolationSystem(M=%d, s=%d, N=%d)" % (self.M, self.spec.s, self.spec.N)

    def block(self, n, m):
        M = self.M
        return self.matrix[n * M:(n + 1) * M, m * M:(m + 1) * M]

    def rhs(self, signs):
        """Right-hand side C{(u, 0, 0, 0)}."""
        out = np.zeros(4 * self.M)
        out[:self.M] = signs
        return out

    @property
    def condition(self):
        if self._condition is None:
            self._condition = float(np.linalg.cond(self.matrix))
        return self._condition

    def factorization(self):
        """
        LU factors with partial pivoting, computed once.

        @raise SolverException: The matrix is singular to working precision.
        """
        if self._lu is None:
            condition = self.condition
            if not np.isfinite(condition) or condition > consts.SOLVER_CONDITION_LIMIT:
                raise excep.SolverException("interpolation matrix is singular to working precision (condition %.3g); the centers are too close" % condition, condition)
            self._lu = linalg.lu_factor(self.matrix)
        return self._lu

    def solve(self, signs):
        """
        Coefficients for the sign pattern C{signs}.

        @rtype: L{Certificate}

        @raise DomainException: Wrong length or entries other than +-1.
        @raise SolverException: Singular matrix or a residual above tolerance.
        """
        signs = np.asarray(signs, dtype=float).reshape(-1)
        if signs.shape != (self.M,) or not np.all(np.abs(signs) == 1.0):
            raise excep.DomainException("need %d signs in {-1, +1}, got %r" % (self.M, signs))
        rhs = self.rhs(signs)
        alpha = linalg.lu_solve(self.factorization(), rhs)
        residual = float(np.max(np.abs(self.matrix.dot(alpha) - rhs)))
        if residual > consts.SOLVE_RESIDUAL_TOL * np.max(np.abs(rhs)):
            raise excep.SolverException("interpolation residual %.3g exceeds tolerance" % residual, self.condition)
        logger.debug("solved pattern %r: residual %.3g", signs.astype(int).tolist(), residual)
        return Certificate(self, signs, alpha.reshape(4, self.M), residual)

def assemble(centers, spec):
    """
    Builds the interpolation matrix of a support set.

    @type centers: L{so3core.SupportSet}
    @param centers: Support with separation at least C{pi/(N+1)}.

    @type spec: L{filters.FilterSpec}
    @param spec: The filter.

    @rtype: L{InterpolationSystem}

    @raise DomainException: Centers closer than C{pi/(N+1)}.
    """
    if not isinstance(centers, so3core.SupportSet):
        centers = so3core.SupportSet(centers)
    N = spec.N
    if len(centers) > 1 and centers.separation < math.pi / (N + 1):
        raise excep.DomainException("assembly needs separation >= pi/(N+1) = %.6g, got %.6g" % (math.pi / (N + 1), centers.separation))
    kern = kernelmod.buildKernel(spec.s, N)
    M = len(centers)
    mats = centers.matrices
    values = valueDesign(kern, mats, mats)
    gradients = gradientDesign(kern, mats, mats)
    K = np.concatenate([values] + [gradients[:, n, :] for n in range(3)], axis=0)

    diagonal = np.arange(M)
    f2 = kern.derivativeAtZero(2)
    for n in range(4):
        for m in range(4):
            K[n * M + diagonal, m * M + diagonal] = 0.0
    K[diagonal, diagonal] = 1.0
    for n in range(1, 4):
        K[n * M + diagonal, n * M + diagonal] = -f2
    K = 0.5 * (K + K.T)
    logger.info("assembled %dx%d interpolation system", 4 * M, 4 * M)
    return InterpolationSystem(centers, spec, K)

class Certificate(object):
    """
    A solved certificate: the system it came from, the sign pattern and the
    coefficient blocks C{alpha[0..3]}, each of length C{M}.
    """
    def __init__(self, system, signs, alpha, residual):
        self.system = system
        self.centers = system.centers
        self.spec = system.spec
        self.kernel = system.kernel
        self.signs = signs
        self.alpha = alpha
        self.alpha.setflags(write=False)
        self.residual = residual

    def __repr__(self):
        return "Certificate(M=%d, signs=%r)" % (len(self.signs), self.signs.astype(int).tolist())

    @property
    def flat(self):
        return self.alpha.reshape(-1)

    def value(self, x):
        out = valueDesign(self.kernel, so3core.asMatrices(x), self.centers.matrices).dot(self.flat)
        return float(out[0]) if _single(x) else out

    def gradient(self, x):
        out = gradientDesign(self.kernel, so3core.asMatrices(x), self.centers.matrices).dot(self.flat)
        return out[0] if _single(x) else out

    def hessian(self, x):
        out = hessianDesign(self.kernel, so3core.asMatrices(x), self.centers.matrices).dot(self.flat)
        return out[0] if _single(x) else out

    def coefficientBounds(self, b=consts.DEFAULT_B):
        """
        Coefficient sizes against C{||a0|| <= 1 + c_s/(4(b-3) - c_s)},
        C{||a_j|| <= 2/((4(b-3) - c_s)(N+1))} and, where C{u_i = 1},
        C{a0_i >= 1 - c_s/(4(b-3) - c_s)}.

        @raise CapabilityException: No zero-derivative constants (C{s < 8}).
        """
        spec = self.spec
        if spec.zeroBounds is None:
            raise excep.CapabilityException("coefficient bounds need s >= %d" % consts.MIN_LEMMA_SMOOTHNESS)
        cs = spec.zeroBounds["c_s"]
        denominator = 4.0 * (b - 3.0) - cs
        if denominator <= 0.0:
            raise excep.DomainException("coefficient bounds need b > 3 + c_s/4, got b = %r" % (b,))
        out = OrderedDict()
        out["alpha0_max"] = float(np.max(np.abs(self.alpha[0])))
        out["alpha0_bound"] = 1.0 + cs / denominator
        out["alphaj_max"] = float(np.max(np.abs(self.alpha[1:])))
        out["alphaj_bound"] = 2.0 / (denominator * (spec.N + 1))
        positive = self.alpha[0][self.signs > 0]
        out["anchor_min"] = float(positive.min()) if positive.size else None
        out["anchor_bound"] = 1.0 - cs / denominator
        out["holds"] = bool(out["alpha0_max"] <= out["alpha0_bound"]
                            and out["alphaj_max"] <= out["alphaj_bound"]
                            and (out["anchor_min"] is None or out["anchor_min"] >= out["anchor_bound"]))
        return out

    def interpolationErrors(self):
        """C{max |q(x_i) - u_i|} and C{max ||grad q(x_i)||_inf} over the centers."""
        mats = self.centers.matrices
        q = self.value(mats)
        grad = self.gradient(mats)
        return float(np.max(np.abs(q - self.signs))), float(np.max(np.abs(grad)))

def solveCertificate(centers, signs, spec):
    """
    Assembles and solves the interpolation problem for one sign pattern.

    @rtype: L{Certificate}

    @raise SolverException: The matrix is singular to working precision.
    """
    return assemble(centers, spec).solve(signs)

def evalQ(cert, x):
    """The certificate value C{q(x)}."""
    return cert.value(x)

def evalGradQ(cert, x):
    """The gradient C{(X_1 q(x), X_2 q(x), X_3 q(x))}."""
    return cert.gradient(x)

def hessianQTerms(cert, x):
    """
    The symmetric Hessian C{X_a X_b q - 1/2 eps_abk X_k q} of the certificate at C{x}.

    @rtype: ndarray
    @return: 3x3 matrix (or a stack for stacked C{x}).
    """
    return cert.hessian(x)

def _rowNorm(a):
    return float(np.max(np.sum(np.abs(a), axis=1))) if a.size else 0.0

class SchurReport(object):
    """Result of L{checkSchurBounds}."""
    def __init__(self, norms, cascade, feasibility, schur, coefficients):
        self.norms = norms
        self.cascade = cascade
        self.feasibility = feasibility
        self.schur = schur
        self.coefficients = coefficients

    @property
    def passed(self):
        return (all(row["measured"] <= row["bound"] for row in self.norms.values())
                and all(0.0 <= v < 1.0 for v in self.cascade.values())
                and self.feasibility["holds"]
                and self.schur["measured"] <= self.schur["bound"])

    def toDict(self):
        return OrderedDict([("norms", self.norms), ("cascade", self.cascade), ("feasibility", self.feasibility),
                            ("schur", self.schur), ("coefficients", self.coefficients), ("passed", self.passed)])

def checkSchurBounds(system, spec, nu=consts.DEFAULT_NU, b=consts.DEFAULT_B):
    """
    Block norms of the interpolation matrix against their sup bounds, the
    cascade C{a_1..a_4}, the feasibility condition C{nu^s > b C_{2,s}/c_s}
    and the measured Schur complement of the derivative block.

    @type system: L{InterpolationSystem}

    @type spec: L{filters.FilterSpec}

    @type nu: float
    @param nu: Separation factor, at least M{pi}.

    @type b: float
    @param b: Cascade parameter, above C{3 + c_s/4}.

    @rtype: L{SchurReport}

    @raise DomainException: A hypothesis fails.
    @raise CapabilityException: C{s < 8}.
    """
    s, N = spec.s, spec.N
    if spec.zeroBounds is None:
        raise excep.CapabilityException("the bound cascade needs s >= %d, got %d" % (consts.MIN_LEMMA_SMOOTHNESS, s))
    if N < consts.MIN_CERTIFICATE_DEGREE:
        raise excep.DomainException("the bound cascade needs N >= %d, got %d" % (consts.MIN_CERTIFICATE_DEGREE, N))
    if nu < math.pi:
        raise excep.DomainException("hypothesis nu >= pi fails: nu = %r" % (nu,))
    M = system.M
    if M > 1 and system.centers.separation < nu / (N + 1) * (1.0 - 1e-12):
        raise excep.DomainException("hypothesis separation >= nu/(N+1) fails: %.6g < %.6g" % (system.centers.separation, nu / (N + 1)))
    cs = spec.zeroBounds["c_s"]
    if b <= 3.0 + cs / 4.0:
        raise excep.DomainException("hypothesis b > 3 + c_s/4 fails: b = %r" % (b,))

    constants = filters.offdiagConstants(s, 0.0)
    C0, C1, C2 = constants["C_0"], constants["C_1"], constants["C_2"]
    nus = nu ** s
    f2 = system.kernel.derivativeAtZero(2)
    n1 = N + 1.0

    cascade = OrderedDict()
    a1 = C2 / (cs * nus)
    cascade["a_1"] = a1
    cascade["a_2"] = a1 / (1.0 - a1)
    cascade["a_3"] = a1 / (1.0 - 2.0 * a1)
    cascade["a_4"] = C0 / nus + (C1 / nus) ** 2 * 3.0 / (cs * (1.0 - 3.0 * a1))

    def row(measured, bound):
        return OrderedDict([("measured", measured), ("bound", bound)])

    norms = OrderedDict()
    norms["I-sigma00"] = row(_rowNorm(np.eye(M) - system.block(0, 0)), C0 / nus)
    norms["sigma0i"] = row(max(_rowNorm(system.block(0, i)) for i in range(1, 4)), C1 * n1 / nus)
    norms["sigmai0"] = row(max(_rowNorm(system.block(i, 0)) for i in range(1, 4)), C1 * n1 / nus)
    norms["sigmaij"] = row(max(_rowNorm(system.block(i, j)) for i in range(1, 4) for j in range(1, 4) if i != j), C2 * n1 ** 2 / nus)
    norms["-s''(0)I-sigmaii"] = row(max(_rowNorm(-f2 * np.eye(M) - system.block(i, i)) for i in range(1, 4)), C2 * n1 ** 2 / nus)
    inverse = max(_rowNorm(np.linalg.inv(system.block(i, i))) for i in range(1, 4))
    norms["sigmaii^-1"] = row(inverse, 1.0 / (cs * n1 ** 2 * (1.0 - a1)))

    feasibility = OrderedDict()
    feasibility["nu^s"] = nus
    feasibility["b*C_2/c_s"] = b * C2 / cs
    feasibility["holds"] = bool(nus > b * C2 / cs)

    K = system.matrix
    K2 = K[M:, M:]
    schur = K[:M, :M] - K[:M, M:].dot(linalg.solve(K2, K[M:, :M], assume_a="sym"))
    schurRow = row(_rowNorm(np.eye(M) - schur), cascade["a_4"])

    denominator = 4.0 * (b - 3.0) - cs
    coefficients = OrderedDict()
    coefficients["alpha0_bound"] = 1.0 + cs / denominator
    coefficients["alphaj_bound"] = 2.0 / (denominator * n1)
    coefficients["anchor_bound"] = 1.0 - cs / denominator

    report = SchurReport(norms, cascade, feasibility, schurRow, coefficients)
    if not report.passed:
        logger.warning("bound cascade check failed for M=%d N=%d nu=%r", M, N, nu)
    return report

def taylorEnvelope(spec, tMax=consts.BAND_MID, points=consts.BAND_GRID):
    """
    Compares C{sigma~(t/(N+1))} with its even Taylor envelope in the scaled
    variable C{t = (N+1) omega}:

        - upper: C{1 - c_s t^2/2 + d~_s t^4/24};
        - lower: C{1 - c~_s t^2/2 + d_s t^4/24 - c6 t^6/720}, the C{t^6} term for C{s = 8} only.

    @rtype: OrderedDict

    @raise CapabilityException: C{s < 8}.
    """
    if spec.zeroBounds is None:
        raise excep.CapabilityException("the Taylor envelope needs s >= %d, got %d" % (consts.MIN_LEMMA_SMOOTHNESS, spec.s))
    bounds = spec.zeroBounds
    n1 = spec.N + 1.0
    t = np.linspace(0.0, tMax, points)
    measured = kernelmod.buildKernel(spec.s, spec.N).sigmaTilde(t / n1)
    upper = 1.0 - bounds["c_s"] * t ** 2 / 2.0 + bounds["dt_s"] * t ** 4 / 24.0
    lower = 1.0 - bounds["ct_s"] * t ** 2 / 2.0 + bounds["d_s"] * t ** 4 / 24.0
    if bounds["c6"] is not None:
        lower = lower - bounds["c6"] / n1 ** 6 * t ** 6 / 720.0
    negative = np.nonzero(lower <= 0.0)[0]
    out = OrderedDict()
    out["t_max"] = tMax
    out["upper_gap"] = float(np.max(measured - upper))
    out["lower_gap"] = float(np.max(lower - measured))
    out["upper_holds"] = bool(out["upper_gap"] <= 1e-12)
    out["lower_holds"] = bool(out["lower_gap"] <= 1e-12)
    out["lower_positive_until"] = float(t[negative[0]]) if negative.size else None
    out["upper_turning_point"] = math.sqrt(6.0 * bounds["c_s"] / bounds["dt_s"])
    out["lower_min"] = float(lower.min())
    return out

def analyticBandBounds(spec, nu=consts.DEFAULT_NU, b=consts.DEFAULT_B, points=consts.BAND_GRID):
    """
    Upper bounds for C{|q|} on the four far bands, evaluated from the constants.

    With C{t = (N+1) d(x, x_j)}, C{A0 = 1 + c_s/(4(b-3)-c_s)} and
    C{Aj (N+1) = 2/(4(b-3)-c_s)}:

        - bands 1 and 2 (C{t} in C{[pi/2, t_0]} and C{[t_0, 2.45 pi]}):
          C{A0 U(t) + 3 Aj (N+1) c~_s t + A0 c_s a_{t/nu}/(4b) + 3 Aj (N+1) c_s a_{t/nu}/(2b)}
          with C{U(t) = 1 - c_s t^2/2 + d~_s t^4/24};
        - band 3 (C{t} in C{[2.45 pi, 18]}): C{U(t)} and C{c~_s t} replaced by
          C{c_{0,s}/t^s} and C{c_{1,s}/t^s};
        - band 4 (all distances at least C{18/(N+1)}): C{c_s a_{1/2}/(4(b-3)-c_s)}.

    @rtype: list
    @return: One dictionary per band with the analytic value and the reference ceiling.
    """
    if spec.zeroBounds is None:
        raise excep.CapabilityException("the band bounds need s >= %d, got %d" % (consts.MIN_LEMMA_SMOOTHNESS, spec.s))
    s = spec.s
    bounds = spec.zeroBounds
    cs, ct, dt = bounds["c_s"], bounds["ct_s"], bounds["dt_s"]
    c0, c1 = spec.localization[0], spec.localization[1]
    denominator = 4.0 * (b - 3.0) - cs
    a0 = 1.0 + cs / denominator
    aj = 2.0 / denominator

    def others(t):
        a = filters.ringFactor(s, np.minimum(t / nu, 0.5))
        return a0 * cs * a / (4.0 * b) + 3.0 * aj * cs * a / (2.0 * b)

    def nearForm(t):
        return a0 * (1.0 - cs * t ** 2 / 2.0 + dt * t ** 4 / 24.0) + 3.0 * aj * ct * t + others(t)

    def decayForm(t):
        return a0 * c0 / t ** s + 3.0 * aj * c1 / t ** s + others(t)

    ranges = [(math.pi / 2.0, consts.BAND_T0, nearForm), (consts.BAND_T0, consts.BAND_MID, nearForm), (consts.BAND_MID, consts.BAND_OUTER, decayForm)]
    out = []
    for name, (low, high, form), ceiling in zip(BAND_NAMES, ranges, consts.BAND_CEILINGS):
        t = np.linspace(low, high, points)
        value = float(np.max(form(t)))
        out.append(OrderedDict([("band", name), ("t_low", low), ("t_high", high), ("analytic", value), ("ceiling", ceiling), ("holds", value <= ceiling)]))
    value = cs * float(filters.ringFactor(s, 0.5)) / denominator
    out.append(OrderedDict([("band", BAND_NAMES[3]), ("t_low", consts.BAND_OUTER), ("t_high", None), ("analytic", value),
                            ("ceiling", consts.BAND_CEILINGS[3]), ("holds", value <= consts.BAND_CEILINGS[3])]))
    for row in out:
        if not row["holds"]:
            logger.warning("analytic %s bound %.4f exceeds the reference ceiling %.3f", row["band"], row["analytic"], row["ceiling"])
            warnings.warn("analytic %s bound %.4f exceeds %.3f" % (row["band"], row["analytic"], row["ceiling"]), excep.BoundWarning)
    return out

class VerificationReport(object):
    """
    Near and far results of one certificate.

    C{passed} is the conjunction of the near-region definiteness and sign
    checks with C{max |q| < 1 - margin} on the far samples. Band ceilings are
    recorded next to the measured band maxima.
    """
    def __init__(self, near, far, bands, grid, margin):
        self.near = near
        self.far = far
        self.bands = bands
        self.grid = grid
        self.margin = margin

    @property
    def nearPassed(self):
        return all(row["passed"] for row in self.near)

    @property
    def farPassed(self):
        return self.far["max_abs_q"] < 1.0 - self.margin

    @property
    def ceilingsHeld(self):
        return all(row["within_ceiling"] for row in self.bands if row["samples"])

    @property
    def passed(self):
        return self.nearPassed and self.farPassed

    def toDict(self):
        return OrderedDict([("near", self.near), ("far", self.far), ("bands", self.bands), ("grid", self.grid),
                            ("margin", self.margin), ("near_passed", self.nearPassed), ("far_passed", self.farPassed),
                            ("ceilings_held", self.ceilingsHeld), ("passed", self.passed)])

def _bandIndex(t):
    # -1 marks the near region
    edges = np.array([math.pi / 2.0, consts.BAND_T0, consts.BAND_MID, consts.BAND_OUTER])
    return np.searchsorted(edges, t, side="right") - 1

class CertificateVerifier(object):
    """
    Sample sets and evaluation matrices of one support, shared by every sign
    pattern checked on it.

        - near: for each center a geodesic ball of radius C{pi/(2(N+1))} with
          mesh C{near_mesh};
        - far: C{far_samples} Haar points plus a deterministic sweep around each
          center (Fibonacci axes times radii from C{pi/(2(N+1))} to C{27/(N+1)}),
          keeping only points at distance at least C{pi/(2(N+1))} from every center.
    """
    def __init__(self, system, nearMesh=None, farSamples=consts.DEFAULT_FAR_SAMPLES, rng=None, workers=None):
        """
        @type system: L{InterpolationSystem}

        @type nearMesh: float
        @param nearMesh: (Optional) Mesh of the near balls, at most C{pi/(8(N+1))}.

        @type farSamples: int
        @param farSamples: Number of Haar samples.

        @type rng: C{numpy.random.Generator}
        @param rng: (Optional) Random stream for the Haar samples.

        @raise DomainException: C{nearMesh} above C{pi/(8(N+1))}.
        """
        N = system.spec.N
        limit = math.pi / (8.0 * (N + 1))
        nearMesh = limit if nearMesh is None else nearMesh
        if not 0.0 < nearMesh <= limit * (1.0 + 1e-12):
            raise excep.DomainException("near mesh must lie in (0, pi/(8(N+1))] = (0, %.6g], got %r" % (limit, nearMesh))
        self.system = system
        self.nearMesh = nearMesh
        self.workers = workers
        rng = rng if rng is not None else utils.streamFor(consts.DEFAULT_SEED, "far-samples")
        kern = system.kernel
        centers = system.centers.matrices
        radius = math.pi / (2.0 * (N + 1))

        self.nearSamples = []
        for center in centers:
            ball = so3core.ballSamples(center, radius, nearMesh)
            self.nearSamples.append((valueDesign(kern, ball, centers, workers), hessianDesign(kern, ball, centers, workers)))

        haar = so3core.haarSamples(rng, farSamples)
        axes = so3core.fibonacciSphere(consts.SWEEP_AXES)
        radii = np.linspace(radius, min(1.5 * consts.BAND_OUTER / (N + 1), math.pi), consts.SWEEP_RADII)
        vectors = (radii[:, None, None] * axes[None]).reshape(-1, 3)
        sweep = np.matmul(centers[:, None], so3core.expMap(vectors)[None]).reshape(-1, 3, 3)
        candidates = np.concatenate([haar, sweep])
        t = so3core.distanceMatrix(candidates, centers, accurate=True).min(axis=1) * (N + 1)
        keep = t >= math.pi / 2.0 * (1.0 - 1e-12)
        self.farPoints = candidates[keep]
        self.farBands = np.maximum(_bandIndex(t[keep]), 0)
        self.farDesign = valueDesign(kern, self.farPoints, centers, workers)
        self.grid = OrderedDict([("near_mesh", nearMesh), ("near_radius", radius), ("near_samples", sum(len(v) for (v, h) in self.nearSamples)),
                                 ("haar_samples", int(farSamples)), ("sweep_samples", len(sweep)), ("far_samples", len(self.farPoints))])
        logger.info("prepared %d near and %d far samples for M=%d", self.grid["near_samples"], self.grid["far_samples"], system.M)

    def solve(self, signs):
        return self.system.solve(signs)

    def verify(self, cert, margin=consts.DEFAULT_MARGIN):
        """
        Checks one certificate of this support.

        @rtype: L{VerificationReport}
        """
        alpha = cert.flat
        n1sq = (cert.spec.N + 1.0) ** 2
        near = []
        for index, (values, hessians) in enumerate(self.nearSamples):
            u = cert.signs[index]
            uq = u * values.dot(alpha)
            uh = u * hessians.dot(alpha)
            diag = np.diagonal(uh, axis1=-2, axis2=-1)
            off = np.abs(uh).sum(axis=-1) - np.abs(diag)
            gerschgorin = float(np.max(diag + off))
            offMax = float(np.max(np.abs(uh[:, _OFF])))
            eigen = float(np.max(np.linalg.eigvalsh(uh)))
            row = OrderedDict()
            row["center"] = index
            row["sign"] = int(u)
            row["samples"] = len(uq)
            row["min_signed_q"] = float(uq.min())
            row["q_reference"] = consts.NEAR_Q_REFERENCE
            row["max_gerschgorin"] = gerschgorin
            row["max_eigenvalue"] = eigen
            row["max_diag_scaled"] = float(diag.max()) / n1sq
            row["max_off_scaled"] = offMax / n1sq
            row["definite"] = gerschgorin < 0.0
            row["references_held"] = bool(row["min_signed_q"] >= consts.NEAR_Q_REFERENCE
                                          and row["max_diag_scaled"] <= consts.HESSIAN_DIAG_REFERENCE
                                          and row["max_off_scaled"] <= consts.HESSIAN_OFF_REFERENCE)
            row["passed"] = bool(row["definite"] and row["min_signed_q"] > consts.NEAR_SIGN_FLOOR)
            if not row["references_held"]:
                logger.warning("near region of center %d misses the reference values (q %.4f, diag %.4f, off %.4f)",
                               index, row["min_signed_q"], row["max_diag_scaled"], row["max_off_scaled"])
            near.append(row)

        q = np.abs(self.farDesign.dot(alpha))
        far = OrderedDict()
        if q.size:
            worst = int(np.argmax(q))
            far["max_abs_q"] = float(q[worst])
            far["argmax_euler"] = list(so3core.eulerArrays(self.farPoints[worst]))
        else:
            far["max_abs_q"] = 0.0
            far["argmax_euler"] = None
        far["samples"] = int(q.size)

        bands = []
        for index, (name, ceiling) in enumerate(zip(BAND_NAMES, consts.BAND_CEILINGS)):
            inBand = q[self.farBands == index]
            measured = float(inBand.max()) if inBand.size else None
            within = measured is None or measured <= ceiling + consts.BAND_SLACK
            bands.append(OrderedDict([("band", name), ("samples", int(inBand.size)), ("measured", measured),
                                      ("ceiling", ceiling), ("within_ceiling", within)]))
            if not within:
                logger.warning("%s maximum %.4f exceeds the reference ceiling %.3f", name, measured, ceiling)
        report = VerificationReport(near, far, bands, self.grid, margin)
        logger.debug("verified pattern %r: near %s, far max %.4f", cert.signs.astype(int).tolist(), report.nearPassed, far["max_abs_q"])
        return report

def verifyCertificate(cert, nearMesh=None, farSamples=consts.DEFAULT_FAR_SAMPLES, margin=consts.DEFAULT_MARGIN, rng=None, workers=None):
    """
    Near-region definiteness and far-region bound of one certificate.

    @type cert: L{Certificate}

    @type nearMesh: float
    @param nearMesh: (Optional) Ball mesh, at most C{pi/(8(N+1))} (the default).

    @type farSamples: int
    @param farSamples: Haar samples of the far region.

    @type margin: float
    @param margin: Required gap below 1 in the far region.

    @rtype: L{VerificationReport}
    """
    return CertificateVerifier(cert.system, nearMesh, farSamples, rng, workers).verify(cert, margin)

class PatternSummary(object):
    """Result of L{enumerateSignPatterns}."""
    def __init__(self, M, patterns, sampled, results):
        self.M = M
        self.patterns = patterns
        self.sampled = sampled
        self.results = results

    @property
    def passes(self):
        return sum(1 for row in self.results if row["passed"])

    @property
    def passed(self):
        return self.passes == len(self.results)

    def toDict(self):
        return OrderedDict([("M", self.M), ("patterns", self.patterns), ("sampled", self.sampled), ("checked", len(self.results)),
                            ("passes", self.passes), ("passed", self.passed), ("results", self.results)])

def _patternSigns(code, M):
    return np.array([1.0 if (code >> i) & 1 == 0 else -1.0 for i in range(M)])

def enumerateSignPatterns(centers, spec, limit=consts.DEFAULT_PATTERN_LIMIT, rng=None, nearMesh=None,
                          farSamples=consts.DEFAULT_FAR_SAMPLES, margin=consts.DEFAULT_MARGIN, b=consts.DEFAULT_B, workers=None):
    """
    Solves and verifies every sign pattern of a support, or C{limit} distinct
    patterns drawn uniformly when there are more than C{limit}.

    All patterns share one factorization and one set of sample matrices.

    @type centers: L{so3core.SupportSet}
    @param centers: At most 20 centers.

    @type limit: int
    @param limit: Maximal number of patterns.

    @rtype: L{PatternSummary}

    @raise DomainException: More than 20 centers.
    """
    if not isinstance(centers, so3core.SupportSet):
        centers = so3core.SupportSet(centers)
    M = len(centers)
    if M > consts.MAX_PATTERN_SUPPORT:
        raise excep.DomainException("sign patterns are enumerated for at most %d centers, got %d" % (consts.MAX_PATTERN_SUPPORT, M))
    total = 2 ** M
    rng = rng if rng is not None else utils.streamFor(consts.DEFAULT_SEED, "patterns")
    sampled = total > limit
    codes = sorted(int(c) for c in rng.choice(total, size=limit, replace=False)) if sampled else list(range(total))
    system = assemble(centers, spec)
    verifier = CertificateVerifier(system, nearMesh, farSamples, rng, workers)
    withBounds = spec.zeroBounds is not None
    results = []
    for code in codes:
        cert = verifier.solve(_patternSigns(code, M))
        report = verifier.verify(cert, margin)
        row = OrderedDict()
        row["signs"] = cert.signs.astype(int).tolist()
        value, gradient = cert.interpolationErrors()
        row["value_error"] = value
        row["gradient_error"] = gradient
        row["interpolates"] = bool(value <= consts.RESIDUAL_TOL and gradient <= consts.RESIDUAL_TOL)
        row["coefficients"] = cert.coefficientBounds(b) if withBounds else None
        row["far_max"] = report.far["max_abs_q"]
        row["bands"] = [band["measured"] for band in report.bands]
        row["ceilings_held"] = report.ceilingsHeld
        row["near_passed"] = report.nearPassed
        row["passed"] = bool(report.passed and row["interpolates"] and (row["coefficients"] is None or row["coefficients"]["holds"]))
        results.append(row)
    summary = PatternSummary(M, total, sampled, results)
    logger.info("%d of %d sign patterns passed for M=%d", summary.passes, len(results), M)
    return summary
