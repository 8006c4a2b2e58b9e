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
The perfect B-spline filter and the constants derived from it.

The spline ladder is built piece by piece in 50-digit arithmetic: C{f_0} is
the step function C{(-1)^{s-1} sign(U_{s-1})} with breakpoints C{cos(k pi/s)},
every C{f_k} is the running antiderivative of C{f_{k-1}} from -1, and the
filter is C{g = f_{s-1}} scaled to C{g~(x) = g(2x)}.

@group Piecewise polynomials:
    PiecewisePoly

@group Spline:
    PerfectBSpline, buildPerfectBSpline, signOrthogonality, bsplineIdentities

@group Filter:
    FilterSpec, filterSpec, filterWeights

@group Constants:
    zeta, localizationConstants, zeroDerivativeBounds, offdiagConstants, ringFactor,
    variationConstants, zeroDerivativeReport, sandwichReport,
    trigLocalizationBound, constantRows
"""

__revision__ = "$Id$"

__all__ = [
           "PiecewisePoly",
           "PerfectBSpline",
           "buildPerfectBSpline",
           "signOrthogonality",
           "bsplineIdentities",
           "FilterSpec",
           "filterSpec",
           "filterWeights",
           "zeta",
           "localizationConstants",
           "zeroDerivativeBounds",
           "offdiagConstants",
           "ringFactor",
           "variationConstants",
           "zeroDerivativeReport",
           "sandwichReport",
           "trigLocalizationBound",
           "constantRows",
           "IdentityCheck",
           "VariationEntry",
           ]

from . import caching
from . import consts
from . import excep

from collections import OrderedDict, namedtuple
import logging
import math

import mpmath
import numpy as np

logger = logging.getLogger(__name__)

# private context, the global mpmath.mp is left alone
_mp = mpmath.MPContext()
_mp.dps = consts.SPLINE_DIGITS

# levels past f_{s-1}, enough for the moments of z^6 g~
_EXTRA_LEVELS = 8

IdentityCheck = namedtuple("IdentityCheck", "name closed measured")
VariationEntry = namedtuple("VariationEntry", "name order kind relation closed measured")

def _horner(coeffs, u):
    value = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        value = value * u + c
    return value

class PiecewisePoly(object):
    """
    Piecewise polynomial on C{[b_0, b_P]}, zero outside.

    Piece C{p} is stored by its coefficients in the local variable
    C{u = x - b_p}, lowest degree first, both in 50-digit and in double
    precision.
    """
    def __init__(self, breakpoints, coeffs):
        """
        @type breakpoints: list
        @param breakpoints: Increasing breakpoints (mpmath numbers or floats).

        @type coeffs: list
        @param coeffs: One coefficient list per piece.
        """
        if len(coeffs) != len(breakpoints) - 1:
            raise excep.DomainException("%d pieces need %d breakpoints" % (len(coeffs), len(coeffs) + 1))
        self.mpBreakpoints = tuple(_mp.mpf(b) for b in breakpoints)
        self.mpCoeffs = tuple(tuple(_mp.mpf(c) for c in piece) for piece in coeffs)
        self.breakpoints = np.array([float(b) for b in self.mpBreakpoints])
        width = max(len(piece) for piece in self.mpCoeffs)
        self.coeffs = np.zeros((len(self.mpCoeffs), width))
        for p, piece in enumerate(self.mpCoeffs):
            self.coeffs[p, :len(piece)] = [float(c) for c in piece]

    @property
    def pieces(self):
        return len(self.mpCoeffs)

    def widths(self):
        return [self.mpBreakpoints[p + 1] - self.mpBreakpoints[p] for p in range(self.pieces)]

    def __call__(self, x):
        scalar = np.ndim(x) == 0
        x = np.atleast_1d(np.asarray(x, dtype=float))
        b = self.breakpoints
        index = np.clip(np.searchsorted(b, x, side="right") - 1, 0, self.pieces - 1)
        u = x - b[index]
        value = self.coeffs[index, -1]
        for j in range(self.coeffs.shape[1] - 2, -1, -1):
            value = value * u + self.coeffs[index, j]
        value = np.where((x >= b[0]) & (x <= b[-1]), value, 0.0)
        return float(value[0]) if scalar else value

    def mpValue(self, x):
        """High precision value at C{x} (zero outside the support)."""
        x = _mp.mpf(x)
        b = self.mpBreakpoints
        if x < b[0] or x > b[-1]:
            return _mp.mpf(0)
        p = self.pieces - 1
        while p > 0 and x < b[p]:
            p -= 1
        return _horner(self.mpCoeffs[p], x - b[p])

    def rightValue(self):
        """Value of the last piece at the right end of the support."""
        return _horner(self.mpCoeffs[-1], self.mpBreakpoints[-1] - self.mpBreakpoints[-2])

    def antiderivative(self):
        """Running antiderivative from the left end of the support."""
        pieces = []
        running = _mp.mpf(0)
        for piece, h in zip(self.mpCoeffs, self.widths()):
            new = [running] + [c / (j + 1) for (j, c) in enumerate(piece)]
            pieces.append(new)
            running = _horner(new, h)
        return PiecewisePoly(self.mpBreakpoints, pieces)

    def derivative(self):
        pieces = []
        for piece in self.mpCoeffs:
            new = [c * j for (j, c) in enumerate(piece)][1:]
            pieces.append(new or [_mp.mpf(0)])
        return PiecewisePoly(self.mpBreakpoints, pieces)

    def integral(self):
        return float(self.antiderivative().rightValue())

    def momentIntegral(self, degree):
        """
        C{int x^degree p(x) dx} over the support, exactly per piece.
        """
        total = _mp.mpf(0)
        for piece, b, h in zip(self.mpCoeffs, self.mpBreakpoints, self.widths()):
            # x^degree in the local variable: (b + u)^degree
            for r in range(degree + 1):
                weight = _mp.binomial(degree, r) * b ** (degree - r)
                for j, c in enumerate(piece):
                    total += weight * c * h ** (r + j + 1) / (r + j + 1)
        return total

    def jumps(self):
        """Jumps at every breakpoint, the support ends included."""
        out = [float(self.mpCoeffs[0][0])]
        h = self.widths()
        for p in range(1, self.pieces):
            out.append(float(self.mpCoeffs[p][0] - _horner(self.mpCoeffs[p - 1], h[p - 1])))
        out.append(float(-self.rightValue()))
        return out

    def _extremalValues(self, p):
        coeffs = self.coeffs[p]
        h = self.breakpoints[p + 1] - self.breakpoints[p]
        points = [0.0, h]
        derivative = np.polynomial.polynomial.polyder(coeffs)
        if np.any(derivative != 0.0):
            trimmed = np.trim_zeros(derivative, "b")
            if len(trimmed) > 1:
                roots = np.polynomial.polynomial.polyroots(trimmed)
                real = roots[np.abs(roots.imag) <= 1e-12 * max(1.0, h)].real
                points.extend(sorted(r for r in real if 0.0 < r < h))
        points = sorted(points)
        return np.polynomial.polynomial.polyval(np.array(points), coeffs)

    def totalVariation(self):
        """Sum of absolute jumps plus the variation inside every piece."""
        total = sum(abs(j) for j in self.jumps())
        for p in range(self.pieces):
            values = self._extremalValues(p)
            total += float(np.sum(np.abs(np.diff(values))))
        return total

    def supNorm(self):
        return max(float(np.max(np.abs(self._extremalValues(p)))) for p in range(self.pieces))

    def rescaled(self, factor, scale=1):
        """The function C{x -> scale * p(factor * x)} for C{factor > 0}."""
        factor = _mp.mpf(factor)
        scale = _mp.mpf(scale)
        breakpoints = [b / factor for b in self.mpBreakpoints]
        pieces = [[scale * c * factor ** j for (j, c) in enumerate(piece)] for piece in self.mpCoeffs]
        return PiecewisePoly(breakpoints, pieces)

def _checkSmoothness(s):
    if int(s) != s or s % 2 != 0:
        raise excep.DomainException("smoothness order s must be an even integer, got %r" % (s,))
    if not consts.MIN_SMOOTHNESS <= s <= consts.MAX_SMOOTHNESS:
        raise excep.DomainException("smoothness order s must lie in [%d, %d], got %r" % (consts.MIN_SMOOTHNESS, consts.MAX_SMOOTHNESS, s))

class PerfectBSpline(object):
    """
    The ladder C{f_0, f_1, ...} of the perfect B-spline of order C{s-1}.
    """
    def __init__(self, s):
        _checkSmoothness(s)
        self.s = int(s)
        breakpoints = [-_mp.cos(j * _mp.pi / s) for j in range(s + 1)]
        breakpoints[0] = _mp.mpf(-1)
        breakpoints[-1] = _mp.mpf(1)
        # (-1)^{s-1} sign(U_{s-1}) is +1 on the leftmost piece for even s
        f0 = PiecewisePoly(breakpoints, [[(-1) ** p] for p in range(s)])
        self.ladder = [f0]
        for k in range(1, s + _EXTRA_LEVELS):
            self.ladder.append(self.ladder[-1].antiderivative())
        logger.debug("built perfect B-spline ladder for s=%d (%d levels)", s, len(self.ladder))

    def f(self, k):
        """The k-th ladder function C{f_k}."""
        return self.ladder[k]

    def g(self):
        return self.ladder[self.s - 1]

    def gTilde(self, j=0):
        """The j-th derivative of C{g~}, which is C{2^j f_{s-1-j}(2x)}."""
        if not 0 <= j <= self.s - 1:
            raise excep.DomainException("g~ has derivatives of order 0..%d, got %r" % (self.s - 1, j))
        return self.ladder[self.s - 1 - j].rescaled(2, 2 ** j)

    def mpL1Norm(self):
        return self.ladder[self.s].rightValue()

    def l1Norm(self):
        """C{||g||_1} (g is non-negative, so this is C{f_s(1)})."""
        return float(self.mpL1Norm())

    def tildeL1Norm(self):
        return float(self.mpL1Norm() / 2)

    def mpTildeMomentNorm(self, m):
        """C{||z^{2m} g~||_1 = 2^{-2m-1} sum_l (-1)^l (2m)!/(2m-l)! f_{s+l}(1)}."""
        total = _mp.mpf(0)
        for l in range(2 * m + 1):
            total += (-1) ** l * _mp.factorial(2 * m) / _mp.factorial(2 * m - l) * self.ladder[self.s + l].rightValue()
        return total / 2 ** (2 * m + 1)

@caching.cached("ladder")
def buildPerfectBSpline(s):
    """
    Builds (or fetches) the perfect B-spline ladder.

    @type s: int
    @param s: Even smoothness order in M{[6, 16]}.

    @rtype: L{PerfectBSpline}

    @raise DomainException: Odd or out of range C{s}.
    """
    return PerfectBSpline(s)

def signOrthogonality(s):
    """
    C{int t^d f_0(t) dt} for C{d = 0..s-2}; all vanish.
    """
    f0 = buildPerfectBSpline(s).f(0)
    return [float(f0.momentIntegral(d)) for d in range(s - 1)]

def _closedF(s, l):
    total = _mp.mpf(0)
    for r in range(l // 2 + 1):
        total += _mp.factorial(s) / (_mp.factorial(l - 2 * r) * 4 ** r * _mp.factorial(r) * _mp.factorial(s + r))
    return total / (_mp.factorial(s - 1) * 2 ** (s - 2))

def _closedMomentNorm(s, m):
    return _mp.factorial(2 * m) * s / (4 ** m * _mp.factorial(m) * _mp.mpf(2) ** (s + 2 * m - 1) * _mp.factorial(s + m))

def _f3Sup(s):
    x = math.pi / (2 * s)
    return (math.tan(3 * x) - 3 * math.tan(x)) / 24.0

def bsplineIdentities(s):
    """
    Closed forms of the spline ladder next to the values measured on it.

    @rtype: list
    @return: L{IdentityCheck} tuples.
    """
    spline = buildPerfectBSpline(s)
    checks = []
    checks.append(IdentityCheck("||g||_1", 1.0 / (math.factorial(s - 1) * 2 ** (s - 2)), spline.l1Norm()))
    checks.append(IdentityCheck("||g~||_1", 1.0 / (math.factorial(s - 1) * 2 ** (s - 1)), spline.tildeL1Norm()))
    checks.append(IdentityCheck("|f_1(0)|", math.tan(math.pi / (2 * s)), abs(float(spline.f(1).mpValue(0)))))
    checks.append(IdentityCheck("||f_1||_inf", math.tan(math.pi / (2 * s)), spline.f(1).supNorm()))
    checks.append(IdentityCheck("||f_3||_inf", _f3Sup(s), spline.f(3).supNorm()))
    for k in range(1, s):
        checks.append(IdentityCheck("f_%d(1)" % k, 0.0, float(spline.f(k).rightValue())))
    for l in range(_EXTRA_LEVELS):
        checks.append(IdentityCheck("f_%d(1)" % (s + l), float(_closedF(s, l)), float(spline.f(s + l).rightValue())))
    for m in range(1, 4):
        checks.append(IdentityCheck("||z^%d g~||_1" % (2 * m), float(_closedMomentNorm(s, m)), float(spline.mpTildeMomentNorm(m))))
    return checks

def zeta(x):
    """
    Riemann zeta by direct summation plus the midpoint tail integral
    C{(K + 1/2)^{1-x}/(x-1)}, accurate to 1e-14 for C{x >= 2}.

    @raise DomainException: C{x <= 1}.
    """
    if x <= 1:
        raise excep.DomainException("zeta needs x > 1, got %r" % (x,))
    terms = 10000
    head = math.fsum(n ** (-float(x)) for n in range(1, terms + 1))
    return head + (terms + 0.5) ** (1.0 - x) / (x - 1.0)

def localizationConstants(s):
    """
    C{c_{l,s} = 1.02 (s-1)! 2^s (s, 2s, 4s+1, 9s-2)[l]} for C{l = 0..3}.

    @rtype: tuple
    """
    _checkSmoothness(s)
    base = consts.LOCALIZATION_SLACK * math.factorial(s - 1) * 2 ** s
    return tuple(base * (a * s + b) for (a, b) in consts.LOCALIZATION_FACTORS)

def zeroDerivativeBounds(s, N):
    """
    Constants bounding the even derivatives of the kernel at zero.

    @type s: int
    @param s: Even order, at least 8.

    @type N: int
    @param N: Degree, at least C{2s}.

    @rtype: OrderedDict
    @return: C{c_s, ct_s, d_s, dt_s} and C{c6} (the sixth derivative bound
        including the C{(N+1)^6} factor, C{None} unless C{s = 8}).

    @raise CapabilityException: C{s < 8}.
    @raise DomainException: Odd C{s} or C{N < 2s}.
    """
    _checkSmoothness(s)
    if s < consts.MIN_LEMMA_SMOOTHNESS:
        raise excep.CapabilityException("the zero-derivative bounds need s >= %d, got %d" % (consts.MIN_LEMMA_SMOOTHNESS, s))
    if N < 2 * s:
        raise excep.DomainException("the zero-derivative bounds need N >= 2s = %d, got %d" % (2 * s, N))
    out = OrderedDict()
    out["c_s"] = consts.LOWER_SLACK / (2.0 * (s + 1))
    out["ct_s"] = consts.UPPER_SLACK / (2.0 * (s + 1))
    out["d_s"] = 3.0 * consts.LOWER_SLACK / (4.0 * (s + 2) * (s + 1))
    out["dt_s"] = 3.0 * consts.UPPER_SLACK / (4.0 * (s + 2) * (s + 1))
    if s == 8:
        out["c6"] = consts.SIXTH_SLACK * 15.0 / 8.0 * math.factorial(8) / math.factorial(11) * (N + 1) ** 6
    else:
        out["c6"] = None
    return out

def offdiagConstants(s, epsilon):
    """
    C{C_{l,s} = 124 c_{l,s} zeta(s-2)} and
    C{a_eps = min((27/124)(1-eps)^{-s} + 1, (1-eps)^{-s})}.

    @rtype: OrderedDict

    @raise DomainException: C{epsilon} outside M{[0, 1/2]}.
    """
    _checkSmoothness(s)
    if not 0.0 <= epsilon <= 0.5:
        raise excep.DomainException("epsilon must lie in [0, 1/2], got %r" % (epsilon,))
    z = zeta(s - 2)
    out = OrderedDict()
    for l, c in enumerate(localizationConstants(s)):
        out["C_%d" % l] = consts.RING_CONSTANT * c * z
    out["a_eps"] = float(ringFactor(s, epsilon))
    return out

def ringFactor(s, epsilon):
    """
    C{a_eps = min((27/124)(1-eps)^{-s} + 1, (1-eps)^{-s})}, vectorized over C{epsilon}.
    """
    grow = (1.0 - np.asarray(epsilon, dtype=float)) ** (-s)
    return np.minimum(float(consts.RING_FIRST) / consts.RING_CONSTANT * grow + 1.0, grow)

def variationConstants(s):
    """
    Total variations and sup norms of the derivatives of C{g~}, closed form
    against the value measured on the ladder.

    C{relation} is C{"="} for identities and C{"<="} for bounds. The extra C{s = 8}
    rows are upper bounds taken from a generic spline estimate and are reported
    as findings.

    @rtype: list
    @return: L{VariationEntry} tuples.
    """
    _checkSmoothness(s)
    spline = buildPerfectBSpline(s)
    t = math.tan(math.pi / (2 * s))
    f3 = _f3Sup(s)
    rows = [
        (s - 1, "V", "=", 2.0 ** s * s),
        (s - 1, "inf", "=", 2.0 ** (s - 1)),
        (s - 2, "V", "=", 2.0 ** (s - 1)),
        (s - 2, "inf", "=", 2.0 ** (s - 2) * t),
        (s - 3, "V", "=", 2.0 ** (s - 4) * t * t * s),
        (s - 3, "inf", "=", 2.0 ** (s - 4) * t * t),
        (s - 4, "V", "<=", 2.0 ** (s - 4) * t * t),
        (s - 4, "inf", "=", 2.0 ** (s - 4) * f3),
        (s - 5, "V", "<=", 2.0 ** (s - 4) * f3),
        ]
    if s == 8:
        for j in (1, 2, 3):
            rows.append((j, "inf", "<=", 4.0 ** j / (2 ** 5 * math.factorial(6 - j))))
            rows.append((j - 1, "V", "<=", 4.0 ** j / (2 ** 4 * math.factorial(6 - j))))
    out = []
    for (order, kind, relation, closed) in rows:
        poly = spline.gTilde(order)
        measured = poly.totalVariation() if kind == "V" else poly.supNorm()
        name = "%s(g~^(%d))" % ("|.|_V" if kind == "V" else "||.||_inf", order)
        out.append(VariationEntry(name, order, kind, relation, closed, measured))
    return out

class FilterSpec(object):
    """
    Filter of smoothness C{s} at degree C{N}: samples C{g~(k/(2(N+1)))}, the
    discrete norm, the weights C{h_N(l)} and every derived constant.
    """
    def __init__(self, s, N):
        _checkSmoothness(s)
        if N < 2 * s:
            raise excep.DomainException("the filter needs N >= 2s = %d, got %d" % (2 * s, N))
        if N > consts.MAX_DEGREE:
            raise excep.CapabilityException("degree %d exceeds the supported maximum %d" % (N, consts.MAX_DEGREE))
        self.s = int(s)
        self.N = int(N)
        self.spline = buildPerfectBSpline(s)
        self.gtilde = self.spline.gTilde()
        g = self.spline.g()

        # g~(k/(2(N+1))) = g(k/(N+1)), sampled in high precision: the tail samples
        # are far below the rounding error of a double evaluation
        mpSamples = [g.mpValue(_mp.mpf(k) / (N + 1)) for k in range(N + 2)]
        mpNorm = mpSamples[0] + 2 * _mp.fsum(mpSamples[1:N + 1])
        differences = [mpSamples[l] - mpSamples[l + 1] for l in range(N + 1)]
        if any(d <= 0 for d in differences):
            bad = [l for (l, d) in enumerate(differences) if d <= 0]
            raise excep.ConsistencyException("filter samples are not strictly decreasing at l = %r" % (bad,))
        self.samples = np.array([float(a) for a in mpSamples[:N + 1]])
        self.discreteNorm = float(mpNorm)
        # the l = N difference uses g~((N+1)/(2(N+1))) = 0
        self.weights = np.array([float(d / mpNorm) for d in differences])
        self.cosineWeights = np.array([float(mpSamples[0] / mpNorm)] + [float(2 * a / mpNorm) for a in mpSamples[1:N + 1]])
        self.mpNorm = mpNorm
        self.mpSamples = tuple(mpSamples[:N + 1])

        self.localization = localizationConstants(s)
        self.zeroBounds = zeroDerivativeBounds(s, N) if s >= consts.MIN_LEMMA_SMOOTHNESS else None
        self.constants = self._constants()
        logger.info("built filter s=%d N=%d (discrete norm %.6e)", s, N, self.discreteNorm)

    def __repr__(self):
        return "FilterSpec(s=%d, N=%d)" % (self.s, self.N)

    def _constants(self):
        out = OrderedDict()
        for l, c in enumerate(self.localization):
            out["c_%d_s" % l] = c
        for name, value in offdiagConstants(self.s, 0.0).items():
            if name != "a_eps":
                out["%s_s" % name] = value
        if self.zeroBounds is not None:
            for name, value in self.zeroBounds.items():
                if value is not None:
                    out[name] = value
        return out

    def evenDerivativeAtZero(self, order):
        """
        C{sigma~^{(order)}(0) = (-1)^{order/2} sum_k w_k k^order} for even orders.
        """
        if order % 2 != 0 or order < 0:
            raise excep.DomainException("only even orders are available at zero, got %r" % (order,))
        k = np.arange(self.N + 1, dtype=float)
        return (-1) ** (order // 2) * float(np.sum(self.cosineWeights * k ** order))

    def sandwich(self):
        """
        Bounds on C{||g~||_{1,N}/(2(N+1))}: C{||g~||_1 -+ 2 zeta(s)/(2N pi)^s |g~^{(s-1)}|_V}.

        @rtype: tuple
        @return: C{(lower, value, upper)}.
        """
        s, N = self.s, self.N
        spread = 2.0 * zeta(s) / (2.0 * N * math.pi) ** s * 2.0 ** s * s
        center = self.spline.tildeL1Norm()
        return center - spread, self.discreteNorm / (2.0 * (N + 1)), center + spread

@caching.cached("filter")
def filterSpec(s, N):
    """
    Builds (or fetches) the filter for C{(s, N)}.

    @rtype: L{FilterSpec}
    """
    return FilterSpec(s, N)

def filterWeights(s, N):
    """
    Filter weights C{h_N(l)} for C{l = 0..N}.

    @rtype: ndarray

    @raise DomainException: C{N < 2s} or invalid C{s}.
    @raise ConsistencyException: The sampled filter is not decreasing.
    """
    return filterSpec(s, N).weights

def sandwichReport(spec):
    lower, value, upper = spec.sandwich()
    return OrderedDict([("lower", lower), ("value", value), ("upper", upper), ("holds", lower <= value <= upper)])

def zeroDerivativeReport(spec):
    """
    Measured C{|sigma~^{(2m)}(0)|}, C{m = 1, 2, 3}, against the lemma bounds and
    the leading value C{(2(N+1))^{2m} ||z^{2m} g~||_1/||g~||_1}.

    @rtype: list
    @return: One dictionary per order.
    """
    if spec.zeroBounds is None:
        raise excep.CapabilityException("the zero-derivative bounds need s >= %d, got %d" % (consts.MIN_LEMMA_SMOOTHNESS, spec.s))
    b = spec.zeroBounds
    n2 = (spec.N + 1) ** 2
    rows = []
    limits = {2: (b["c_s"] * n2, b["ct_s"] * n2), 4: (b["d_s"] * n2 ** 2, b["dt_s"] * n2 ** 2), 6: (0.0, b["c6"])}
    for m in (1, 2, 3):
        order = 2 * m
        lower, upper = limits[order]
        measured = abs(spec.evenDerivativeAtZero(order))
        leading = float((2 * (spec.N + 1)) ** order * spec.spline.mpTildeMomentNorm(m) / (spec.spline.mpL1Norm() / 2))
        holds = upper is None or (lower <= measured <= upper)
        rows.append(OrderedDict([("order", order), ("measured", measured), ("lower", lower), ("upper", upper), ("leading", leading), ("holds", holds)]))
    return rows

def trigLocalizationBound(spec, t):
    """
    C{(2^s - 1) zeta(s) |g~^{(s-1)}|_V / ((4(N+1))^{s-1} |t|^s)}, the bound on the
    unnormalized sum C{|sum_k g~(k/(2(N+1))) e^{ikt}|}.
    """
    s, N = spec.s, spec.N
    t = np.abs(np.asarray(t, dtype=float))
    return (2.0 ** s - 1.0) * zeta(s) * 2.0 ** s * s / ((4.0 * (N + 1)) ** (s - 1) * t ** s)

def constantRows(spec):
    """
    Yields C{(s, N, name, value)} for the constants table.
    """
    for name, value in spec.constants.items():
        yield spec.s, spec.N, name, value
    yield spec.s, spec.N, "||g||_1", spec.spline.l1Norm()
    yield spec.s, spec.N, "||g~||_1", spec.spline.tildeL1Norm()
    yield spec.s, spec.N, "||g~||_1N", spec.discreteNorm
    for entry in variationConstants(spec.s):
        yield spec.s, spec.N, entry.name, entry.closed
    for l, h in enumerate(spec.weights):
        yield spec.s, spec.N, "h_N(%d)" % l, float(h)
