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
Rotation group geometry: matrices, axis-angle and Euler ZXZ forms, the
bi-invariant metric, Haar sampling and finite-difference versions of the
left-invariant operators C{X_i}.

Throughout, C{X_i f(x) = d/dt f(x e^{tL_i})} at C{t = 0}, with C{L_i} the
hat matrix of the i-th unit vector, so that C{[L_1, L_2] = L_3}.

@group Values:
    Rotation, AxisAngle, EulerZXZ, SupportSet

@group Constructors:
    identity, rotX, rotY, rotZ, generator, exponential, expMap, hat, vee,
    rotationFromAxisAngle, rotationFromEuler, quaternionToMatrix

@group Conversions:
    axisAngleOf, axisAngleArrays, eulerOf, eulerArrays, logMap

@group Metric:
    geodesicDistance, distanceMatrix, separation, angleOf

@group Sampling:
    haarSample, haarSamples, haarAngleCdf, haarIntegrateZonal,
    wellSeparatedSupport, fibonacciSphere, ballSamples

@group Differential operators:
    numericX
"""

__revision__ = "$Id$"

__all__ = [
           "Rotation",
           "AxisAngle",
           "EulerZXZ",
           "SupportSet",
           "identity",
           "rotX",
           "rotY",
           "rotZ",
           "generator",
           "exponential",
           "expMap",
           "hat",
           "vee",
           "rotationFromAxisAngle",
           "rotationFromEuler",
           "quaternionToMatrix",
           "axisAngleOf",
           "axisAngleArrays",
           "eulerOf",
           "eulerArrays",
           "logMap",
           "angleOf",
           "geodesicDistance",
           "distanceMatrix",
           "separation",
           "haarSample",
           "haarSamples",
           "haarAngleCdf",
           "haarIntegrateZonal",
           "wellSeparatedSupport",
           "fibonacciSphere",
           "ballSamples",
           "numericX",
           "asMatrices",
           ]

from . import consts
from . import excep

import logging
import math

import numpy as np

logger = logging.getLogger(__name__)

_EYE = np.eye(3)
_GENERATORS = np.array([
    [[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]],
    [[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]],
    [[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]],
    ])
for _g in _GENERATORS:
    _g.setflags(write=False)

class Rotation(object):
    """
    An element of SO(3), stored as a read-only 3x3 matrix.

    Matrices whose orthogonality error lies between 1e-12 and 1e-6 are
    re-projected onto the group; worse ones are rejected.
    """
    __slots__ = ("_m",)

    def __init__(self, matrix):
        """
        @type matrix: array-like
        @param matrix: 3x3 real matrix.

        @raise DomainException: The matrix is not (close to) a rotation.
        """
        m = np.array(matrix, dtype=float)
        if m.shape != (3, 3) or not np.all(np.isfinite(m)):
            raise excep.DomainException("a rotation must be a finite 3x3 matrix, got shape %r" % (m.shape,))
        error = np.abs(m.T.dot(m) - _EYE).max()
        det = np.linalg.det(m)
        if error > consts.REPROJECT_TOL or det < 0.0:
            raise excep.DomainException("matrix is not a rotation (orthogonality error %.3e, det %.6f)" % (error, det))
        if error > consts.ORTHOGONALITY_TOL or abs(det - 1.0) > consts.ORTHOGONALITY_TOL:
            u, _, vt = np.linalg.svd(m)
            m = u.dot(vt)
            logger.debug("re-projected rotation with orthogonality error %.3e", error)
        m.setflags(write=False)
        self._m = m

    @classmethod
    def trusted(cls, matrix):
        """Wraps a matrix already known to be a rotation without checking it."""
        rotation = cls.__new__(cls)
        m = np.array(matrix, dtype=float)
        m.setflags(write=False)
        rotation._m = m
        return rotation

    @property
    def matrix(self):
        return self._m

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._m.copy()
        return self._m.astype(dtype)

    def __mul__(self, other):
        if not isinstance(other, Rotation):
            return NotImplemented
        return Rotation(self._m.dot(other._m))

    def __eq__(self, other):
        return isinstance(other, Rotation) and np.array_equal(self._m, other._m)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._m.tobytes())

    def __repr__(self):
        return "Rotation(%r)" % (self._m.tolist(),)

    def inverse(self):
        return Rotation.trusted(self._m.T)

    def trace(self):
        return float(np.trace(self._m))

    def axisAngle(self):
        return axisAngleOf(self)

    def euler(self):
        return eulerOf(self)

    def orthogonalityError(self):
        return float(np.abs(self._m.T.dot(self._m) - _EYE).max())

class AxisAngle(object):
    """Unit axis C{e} and angle C{omega} in M{[0, pi]}."""
    __slots__ = ("axis", "omega")

    def __init__(self, axis, omega):
        self.axis = np.array(axis, dtype=float)
        self.axis.setflags(write=False)
        self.omega = float(omega)

    def __repr__(self):
        return "AxisAngle(axis=%r, omega=%r)" % (self.axis.tolist(), self.omega)

    def toRotation(self):
        return rotationFromAxisAngle(self.axis, self.omega)

class EulerZXZ(object):
    """Euler angles with C{x = R_Z(alpha) R_X(beta) R_Z(gamma)}."""
    __slots__ = ("alpha", "beta", "gamma")

    def __init__(self, alpha, beta, gamma):
        self.alpha = float(alpha)
        self.beta = float(beta)
        self.gamma = float(gamma)

    def __repr__(self):
        return "EulerZXZ(alpha=%r, beta=%r, gamma=%r)" % (self.alpha, self.beta, self.gamma)

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))

    def toRotation(self):
        return rotationFromEuler(self.alpha, self.beta, self.gamma)

class SupportSet(object):
    """
    Ordered set of rotations with its separation distance cached.

    A single point has separation C{inf}.
    """
    def __init__(self, points):
        """
        @type points: list
        @param points: L{Rotation} instances (or 3x3 matrices).
        """
        self.points = tuple(p if isinstance(p, Rotation) else Rotation(p) for p in points)
        self.matrices = asMatrices(self.points)
        self.matrices.setflags(write=False)
        self.separation = self.computeSeparation()

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, index):
        return self.points[index]

    def __repr__(self):
        return "SupportSet(%d points, separation=%r)" % (len(self.points), self.separation)

    def computeSeparation(self):
        """Recomputes the minimal pairwise geodesic distance."""
        if len(self.points) < 2:
            return math.inf
        d = distanceMatrix(self.matrices, self.matrices, accurate=True)
        np.fill_diagonal(d, np.inf)
        return float(d.min())

def asMatrices(rotations):
    """
    Stacks rotations into an C{(n, 3, 3)} array. Accepts a L{SupportSet}, a list
    of L{Rotation}, a single L{Rotation} or an array.
    """
    if isinstance(rotations, SupportSet):
        return rotations.matrices
    if isinstance(rotations, Rotation):
        return rotations.matrix[np.newaxis]
    if isinstance(rotations, np.ndarray):
        return rotations.reshape(-1, 3, 3)
    if len(rotations) == 0:
        return np.zeros((0, 3, 3))
    return np.array([r.matrix if isinstance(r, Rotation) else r for r in rotations], dtype=float).reshape(-1, 3, 3)

def identity():
    return Rotation.trusted(_EYE)

def rotZ(angle):
    c, s = math.cos(angle), math.sin(angle)
    return Rotation.trusted([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])

def rotX(angle):
    c, s = math.cos(angle), math.sin(angle)
    return Rotation.trusted([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])

def rotY(angle):
    c, s = math.cos(angle), math.sin(angle)
    return Rotation.trusted([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])

def generator(i):
    """
    Returns the Lie algebra basis matrix C{L_i}.

    @type i: int
    @param i: Axis index 1, 2 or 3.

    @raise DomainException: Index out of range.
    """
    if i not in (1, 2, 3):
        raise excep.DomainException("generator index must be 1, 2 or 3, got %r" % (i,))
    return _GENERATORS[i - 1]

def hat(v):
    """Skew matrices of one or many 3-vectors (C{hat(a) b = a x b})."""
    v = np.asarray(v, dtype=float)
    return np.einsum("...i,ijk->...jk", v, _GENERATORS)

def vee(a):
    """Inverse of L{hat} applied to the antisymmetric part of C{a}."""
    a = np.asarray(a, dtype=float)
    return 0.5 * np.stack([a[..., 2, 1] - a[..., 1, 2],
                           a[..., 0, 2] - a[..., 2, 0],
                           a[..., 1, 0] - a[..., 0, 1]], axis=-1)

def expMap(v):
    """
    Rodrigues formula for rotation vectors C{v = omega e}; works on stacks.

    @rtype: ndarray
    @return: Array of shape C{v.shape[:-1] + (3, 3)}.
    """
    v = np.asarray(v, dtype=float)
    theta = np.linalg.norm(v, axis=-1)[..., np.newaxis, np.newaxis]
    k = hat(v)
    small = theta < 1e-8
    safe = np.where(small, 1.0, theta)
    a = np.where(small, 1.0 - theta ** 2 / 6.0, np.sin(safe) / safe)
    b = np.where(small, 0.5 - theta ** 2 / 24.0, (1.0 - np.cos(safe)) / safe ** 2)
    return _EYE + a * k + b * np.matmul(k, k)

def exponential(i, t):
    """Returns C{e^{tL_i}} as a L{Rotation}."""
    generator(i)
    return Rotation.trusted(expMap(t * _EYE[i - 1]))

def rotationFromAxisAngle(e, omega):
    """
    Rodrigues rotation C{I cos(omega) + (1 - cos(omega)) e e^T + [e] sin(omega)}.

    @type e: array-like
    @param e: Unit 3-vector (to 1e-9).

    @type omega: float
    @param omega: Angle in M{[0, pi]}.

    @rtype: L{Rotation}

    @raise DomainException: Non-unit axis or angle out of range.
    """
    e = np.asarray(e, dtype=float)
    if e.shape != (3,):
        raise excep.DomainException("axis must be a 3-vector")
    norm = np.linalg.norm(e)
    if abs(norm - 1.0) > consts.AXIS_TOL:
        raise excep.DomainException("axis must be a unit vector, |e| = %r" % norm)
    if not 0.0 <= omega <= math.pi:
        raise excep.DomainException("rotation angle must lie in [0, pi], got %r" % omega)
    e = e / norm
    c, s = math.cos(omega), math.sin(omega)
    m = c * _EYE + (1.0 - c) * np.outer(e, e) + s * hat(e)
    return Rotation(m)

def rotationFromEuler(alpha, beta, gamma):
    return Rotation.trusted(rotZ(alpha).matrix.dot(rotX(beta).matrix).dot(rotZ(gamma).matrix))

def quaternionToMatrix(q):
    """Rotation matrices of (not necessarily normalized) quaternions C{(w, x, y, z)}."""
    q = np.asarray(q, dtype=float)
    q = q / np.linalg.norm(q, axis=-1, keepdims=True)
    w, x, y, z = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack([
        np.stack([1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)], axis=-1),
        np.stack([2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)], axis=-1),
        np.stack([2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)], axis=-1),
        ], axis=-2)

def angleOf(m):
    """
    Rotation angles of a stack of matrices, M{atan2(sin, cos)} from the
    antisymmetric part and the trace.
    """
    m = np.asarray(m, dtype=float)
    s = np.linalg.norm(vee(m), axis=-1)
    c = 0.5 * (np.trace(m, axis1=-2, axis2=-1) - 1.0)
    return np.arctan2(np.minimum(s, 1.0), np.clip(c, -1.0, 1.0))

def axisAngleArrays(m, zeroTol=consts.AXIS_ZERO_TOL, piTol=consts.AXIS_PI_TOL):
    """
    Axis and angle of a stack of rotation matrices.

    Angles up to C{zeroTol} get the conventional axis C{(0, 0, 1)}; with
    C{zeroTol=0} only exact identities do. Angles within C{piTol} of M{pi}
    take the axis from the dominant column of the symmetric part.

    @type m: ndarray
    @param m: Array of shape C{(..., 3, 3)}.

    @rtype: tuple
    @return: C{(axes, omegas)} of shapes C{(..., 3)} and C{(...)}.
    """
    m = np.asarray(m, dtype=float)
    v = vee(m)
    vnorm = np.asarray(np.linalg.norm(v, axis=-1))
    omega = np.asarray(angleOf(m))

    generic = v / np.where(vnorm > 0.0, vnorm, 1.0)[..., np.newaxis]

    # near pi: (x + x^T)/4 + I/2 = (1 + cos)/2 I + (1 - cos)/2 e e^T
    sym = 0.5 * (0.5 * (m + np.swapaxes(m, -1, -2)) + _EYE)
    diag = np.diagonal(sym, axis1=-2, axis2=-1)
    j = np.argmax(diag, axis=-1)
    column = np.take_along_axis(sym, j[..., np.newaxis, np.newaxis].repeat(3, axis=-2), axis=-1)[..., 0]
    shift = 0.5 * (1.0 + np.cos(omega))
    column = column - shift[..., np.newaxis] * _EYE[j]
    cnorm = np.linalg.norm(column, axis=-1, keepdims=True)
    column = column / np.where(cnorm > 0.0, cnorm, 1.0)
    sign = np.where(np.einsum("...i,...i->...", column, v) < 0.0, -1.0, 1.0)
    flipped = column * sign[..., np.newaxis]

    axes = np.where((omega >= math.pi - piTol)[..., np.newaxis], flipped, generic)
    conventional = (omega <= zeroTol) | (vnorm == 0.0) & (omega < math.pi / 2)
    axes = np.where(conventional[..., np.newaxis], np.asarray(consts.CONVENTIONAL_AXIS), axes)
    return axes, omega

def axisAngleOf(x):
    """
    Axis-angle form of a rotation.

    @type x: L{Rotation}

    @rtype: L{AxisAngle}
    """
    axes, omega = axisAngleArrays(x.matrix)
    return AxisAngle(axes, omega)

def logMap(m):
    """Rotation vectors C{omega e} of a stack of rotation matrices."""
    axes, omega = axisAngleArrays(m, zeroTol=0.0)
    return axes * omega[..., np.newaxis]

def eulerOf(x):
    """
    Euler ZXZ angles of a rotation. At the poles (C{sin(beta) < 1e-10}) the whole
    in-plane angle goes into C{alpha} and C{gamma = 0}.

    @rtype: L{EulerZXZ}
    """
    m = x.matrix if isinstance(x, Rotation) else np.asarray(x)
    alpha, beta, gamma = eulerArrays(m)
    return EulerZXZ(alpha, beta, gamma)

def eulerArrays(m):
    """
    Vectorized L{eulerOf}.

    @rtype: tuple
    @return: C{(alpha, beta, gamma)} arrays with C{alpha, gamma} in M{[0, 2pi)}.
    """
    m = np.asarray(m, dtype=float)
    sb = np.hypot(m[..., 2, 0], m[..., 2, 1])
    beta = np.arctan2(sb, m[..., 2, 2])
    pole = sb < consts.POLE_TOL
    gamma = np.where(pole, 0.0, np.arctan2(m[..., 2, 0], m[..., 2, 1]))
    alpha = np.where(pole, np.arctan2(m[..., 1, 0], m[..., 0, 0]), np.arctan2(m[..., 0, 2], -m[..., 1, 2]))
    twoPi = 2.0 * math.pi
    return np.mod(alpha, twoPi), beta, np.mod(gamma, twoPi)

def geodesicDistance(x, y):
    """
    Bi-invariant distance C{d(x, y) = omega(y^{-1} x)}.

    @rtype: float
    @return: Distance in M{[0, pi]}.
    """
    return float(angleOf(y.matrix.T.dot(x.matrix)))

def distanceMatrix(a, b, accurate=False):
    """
    Pairwise distances between two stacks of rotations, through the trace
    C{tr(b_j^T a_i)} with the arccos argument clamped to M{[-1, 1]}.

    @type accurate: bool
    @param accurate: (Optional) Form the relative rotations and use L{angleOf},
        exact near 0 and pi but nine times the memory.

    @rtype: ndarray
    @return: Array of shape C{(len(a), len(b))}.
    """
    a = asMatrices(a)
    b = asMatrices(b)
    if accurate:
        return angleOf(np.einsum("jba,ibc->ijac", b, a))
    tr = np.einsum("iab,jab->ij", a, b)
    return np.arccos(np.clip(0.5 * (tr - 1.0), -1.0, 1.0))

def separation(points):
    """
    Minimal pairwise geodesic distance of a support set.

    @raise DomainException: Fewer than two points.
    """
    if not isinstance(points, SupportSet):
        points = SupportSet(points)
    if len(points) < 2:
        raise excep.DomainException("separation needs at least two points, got %d" % len(points))
    return points.separation

def haarSamples(rng, n):
    """
    Draws C{n} Haar distributed rotation matrices from normalized Gaussian quaternions.

    @rtype: ndarray
    @return: Array of shape C{(n, 3, 3)}.
    """
    return quaternionToMatrix(rng.standard_normal((int(n), 4)))

def haarSample(rng):
    return Rotation(haarSamples(rng, 1)[0])

def haarAngleCdf(t):
    """CDF of the rotation angle under Haar measure, C{(t - sin t)/pi}."""
    t = np.asarray(t, dtype=float)
    return (t - np.sin(t)) / math.pi

def haarIntegrateZonal(f, n=64):
    """
    Haar integral of a zonal function, C{(2/pi) int_0^pi f(t) sin^2(t/2) dt},
    by Gauss-Legendre quadrature with C{n} nodes.
    """
    nodes, weights = np.polynomial.legendre.leggauss(n)
    t = 0.5 * math.pi * (nodes + 1.0)
    values = np.asarray(f(t), dtype=float)
    return float(np.sum(weights * values * np.sin(0.5 * t) ** 2))

def wellSeparatedSupport(rng, M, rhoMin, maxTries=10000):
    """
    Rejection sampling of Haar points until C{M} of them are pairwise at least
    C{rhoMin} apart.

    @type rng: C{numpy.random.Generator}
    @param rng: Random stream.

    @type M: int
    @param M: Number of points.

    @type rhoMin: float
    @param rhoMin: Minimal separation in radians.

    @type maxTries: int
    @param maxTries: Number of candidate draws before giving up.

    @rtype: L{SupportSet}

    @raise SaturationException: C{maxTries} exhausted.
    """
    accepted = []
    tries = 0
    while len(accepted) < M:
        if tries >= maxTries:
            raise excep.SaturationException("could only place %d of %d points with separation %r after %d tries" % (len(accepted), M, rhoMin, tries), len(accepted))
        tries += 1
        candidate = haarSamples(rng, 1)[0]
        if accepted and distanceMatrix(candidate, np.array(accepted), accurate=True).min() < rhoMin:
            continue
        accepted.append(candidate)
    logger.debug("placed %d points with separation >= %r in %d tries", M, rhoMin, tries)
    return SupportSet([Rotation(m) for m in accepted])

def fibonacciSphere(n):
    """C{n} nearly uniform unit vectors on the sphere (golden angle spiral)."""
    n = int(n)
    if n == 1:
        return np.array([consts.CONVENTIONAL_AXIS])
    k = np.arange(n) + 0.5
    z = 1.0 - 2.0 * k / n
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    phi = math.pi * (3.0 - math.sqrt(5.0)) * k
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=-1)

def ballSamples(center, radius, mesh):
    """
    Deterministic samples of the geodesic ball C{{center e^{v}: |v| <= radius}}:
    radius levels spaced by C{mesh} times Fibonacci axes dense enough that
    neighbouring samples on a level are about C{mesh} apart.

    @rtype: ndarray
    @return: Array of shape C{(K, 3, 3)}, the center first.
    """
    c = center.matrix if isinstance(center, Rotation) else np.asarray(center)
    levels = int(math.ceil(radius / mesh - 1e-12))
    vectors = [np.zeros((1, 3))]
    for level in range(1, levels + 1):
        r = min(level * mesh, radius)
        count = int(math.ceil(4.0 * math.pi * (r / mesh) ** 2)) + 1
        vectors.append(r * fibonacciSphere(count))
    v = np.concatenate(vectors)
    return np.matmul(c, expMap(v))

def numericX(f, x, i, h=consts.DEFAULT_FD_STEP):
    """
    Central difference C{(f(x e^{hL_i}) - f(x e^{-hL_i}))/(2h)}.

    @type f: callable
    @param f: Scalar field taking a L{Rotation}.

    @type x: L{Rotation}
    @param x: Evaluation point.

    @type i: int
    @param i: Axis index 1..3.

    @type h: float
    @param h: Step in M{(0, 1e-2]}.

    @raise DomainException: Step or axis out of range.
    """
    if not 0.0 < h <= consts.MAX_FD_STEP:
        raise excep.DomainException("finite-difference step must lie in (0, %g], got %r" % (consts.MAX_FD_STEP, h))
    generator(i)
    forward = Rotation.trusted(x.matrix.dot(exponential(i, h).matrix))
    backward = Rotation.trusted(x.matrix.dot(exponential(i, -h).matrix))
    return (f(forward) - f(backward)) / (2.0 * h)
