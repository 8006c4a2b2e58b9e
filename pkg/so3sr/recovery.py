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
Desk-scale recovery of point measures from their moments: an l1 problem on a
covering net of SO(3), clustering of the grid solution, continuous refinement
and scoring against a planted truth.

The gridded problem is the lasso C{min 1/2 ||A c - b||^2 + lam ||c||_1} over
real C{c}, scaled by C{1/(N+1)^2} so that the Gram matrix has unit diagonal.
It is solved by ADMM on the Gram matrix C{Q = Re(A^H A)}, whose entries are
C{sum_{l<=N} chi_l(d(g_i, g_j))}, so the moment design itself is never stored.

@group Grid:
    buildGrid, gridSize

@group Operator:
    MomentOperator

@group Solvers:
    L1Solution, l1Recover, clusterSupport, Refinement, localRefine

@group Pipeline:
    RecoveryResult, score, RecoveryRun, lassoDegree, recoverMeasure, plantMeasure
"""

__revision__ = "$Id$"

__all__ = [
           "buildGrid",
           "gridSize",
           "MomentOperator",
           "L1Solution",
           "l1Recover",
           "clusterSupport",
           "Refinement",
           "localRefine",
           "RecoveryResult",
           "score",
           "RecoveryRun",
           "lassoDegree",
           "recoverMeasure",
           "plantMeasure",
           ]

from . import consts
from . import excep
from . import so3core
from . import utils
from . import wigner

from collections import OrderedDict
import logging
import math
import warnings

import numpy as np
from scipy import linalg
from scipy import special

logger = logging.getLogger(__name__)

def _netLevels(resolution):
    h = consts.GRID_STRETCH * resolution
    levels = max(1, int(math.ceil(math.pi / h)))
    width = math.pi / levels
    beta = (np.arange(levels) + 0.5) * width
    # largest metric factors over each beta cell
    cosMax = np.cos(0.5 * np.maximum(beta - 0.5 * width, 0.0))
    sinMax = np.sin(0.5 * np.minimum(beta + 0.5 * width, math.pi))
    nu = np.maximum(1, np.ceil(4.0 * math.pi * cosMax / h)).astype(int)
    nv = np.maximum(1, np.ceil(2.0 * math.pi * sinMax / h)).astype(int)
    return beta, nu, nv

def _checkResolution(resolution):
    if resolution < consts.MIN_RESOLUTION:
        raise excep.CapabilityException("resolution %r is below the supported minimum pi/256" % (resolution,))

def gridSize(resolution):
    """Number of points L{buildGrid} produces for C{resolution}."""
    _checkResolution(resolution)
    beta, nu, nv = _netLevels(resolution)
    return int(np.sum(nu * nv))

def buildGrid(resolution):
    """
    Covering net of SO(3) with covering radius at most C{resolution}.

    The net is regular in C{beta} and in C{u = alpha + gamma} and
    C{v = alpha - gamma} (Euler ZXZ). In these coordinates the metric is
    C{d^2 = dbeta^2 + cos^2(beta/2) du^2 + sin^2(beta/2) dv^2}, so on each C{beta}
    cell the C{u} and C{v} spacings are widened by the largest C{1/cos(beta/2)}
    and C{1/sin(beta/2)} of the cell. Every point then lies within
    C{sqrt(3)/2 * 1.1 * resolution} of a grid point.

    @type resolution: float
    @param resolution: Covering radius in radians, at least M{pi/256}.

    @rtype: ndarray
    @return: Array of shape C{(G, 3, 3)}.

    @raise CapabilityException: Resolution too small or more than 10^6 points.
    """
    size = gridSize(resolution)
    if size > consts.MAX_GRID_SIZE:
        raise excep.CapabilityException("resolution %r needs %d grid points, more than %d" % (resolution, size, consts.MAX_GRID_SIZE))
    beta, nu, nv = _netLevels(resolution)
    quaternions = []
    for b, cu, cv in zip(beta, nu, nv):
        u = (np.arange(cu) + 0.5) * 4.0 * math.pi / cu
        v = (np.arange(cv) + 0.5) * 2.0 * math.pi / cv
        uu, vv = np.meshgrid(u, v, indexing="ij")
        uu, vv = uu.ravel(), vv.ravel()
        c, s = math.cos(0.5 * b), math.sin(0.5 * b)
        quaternions.append(np.stack([c * np.cos(0.5 * uu), s * np.cos(0.5 * vv), s * np.sin(0.5 * vv), c * np.sin(0.5 * uu)], axis=-1))
    grid = so3core.quaternionToMatrix(np.concatenate(quaternions))
    logger.info("built a net of %d rotations at resolution %.4g", len(grid), resolution)
    return grid

def _halfCosines(a, b):
    # cos(d/2) from the trace, exact near 0
    tr = np.einsum("iab,jab->ij", a, b)
    return np.sqrt(np.clip(0.25 * (1.0 + tr), 0.0, 1.0))

class MomentOperator(object):
    """
    The moment map C{c -> sum_j c_j moments(delta_{g_j}, N)} of a grid.

    Column blocks of the design are formed on demand in chunks; the Gram
    matrix comes from the addition formula.
    """
    def __init__(self, grid, N, workers=None):
        """
        @type grid: ndarray
        @param grid: Stack of candidate rotations.

        @type N: int
        @param N: Degree.
        """
        self.grid = so3core.asMatrices(grid)
        self.N = int(N)
        self.workers = workers
        self._gram = None

    def __len__(self):
        return len(self.grid)

    def __repr__(self):
        return "MomentOperator(G=%d, N=%d)" % (len(self.grid), self.N)

    def columns(self, start, stop):
        """The design columns C{start..stop-1}."""
        return wigner.momentMatrix(self.grid[start:stop], self.N)

    def matrix(self):
        """The full complex design. Only for small grids."""
        return wigner.momentMatrix(self.grid, self.N, self.workers)

    def gram(self):
        """C{Q_ij = U_N(cos(d(g_i, g_j)/2))^2}."""
        if self._gram is None:
            self._gram = special.eval_chebyu(self.N, _halfCosines(self.grid, self.grid)) ** 2
            self._gram = 0.5 * (self._gram + self._gram.T)
        return self._gram

    def correlate(self, b):
        """C{Re(A^H b)}, chunked over the grid."""
        entries = b.entries if isinstance(b, wigner.MomentVector) else np.asarray(b)

        def work(start, stop):
            return np.real(self.columns(start, stop).conj().T.dot(entries))

        parts = utils.mapChunks(work, len(self.grid), consts.WIGNER_CHUNK // 8, self.workers)
        return np.concatenate(parts) if parts else np.zeros(0)

    def apply(self, coeffs):
        """C{A c} as a L{wigner.MomentVector}."""
        coeffs = np.asarray(coeffs, dtype=float)
        total = np.zeros(wigner.momentCount(self.N), dtype=complex)
        active = np.nonzero(coeffs)[0]
        if active.size:
            total = wigner.momentMatrix(self.grid[active], self.N).dot(coeffs[active])
        return wigner.MomentVector(self.N, total)

class L1Solution(object):
    """Result of L{l1Recover}."""
    def __init__(self, coeffs, iterations, converged, gap, objectives, primal, dual):
        self.coeffs = coeffs
        self.iterations = iterations
        self.converged = converged
        self.gap = gap
        self.objectives = objectives
        self.primal = primal
        self.dual = dual

    def __repr__(self):
        return "L1Solution(iterations=%d, converged=%r, gap=%.3g)" % (self.iterations, self.converged, self.gap)

    def support(self, threshold=consts.SUPPORT_THRESHOLD):
        """Indices with C{|c| >= threshold * max |c|}."""
        peak = np.max(np.abs(self.coeffs)) if self.coeffs.size else 0.0
        if peak == 0.0:
            return np.zeros(0, dtype=int)
        return np.nonzero(np.abs(self.coeffs) >= threshold * peak)[0]

    @property
    def monotone(self):
        """Whether the monitored objective never increased by more than rounding."""
        values = np.asarray(self.objectives)
        return bool(np.all(np.diff(values) <= 1e-9 * np.maximum(1.0, np.abs(values[1:])))) if values.size > 1 else True

def _softThreshold(x, kappa):
    return np.sign(x) * np.maximum(np.abs(x) - kappa, 0.0)

def l1Recover(b, op, lam, iters=consts.ADMM_ITERATIONS, rho=consts.ADMM_RHO, tol=consts.ADMM_TOL):
    """
    Lasso over the grid by ADMM.

    @type b: L{wigner.MomentVector}
    @param b: Moments up to degree C{op.N}.

    @type op: L{MomentOperator}

    @type lam: float
    @param lam: Penalty, relative to the unit-diagonal scaling.

    @type iters: int
    @param iters: Iteration cap.

    @rtype: L{L1Solution}
    @return: Coefficients, flagged not converged when the residuals stay above
        C{tol} after C{iters} iterations.

    @raise DomainException: C{lam <= 0} or degree mismatch.
    """
    if not lam > 0.0:
        raise excep.DomainException("lambda must be positive, got %r" % (lam,))
    if b.degree != op.N:
        raise excep.DomainException("moments of degree %d for an operator of degree %d" % (b.degree, op.N))
    scale = (op.N + 1.0) ** 2
    Q = op.gram() / scale
    r = op.correlate(b) / scale
    bb = b.norm() ** 2 / scale
    G = len(op)
    if not np.any(r):
        logger.info("zero correlation, returning the zero solution")
        return L1Solution(np.zeros(G), 0, True, math.sqrt(max(bb, 0.0) * scale), [0.0], 0.0, 0.0)

    factor = linalg.cho_factor(Q + rho * np.eye(G))
    z = np.zeros(G)
    w = np.zeros(G)
    objectives = []

    def objective(c):
        return 0.5 * c.dot(Q.dot(c)) - r.dot(c) + 0.5 * bb + lam * np.sum(np.abs(c))

    converged = False
    iteration = 0
    primal = dual = math.inf
    for iteration in range(1, iters + 1):
        x = linalg.cho_solve(factor, r + rho * (z - w))
        previous = z
        z = _softThreshold(x + w, lam / rho)
        w = w + x - z
        primal = float(np.linalg.norm(x - z))
        dual = float(rho * np.linalg.norm(z - previous))
        objectives.append(float(objective(z)))
        if primal <= tol * math.sqrt(G) and dual <= tol * math.sqrt(G):
            converged = True
            break
    gap = math.sqrt(max(z.dot(Q.dot(z)) - 2.0 * r.dot(z) + bb, 0.0) * scale)
    solution = L1Solution(z, iteration, converged, gap, objectives, primal, dual)
    if converged:
        logger.info("ADMM stopped after %d iterations (gap %.3g)", iteration, gap)
    else:
        logger.warning("ADMM did not converge in %d iterations: primal %.3g, dual %.3g, gap %.3g", iters, primal, dual, gap)
    if not solution.monotone:
        logger.debug("ADMM objective was not monotone")
    return solution

def _chordalMean(matrices, weights):
    mean = np.einsum("i,iab->ab", weights, matrices)
    u, _, vt = np.linalg.svd(mean)
    d = np.sign(np.linalg.det(u.dot(vt)))
    return u.dot(np.diag([1.0, 1.0, d])).dot(vt)

def clusterSupport(grid, coeffs, threshold=consts.SUPPORT_THRESHOLD, radius=None):
    """
    Greedy clustering of the significant grid coefficients.

    Starting from the largest remaining coefficient, every remaining coefficient
    of the same sign within C{radius} joins its cluster. A cluster's center is
    the weighted chordal mean projected onto SO(3) and its coefficient the sum
    of its members.

    @type grid: ndarray
    @param grid: Stack of grid rotations.

    @type coeffs: ndarray
    @param coeffs: Grid coefficients.

    @type threshold: float
    @param threshold: Relative support threshold.

    @type radius: float
    @param radius: (Optional) Cluster radius in radians. Without it only
        coinciding grid points merge.

    @rtype: L{wigner.PointMeasure}
    @return: The coarse measure (C{None} when nothing is above the threshold).
    """
    radius = 0.0 if radius is None else radius
    grid = so3core.asMatrices(grid)
    coeffs = np.asarray(coeffs, dtype=float)
    peak = np.max(np.abs(coeffs)) if coeffs.size else 0.0
    if peak == 0.0:
        return None
    active = np.nonzero(np.abs(coeffs) >= threshold * peak)[0]
    active = active[np.argsort(-np.abs(coeffs[active]), kind="stable")]
    distances = so3core.distanceMatrix(grid[active], grid[active], accurate=True)
    taken = np.zeros(len(active), dtype=bool)
    centers = []
    values = []
    for position in range(len(active)):
        if taken[position]:
            continue
        sign = np.sign(coeffs[active[position]])
        members = np.nonzero(~taken & (distances[position] <= radius) & (np.sign(coeffs[active]) == sign))[0]
        taken[members] = True
        weights = np.abs(coeffs[active[members]])
        centers.append(_chordalMean(grid[active[members]], weights / weights.sum()))
        values.append(float(np.sum(coeffs[active[members]])))
    logger.info("clustered %d grid coefficients into %d spikes", len(active), len(centers))
    return wigner.PointMeasure([so3core.Rotation(c) for c in centers], values)

class Refinement(object):
    """Result of L{localRefine}."""
    def __init__(self, measure, initial, final, steps, flagged, reason=None):
        self.measure = measure
        self.initial = initial
        self.final = final
        self.steps = steps
        self.flagged = flagged
        self.reason = reason

    def __repr__(self):
        return "Refinement(residual %.3g -> %.3g, flagged=%r)" % (self.initial, self.final, self.flagged)

def _stacked(vector):
    return np.concatenate([vector.real, vector.imag])

def _residual(centers, coeffs, b):
    return wigner.momentMatrix(centers, b.degree).dot(coeffs.astype(complex)) - b.entries

def _jacobian(centers, coeffs, N, h):
    M = len(centers)
    columns = [wigner.momentMatrix(centers, N)]
    for a in range(1, 4):
        plus = np.matmul(centers, so3core.exponential(a, h).matrix)
        minus = np.matmul(centers, so3core.exponential(a, -h).matrix)
        derivative = (wigner.momentMatrix(plus, N) - wigner.momentMatrix(minus, N)) / (2.0 * h)
        columns.append(derivative * coeffs[None, :])
    J = np.concatenate(columns, axis=1)
    return np.concatenate([J.real, J.imag]), M

def _levenbergMarquardt(centers, coeffs, b, steps, h):
    N = b.degree
    r = _stacked(_residual(centers, coeffs, b))
    cost = float(r.dot(r))
    damping = 1e-3
    taken = 0
    for step in range(steps):
        J, M = _jacobian(centers, coeffs, N, h)
        singular = np.linalg.svd(J, compute_uv=False)
        if step == 0 and singular[-1] <= consts.RANK_TOL * singular[0]:
            return centers, coeffs, taken, "rank-deficient Jacobian at degree %d" % N
        JtJ = J.T.dot(J)
        g = J.T.dot(r)
        if math.sqrt(cost) <= 1e-14 * max(1.0, b.norm()) or np.max(np.abs(g)) <= 1e-15 * singular[0] ** 2:
            break
        accepted = False
        while damping < 1e12:
            delta = np.linalg.solve(JtJ + damping * np.diag(np.diag(JtJ)), -g)
            newCoeffs = coeffs + delta[:M]
            rotation = delta[M:].reshape(3, M).T
            newCenters = np.matmul(centers, so3core.expMap(rotation))
            newR = _stacked(_residual(newCenters, newCoeffs, b))
            newCost = float(newR.dot(newR))
            if newCost < cost:
                centers, coeffs, r, cost = newCenters, newCoeffs, newR, newCost
                damping = max(damping / 10.0, 1e-12)
                accepted = True
                taken += 1
                break
            damping *= 10.0
        logger.debug("refinement step %d at degree %d: residual %.3g", step, N, math.sqrt(cost))
        if not accepted:
            break
    return centers, coeffs, taken, None

def localRefine(coarse, b, N, steps=consts.REFINE_STEPS, h=consts.REFINE_FD_STEP, continuation=True, prune=consts.PRUNE_THRESHOLD):
    """
    Levenberg-Marquardt refinement of centers and coefficients minimizing
    C{||A(mu) - b||_2^2}, with C{X_i} derivatives of the moments by central
    differences. With C{continuation} the degree runs through C{N/3}, C{2N/3}
    and C{N} on the moment prefixes.

    A step is taken only when the residual strictly decreases. Before each
    degree, spikes below C{prune} times the largest coefficient are dropped;
    the Jacobian rank is tested on the first step of each degree.

    @type coarse: L{wigner.PointMeasure}
    @param coarse: Starting spikes.

    @type b: L{wigner.MomentVector}
    @param b: Moments, of degree at least C{N}.

    @rtype: L{Refinement}
    @return: The refined measure; flagged (and unchanged) when the Jacobian is
        rank deficient.
    """
    if b.degree < N:
        raise excep.DomainException("refinement at degree %d needs moments up to %d, got %d" % (N, N, b.degree))
    target = b.truncate(N)
    centers = np.array(coarse.centers.matrices)
    coeffs = np.array(coarse.coeffs, dtype=float)
    initial = float(np.linalg.norm(_residual(centers, coeffs, target)))
    degrees = sorted(set(max(1, N * k // 3) for k in (1, 2, 3))) if continuation else [N]
    total = 0
    for degree in degrees:
        if len(coeffs) > 1:
            keep = np.abs(coeffs) > prune * np.max(np.abs(coeffs))
            if not np.all(keep):
                logger.debug("dropping %d collapsed spikes before degree %d", int(np.sum(~keep)), degree)
                centers, coeffs = centers[keep], coeffs[keep]
        centers, coeffs, taken, reason = _levenbergMarquardt(centers, coeffs, b.truncate(degree), steps, h)
        total += taken
        if reason is not None:
            logger.warning("refinement skipped: %s", reason)
            warnings.warn("refinement skipped: %s" % reason, excep.RefinementWarning)
            return Refinement(coarse, initial, initial, 0, True, reason)
    final = float(np.linalg.norm(_residual(centers, coeffs, target)))
    if final > initial:
        # continuation can trade the low degrees against the full one
        return Refinement(coarse, initial, initial, 0, False, "no improvement at degree %d" % N)
    try:
        measure = wigner.PointMeasure([so3core.Rotation(c) for c in centers], coeffs)
    except excep.DomainException as error:
        warnings.warn("refinement skipped: %s" % error, excep.RefinementWarning)
        return Refinement(coarse, initial, initial, 0, True, str(error))
    logger.info("refined %d spikes: residual %.3g -> %.3g in %d steps", len(coeffs), initial, final, total)
    return Refinement(measure, initial, final, total, False)

class RecoveryResult(object):
    """
    Matching of an estimate against the truth.

    C{matches} holds C{(true index, estimated index, geodesic error,
    coefficient error)} rows ordered by true index.
    """
    def __init__(self, estimate, matches, unmatchedTrue, unmatchedEstimated, residual=None, iterations=None, converged=None):
        self.estimate = estimate
        self.matches = matches
        self.unmatchedTrue = unmatchedTrue
        self.unmatchedEstimated = unmatchedEstimated
        self.residual = residual
        self.iterations = iterations
        self.converged = converged

    @property
    def maxGeodesicError(self):
        return max([m[2] for m in self.matches] or [0.0])

    @property
    def maxCoefficientError(self):
        return max([m[3] for m in self.matches] or [0.0])

    def toDict(self):
        out = OrderedDict()
        out["matches"] = [OrderedDict([("true", t), ("estimated", e), ("geodesic_error", g), ("coefficient_error", c)]) for (t, e, g, c) in self.matches]
        out["unmatched_true"] = list(self.unmatchedTrue)
        out["unmatched_estimated"] = list(self.unmatchedEstimated)
        out["max_geodesic_error"] = self.maxGeodesicError
        out["max_coefficient_error"] = self.maxCoefficientError
        out["residual"] = self.residual
        out["iterations"] = self.iterations
        out["converged"] = self.converged
        if self.estimate is not None:
            out["estimate"] = OrderedDict([("euler", [list(so3core.eulerArrays(m)) for m in self.estimate.centers.matrices]),
                                           ("coeffs", list(self.estimate.coeffs))])
        return out

def score(truth, estimate, matchRadius):
    """
    Greedy nearest-neighbour matching within C{matchRadius}, closest pairs first.

    @rtype: L{RecoveryResult}
    """
    if estimate is None or len(estimate) == 0:
        return RecoveryResult(estimate, [], list(range(len(truth))), [])
    d = so3core.distanceMatrix(truth.centers.matrices, estimate.centers.matrices, accurate=True)
    order = np.argsort(d, axis=None, kind="stable")
    usedTrue = set()
    usedEstimated = set()
    matches = []
    for flat in order:
        i, j = np.unravel_index(flat, d.shape)
        if d[i, j] > matchRadius:
            break
        if i in usedTrue or j in usedEstimated:
            continue
        usedTrue.add(i)
        usedEstimated.add(j)
        matches.append((int(i), int(j), float(d[i, j]), float(abs(truth.coeffs[i] - estimate.coeffs[j]))))
    matches.sort()
    return RecoveryResult(estimate, matches,
                          [i for i in range(len(truth)) if i not in usedTrue],
                          [j for j in range(len(estimate)) if j not in usedEstimated])

class RecoveryRun(object):
    """Everything L{recoverMeasure} produced."""
    def __init__(self, grid, degree, solution, coarse, refinement, estimate, residual):
        self.grid = grid
        self.degree = degree
        self.solution = solution
        self.coarse = coarse
        self.refinement = refinement
        self.estimate = estimate
        self.residual = residual

def lassoDegree(N, resolution):
    """
    Largest degree (at most C{N}) whose kernel width C{pi/(degree+1)} is at
    least the grid spacing of L{buildGrid}.
    """
    h = consts.GRID_STRETCH * resolution
    return int(max(1, min(N, math.floor(math.pi / h) - 1)))

def recoverMeasure(b, N, resolution, lam, iters=consts.ADMM_ITERATIONS, threshold=consts.SUPPORT_THRESHOLD,
                   clusterRadius=None, prune=consts.PRUNE_THRESHOLD, refine=True, degree=None, workers=None):
    """
    Grid, lasso, clustering, refinement with degree continuation and pruning.

    The lasso runs on the moment prefix of degree L{lassoDegree} so that the
    net resolves its kernel; refinement then works up to C{N}.

    @type b: L{wigner.MomentVector}
    @param b: Moments up to degree C{N} (or higher).

    @type resolution: float
    @param resolution: Grid covering radius.

    @type clusterRadius: float
    @param clusterRadius: (Optional) Defaults to twice the resolution.

    @type prune: float
    @param prune: Spikes below C{prune * max |c|} are dropped.

    @type degree: int
    @param degree: (Optional) Lasso degree, defaults to L{lassoDegree}.

    @rtype: L{RecoveryRun}
    """
    if b.degree < N:
        raise excep.DomainException("recovery at degree %d needs moments up to %d, got %d" % (N, N, b.degree))
    target = b.truncate(N)
    grid = buildGrid(resolution)
    degree = lassoDegree(N, resolution) if degree is None else int(degree)
    if not 1 <= degree <= N:
        raise excep.DomainException("lasso degree must lie in [1, %d], got %d" % (N, degree))
    op = MomentOperator(grid, degree, workers)
    solution = l1Recover(target.truncate(degree), op, lam, iters)
    radius = consts.CLUSTER_FACTOR * resolution if clusterRadius is None else clusterRadius
    coarse = clusterSupport(grid, solution.coeffs, threshold, radius)
    if coarse is None:
        return RecoveryRun(grid, degree, solution, None, None, None, target.norm())
    refinement = localRefine(coarse, target, N, prune=prune) if refine else None
    estimate = refinement.measure if refinement is not None else coarse
    keep = np.abs(estimate.coeffs) >= prune * np.max(np.abs(estimate.coeffs))
    if not np.all(keep):
        logger.info("pruned %d negligible spikes", int(np.sum(~keep)))
        estimate = wigner.PointMeasure([c for (c, k) in zip(estimate.centers, keep) if k], estimate.coeffs[keep])
    residual = (wigner.moments(estimate, N) - target).norm()
    return RecoveryRun(grid, degree, solution, coarse, refinement, estimate, residual)

def plantMeasure(rng, N, M, nu, coeffs):
    """
    A point measure with separation at least C{nu/(N+1)} and its moments.

    @type coeffs: list
    @param coeffs: C{M} coefficients.

    @rtype: tuple
    @return: C{(PointMeasure, MomentVector)}.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    if len(coeffs) != M:
        raise excep.DomainException("%d coefficients for %d spikes" % (len(coeffs), M))
    support = so3core.wellSeparatedSupport(rng, M, nu / (N + 1.0))
    mu = wigner.PointMeasure(support, coeffs)
    return mu, wigner.moments(mu, N)
