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
Tests for the grid lasso, support clustering, local refinement and the
end-to-end recovery of planted measures.
"""

__revision__ = "$Id$"

import math

import numpy as np
import pytest

from so3sr import consts, excep, recovery, so3core, utils, wigner

class TestGrid:
    def test_size_grows_cubically(self):
        sizes = [recovery.gridSize(r) for r in (0.2, 0.1, 0.05)]
        for a, b in zip(sizes, sizes[1:]):
            assert 2.6 <= math.log(b / a, 2) <= 3.4

    def test_matches_size(self):
        grid = recovery.buildGrid(0.5)
        assert grid.shape == (recovery.gridSize(0.5), 3, 3)
        assert np.allclose(np.matmul(grid, np.swapaxes(grid, 1, 2)), np.eye(3), atol=1e-12)
        assert np.allclose(np.linalg.det(grid), 1.0, atol=1e-12)

    def test_covering_radius(self, rng):
        resolution = 0.5
        grid = recovery.buildGrid(resolution)
        probes = so3core.haarSamples(rng, 1000)
        nearest = so3core.distanceMatrix(probes, grid).min(axis=1)
        assert nearest.max() <= 1.05 * math.sqrt(3.0) / 2.0 * consts.GRID_STRETCH * resolution

    def test_minimum_resolution(self):
        with pytest.raises(excep.CapabilityException):
            recovery.gridSize(0.5 * consts.MIN_RESOLUTION)
        with pytest.raises(excep.CapabilityException):
            recovery.buildGrid(0.01)

class TestMomentOperator:
    @pytest.fixture
    def op(self):
        return recovery.MomentOperator(recovery.buildGrid(1.0)[:30], 4)

    def test_gram_from_addition_formula(self, op):
        a = op.matrix()
        assert a.shape == (wigner.momentCount(4), 30)
        assert np.allclose(op.gram(), np.real(a.conj().T.dot(a)), atol=1e-9)
        assert np.allclose(np.diagonal(op.gram()), 25.0, atol=1e-12)

    def test_correlate(self, op, rng):
        mu = wigner.PointMeasure(so3core.wellSeparatedSupport(rng, 2, 0.5), [1.0, -0.5])
        b = wigner.moments(mu, 4)
        expected = np.real(op.matrix().conj().T.dot(b.entries))
        assert np.allclose(op.correlate(b), expected, atol=1e-10)
        parallel = recovery.MomentOperator(op.grid, 4, workers=3)
        assert np.allclose(parallel.correlate(b), expected, atol=1e-10)

    def test_apply_is_moment_map(self, op):
        coeffs = np.zeros(len(op))
        coeffs[[3, 17]] = [2.0, -1.0]
        mu = wigner.PointMeasure([op.grid[3], op.grid[17]], [2.0, -1.0])
        assert np.allclose(op.apply(coeffs).entries, wigner.moments(mu, 4).entries, atol=1e-12)
        assert not np.any(op.apply(np.zeros(len(op))).entries)

    def test_columns(self, op):
        assert np.allclose(op.columns(5, 9), op.matrix()[:, 5:9], atol=1e-14)

class TestLasso:
    def test_zero_moments(self):
        op = recovery.MomentOperator(recovery.buildGrid(1.0), 3)
        solution = recovery.l1Recover(wigner.MomentVector(3, np.zeros(wigner.momentCount(3))), op, 0.1)
        assert solution.converged
        assert not np.any(solution.coeffs)
        assert len(solution.support()) == 0

    def test_on_grid_spike(self):
        lam = 1e-4
        grid = recovery.buildGrid(0.8)
        op = recovery.MomentOperator(grid, 12)
        index = len(grid) // 3
        b = wigner.moments(wigner.PointMeasure([grid[index]], [1.0]), 12)
        solution = recovery.l1Recover(b, op, lam)
        assert solution.coeffs[index] == pytest.approx(1.0 - lam, abs=1e-3)
        others = np.delete(solution.coeffs, index)
        assert np.abs(others).max() <= 1e-3
        assert list(solution.support()) == [index]
        assert solution.gap <= 1e-2

    def test_rejects_bad_arguments(self):
        op = recovery.MomentOperator(recovery.buildGrid(1.0)[:10], 3)
        b = wigner.MomentVector(3, np.ones(wigner.momentCount(3)))
        with pytest.raises(excep.DomainException):
            recovery.l1Recover(b, op, 0.0)
        with pytest.raises(excep.DomainException):
            recovery.l1Recover(b.truncate(2), op, 0.1)

class TestClusterSupport:
    def test_merges_same_sign_neighbours(self):
        grid = np.array([so3core.identity().matrix, so3core.rotZ(0.05).matrix, so3core.rotZ(2.0).matrix])
        coarse = recovery.clusterSupport(grid, np.array([1.0, 0.5, -0.7]), radius=0.1)
        assert len(coarse) == 2
        assert np.allclose(coarse.coeffs, [1.5, -0.7])
        assert so3core.geodesicDistance(coarse.centers[0], so3core.identity()) < 0.05
        assert so3core.geodesicDistance(coarse.centers[1], so3core.rotZ(2.0)) < 1e-12

    def test_keeps_opposite_signs_apart(self):
        grid = np.array([so3core.identity().matrix, so3core.rotZ(0.05).matrix])
        coarse = recovery.clusterSupport(grid, np.array([1.0, -0.5]), radius=0.1)
        assert len(coarse) == 2

    def test_threshold(self):
        grid = np.array([so3core.identity().matrix, so3core.rotZ(1.0).matrix])
        assert len(recovery.clusterSupport(grid, np.array([1.0, 0.01]))) == 1

    def test_nothing_to_cluster(self):
        grid = np.array([so3core.identity().matrix])
        assert recovery.clusterSupport(grid, np.zeros(1)) is None

class TestLocalRefine:
    def test_converges_from_perturbed_start(self, rng):
        N = 24
        truth, b = recovery.plantMeasure(rng, N, 2, 36.0, [1.0, -0.6])
        shifted = [so3core.Rotation(c.matrix.dot(so3core.expMap(np.array([0.03, -0.02, 0.03])))) for c in truth.centers]
        coarse = wigner.PointMeasure(shifted, truth.coeffs * 1.05)
        refinement = recovery.localRefine(coarse, b, N)
        assert not refinement.flagged
        assert refinement.final <= 1e-6 * refinement.initial
        result = recovery.score(truth, refinement.measure, 0.1)
        assert result.unmatchedTrue == []
        assert result.maxGeodesicError <= 1e-5
        assert result.maxCoefficientError <= 1e-5

    def test_degenerate_start_is_flagged(self):
        x = so3core.rotX(0.7)
        b = wigner.moments(wigner.PointMeasure([x], [1.0]), 12)
        coarse = wigner.PointMeasure([x, x * so3core.rotZ(1e-12)], [0.5, 0.5])
        with pytest.warns(excep.RefinementWarning):
            refinement = recovery.localRefine(coarse, b, 12)
        assert refinement.flagged
        assert refinement.measure is coarse
        assert refinement.steps == 0

    def test_zero_coefficient_is_flagged(self):
        b = wigner.moments(wigner.PointMeasure([so3core.rotY(0.4)], [1.0]), 9)
        with pytest.warns(excep.RefinementWarning):
            refinement = recovery.localRefine(wigner.PointMeasure([so3core.rotY(0.5)], [0.0]), b, 9, continuation=False)
        assert refinement.flagged

    def test_needs_enough_moments(self):
        b = wigner.moments(wigner.PointMeasure([so3core.identity()], [1.0]), 4)
        with pytest.raises(excep.DomainException):
            recovery.localRefine(wigner.PointMeasure([so3core.identity()], [1.0]), b, 6)

class TestScore:
    def test_matching(self):
        truth = wigner.PointMeasure([so3core.identity(), so3core.rotX(2.0)], [1.0, -1.0])
        estimate = wigner.PointMeasure([so3core.rotX(2.01), so3core.rotZ(0.02), so3core.rotY(1.5)], [-0.9, 1.0, 0.1])
        result = recovery.score(truth, estimate, 0.1)
        assert [m[:2] for m in result.matches] == [(0, 1), (1, 0)]
        assert result.unmatchedTrue == []
        assert result.unmatchedEstimated == [2]
        assert result.maxGeodesicError == pytest.approx(0.02, abs=1e-12)
        assert result.maxCoefficientError == pytest.approx(0.1, abs=1e-12)
        assert result.toDict()["unmatched_estimated"] == [2]

    def test_empty_estimate(self):
        truth = wigner.PointMeasure([so3core.identity()], [1.0])
        result = recovery.score(truth, None, 0.1)
        assert result.unmatchedTrue == [0]
        assert result.maxGeodesicError == 0.0

class TestRecoverMeasure:
    def test_lasso_degree(self):
        assert recovery.lassoDegree(24, 0.3) == 8
        assert recovery.lassoDegree(4, 0.3) == 4
        assert recovery.lassoDegree(24, 3.0) == 1

    def test_zero_moments(self):
        b = wigner.MomentVector(6, np.zeros(wigner.momentCount(6)))
        run = recovery.recoverMeasure(b, 6, 0.8, 0.1)
        assert run.coarse is None
        assert run.estimate is None
        assert run.residual == 0.0

    def test_hypotheses(self):
        b = wigner.moments(wigner.PointMeasure([so3core.identity()], [1.0]), 6)
        with pytest.raises(excep.DomainException):
            recovery.recoverMeasure(b, 8, 0.8, 0.1)
        with pytest.raises(excep.DomainException):
            recovery.recoverMeasure(b, 6, 0.8, 0.1, degree=7)

    def test_plant_rejects_mismatch(self, rng):
        with pytest.raises(excep.DomainException):
            recovery.plantMeasure(rng, 20, 3, 36.0, [1.0, 2.0])

    def test_plant_and_recover(self):
        N = 24
        stream = utils.streamFor(consts.DEFAULT_SEED, "recovery-tests")
        truth, b = recovery.plantMeasure(stream, N, 3, 36.0, [1.0, -2.0, 1.0])
        assert truth.centers.separation >= 36.0 / (N + 1)
        run = recovery.recoverMeasure(b, N, 0.3, 0.05)
        assert run.degree == 8
        result = recovery.score(truth, run.estimate, 0.2)
        assert result.unmatchedTrue == []
        assert result.maxGeodesicError <= 1e-3
        assert result.maxCoefficientError <= 1e-2
        for j in result.unmatchedEstimated:
            assert abs(run.estimate.coeffs[j]) <= 1e-2
