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
Tests for the zonal kernel and its derivatives, checked against central
differences along the left-invariant vector fields, and for the localization
and off-diagonal verifications.
"""

__revision__ = "$Id$"

import math
import warnings

import numpy as np
import pytest

from so3sr import excep, kernel, so3core

STEPS = (1e-2, 1e-3, 1e-4)

def _shiftX(func, x, y, i, h):
    e = so3core.exponential(i, h).matrix
    return (func(np.matmul(x, e), y) - func(np.matmul(x, e.T), y)) / (2.0 * h)

def _shiftY(func, x, y, i, h):
    e = so3core.exponential(i, h).matrix
    return (func(x, np.matmul(y, e)) - func(x, np.matmul(y, e.T))) / (2.0 * h)

def _slopes(errors):
    return [math.log10(errors[a] / errors[a + 1]) for a in range(len(errors) - 1)]

@pytest.fixture
def pairs(rng):
    return so3core.haarSamples(rng, 100), so3core.haarSamples(rng, 100)

class TestKernelValues:
    def test_normalized_at_zero(self, kernel8):
        assert kernel8.sigmaTilde(0.0) == pytest.approx(1.0, abs=1e-14)
        assert kernel8.sigma(so3core.rotX(0.4), so3core.rotX(0.4)) == pytest.approx(1.0, abs=1e-14)

    def test_symmetric_and_invariant(self, kernel8, rng):
        for _ in range(20):
            x, y, z = (so3core.haarSample(rng) for _ in range(3))
            value = kernel8.sigma(x, y)
            assert kernel8.sigma(y, x) == pytest.approx(value, abs=1e-13)
            assert kernel8.sigma(z * x, z * y) == pytest.approx(value, abs=1e-12)

    def test_derivative_orders(self, kernel8, spec8):
        assert kernel8.derivativeAtZero(3) == 0.0
        assert kernel8.derivativeAtZero(2) == spec8.evenDerivativeAtZero(2)
        with pytest.raises(excep.CapabilityException):
            kernel8.derivativeAtZero(8)
        with pytest.raises(excep.CapabilityException):
            kernel8.sigmaTilde(0.5, order=4)

    def test_stacks_broadcast(self, kernel8, pairs):
        x, y = pairs
        assert kernel8.sigma(x, y).shape == (100,)
        assert kernel8.mixed(x, y).shape == (100, 3, 3)
        assert kernel8.third(x, y).shape == (100, 3, 3, 3)
        single = kernel8.sigma(so3core.Rotation(x[3]), so3core.Rotation(y[3]))
        assert kernel8.sigma(x, y)[3] == pytest.approx(single, abs=1e-15)

    def test_jet(self, kernel8, pairs):
        x, y = pairs
        jet = kernel8.jet(x, y)
        assert np.allclose(jet.st0, kernel8.sigma(x, y), atol=1e-15)
        assert np.allclose(jet.st1, kernel8.sigmaTilde(jet.omega, order=1), atol=1e-12)
        p = jet.projector()
        assert np.allclose(np.matmul(p, p), p, atol=1e-12)
        assert np.allclose(jet.cross(), -np.swapaxes(jet.cross(), -1, -2), atol=0.0)

class TestCoincidence:
    def test_first_derivatives_vanish(self, kernel8, rng):
        x = so3core.haarSample(rng)
        assert np.allclose(kernel8.gradX(x, x), 0.0, atol=1e-12)
        assert np.allclose(kernel8.gradY(x, x), 0.0, atol=1e-12)

    def test_mixed_is_scaled_identity(self, kernel8, rng):
        x = so3core.haarSample(rng)
        assert np.allclose(kernel8.mixed(x, x), -kernel8.derivativeAtZero(2) * np.eye(3), atol=1e-10)

    def test_corrected_third_vanishes(self, kernel8, rng):
        x = so3core.haarSample(rng)
        assert np.allclose(kernel8.correctedThird(x, x), 0.0, atol=1e-9)

    def test_small_angle_series_is_continuous(self, kernel8):
        below = so3core.rotZ(0.9e-6)
        above = so3core.rotZ(1.1e-6)
        y = so3core.identity()
        for name in ("mixed", "secondX", "hessianSigma", "third"):
            a = getattr(kernel8, name)(below, y)
            b = getattr(kernel8, name)(above, y)
            assert np.allclose(a, b, atol=1e-4 * np.abs(a).max())

class TestFiniteDifferenceOracle:
    def _check(self, analytic, numeric):
        errors = [np.abs(numeric(h) - analytic).max() for h in STEPS]
        for slope in _slopes(errors):
            assert 1.8 <= slope <= 2.2, errors

    def test_gradients(self, kernel6, pairs):
        x, y = pairs
        for i in (1, 2, 3):
            self._check(kernel6.gradX(x, y)[:, i - 1], lambda h: _shiftX(kernel6.sigma, x, y, i, h))
            self._check(kernel6.gradY(x, y)[:, i - 1], lambda h: _shiftY(kernel6.sigma, x, y, i, h))

    def test_mixed(self, kernel6, pairs):
        x, y = pairs
        mixed = kernel6.mixed(x, y)
        for i in (1, 2, 3):
            for n in (1, 2, 3):
                component = lambda a, b: kernel6.gradY(a, b)[:, n - 1]
                self._check(mixed[:, i - 1, n - 1], lambda h: _shiftX(component, x, y, i, h))

    def test_second_x(self, kernel6, pairs):
        x, y = pairs
        second = kernel6.secondX(x, y)
        for j in (1, 2, 3):
            for i in (1, 2, 3):
                component = lambda a, b: kernel6.gradX(a, b)[:, i - 1]
                self._check(second[:, j - 1, i - 1], lambda h: _shiftX(component, x, y, j, h))

    def test_third(self, kernel6, pairs):
        x, y = pairs
        third = kernel6.third(x, y)
        for j in (1, 2, 3):
            for i in (1, 2, 3):
                for n in (1, 2, 3):
                    component = lambda a, b: kernel6.mixed(a, b)[:, i - 1, n - 1]
                    self._check(third[:, j - 1, i - 1, n - 1], lambda h: _shiftX(component, x, y, j, h))

    def test_hessian_is_symmetric_part(self, kernel6, pairs):
        x, y = pairs
        second = kernel6.secondX(x, y)
        hessian = kernel6.hessianSigma(x, y)
        assert np.allclose(hessian, np.swapaxes(hessian, -1, -2), atol=1e-12)
        assert np.allclose(hessian, 0.5 * (second + np.swapaxes(second, -1, -2)), atol=1e-10)

    def test_single_component_accessors(self, kernel6, rng):
        x, y = so3core.haarSample(rng), so3core.haarSample(rng)
        assert kernel6.mixedSigma(x, y, 2, 3) == pytest.approx(kernel6.mixed(x, y)[1, 2], abs=1e-15)
        corrected = kernel6.correctedThird(x, y)
        third = kernel6.third(x, y)
        assert kernel6.thirdSigmaTerms(x, y, (2, 2, 1)) == pytest.approx(third[1, 1, 0], abs=1e-15)
        assert kernel6.thirdSigmaTerms(x, y, (1, 2, 3)) == pytest.approx(corrected[0, 1, 2], abs=1e-15)

class TestWignerExpansion:
    def test_zonality_bridge(self, kernel6, rng):
        for _ in range(100):
            x, y = so3core.haarSample(rng), so3core.haarSample(rng)
            assert kernel6.sigmaFromWigner(x, y) == pytest.approx(kernel6.sigma(x, y), abs=1e-8)

class TestAxisDerivative:
    def test_matches_finite_differences(self, rng):
        h = 1e-5
        for omega in (0.3, 1.2, 2.8):
            e = rng.standard_normal(3)
            e /= np.linalg.norm(e)
            relative = so3core.rotationFromAxisAngle(e, omega).matrix
            table = kernel.rotationAxisDerivative(e, omega)
            for i in (1, 2, 3):
                plus, _ = so3core.axisAngleArrays(relative.dot(so3core.exponential(i, h).matrix))
                minus, _ = so3core.axisAngleArrays(relative.dot(so3core.exponential(i, -h).matrix))
                assert np.allclose(table[i - 1], (plus - minus) / (2.0 * h), atol=1e-7)

    def test_rejects_zero_angle(self):
        with pytest.raises(excep.DomainException):
            kernel.rotationAxisDerivative((0.0, 0.0, 1.0), 0.0)

    def test_levi_civita(self):
        eps = kernel.LEVI_CIVITA
        assert eps[0, 1, 2] == 1.0
        assert eps[1, 0, 2] == -1.0
        assert eps[2, 0, 1] == 1.0
        assert np.count_nonzero(eps) == 6

class TestThirdPattern:
    @pytest.mark.parametrize("triple,kind", [
        ((1, 1, 2), "iik"),
        ((2, 2, 2), "iii"),
        ((1, 2, 3), "jin"),
        ((1, 2, 2), "jii"),
        ((1, 2, 1), "jij"),
        ])
    def test_classification(self, triple, kind):
        assert kernel.thirdPattern(triple) == kind

    def test_rejects_bad_pattern(self):
        with pytest.raises(excep.DomainException):
            kernel.thirdPattern((0, 1, 1))
        with pytest.raises(excep.DomainException):
            kernel.thirdPattern("ab")

class TestLocalization:
    def test_desk_scale_report(self, spec8, rng):
        with warnings.catch_warnings():
            warnings.simplefilter("error", excep.BoundWarning)
            report = kernel.verifyLocalization(spec8, samples=500, rng=rng)
        assert report.passed
        assert len(report.checks) == 13
        assert report["trig_0"].samples == 500

    def test_worker_count_does_not_matter(self, spec8):
        a = kernel.verifyLocalization(spec8, samples=200, rng=np.random.default_rng(7), workers=1)
        b = kernel.verifyLocalization(spec8, samples=200, rng=np.random.default_rng(7), workers=3)
        assert a.rows() == b.rows()

    def test_near_checks_not_applicable_below_eight(self, spec6, rng, tmp_path):
        report = kernel.verifyLocalization(spec6, t=np.linspace(0.01, math.pi, 300), rng=rng)
        assert not report["lip_second_diag"].applicable
        assert report["lip_second_diag"].holds
        path = tmp_path / "localization.csv"
        report.toCsv(str(path))
        lines = path.read_text().splitlines()
        assert lines[0] == "bound_name,s,N,worst_ratio,arg_at_worst"
        assert "lip_second_diag,6,12,not applicable,not applicable" in lines

class TestOffdiagSums:
    def _support(self, rng, N=20, nu=36.0):
        return so3core.wellSeparatedSupport(rng, 3, nu / (N + 1))

    def test_bounds_hold(self, spec8, rng):
        support = self._support(rng)
        offset = 0.25 * 36.0 / 21.0 * (1.0 - 1e-9)
        x = so3core.Rotation(support[0].matrix.dot(so3core.expMap(np.array([offset, 0.0, 0.0]))))
        report = kernel.verifyOffdiagSums(support, x, spec8, 0.25, nu=36.0)
        assert report.passed
        assert list(report.sums) == ["sigma", "grad_y", "mixed", "third_diag", "hessian_offdiag", "third_corrected"]
        assert sum(r["count"] for r in report.rings) == 2

    def test_single_point_has_empty_sums(self, spec8):
        report = kernel.verifyOffdiagSums([so3core.identity()], so3core.identity(), spec8, 0.0)
        assert report.passed
        assert report.rings == []

    def test_hypotheses(self, spec8, rng):
        support = self._support(rng)
        with pytest.raises(excep.DomainException):
            kernel.verifyOffdiagSums(support, support[0], spec8, 0.6)
        with pytest.raises(excep.DomainException):
            kernel.verifyOffdiagSums(support, support[0], spec8, 0.25, nu=3.0)
        with pytest.raises(excep.DomainException):
            kernel.verifyOffdiagSums([so3core.identity()], so3core.rotZ(1.0), spec8, 0.25)
        with pytest.raises(excep.DomainException):
            kernel.verifyOffdiagSums([so3core.identity(), so3core.rotZ(0.5)], so3core.identity(), spec8, 0.25, nu=36.0)
