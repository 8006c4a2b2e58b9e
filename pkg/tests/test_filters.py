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
Tests for the perfect B-spline ladder, the filter weights and the constant
tables derived from them.
"""

__revision__ = "$Id$"

import math

import numpy as np
import pytest
from scipy import special

from so3sr import excep, filters

def _close(measured, closed):
    return measured == pytest.approx(closed, rel=1e-9, abs=1e-12)

class TestPerfectBSpline:
    def test_l1_norm(self):
        assert filters.buildPerfectBSpline(8).l1Norm() == pytest.approx(1.0 / 322560, rel=1e-12)

    def test_first_level_at_zero(self):
        f1 = filters.buildPerfectBSpline(8).f(1)
        assert abs(float(f1.mpValue(0))) == pytest.approx(math.tan(math.pi / 16), rel=1e-12)

    def test_support_and_symmetry(self):
        gt = filters.buildPerfectBSpline(8).gTilde()
        assert np.all(np.abs(gt(np.array([-0.75, -0.5, 0.5, 0.6]))) <= 1e-15 * gt(0.0))
        x = np.linspace(0.0, 0.5, 1001)
        assert np.allclose(gt(x), gt(-x), rtol=0.0, atol=1e-12 * gt(0.0))

    def test_decreasing(self):
        for s in (6, 8, 10):
            values = filters.buildPerfectBSpline(s).gTilde()(np.linspace(0.0, 0.5, 1000))
            assert np.all(np.diff(values) <= 1e-13 * values[0])

    def test_sign_orthogonality(self):
        for s in (6, 8, 12):
            assert np.allclose(filters.signOrthogonality(s), 0.0, atol=1e-12)

    def test_identities(self):
        for s in (6, 8, 10):
            for check in filters.bsplineIdentities(s):
                assert _close(check.measured, check.closed), check

    def test_rejects_odd_order(self):
        with pytest.raises(excep.DomainException):
            filters.buildPerfectBSpline(7)

    def test_rejects_large_order(self):
        with pytest.raises(excep.DomainException):
            filters.buildPerfectBSpline(18)

class TestVariationConstants:
    def test_identities_match_ladder(self):
        for s in (6, 8):
            for entry in filters.variationConstants(s):
                if entry.relation == "=":
                    assert _close(entry.measured, entry.closed), entry

    def test_highest_derivative_variation(self):
        entry = filters.variationConstants(8)[0]
        assert (entry.order, entry.kind) == (7, "V")
        assert entry.closed == 2048.0
        assert entry.measured == pytest.approx(2048.0, rel=1e-12)

    def test_sup_norm_of_sixth_derivative(self):
        rows = dict(((e.order, e.kind), e) for e in filters.variationConstants(8))
        assert rows[(6, "inf")].measured == pytest.approx(2 ** 6 * math.tan(math.pi / 16), rel=1e-9)

    def test_extra_rows_for_order_eight(self):
        assert len(filters.variationConstants(8)) == len(filters.variationConstants(6)) + 6

class TestConstants:
    def test_localization_constants(self):
        c = filters.localizationConstants(8)
        assert c[0] == pytest.approx(10528358.4, rel=1e-12)
        assert c[2] == pytest.approx(43429478.4, rel=1e-12)
        c6 = filters.localizationConstants(6)
        assert c6[1] / c6[2] == pytest.approx(12.0 / 25.0, rel=1e-12)
        assert c6[2] / c6[3] <= 0.5

    def test_localization_constants_grow(self):
        assert all(a < b for a, b in zip(filters.localizationConstants(6), filters.localizationConstants(8)))

    def test_zero_derivative_bounds(self):
        b = filters.zeroDerivativeBounds(8, 20)
        assert b["c_s"] == pytest.approx(0.999 / 18, rel=1e-15)
        assert b["dt_s"] == pytest.approx(3 * 1.001 / 360, rel=1e-15)
        assert b["c6"] == pytest.approx(1.011 * 15 / 8 * math.factorial(8) / math.factorial(11) * 21 ** 6, rel=1e-12)
        assert filters.zeroDerivativeBounds(10, 20)["c6"] is None

    def test_zero_derivative_bounds_hypotheses(self):
        with pytest.raises(excep.CapabilityException):
            filters.zeroDerivativeBounds(6, 12)
        with pytest.raises(excep.DomainException):
            filters.zeroDerivativeBounds(8, 10)

    def test_zeta(self):
        assert filters.zeta(6) == pytest.approx(math.pi ** 6 / 945, rel=1e-14)
        for x in (2, 4, 8, 14):
            assert filters.zeta(x) == pytest.approx(float(special.zeta(x)), rel=1e-14)
        with pytest.raises(excep.DomainException):
            filters.zeta(1)

    def test_offdiag_constants(self):
        c = filters.offdiagConstants(8, 0.0)
        assert c["a_eps"] == 1.0
        assert c["C_2"] == pytest.approx(124 * 43429478.4 * math.pi ** 6 / 945, rel=1e-12)
        assert c["C_2"] == pytest.approx(5.478e9, rel=1e-3)
        half = filters.offdiagConstants(8, 0.5)["a_eps"]
        assert half == pytest.approx(27.0 / 124.0 * 256.0 + 1.0, rel=1e-12)
        with pytest.raises(excep.DomainException):
            filters.offdiagConstants(8, 0.6)

    def test_certificate_feasibility(self):
        c = filters.offdiagConstants(8, 0.0)["C_2"]
        cs = filters.zeroDerivativeBounds(8, 20)["c_s"]
        assert 36.0 ** 8 > 28.0 * c / cs

    def test_ring_factor_is_vectorized(self):
        values = filters.ringFactor(8, np.array([0.0, 0.25, 0.5]))
        assert values.shape == (3,)
        assert values[0] == 1.0
        assert np.all(np.diff(values) > 0.0)

    def test_generic_localization_bound_decays(self, spec8):
        t = np.linspace(0.2, math.pi, 50)
        bound = filters.trigLocalizationBound(spec8, t)
        assert np.all(bound > 0.0)
        assert np.all(np.diff(bound) < 0.0)

class TestFilterSpec:
    def test_weights_positive(self, spec8):
        assert spec8.weights.shape == (21,)
        assert np.all(spec8.weights > 0.0)
        assert filters.filterWeights(8, 20) is spec8.weights

    def test_telescoping(self, spec8):
        assert np.sum(spec8.weights) == pytest.approx(spec8.samples[0] / spec8.discreteNorm, rel=1e-12)
        assert spec8.weights[-1] == pytest.approx(spec8.samples[-1] / spec8.discreteNorm, rel=1e-12)

    def test_kernel_is_normalized(self, spec8):
        assert np.sum(spec8.cosineWeights) == pytest.approx(1.0, abs=1e-14)
        l = np.arange(21)
        assert np.sum((2 * l + 1) * spec8.weights) == pytest.approx(1.0, abs=1e-14)

    def test_second_derivative_window(self, spec8):
        measured = abs(spec8.evenDerivativeAtZero(2))
        bounds = spec8.zeroBounds
        assert bounds["c_s"] * 441 <= measured <= bounds["ct_s"] * 441
        assert measured == pytest.approx(441.0 / 18.0, rel=2e-3)

    def test_odd_orders_are_rejected(self, spec8):
        with pytest.raises(excep.DomainException):
            spec8.evenDerivativeAtZero(3)

    def test_hypotheses(self):
        with pytest.raises(excep.DomainException):
            filters.filterSpec(7, 20)
        with pytest.raises(excep.DomainException):
            filters.filterSpec(8, 15)
        with pytest.raises(excep.CapabilityException):
            filters.filterSpec(8, 130)

    def test_cached(self, spec8):
        assert filters.filterSpec(8, 20) is spec8

    def test_no_zero_bounds_below_eight(self, spec6):
        assert spec6.zeroBounds is None
        with pytest.raises(excep.CapabilityException):
            filters.zeroDerivativeReport(spec6)

    @pytest.mark.parametrize("N", [20, 32, 64, 128])
    def test_zero_derivatives_sandwiched(self, N):
        rows = filters.zeroDerivativeReport(filters.filterSpec(8, N))
        assert [row["order"] for row in rows] == [2, 4, 6]
        assert rows[0]["holds"]
        assert rows[1]["holds"]

    @pytest.mark.parametrize("s,N", [(6, 12), (8, 20), (8, 32), (8, 64), (10, 40)])
    def test_discrete_norm_sandwich(self, s, N):
        report = filters.sandwichReport(filters.filterSpec(s, N))
        assert report["holds"]

    def test_constant_rows(self, spec8):
        rows = list(filters.constantRows(spec8))
        names = [row[2] for row in rows]
        assert "c_s" in names
        assert "h_N(20)" in names
        assert all(row[:2] == (8, 20) for row in rows)
