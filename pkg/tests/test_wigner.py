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
Tests for the Wigner D-functions, the addition formula and moment vectors.
"""

__revision__ = "$Id$"

import math

import numpy as np
import pytest

from so3sr import excep, so3core, wigner

def _rodriguesOracle(l, k, m, betas):
    """
    Symbolic evaluation of
    C{C (1-t)^{-(m-k)/2} (1+t)^{-(m+k)/2} d^{l-m}/dt^{l-m} [(1-t)^{l-k} (1+t)^{l+k}]}
    at C{t = cos(beta)}.
    """
    sympy = pytest.importorskip("sympy")
    t = sympy.Symbol("t")
    f = sympy.factorial
    derivative = sympy.diff((1 - t) ** (l - k) * (1 + t) ** (l + k), t, l - m)
    c = (-1) ** (l - k) * sympy.I ** (m - k) / (2 ** l * f(l - k)) * sympy.sqrt(f(l - k) * f(l + m) / (f(l + k) * f(l - m)))
    expr = c * (1 - t) ** sympy.Rational(k - m, 2) * (1 + t) ** sympy.Rational(-(m + k), 2) * derivative
    return [complex(expr.subs(t, sympy.cos(beta)).evalf(30)) for beta in betas]

class TestWignerDRow:
    def test_degree_zero(self):
        assert np.array_equal(wigner.wignerDRow(0, 0.7), [[1.0]])

    def test_identity_at_zero(self):
        for l in range(11):
            assert np.allclose(wigner.wignerDRow(l, 0.0), np.eye(2 * l + 1), atol=1e-14)

    def test_symbolic_oracle(self):
        sympy = pytest.importorskip("sympy")
        betas = [sympy.Rational(3, 10), sympy.Rational(3, 2), sympy.Rational(14, 5)]
        for l in range(7):
            rows = [wigner.wignerDRow(l, float(beta)) for beta in betas]
            for k in range(-l, l + 1):
                for m in range(-l, l + 1):
                    expected = _rodriguesOracle(l, k, m, betas)
                    for row, value in zip(rows, expected):
                        assert abs(row[k + l, m + l] - value) <= 1e-10

    def test_rejects_angle_out_of_range(self):
        with pytest.raises(excep.DomainException):
            wigner.wignerDRow(2, -0.1)

    def test_rejects_large_degree(self):
        with pytest.raises(excep.CapabilityException):
            wigner.wignerDRow(129, 0.5)

    def test_high_degree_is_unitary(self):
        d = wigner.smallD(128, 1.3)
        assert np.allclose(d.dot(d.T), np.eye(257), atol=1e-8)

class TestWignerD:
    def test_identity_values(self):
        x = so3core.identity()
        assert wigner.wignerD(2, 1, -1, x) == pytest.approx(0.0, abs=1e-15)
        assert wigner.wignerD(3, 2, 2, x) == pytest.approx(1.0, abs=1e-14)

    def test_degree_zero_is_one(self, rng):
        assert wigner.wignerD(0, 0, 0, so3core.haarSample(rng)) == pytest.approx(1.0, abs=1e-15)

    def test_zonal_entry(self):
        for beta in (0.2, 1.0, 2.9):
            assert wigner.wignerD(1, 0, 0, so3core.rotX(beta)).real == pytest.approx(math.cos(beta), abs=1e-14)

    def test_bounded(self, rng):
        for _ in range(10):
            x = so3core.haarSample(rng)
            for l in (1, 4, 9):
                assert np.abs(wigner.wignerDMatrix(l, x)).max() <= 1.0 + 1e-9

    def test_rejects_bad_index(self):
        with pytest.raises(excep.DomainException):
            wigner.wignerD(2, 3, 0, so3core.identity())

    def test_unitary(self, rng):
        for _ in range(10):
            x = so3core.haarSample(rng)
            for l in range(9):
                d = wigner.wignerDMatrix(l, x)
                assert np.allclose(d.dot(d.conj().T), np.eye(2 * l + 1), atol=1e-10)

    def test_representation(self, rng):
        for _ in range(10):
            x, y = so3core.haarSample(rng), so3core.haarSample(rng)
            for l in range(9):
                product = wigner.wignerDMatrix(l, x).dot(wigner.wignerDMatrix(l, y))
                assert np.allclose(wigner.wignerDMatrix(l, x * y), product, atol=1e-8)

    def test_moment_matrix_matches_single_values(self, rng):
        points = so3core.haarSamples(rng, 4)
        a = wigner.momentMatrix(points, 3)
        assert a.shape == (wigner.momentCount(3), 4)
        for j, p in enumerate(points):
            x = so3core.Rotation(p)
            for (l, k, m) in [(0, 0, 0), (1, -1, 1), (2, 2, -1), (3, 0, 3)]:
                assert a[wigner.momentIndex(l, k, m), j] == pytest.approx(wigner.wignerD(l, k, m, x), abs=1e-12)

class TestAdditionFormula:
    def test_first_degree(self):
        omega = np.linspace(0.0, math.pi, 7)
        assert np.allclose(wigner.additionKernel(1, omega), 1.0 + 2.0 * np.cos(omega))

    def test_at_zero(self):
        for l in range(10):
            assert wigner.additionKernel(l, 0.0) == pytest.approx(2 * l + 1)

    def test_dirichlet_quotient(self):
        assert wigner.additionKernel(3, 1.1) == pytest.approx(math.sin(3.85) / math.sin(0.55), abs=1e-12)

    def test_sum_over_degrees(self):
        omega = np.linspace(0.0, math.pi, 11)
        total = sum(wigner.additionKernel(l, omega) for l in range(9))
        assert np.allclose(wigner.additionKernelSum(8, omega), total, atol=1e-10)
        assert wigner.additionKernelSum(8, 0.0) == pytest.approx(81.0)

    def test_zonality_bridge(self, rng):
        for _ in range(20):
            x, y = so3core.haarSample(rng), so3core.haarSample(rng)
            omega = so3core.geodesicDistance(x, y)
            for l in range(7):
                value = np.sum(wigner.wignerDMatrix(l, x) * wigner.wignerDMatrix(l, y).conj())
                assert abs(value.imag) <= 1e-8
                assert value.real == pytest.approx(float(wigner.additionKernel(l, omega)), abs=1e-8)

class TestMoments:
    def test_dirac_at_identity(self):
        b = wigner.moments(wigner.PointMeasure([so3core.identity()], [1.0]), 4)
        for (l, k, m) in b.labels():
            assert b.entry(l, k, m) == pytest.approx(1.0 if k == m else 0.0, abs=1e-14)

    def test_zeroth_moment_is_total_mass(self, rng):
        mu = wigner.PointMeasure(so3core.wellSeparatedSupport(rng, 3, 0.5), [0.1, 0.2, 0.7])
        assert wigner.moments(mu, 2).entry(0, 0, 0) == 1.0

    def test_linearity(self, rng):
        support = so3core.wellSeparatedSupport(rng, 3, 0.5)
        mu = wigner.PointMeasure(support, [1.0, -2.0, 0.5])
        nu = wigner.PointMeasure(support, [0.3, 0.0, 4.0])
        combined = wigner.PointMeasure(support, 2.0 * mu.coeffs - 3.0 * nu.coeffs)
        expected = wigner.moments(mu, 5) * 2.0 - wigner.moments(nu, 5) * 3.0
        assert np.allclose(wigner.moments(combined, 5).entries, expected.entries, atol=1e-12)

    def test_single_spike_entries(self):
        x = so3core.rotX(1.0)
        b = wigner.moments(wigner.PointMeasure([x], [1.0]), 2)
        for (l, k, m) in b.labels():
            assert b.entry(l, k, m) == pytest.approx(wigner.wignerD(l, k, m, x), abs=1e-13)

    def test_rejects_repeated_center(self):
        with pytest.raises(excep.DomainException):
            wigner.PointMeasure([so3core.identity(), so3core.identity()], [2.0, -1.0])

    def test_rejects_length_mismatch(self):
        with pytest.raises(excep.DomainException):
            wigner.PointMeasure([so3core.identity()], [1.0, 2.0])

    def test_truncation_is_lower_degree(self, rng):
        mu = wigner.PointMeasure(so3core.wellSeparatedSupport(rng, 2, 0.5), [1.0, -1.0])
        assert np.allclose(wigner.moments(mu, 6).truncate(3).entries, wigner.moments(mu, 3).entries, atol=1e-15)

    def test_storage_order(self):
        b = wigner.MomentVector(3, np.zeros(wigner.momentCount(3)))
        labels = list(b.labels())
        assert len(labels) == wigner.momentCount(3) == 84
        assert [wigner.momentIndex(*label) for label in labels] == list(range(84))

    def test_wrong_length(self):
        with pytest.raises(excep.DomainException):
            wigner.MomentVector(2, np.zeros(10))

class TestMomentCsv:
    def test_write_and_read(self, rng, tmp_path):
        mu = wigner.PointMeasure(so3core.wellSeparatedSupport(rng, 2, 0.5), [1.0, -0.5])
        b = wigner.moments(mu, 3)
        path = str(tmp_path / "moments.csv")
        b.toCsv(path)
        again = wigner.MomentVector.fromCsv(path)
        assert again.degree == 3
        assert np.allclose(again.entries, b.entries, atol=1e-15)

    def test_incomplete_file(self, tmp_path):
        path = tmp_path / "short.csv"
        path.write_text("l,k,m,re,im\n0,0,0,1.0,0.0\n1,-1,-1,0.5,0.0\n")
        with pytest.raises(excep.DomainException):
            wigner.MomentVector.fromCsv(str(path))
