import numpy as np
import pytest

from banalg_lab import full_matrix_algebra, in_omega, mu_sup_re, norm, numerical_radius
from banalg_lab.numrange import T_GRID
from banalg_lab.sampling import random_element, random_hermitian


class TestMuSupRe:
    def test_zero(self):
        alg = full_matrix_algebra(3)
        assert mu_sup_re(alg.zero()) == pytest.approx(0.0, abs=1e-12)

    def test_unit(self):
        alg = full_matrix_algebra(3)
        # round-off in ||e + t e|| - 1 at t = 1e-5 limits the achievable accuracy
        assert mu_sup_re(alg.one()) == pytest.approx(1.0, abs=1e-9)

    def test_hermitian_matches_lambda_max(self, rng):
        alg = full_matrix_algebra(3, "spectral")
        for _ in range(50):
            h = random_hermitian(3, rng)
            lam_max = float(np.max(np.linalg.eigvalsh(h)))
            assert mu_sup_re(alg.element(h)) == pytest.approx(lam_max, abs=1e-5)

    def test_grid_monotone(self, rng):
        # the difference quotient (||e+ta||-1)/t is nondecreasing in t
        alg = full_matrix_algebra(3, "spectral")
        e = np.eye(3)
        for _ in range(50):
            a = random_element(alg, rng)
            vals = [(alg.norm(e + t * a.matrix) - 1.0) / t for t in T_GRID]
            for coarse, fine in zip(vals, vals[1:]):
                assert fine <= coarse + 1e-9


class TestNumericalRadius:
    def test_unit(self):
        alg = full_matrix_algebra(2)
        assert numerical_radius(alg.one()) == pytest.approx(1.0, abs=1e-4)

    def test_jordan_nilpotent(self):
        # the field of values of E12 is the disk of radius 1/2
        alg = full_matrix_algebra(2, "spectral")
        e12 = np.array([[0, 1], [0, 0]], dtype=complex)
        assert numerical_radius(alg.element(e12)) == pytest.approx(0.5, abs=1e-3)

    def test_bohnenblust_karlin_bound(self, rng):
        # ||a|| <= e * numerical_radius(a)
        alg = full_matrix_algebra(3, "spectral")
        for _ in range(100):
            a = random_element(alg, rng)
            assert np.e * numerical_radius(a) >= norm(a) - 1e-6


class TestInOmega:
    def test_unit_in(self):
        alg = full_matrix_algebra(2)
        assert in_omega(alg.one())

    def test_negative_unit_out(self):
        alg = full_matrix_algebra(2)
        assert not in_omega(-1.0 * alg.one())

    def test_zero_out(self):
        alg = full_matrix_algebra(2)
        assert not in_omega(alg.zero())

    def test_shifted_elements_in(self, rng):
        alg = full_matrix_algebra(3, "spectral")
        for _ in range(100):
            f = random_element(alg, rng)
            shifted = alg.element(f.matrix + 2.0 * norm(f) * np.eye(3))
            assert in_omega(shifted)
