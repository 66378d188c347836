import numpy as np
import pytest

from banalg_lab import (
    dame_algebra,
    full_matrix_algebra,
    invert,
    mul,
    norm,
    radical,
    radical_member_sampling,
    spectral_radius,
    spectrum,
    upper_triangular_algebra,
)
from banalg_lab.algebras import NORM_KINDS, matrix_norm, subspace_residual
from banalg_lab.errors import AlgebraMismatchError, NotInvertibleError
from banalg_lab.sampling import random_element, random_invertible


def E(i, j, n=3):
    m = np.zeros((n, n), dtype=complex)
    m[i - 1, j - 1] = 1.0
    return m


class TestMul:
    def test_unit_law(self, rng):
        alg = full_matrix_algebra(3)
        a = random_element(alg, rng)
        assert np.allclose(mul(alg.one(), a).matrix, a.matrix)
        assert np.allclose(mul(a, alg.one()).matrix, a.matrix)

    def test_dame_a_nilpotents_annihilate(self):
        alg = dame_algebra("A")
        p = mul(alg.element(np.eye(3) + E(1, 2)), alg.element(np.eye(3) + E(2, 3)))
        # no E13 term: the nilpotent parts multiply to zero
        assert np.allclose(p.matrix, np.eye(3) + E(1, 2) + E(2, 3))

    def test_dame_b_ordinary_product(self):
        alg = dame_algebra("B")
        p = mul(alg.element(np.eye(3) + E(1, 2)), alg.element(np.eye(3) + E(2, 3)))
        assert np.allclose(p.matrix, np.eye(3) + E(1, 2) + E(2, 3) + E(1, 3))

    def test_mismatched_algebras_rejected(self):
        a = dame_algebra("A").one()
        b = dame_algebra("B").one()
        with pytest.raises(AlgebraMismatchError):
            mul(a, b)


class TestNorm:
    def test_zero_and_identity(self):
        alg = full_matrix_algebra(3)
        assert norm(alg.zero()) == 0.0
        assert norm(alg.one()) == 1.0

    def test_hand_values(self):
        m = np.diag([3.0, -4.0j])
        expected = {
            "induced-l1": 4.0,
            "induced-linf": 4.0,
            "spectral": 4.0,
            "frobenius": 5.0,
        }
        for kind in NORM_KINDS:
            assert matrix_norm(m, kind) == pytest.approx(expected[kind], abs=1e-12)

    @pytest.mark.parametrize("kind", NORM_KINDS)
    def test_submultiplicative(self, kind, rng):
        alg = full_matrix_algebra(3, kind)
        for _ in range(500):
            a, b = random_element(alg, rng), random_element(alg, rng)
            assert norm(mul(a, b)) <= norm(a) * norm(b) + 1e-10


class TestSpectrum:
    def test_identity(self):
        alg = full_matrix_algebra(3)
        assert np.allclose(sorted(spectrum(alg.one()).real), [1, 1, 1])

    def test_diagonal(self):
        alg = full_matrix_algebra(2)
        ev = sorted(spectrum(alg.element(np.diag([2.0, -1.0]))).real)
        assert ev == pytest.approx([-1.0, 2.0])

    def test_triangular_in_dame_b(self):
        alg = dame_algebra("B")
        ev = spectrum(alg.element(np.eye(3) + E(1, 2) + E(2, 3)))
        assert np.allclose(ev, 1.0)

    def test_radius_nilpotent(self):
        alg = full_matrix_algebra(2)
        assert spectral_radius(alg.element(E(1, 2, n=2))) == pytest.approx(0.0, abs=1e-9)
        assert spectral_radius(alg.element(np.diag([2.0, -3.0]))) == pytest.approx(3.0)

    @pytest.mark.parametrize("kind", NORM_KINDS)
    def test_radius_below_norm(self, kind, rng):
        alg = full_matrix_algebra(3, kind)
        for _ in range(100):
            a = random_element(alg, rng)
            assert spectral_radius(a) <= norm(a) + 1e-10

    def test_rab_equals_rba(self, rng):
        alg = full_matrix_algebra(3)
        for _ in range(200):
            a, b = random_element(alg, rng), random_element(alg, rng)
            assert spectral_radius(mul(a, b)) == pytest.approx(
                spectral_radius(mul(b, a)), abs=1e-7
            )


class TestInvert:
    def test_unit(self):
        alg = full_matrix_algebra(3)
        assert np.allclose(invert(alg.one()).matrix, np.eye(3))
        assert np.allclose(invert(2.0 * alg.one()).matrix, np.eye(3) / 2)

    def test_dame_a_closed_form(self):
        alg = dame_algebra("A")
        inv = invert(alg.element(np.eye(3) + E(1, 2)))
        assert np.allclose(inv.matrix, np.eye(3) - E(1, 2))

    def test_singular_rejected(self):
        alg = full_matrix_algebra(2)
        with pytest.raises(NotInvertibleError):
            invert(alg.element(E(1, 2, n=2)))

    def test_spectral_permanence(self, rng):
        # the ambient inverse of an invertible subalgebra element stays in the span
        alg = upper_triangular_algebra()
        for _ in range(50):
            a = random_invertible(alg, rng)
            amb_inv = np.linalg.inv(a.matrix)
            _, res = alg.coords(amb_inv)
            assert res < 1e-8 * (1 + np.linalg.norm(amb_inv))
            assert np.allclose(invert(a).matrix, amb_inv)


class TestRadical:
    def test_full_matrix_semisimple(self):
        for n in (2, 3):
            assert radical(full_matrix_algebra(n)).shape[0] == 0

    @pytest.mark.parametrize("variant", ["A", "B"])
    def test_dame_radical(self, variant):
        rad = radical(dame_algebra(variant))
        nilpotents = np.array([E(1, 2), E(1, 3), E(2, 3)])
        assert rad.shape[0] == 3
        assert subspace_residual(rad, nilpotents) < 1e-10
        assert subspace_residual(nilpotents, rad) < 1e-10

    def test_upper_triangular_radical(self):
        rad = radical(upper_triangular_algebra())
        assert rad.shape[0] == 1
        assert subspace_residual(rad, np.array([E(1, 2, n=2)])) < 1e-10


class TestRadicalSampling:
    def test_zero_is_member(self):
        alg = full_matrix_algebra(2)
        assert radical_member_sampling(alg.zero(), trials=5)

    def test_unit_is_not(self):
        alg = full_matrix_algebra(2)
        assert not radical_member_sampling(alg.one(), trials=5)

    def test_e13_in_dame_b(self):
        alg = dame_algebra("B")
        assert radical_member_sampling(alg.element(E(1, 3)), trials=200)

    @pytest.mark.parametrize(
        "make",
        [
            lambda: full_matrix_algebra(2),
            lambda: full_matrix_algebra(3),
            lambda: dame_algebra("A"),
            lambda: dame_algebra("B"),
            lambda: upper_triangular_algebra(),
        ],
    )
    def test_agrees_with_trace_form_on_basis(self, make):
        alg = make()
        rad = radical(alg)
        for b in alg.basis:
            in_rad = (
                rad.shape[0] > 0
                and subspace_residual(np.array([b]), rad) < 1e-8
            )
            assert radical_member_sampling(alg.element(b), trials=50) == in_rad
