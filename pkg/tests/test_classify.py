import numpy as np
import pytest

from banalg_lab import (
    classify,
    dame_algebra,
    full_matrix_algebra,
    identity_oracle,
    matrix_form_oracle,
    refute_multiplicativity,
)
from banalg_lab.classify import TAGS, conjugator_distance, normalize_conjugator
from banalg_lab.errors import ClassificationFailedError
from banalg_lab.sampling import random_unitary

TAG_FLAGS = {
    "similarity": (False, False),
    "transpose_similarity": (False, True),
    "conjugate_similarity": (True, False),
    "conjugate_transpose_similarity": (True, True),
}


class TestClassify:
    def test_identity_oracle(self):
        alg = full_matrix_algebra(2)
        result = classify(identity_oracle(alg))
        assert result.tag == "similarity"
        assert result.residual < 1e-12
        assert np.allclose(result.left_factor.matrix, np.eye(2))
        assert conjugator_distance(result.u, np.eye(2) / np.sqrt(2)) < 1e-10

    def test_transpose_oracle(self):
        alg = full_matrix_algebra(3, "spectral")
        result = classify(matrix_form_oracle(alg, transpose=True))
        assert result.tag == "transpose_similarity"
        assert conjugator_distance(result.u, np.eye(3) / np.sqrt(3)) < 1e-8

    @pytest.mark.parametrize("tag", TAGS)
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_round_trip(self, tag, n, rng):
        conjugate, transpose = TAG_FLAGS[tag]
        alg = full_matrix_algebra(n, "spectral")
        u0 = random_unitary(n, rng)
        c = random_unitary(n, rng)
        oracle = matrix_form_oracle(
            alg, u=u0, left_factor=c, conjugate=conjugate, transpose=transpose
        )
        result = classify(oracle, rng_seed=11)
        assert result.tag == tag
        assert result.residual < 1e-6
        assert conjugator_distance(result.u, normalize_conjugator(u0)) < 1e-6
        assert np.allclose(result.left_factor.matrix, c, atol=1e-9)

    def test_n1_collapses_to_similarity(self):
        alg = full_matrix_algebra(1)
        result = classify(identity_oracle(alg))
        assert result.tag == "similarity"

    def test_non_isometric_map_rejected(self, rng):
        alg = full_matrix_algebra(2, "spectral")
        oracle = matrix_form_oracle(alg, u=random_unitary(2, rng), corruption=1e-3)
        with pytest.raises(ClassificationFailedError):
            classify(oracle, rng_seed=2)


class TestRefuteMultiplicativity:
    def test_identity_returns_none(self):
        assert refute_multiplicativity(identity_oracle(full_matrix_algebra(2))) is None

    def test_transpose_returns_none(self):
        # (MN)^t = N^t M^t: the antimultiplicative side always matches
        alg = full_matrix_algebra(2, "spectral")
        oracle = matrix_form_oracle(alg, transpose=True)
        assert refute_multiplicativity(oracle) is None

    def test_dame_witness_found(self):
        oracle = identity_oracle(dame_algebra("A"), dame_algebra("B"))
        witness = refute_multiplicativity(oracle, trials=50, rng_seed=0)
        assert witness is not None
        assert witness.defect_multiplicative > 1e-6
        assert witness.defect_antimultiplicative > 1e-6

    def test_unital_round_trip_certifies_one_side(self, rng):
        # a unital canonical-form oracle is multiplicative or antimultiplicative
        alg = full_matrix_algebra(3, "spectral")
        for transpose in (False, True):
            oracle = matrix_form_oracle(
                alg, u=random_unitary(3, rng), transpose=transpose
            )
            assert refute_multiplicativity(oracle, trials=20) is None
