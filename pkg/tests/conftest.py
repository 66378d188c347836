"""Shared builders for oracle instances that are genuine isometries per norm kind."""

import numpy as np
import pytest

from banalg_lab import dame_algebra, full_matrix_algebra, matrix_form_oracle, translation_oracle
from banalg_lab.oracles import identity_oracle
from banalg_lab.sampling import (
    random_invertible,
    random_phased_permutation,
    random_unitary,
)

FAMILIES = (
    "identity",
    "similarity",
    "transpose",
    "conjugate",
    "conjugate-transpose",
)

DUAL_NORM = {
    "induced-l1": "induced-linf",
    "induced-linf": "induced-l1",
    "spectral": "spectral",
    "frobenius": "frobenius",
}


def conjugating_matrix(n, norm_kind, rng):
    """A matrix whose similarity action is isometric for the given stock norm.

    Unitary conjugation preserves the spectral and Frobenius norms; for the
    induced l1/linf norms only phased permutations qualify.
    """
    if norm_kind in ("spectral", "frobenius"):
        return random_unitary(n, rng)
    return random_phased_permutation(n, rng)


def isometric_oracle(family, n, norm_kind, rng, left_factor=True):
    """A built-in oracle of the named family that passes the audit for this norm.

    Transpose swaps the induced l1 and linf norms, so transpose-carrying
    families pair the norm with its dual on the codomain.
    """
    conjugate = family in ("conjugate", "conjugate-transpose")
    transpose = family in ("transpose", "conjugate-transpose")
    cod_kind = DUAL_NORM[norm_kind] if transpose else norm_kind
    domain = full_matrix_algebra(n, norm_kind)
    codomain = full_matrix_algebra(n, cod_kind)
    if family == "identity":
        return identity_oracle(domain, codomain)
    u = conjugating_matrix(n, cod_kind, rng)
    c = conjugating_matrix(n, cod_kind, rng) if left_factor else None
    return matrix_form_oracle(
        domain,
        codomain,
        u=u,
        left_factor=c,
        conjugate=conjugate,
        transpose=transpose,
        name=family,
    )


def dame_translation_oracle():
    """a -> a + E13 on the ordinary-multiplication DAME algebra."""
    alg = dame_algebra("B")
    shift = np.zeros((3, 3), dtype=complex)
    shift[0, 2] = 1.0
    return translation_oracle(alg, shift, name="dame-translation")


def segment_valid_pair(alg, rng, grid=101):
    """Random invertible pair whose connecting segment stays invertible."""
    while True:
        f = random_invertible(alg, rng)
        g = random_invertible(alg, rng)
        rs = np.linspace(0.0, 1.0, grid)
        mats = (1.0 - rs)[:, None, None] * f.matrix + rs[:, None, None] * g.matrix
        if np.min(np.abs(np.linalg.eigvals(mats))) > 1e-6:
            return f, g


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
