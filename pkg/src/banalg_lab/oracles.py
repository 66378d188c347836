"""Black-box isometries between invertible groups, with a seeded audit.

An oracle wraps an arbitrary map defined on the invertible elements of its
domain algebra.  Built-in families cover the canonical conjugation forms
(optionally conjugated or transposed, with a left factor and a radical
translation) plus a deliberately corrupted variant used as a negative control.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .algebras import (
    AlgebraSpec,
    Element,
    is_invertible,
    norm,
)
from .sampling import random_invertible

#: maximum |  ||T(a)-T(b)||' - ||a-b||  | tolerated by the audit
AUDIT_TOL = 1e-9


@dataclass
class IsometryOracle:
    """A black-box map on invertible elements between two algebras."""

    domain: AlgebraSpec
    codomain: AlgebraSpec
    fn: Callable[[Element], Element]
    name: str = "oracle"
    # membership predicate for the domain of definition; defaults to
    # invertibility in the domain algebra
    contains: Optional[Callable[[Element], bool]] = None

    def __call__(self, a: Element) -> Element:
        return self.fn(a)

    def in_domain(self, a: Element) -> bool:
        if self.contains is not None:
            return self.contains(a)
        return is_invertible(a)


@dataclass
class AuditReport:
    max_deviation: float
    all_invertible: bool
    pairs: int
    tolerance: float = AUDIT_TOL

    @property
    def passed(self) -> bool:
        return self.all_invertible and self.max_deviation < self.tolerance


def audit_oracle(
    oracle: IsometryOracle, pairs: int = 200, rng_seed: int = 0
) -> AuditReport:
    """Check distance preservation and invertibility of images on random pairs."""
    rng = np.random.default_rng(rng_seed)
    max_dev = 0.0
    all_inv = True
    for _ in range(pairs):
        a = random_invertible(oracle.domain, rng)
        b = random_invertible(oracle.domain, rng)
        ta, tb = oracle(a), oracle(b)
        dev = abs(norm(ta - tb) - norm(a - b))
        max_dev = max(max_dev, dev)
        if not (
            is_invertible(ta)
            and is_invertible(tb)
            and oracle.codomain.contains_matrix(ta.matrix, tol=1e-8)
            and oracle.codomain.contains_matrix(tb.matrix, tol=1e-8)
        ):
            all_inv = False
    return AuditReport(max_deviation=max_dev, all_invertible=all_inv, pairs=pairs)


# ---------------------------------------------------------------------------
# Built-in families


def identity_oracle(alg: AlgebraSpec, codomain: Optional[AlgebraSpec] = None) -> IsometryOracle:
    cod = codomain if codomain is not None else alg

    def fn(a: Element) -> Element:
        return cod.element(a.matrix)

    return IsometryOracle(alg, cod, fn, name="identity")


def matrix_form_oracle(
    domain: AlgebraSpec,
    codomain: Optional[AlgebraSpec] = None,
    u: Optional[np.ndarray] = None,
    left_factor: Optional[np.ndarray] = None,
    conjugate: bool = False,
    transpose: bool = False,
    radical_shift: Optional[np.ndarray] = None,
    corruption: float = 0.0,
    name: str = "matrix-form",
) -> IsometryOracle:
    """T(M) = C (U phi(M) U^{-1}) + u0 with phi in {id, conj, transpose, both}.

    With ``corruption`` > 0 a nonlinear term corruption * ||M|| * E11 is added,
    which breaks the isometry at that magnitude (negative control).
    """
    cod = codomain if codomain is not None else domain
    n = domain.n
    u_mat = np.eye(n, dtype=complex) if u is None else np.asarray(u, dtype=complex)
    u_inv = np.linalg.inv(u_mat)
    c_mat = (
        cod.unit.copy() if left_factor is None else np.asarray(left_factor, dtype=complex)
    )
    shift = (
        np.zeros((cod.n, cod.n), dtype=complex)
        if radical_shift is None
        else np.asarray(radical_shift, dtype=complex)
    )
    bump = np.zeros((cod.n, cod.n), dtype=complex)
    bump[0, 0] = 1.0

    def fn(a: Element) -> Element:
        m = a.matrix
        if conjugate:
            m = m.conj()
        if transpose:
            m = m.T
        out = c_mat @ (u_mat @ m @ u_inv) + shift
        if corruption:
            out = out + corruption * norm(a) * bump
        return cod.element(out)

    return IsometryOracle(domain, cod, fn, name=name)


def translation_oracle(alg: AlgebraSpec, shift: np.ndarray, name: str = "translation") -> IsometryOracle:
    """a -> a + u for a fixed u; an isometry whenever u is in the radical."""
    shift = np.asarray(shift, dtype=complex)

    def fn(a: Element) -> Element:
        return alg.element(a.matrix + shift)

    return IsometryOracle(alg, alg, fn, name=name)


def dame_identity_oracle(domain: AlgebraSpec, codomain: AlgebraSpec) -> IsometryOracle:
    """The set-identity between the two multiplications on the same span."""
    return identity_oracle(domain, codomain)
