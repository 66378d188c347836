"""Finite-dimensional unital matrix algebras: norms, spectra, inverses, radicals.

An algebra is a complex span of n x n matrices that is closed under a declared
multiplication rule and carries one of four stock matrix norms.  Two rules are
supported: ordinary matrix multiplication, and the "unitized-zero" rule where
the strictly-upper-triangular parts of two elements annihilate each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import AlgebraMismatchError, MembershipError, NotInvertibleError

NormKind = Literal["induced-l1", "induced-linf", "spectral", "frobenius"]
MultRule = Literal["matrix", "unitized-zero"]

NORM_KINDS = ("induced-l1", "induced-linf", "spectral", "frobenius")

#: eigenvalues below this modulus count as zero for invertibility purposes
INVERTIBILITY_EPS = 1e-9
#: projection residual allowed when asserting membership in a span
MEMBERSHIP_TOL = 1e-10
#: singular values of the trace form below this (relative) level span the radical
RADICAL_SV_TOL = 1e-9


def matrix_norm(m: np.ndarray, kind: NormKind) -> float:
    """One of the four stock matrix norms of a dense complex matrix."""
    if kind == "induced-l1":
        return float(np.max(np.sum(np.abs(m), axis=0)))
    if kind == "induced-linf":
        return float(np.max(np.sum(np.abs(m), axis=1)))
    if kind == "spectral":
        return float(np.linalg.norm(m, 2))
    if kind == "frobenius":
        return float(np.linalg.norm(m, "fro"))
    raise ValueError(f"unknown norm kind: {kind!r}")


@dataclass(frozen=True)
class NormSpec:
    kind: NormKind = "spectral"

    def __call__(self, m: np.ndarray) -> float:
        return matrix_norm(m, self.kind)


@dataclass(eq=False)
class AlgebraSpec:
    """A unital subalgebra of M_n(C) given by a basis, a unit and a norm."""

    n: int
    basis: np.ndarray  # (d, n, n) complex, linearly independent
    unit: np.ndarray  # (n, n)
    mult: MultRule = "matrix"
    norm: NormSpec = field(default_factory=NormSpec)
    name: str = "custom"

    def __post_init__(self):
        self.basis = np.asarray(self.basis, dtype=complex)
        self.unit = np.asarray(self.unit, dtype=complex)
        d = self.basis.shape[0]
        # columns of the coordinate matrix are the vectorized basis elements
        self._coord_matrix = self.basis.reshape(d, -1).T
        self._coord_pinv = np.linalg.pinv(self._coord_matrix)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def coords(self, m: np.ndarray) -> tuple[np.ndarray, float]:
        """Coordinates of a matrix in the algebra basis and the projection residual."""
        c = self._coord_pinv @ np.asarray(m, dtype=complex).ravel()
        residual = float(np.linalg.norm(self._coord_matrix @ c - m.ravel()))
        return c, residual

    def contains_matrix(self, m: np.ndarray, tol: float = MEMBERSHIP_TOL) -> bool:
        _, res = self.coords(m)
        return res < tol * (1.0 + float(np.linalg.norm(m)))

    def from_coords(self, c: np.ndarray) -> "Element":
        m = np.tensordot(np.asarray(c, dtype=complex), self.basis, axes=(0, 0))
        return Element(m, self)

    def element(self, m: np.ndarray) -> "Element":
        return Element(np.asarray(m, dtype=complex), self)

    def one(self) -> "Element":
        return Element(self.unit.copy(), self)

    def zero(self) -> "Element":
        return Element(np.zeros((self.n, self.n), dtype=complex), self)

    def validate(self) -> None:
        """Check linear independence, multiplicative closure and the unit norm."""
        sv = np.linalg.svd(self._coord_matrix, compute_uv=False)
        if sv[-1] <= 1e-10:
            raise ValueError("basis matrices are not linearly independent")
        for bj in self.basis:
            for bk in self.basis:
                prod = _raw_mul(bj, bk, self)
                _, res = self.coords(prod)
                if res >= 1e-10 * (1.0 + np.linalg.norm(prod)):
                    raise ValueError("span is not closed under multiplication")
        _, res = self.coords(self.unit)
        if res >= 1e-10:
            raise ValueError("unit is not in the span")
        if self.norm.kind != "frobenius" and abs(self.norm(self.unit) - 1.0) > 1e-12:
            raise ValueError("unit does not have norm one")

    def is_semisimple(self) -> bool:
        return radical(self).shape[0] == 0


def same_algebra(a: AlgebraSpec, b: AlgebraSpec) -> bool:
    if a is b:
        return True
    return (
        a.n == b.n
        and a.mult == b.mult
        and a.norm.kind == b.norm.kind
        and a.basis.shape == b.basis.shape
        and np.allclose(a.basis, b.basis)
        and np.allclose(a.unit, b.unit)
    )


@dataclass(eq=False)
class Element:
    """A matrix together with the algebra it lives in."""

    matrix: np.ndarray
    algebra: AlgebraSpec

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=complex)

    def __add__(self, other: "Element") -> "Element":
        _require_same(self, other)
        return Element(self.matrix + other.matrix, self.algebra)

    def __sub__(self, other: "Element") -> "Element":
        _require_same(self, other)
        return Element(self.matrix - other.matrix, self.algebra)

    def __neg__(self) -> "Element":
        return Element(-self.matrix, self.algebra)

    def __rmul__(self, scalar) -> "Element":
        return Element(complex(scalar) * self.matrix, self.algebra)

    def copy(self) -> "Element":
        return Element(self.matrix.copy(), self.algebra)


def _require_same(a: Element, b: Element) -> None:
    if not same_algebra(a.algebra, b.algebra):
        raise AlgebraMismatchError("elements belong to different algebras")


def _scalar_part(m: np.ndarray, alg: AlgebraSpec) -> complex:
    # unitized-zero algebras have unit I and strictly upper triangular nilpotents,
    # so the scalar part is the common diagonal value
    return complex(np.trace(m)) / alg.n


def _raw_mul(ma: np.ndarray, mb: np.ndarray, alg: AlgebraSpec) -> np.ndarray:
    if alg.mult == "matrix":
        return ma @ mb
    alpha = _scalar_part(ma, alg)
    beta = _scalar_part(mb, alg)
    a0 = ma - alpha * alg.unit
    b0 = mb - beta * alg.unit
    return alpha * beta * alg.unit + alpha * b0 + beta * a0


def mul(a: Element, b: Element) -> Element:
    """Product in the shared algebra (matrix rule or unitized-zero rule)."""
    _require_same(a, b)
    return Element(_raw_mul(a.matrix, b.matrix, a.algebra), a.algebra)


def norm(a: Element) -> float:
    return a.algebra.norm(a.matrix)


def spectrum(a: Element) -> np.ndarray:
    """Eigenvalues of the matrix; equals the algebra spectrum for unital subalgebras."""
    return np.linalg.eigvals(a.matrix)


def spectral_radius(a: Element) -> float:
    return float(np.max(np.abs(spectrum(a))))


def is_invertible(a: Element, eps: float = INVERTIBILITY_EPS) -> bool:
    return float(np.min(np.abs(spectrum(a)))) > eps


def invert(a: Element) -> Element:
    """Inverse in the algebra; the inverse of an invertible element stays in the span."""
    if not is_invertible(a):
        raise NotInvertibleError("element has an eigenvalue below the threshold")
    alg = a.algebra
    if alg.mult == "unitized-zero":
        alpha = _scalar_part(a.matrix, alg)
        a0 = a.matrix - alpha * alg.unit
        return Element(alg.unit / alpha - a0 / alpha**2, alg)
    inv = np.linalg.inv(a.matrix)
    c, res = alg.coords(inv)
    if res >= 1e-8 * (1.0 + np.linalg.norm(inv)):
        raise MembershipError("inverse does not project back onto the algebra span")
    return alg.from_coords(c)


def structure_tensor(alg: AlgebraSpec) -> np.ndarray:
    """S[j, k, m] with basis_j * basis_k = sum_m S[j, k, m] basis_m."""
    d = alg.dim
    s = np.zeros((d, d, d), dtype=complex)
    for j in range(d):
        for k in range(d):
            prod = _raw_mul(alg.basis[j], alg.basis[k], alg)
            c, res = alg.coords(prod)
            if res >= 1e-8 * (1.0 + np.linalg.norm(prod)):
                raise MembershipError("basis product leaves the span")
            s[j, k] = c
    return s


def radical(alg: AlgebraSpec) -> np.ndarray:
    """Basis (k, n, n) of the Jacobson radical via the trace form of left multiplication.

    In characteristic zero an element x is in the radical iff trace(L_{x y}) = 0
    for every y, where L is left multiplication on the algebra.  The radical is
    therefore the null space of the Gram matrix G[j, k] = trace(L_{b_j b_k}).
    """
    d = alg.dim
    s = structure_tensor(alg)
    # trace(L_{b_m}) = sum_k S[m, k, k]
    trace_l = np.einsum("mkk->m", s)
    gram = np.einsum("jkm,m->jk", s, trace_l)
    u, sv, vh = np.linalg.svd(gram)
    scale = sv[0] if sv.size and sv[0] > 0 else 1.0
    null_vecs = vh[sv <= RADICAL_SV_TOL * scale].conj() if sv.size else vh.conj()
    if d > 0 and sv.size == 0:
        null_vecs = np.eye(d)
    mats = np.tensordot(null_vecs, alg.basis, axes=(1, 0))
    return mats.reshape(-1, alg.n, alg.n)


def radical_member_sampling(
    a: Element, trials: int = 200, rng_seed: int = 0
) -> bool:
    """Radical membership test by sampling: r(f a) must vanish for invertible f."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    from .sampling import random_invertible  # local import to avoid a cycle

    rng = np.random.default_rng(rng_seed)
    for _ in range(trials):
        f = random_invertible(a.algebra, rng)
        if spectral_radius(mul(f, a)) >= 1e-8:
            return False
    return True


def subspace_residual(span_a: np.ndarray, span_b: np.ndarray) -> float:
    """How far the span of the matrices in ``span_a`` sticks out of ``span_b``."""
    if span_a.shape[0] == 0:
        return 0.0
    if span_b.shape[0] == 0:
        return float(np.linalg.norm(span_a))
    qa = np.linalg.qr(span_a.reshape(span_a.shape[0], -1).T)[0]
    qb = np.linalg.qr(span_b.reshape(span_b.shape[0], -1).T)[0]
    proj = qb @ (qb.conj().T @ qa)
    return float(np.linalg.norm(qa - proj))


# ---------------------------------------------------------------------------
# Built-in algebras


def _matrix_unit(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = 1.0
    return m


def full_matrix_algebra(n: int, norm_kind: NormKind = "spectral") -> AlgebraSpec:
    basis = np.array([_matrix_unit(n, i, j) for i in range(n) for j in range(n)])
    return AlgebraSpec(
        n=n,
        basis=basis,
        unit=np.eye(n, dtype=complex),
        mult="matrix",
        norm=NormSpec(norm_kind),
        name=f"M_{n}",
    )


def dame_algebra(
    variant: Literal["A", "B"], norm_kind: NormKind = "spectral"
) -> AlgebraSpec:
    """Unitization of the strictly upper triangular 3x3 matrices.

    Variant "A" carries the unitized-zero multiplication (the nilpotent parts
    annihilate each other); variant "B" is the same set with ordinary matrix
    multiplication.
    """
    basis = np.array(
        [
            np.eye(3, dtype=complex),
            _matrix_unit(3, 0, 1),
            _matrix_unit(3, 0, 2),
            _matrix_unit(3, 1, 2),
        ]
    )
    return AlgebraSpec(
        n=3,
        basis=basis,
        unit=np.eye(3, dtype=complex),
        mult="unitized-zero" if variant == "A" else "matrix",
        norm=NormSpec(norm_kind),
        name=f"DAME_{variant}",
    )


def upper_triangular_algebra(norm_kind: NormKind = "spectral") -> AlgebraSpec:
    """The 2x2 upper triangular matrices; radical is the span of E12."""
    basis = np.array(
        [_matrix_unit(2, 0, 0), _matrix_unit(2, 1, 1), _matrix_unit(2, 0, 1)]
    )
    return AlgebraSpec(
        n=2,
        basis=basis,
        unit=np.eye(2, dtype=complex),
        mult="matrix",
        norm=NormSpec(norm_kind),
        name="upper_triangular_2",
    )


def diagonal_algebra(n: int, norm_kind: NormKind = "induced-linf") -> AlgebraSpec:
    """Diagonal n x n matrices; with the sup norm this realizes C(X), |X| = n."""
    basis = np.array([_matrix_unit(n, i, i) for i in range(n)])
    return AlgebraSpec(
        n=n,
        basis=basis,
        unit=np.eye(n, dtype=complex),
        mult="matrix",
        norm=NormSpec(norm_kind),
        name=f"diag_{n}",
    )
