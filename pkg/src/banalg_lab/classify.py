"""Canonical-form classification of isometries on the invertible n x n matrices.

A surjective isometry S on GL_n is of exactly one of four forms

    S(M) = S(E) U M U^{-1}            (similarity)
    S(M) = S(E) U M^t U^{-1}          (transpose similarity)
    S(M) = S(E) U conj(M) U^{-1}      (conjugate similarity)
    S(M) = S(E) U conj(M)^t U^{-1}    (conjugate transpose similarity)

The classifier strips the left factor S(E), builds the real-linear extension of
the remainder, reads off the conjugation and transpose flags, and recovers U as
the one-dimensional null space of the stacked intertwining equations
Psi(B_k) U = U B_k over the matrix units B_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebras import Element, invert, mul, norm
from .errors import ClassificationFailedError
from .extension import build_extension
from .oracles import IsometryOracle
from .sampling import random_invertible

TAGS = (
    "similarity",
    "transpose_similarity",
    "conjugate_similarity",
    "conjugate_transpose_similarity",
)

#: tolerance for the complex-vs-conjugate linearity decision
LINEARITY_TOL = 1e-7
#: tolerance for the multiplicative / antimultiplicative decision
MULT_TOL = 1e-6
#: final reconstruction residual allowed over fresh test matrices
RESIDUAL_TOL = 1e-6
#: relative singular-value threshold for the intertwiner null space
NULLSPACE_TOL = 1e-6


@dataclass
class ClassificationResult:
    tag: str
    u: np.ndarray  # normalized: Frobenius norm 1, leading max-modulus entry positive
    left_factor: Element
    residual: float

    @property
    def conjugate(self) -> bool:
        return self.tag.startswith("conjugate")

    @property
    def transpose(self) -> bool:
        return self.tag.endswith("transpose_similarity")


def normalize_conjugator(u: np.ndarray) -> np.ndarray:
    """Scale to Frobenius norm 1 and rotate the first max-modulus entry positive."""
    u = u / np.linalg.norm(u)
    flat = np.abs(u).ravel()
    idx = int(np.argmax(flat))
    pivot = u.ravel()[idx]
    return u * (np.conj(pivot) / np.abs(pivot))


def conjugator_distance(u: np.ndarray, u_ref: np.ndarray) -> float:
    """min over unit scalars lam of ||u - lam * u_ref||_F."""
    inner = np.vdot(u_ref, u)
    lam = inner / np.abs(inner) if np.abs(inner) > 0 else 1.0
    return float(np.linalg.norm(u - lam * u_ref))


def _matrix_unit(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = 1.0
    return m


def classify(oracle: IsometryOracle, rng_seed: int = 0) -> ClassificationResult:
    """Recover (tag, U, left factor) for an audited isometry on full M_n."""
    dom, cod = oracle.domain, oracle.codomain
    n = dom.n
    rng = np.random.default_rng(rng_seed)

    left_factor = oracle(dom.one())
    c_inv = invert(left_factor)

    def psi(a: Element) -> Element:
        return mul(c_inv, oracle(a))

    psi_oracle = IsometryOracle(dom, cod, psi, name="unitalized")
    ext = build_extension(psi_oracle, trials=20, rng_seed=rng_seed)

    # linearity type: the extension at iE is either +iE (complex-linear) or -iE
    e = dom.unit
    at_ie = ext.apply_matrix(1j * e)
    if cod.norm(at_ie - 1j * e) < LINEARITY_TOL:
        conj_flag = False
    elif cod.norm(at_ie + 1j * e) < LINEARITY_TOL:
        conj_flag = True
    else:
        raise ClassificationFailedError("ambiguous linearity type")

    def psi_lin(m: np.ndarray) -> np.ndarray:
        # complex-linear version of psi, applied through the extension matrix
        return ext.apply_matrix(m.conj() if conj_flag else m)

    # multiplicative vs antimultiplicative on random invertible pairs
    is_mult = is_anti = True
    for _ in range(20):
        m = random_invertible(dom, rng).matrix
        k = random_invertible(dom, rng).matrix
        lhs = psi_lin(m @ k)
        if cod.norm(lhs - psi_lin(m) @ psi_lin(k)) >= MULT_TOL:
            is_mult = False
        if cod.norm(lhs - psi_lin(k) @ psi_lin(m)) >= MULT_TOL:
            is_anti = False
        if not (is_mult or is_anti):
            raise ClassificationFailedError(
                "neither multiplicative nor antimultiplicative"
            )
    # tie possible only for commutative images; prefer the multiplicative form
    transpose_flag = is_anti and not is_mult

    def psi_final(m: np.ndarray) -> np.ndarray:
        return psi_lin(m.T) if transpose_flag else psi_lin(m)

    # stack the intertwining equations psi_final(B) U - U B = 0 over matrix units
    blocks = []
    eye = np.eye(n, dtype=complex)
    for i in range(n):
        for j in range(n):
            b = _matrix_unit(n, i, j)
            x = psi_final(b)
            # column-major vec convention: vec(X U - U B) = (I (x) X - B^t (x) I) vec(U)
            blocks.append(np.kron(eye, x) - np.kron(b.T, eye))
    stacked = np.vstack(blocks)
    sv = np.linalg.svd(stacked, compute_uv=False)
    scale = max(sv[0], 1.0)
    null_count = int(np.sum(sv <= NULLSPACE_TOL * scale))
    if null_count != 1:
        raise ClassificationFailedError(
            f"intertwiner null space has dimension {null_count}, expected 1"
        )
    _, _, vh = np.linalg.svd(stacked)
    u = vh[-1].conj().reshape((n, n), order="F")
    if np.linalg.svd(u, compute_uv=False)[-1] <= 1e-8:
        raise ClassificationFailedError("recovered conjugator is singular")
    u = normalize_conjugator(u)
    u_inv = np.linalg.inv(u)

    # residual over fresh invertibles
    residual = 0.0
    for _ in range(50):
        m = random_invertible(dom, rng).matrix
        phi = m.conj() if conj_flag else m
        if transpose_flag:
            phi = phi.T
        recon = left_factor.matrix @ (u @ phi @ u_inv)
        residual = max(residual, cod.norm(oracle(dom.element(m)).matrix - recon))
    if residual >= RESIDUAL_TOL:
        raise ClassificationFailedError(
            f"reconstruction residual {residual:.3e} exceeds {RESIDUAL_TOL:.0e}"
        )

    if conj_flag and transpose_flag:
        tag = "conjugate_transpose_similarity"
    elif conj_flag:
        tag = "conjugate_similarity"
    elif transpose_flag:
        tag = "transpose_similarity"
    else:
        tag = "similarity"
    return ClassificationResult(tag=tag, u=u, left_factor=left_factor, residual=residual)


@dataclass
class MultiplicativityWitness:
    m: Element
    n: Element
    defect_multiplicative: float
    defect_antimultiplicative: float


def refute_multiplicativity(
    oracle: IsometryOracle, trials: int = 50, rng_seed: int = 0
) -> Optional[MultiplicativityWitness]:
    """Search for a pair breaking both T(MN) = T(M)T(N) and T(MN) = T(N)T(M).

    Products are taken in the respective algebras.  Returns the first witness,
    or None when every sampled pair satisfies at least one of the two laws.
    """
    rng = np.random.default_rng(rng_seed)
    for _ in range(trials):
        m = random_invertible(oracle.domain, rng)
        k = random_invertible(oracle.domain, rng)
        lhs = oracle(mul(m, k))
        d_mult = norm(lhs - mul(oracle(m), oracle(k)))
        d_anti = norm(lhs - mul(oracle(k), oracle(m)))
        if d_mult > 1e-6 and d_anti > 1e-6:
            return MultiplicativityWitness(
                m=m, n=k, defect_multiplicative=d_mult, defect_antimultiplicative=d_anti
            )
    return None
