"""Executable counterexamples.

CX2: an isometry of a non-convex open subset of the diagonal 2x2 matrices
(two disjoint sup-norm balls) that admits no real-linear extension up to
translation.  The non-extendability is certified by computing the best affine
fit over a fixed probe set and exhibiting its residual.

DAME: the set-identity between the unitization of the strictly upper
triangular 3x3 matrices with zero multiplication and the same set with
ordinary multiplication.  It is a surjective isometry between the invertible
groups, extends real-linearly (the extension is the identity), yet is neither
multiplicative nor antimultiplicative.
"""

from __future__ import annotations

import numpy as np

from .algebras import (
    Element,
    dame_algebra,
    diagonal_algebra,
    is_invertible,
    mul,
    norm,
    radical,
    subspace_residual,
)
from .classify import refute_multiplicativity
from .errors import SegmentLeavesDomainError
from .extension import build_extension, check_midpoint
from .oracles import IsometryOracle, dame_identity_oracle


def _claim(name: str, value: float, tolerance: float, passed: bool) -> dict:
    return {"name": name, "value": value, "tolerance": tolerance, "pass": bool(passed)}


# ---------------------------------------------------------------------------
# CX2

#: second ball center: the function with values (0, 10) on the two points
CX2_CENTER = np.diag([0.0, 10.0]).astype(complex)
CX2_RADIUS = 1.0


def cx2_oracle() -> IsometryOracle:
    alg = diagonal_algebra(2, "induced-linf")

    def contains(f: Element) -> bool:
        return (
            norm(f) < CX2_RADIUS
            or alg.norm(f.matrix - CX2_CENTER) < CX2_RADIUS
        )

    def fn(f: Element) -> Element:
        if norm(f) < CX2_RADIUS:
            out = f.matrix.copy()
            out[0, 0] = -out[0, 0]
            return alg.element(out)
        if alg.norm(f.matrix - CX2_CENTER) < CX2_RADIUS:
            return f.copy()
        raise ValueError("argument outside the two balls")

    return IsometryOracle(alg, alg, fn, name="cx2", contains=contains)


def _cx2_sample(rng: np.random.Generator, ball: int) -> Element:
    alg = diagonal_algebra(2, "induced-linf")
    # uniform complex values in the open unit sup-ball, shifted for ball 2
    z = np.sqrt(rng.random(2)) * np.exp(2j * np.pi * rng.random(2)) * 0.999
    m = np.diag(z)
    if ball == 2:
        m = m + CX2_CENTER
    return alg.element(m)


def _cx2_probe_set() -> list[np.ndarray]:
    """100 points: quadruples diag(+-s, 0) / diag(+-s, 10), real and imaginary s."""
    points = []
    for s in np.linspace(0.6, 0.9, 12):
        for scale in (s, 1j * s):
            points.append(np.diag([scale, 0.0]).astype(complex))
            points.append(np.diag([-scale, 0.0]).astype(complex))
            points.append((np.diag([scale, 0.0]) + CX2_CENTER).astype(complex))
            points.append((np.diag([-scale, 0.0]) + CX2_CENTER).astype(complex))
    points.append(np.zeros((2, 2), dtype=complex))
    points.append(CX2_CENTER.copy())
    points.append(np.diag([0.0, 9.5]).astype(complex))
    points.append(np.diag([0.0, 10.5]).astype(complex))
    return points


def cx2_best_affine_residual() -> float:
    """Max pointwise sup-norm residual of the least-squares best affine fit.

    Any real-affine map restricted to the probe set is at least this bad, so a
    value >= 1/2 refutes extendability up to translation.
    """
    oracle = cx2_oracle()
    alg = oracle.domain
    points = _cx2_probe_set()

    def realvec(m: np.ndarray) -> np.ndarray:
        z = np.diag(m)
        return np.array([z[0].real, z[0].imag, z[1].real, z[1].imag])

    x = np.array([realvec(p) for p in points])
    y = np.array([realvec(oracle(alg.element(p)).matrix) for p in points])
    design = np.hstack([x, np.ones((len(points), 1))])
    params, *_ = np.linalg.lstsq(design, y, rcond=None)
    fitted = design @ params
    residual = 0.0
    for row in y - fitted:
        r = np.diag([row[0] + 1j * row[1], row[2] + 1j * row[3]])
        residual = max(residual, alg.norm(r))
    return residual


def run_cx2(rng_seed: int = 0) -> dict:
    oracle = cx2_oracle()
    alg = oracle.domain
    rng = np.random.default_rng(rng_seed)

    # (i) isometry on 500 sampled pairs, same-ball and cross-ball
    max_dev = 0.0
    for k in range(500):
        f = _cx2_sample(rng, 1 if k % 3 else 2)
        g = _cx2_sample(rng, 2 if k % 2 else 1)
        max_dev = max(max_dev, abs(norm(oracle(f) - oracle(g)) - norm(f - g)))

    # (ii) no affine map comes within 1/2 of T on the probe set
    affine_residual = cx2_best_affine_residual()

    # (iii) midpoint lemma: exact when the segment stays inside one ball,
    # refused when it would cross between the balls
    midpoint_residual = 0.0
    for _ in range(100):
        ball = int(rng.integers(1, 3))
        f, g = _cx2_sample(rng, ball), _cx2_sample(rng, ball)
        if not all(
            oracle.in_domain(alg.element((1 - r) * f.matrix + r * g.matrix))
            for r in np.linspace(0.0, 1.0, 11)
        ):
            continue
        midpoint_residual = max(midpoint_residual, check_midpoint(oracle, f, g))
    cross_refused = False
    f = alg.element(np.diag([0.9, 0.0]).astype(complex))
    g = alg.element(np.diag([0.9, 9.5]).astype(complex))
    try:
        check_midpoint(oracle, f, g)
    except SegmentLeavesDomainError:
        cross_refused = True

    claims = [
        _claim("isometry_max_deviation", max_dev, 1e-12, max_dev < 1e-12),
        _claim("best_affine_fit_residual", affine_residual, 0.5, affine_residual >= 0.5),
        _claim(
            "in_ball_midpoint_residual",
            midpoint_residual,
            1e-12,
            midpoint_residual < 1e-12,
        ),
        _claim("cross_ball_segment_refused", float(cross_refused), 1.0, cross_refused),
    ]
    return {"name": "cx2", "claims": claims, "pass": all(c["pass"] for c in claims)}


# ---------------------------------------------------------------------------
# DAME


def run_dame(rng_seed: int = 0) -> dict:
    alg_a = dame_algebra("A")
    alg_b = dame_algebra("B")
    oracle = dame_identity_oracle(alg_a, alg_b)
    rng = np.random.default_rng(rng_seed)

    # (i) isometry: the map is the set identity and the norms coincide
    max_dev = 0.0
    sets_agree = True
    for _ in range(500):
        coords = (rng.standard_normal(4) + 1j * rng.standard_normal(4)) / np.sqrt(2)
        fa, ga = alg_a.from_coords(coords), alg_a.from_coords(rng.standard_normal(4) + 0j)
        max_dev = max(max_dev, abs(norm(oracle(fa) - oracle(ga)) - norm(fa - ga)))
        # (ii) the invertible sets coincide (both are "scalar part nonzero")
        fb = alg_b.element(fa.matrix)
        if is_invertible(fa) != is_invertible(fb):
            sets_agree = False

    # (iii) named witness pair: (I+E12, I+E23) breaks the multiplicative law
    # with defect E13; the swapped pair breaks the antimultiplicative law with
    # the same defect (E23 * E12 = 0, so one pair cannot break both)
    e12 = np.zeros((3, 3), dtype=complex)
    e12[0, 1] = 1.0
    e23 = np.zeros((3, 3), dtype=complex)
    e23[1, 2] = 1.0
    m = alg_a.element(np.eye(3) + e12)
    k = alg_a.element(np.eye(3) + e23)
    d_mult = norm(oracle(mul(m, k)) - mul(oracle(m), oracle(k)))
    d_anti = norm(oracle(mul(k, m)) - mul(oracle(m), oracle(k)))
    witness = refute_multiplicativity(oracle, trials=50, rng_seed=rng_seed)

    # (iv) both radicals equal span{E12, E13, E23}
    e13 = np.zeros((3, 3), dtype=complex)
    e13[0, 2] = 1.0
    nilpotents = np.array([e12, e13, e23])
    rad_a, rad_b = radical(alg_a), radical(alg_b)
    rad_res = max(
        subspace_residual(rad_a, nilpotents),
        subspace_residual(nilpotents, rad_a),
        subspace_residual(rad_b, nilpotents),
        subspace_residual(nilpotents, rad_b),
    )

    # (v) the real-linear extension exists: identity linear part, zero shift
    ext = build_extension(oracle, trials=50, rng_seed=rng_seed)
    u0_norm = norm(ext.u0)
    id_res = float(np.linalg.norm(ext.linear_map - np.eye(8)))

    claims = [
        _claim("isometry_max_deviation", max_dev, 1e-12, max_dev < 1e-12),
        _claim("invertible_sets_coincide", float(sets_agree), 1.0, sets_agree),
        _claim("witness_defect_multiplicative", d_mult, 1.0, abs(d_mult - 1.0) < 1e-12),
        _claim("witness_defect_antimultiplicative", d_anti, 1.0, abs(d_anti - 1.0) < 1e-12),
        _claim(
            "random_witness_found", float(witness is not None), 1.0, witness is not None
        ),
        _claim("radical_is_nilpotent_span", rad_res, 1e-8, rad_res < 1e-8),
        _claim("radical_dimension", float(rad_a.shape[0]), 3.0, rad_a.shape[0] == 3),
        _claim("extension_shift_norm", u0_norm, 1e-10, u0_norm < 1e-10),
        _claim("extension_is_identity", id_res, 1e-8, id_res < 1e-8),
        _claim(
            "extension_diagnostics_pass",
            float(ext.diagnostics.passed),
            1.0,
            ext.diagnostics.passed,
        ),
    ]
    return {"name": "dame", "claims": claims, "pass": all(c["pass"] for c in claims)}
