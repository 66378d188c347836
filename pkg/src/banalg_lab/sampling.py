"""Seeded random generators for elements, invertibles and unitary matrices."""

from __future__ import annotations

import numpy as np

from .algebras import AlgebraSpec, Element, norm, spectrum

#: reject candidates whose smallest eigenvalue is below this times the norm
CONDITIONING_EPS = 1e-6


def complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_element(alg: AlgebraSpec, rng: np.random.Generator, scale: float = 1.0) -> Element:
    """Element with i.i.d. complex standard normal coordinates in the algebra basis."""
    return alg.from_coords(scale * complex_normal(rng, alg.dim))


def random_invertible(alg: AlgebraSpec, rng: np.random.Generator, scale: float = 1.0) -> Element:
    """Random element, resampled until it is comfortably invertible."""
    while True:
        x = random_element(alg, rng, scale)
        if float(np.min(np.abs(spectrum(x)))) > CONDITIONING_EPS * norm(x):
            return x


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish unitary from the QR decomposition of a complex Gaussian matrix."""
    q, r = np.linalg.qr(complex_normal(rng, (n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_phased_permutation(n: int, rng: np.random.Generator) -> np.ndarray:
    """Permutation matrix with unimodular phases; isometric for all stock norms."""
    perm = rng.permutation(n)
    phases = np.exp(2j * np.pi * rng.random(n))
    m = np.zeros((n, n), dtype=complex)
    m[perm, np.arange(n)] = phases
    return m


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    g = complex_normal(rng, (n, n))
    return (g + g.conj().T) / 2
