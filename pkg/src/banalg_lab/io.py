"""JSON schemas for algebras, oracles and reports.

Complex numbers are encoded as [re, im] pairs and matrices as row-major nested
arrays of such pairs.  Config and report files carry a "schema" field set to
SCHEMA_VERSION.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .algebras import (
    NORM_KINDS,
    AlgebraSpec,
    NormSpec,
    dame_algebra,
    full_matrix_algebra,
)
from .errors import ConfigError
from .oracles import (
    IsometryOracle,
    identity_oracle,
    matrix_form_oracle,
    translation_oracle,
)

SCHEMA_VERSION = "banalg-lab/1"

ALGEBRA_KINDS = ("full_matrix", "dame_A", "dame_B", "custom_basis")
ORACLE_FAMILIES = ("identity", "similarity", "translation")


def complex_to_json(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def matrix_to_json(m: np.ndarray) -> list:
    return [[complex_to_json(z) for z in row] for row in np.asarray(m, dtype=complex)]


def matrix_from_json(data: Any) -> np.ndarray:
    try:
        rows = [[complex(re, im) for re, im in row] for row in data]
        return np.array(rows, dtype=complex)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"malformed matrix literal: {exc}") from exc


def _norm_from_config(name: Any) -> NormSpec:
    if name not in NORM_KINDS:
        raise ConfigError(f"unknown norm kind {name!r}; expected one of {NORM_KINDS}")
    return NormSpec(name)


def algebra_from_config(cfg: Any) -> AlgebraSpec:
    if not isinstance(cfg, dict):
        raise ConfigError("algebra config must be an object")
    kind = cfg.get("kind")
    norm = _norm_from_config(cfg.get("norm", "spectral"))
    if kind == "full_matrix":
        n = cfg.get("n")
        if not isinstance(n, int) or n < 1:
            raise ConfigError("full_matrix algebra needs a positive integer 'n'")
        return full_matrix_algebra(n, norm.kind)
    if kind in ("dame_A", "dame_B"):
        return dame_algebra(kind[-1], norm.kind)
    if kind == "custom_basis":
        try:
            basis = np.array([matrix_from_json(b) for b in cfg["basis"]])
            unit = matrix_from_json(cfg["unit"])
        except KeyError as exc:
            raise ConfigError(f"custom_basis algebra missing field {exc}") from exc
        mult = cfg.get("mult", "matrix")
        if mult not in ("matrix", "unitized-zero"):
            raise ConfigError(f"unknown multiplication rule {mult!r}")
        alg = AlgebraSpec(
            n=unit.shape[0], basis=basis, unit=unit, mult=mult, norm=norm, name="custom"
        )
        try:
            alg.validate()
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        return alg
    raise ConfigError(f"unknown algebra kind {kind!r}; expected one of {ALGEBRA_KINDS}")


def oracle_from_config(cfg: Any) -> IsometryOracle:
    if not isinstance(cfg, dict):
        raise ConfigError("oracle config must be an object")
    family = cfg.get("family")
    if family not in ORACLE_FAMILIES:
        raise ConfigError(
            f"unknown oracle family {family!r}; expected one of {ORACLE_FAMILIES}"
        )
    if "domain" not in cfg:
        raise ConfigError("oracle config needs a 'domain' algebra")
    domain = algebra_from_config(cfg["domain"])
    codomain = algebra_from_config(cfg["codomain"]) if "codomain" in cfg else domain
    if family == "identity":
        return identity_oracle(domain, codomain)
    if family == "translation":
        if "radical_shift" not in cfg:
            raise ConfigError("translation oracle needs a 'radical_shift' matrix")
        return translation_oracle(codomain, matrix_from_json(cfg["radical_shift"]))
    u = matrix_from_json(cfg["U"]) if "U" in cfg else None
    left = matrix_from_json(cfg["left_factor"]) if "left_factor" in cfg else None
    shift = (
        matrix_from_json(cfg["radical_shift"]) if "radical_shift" in cfg else None
    )
    corruption = cfg.get("corruption", 0.0)
    if not isinstance(corruption, (int, float)):
        raise ConfigError("'corruption' must be a number")
    return matrix_form_oracle(
        domain,
        codomain,
        u=u,
        left_factor=left,
        conjugate=bool(cfg.get("conjugate", False)),
        transpose=bool(cfg.get("transpose", False)),
        radical_shift=shift,
        corruption=float(corruption),
        name=family,
    )


def load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("top-level config must be an object")
    schema = cfg.get("schema")
    if schema != SCHEMA_VERSION:
        raise ConfigError(
            f"unsupported schema {schema!r}; expected {SCHEMA_VERSION!r}"
        )
    return cfg


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
