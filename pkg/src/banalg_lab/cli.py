"""Command-line entry point emitting JSON reports with CI-friendly exit codes.

Exit status: 0 when every check passes, 2 on a check failure or numerical
non-convergence, 3 on a configuration error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .algebras import radical
from .classify import classify
from .errors import ClassificationFailedError, ConfigError, NoConvergenceError
from .extension import build_extension
from .gallery import run_cx2, run_dame
from .io import (
    SCHEMA_VERSION,
    dump_report,
    load_config,
    matrix_to_json,
    algebra_from_config,
    oracle_from_config,
)
from .oracles import AUDIT_TOL, audit_oracle

EXIT_OK = 0
EXIT_CHECK_FAILED = 2
EXIT_CONFIG_ERROR = 3


def _parse_tols(pairs: list[str]) -> dict[str, float]:
    tols = {}
    for item in pairs:
        if "=" not in item:
            raise ConfigError(f"--tol expects KEY=VAL, got {item!r}")
        key, _, val = item.partition("=")
        try:
            tols[key] = float(val)
        except ValueError as exc:
            raise ConfigError(f"--tol value for {key!r} is not a number") from exc
    return tols


def _check(name: str, value: float, tolerance: float) -> dict:
    return {
        "name": name,
        "value": float(value),
        "tolerance": float(tolerance),
        "pass": bool(value < tolerance),
    }


def _audit_checks(oracle, seed: int, tols: dict) -> list[dict]:
    report = audit_oracle(oracle, pairs=200, rng_seed=seed)
    tol = tols.get("isometry-audit", AUDIT_TOL)
    return [
        _check("isometry audit", report.max_deviation, tol),
        {
            "name": "images invertible",
            "value": float(not report.all_invertible),
            "tolerance": 1.0,
            "pass": report.all_invertible,
        },
    ]


def _cmd_audit_oracle(cfg: dict, seed: int, tols: dict) -> list[dict]:
    return _audit_checks(oracle_from_config(cfg), seed, tols)


def _cmd_verify_extension(cfg: dict, seed: int, tols: dict) -> list[dict]:
    oracle = oracle_from_config(cfg)
    checks = _audit_checks(oracle, seed, tols)
    if not all(c["pass"] for c in checks):
        return checks
    try:
        ext = build_extension(oracle, trials=100, rng_seed=seed)
    except NoConvergenceError as exc:
        checks.append(
            {
                "name": "u0 convergence",
                "value": float("inf"),
                "tolerance": 0.0,
                "pass": False,
                "detail": str(exc),
            }
        )
        return checks
    diag = ext.diagnostics
    for name, value in diag.residuals().items():
        checks.append(_check(name, value, tols.get(name, diag.tolerance)))
    checks.append(
        {
            "name": "u0 in radical",
            "value": float(not diag.u0_in_radical),
            "tolerance": 1.0,
            "pass": diag.u0_in_radical,
        }
    )
    return checks


def _cmd_classify(cfg: dict, seed: int, tols: dict) -> tuple[list[dict], dict]:
    oracle = oracle_from_config(cfg)
    checks = _audit_checks(oracle, seed, tols)
    if not all(c["pass"] for c in checks):
        return checks, {}
    try:
        result = classify(oracle, rng_seed=seed)
    except ClassificationFailedError as exc:
        checks.append(
            {
                "name": "classification",
                "value": float("inf"),
                "tolerance": 0.0,
                "pass": False,
                "detail": str(exc),
            }
        )
        return checks, {}
    checks.append(
        _check("form residual", result.residual, tols.get("form residual", 1e-6))
    )
    extra = {
        "tag": result.tag,
        "U": matrix_to_json(result.u),
        "left_factor": matrix_to_json(result.left_factor.matrix),
    }
    return checks, extra


def _cmd_radical(cfg: dict) -> tuple[list[dict], dict]:
    if "algebra" not in cfg:
        raise ConfigError("radical command needs an 'algebra' object in the config")
    alg = algebra_from_config(cfg["algebra"])
    rad = radical(alg)
    extra = {
        "radical_dimension": int(rad.shape[0]),
        "radical_basis": [matrix_to_json(m) for m in rad],
        "semisimple": bool(rad.shape[0] == 0),
    }
    return [], extra


def _cmd_gallery(name: str, seed: int) -> tuple[list[dict], dict]:
    if name == "cx2":
        report = run_cx2(rng_seed=seed)
    elif name == "dame":
        report = run_dame(rng_seed=seed)
    else:
        raise ConfigError(f"unknown gallery item {name!r}; expected 'cx2' or 'dame'")
    checks = [
        {
            "name": c["name"],
            "value": float(c["value"]),
            "tolerance": float(c["tolerance"]),
            "pass": bool(c["pass"]),
        }
        for c in report["claims"]
    ]
    return checks, {"item": report["name"]}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="banalg-lab",
        description="Isometries of invertible groups: extension, classification, gallery.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_config=True):
        if needs_config:
            p.add_argument("--config", required=True, help="JSON config file")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument(
            "--tol",
            action="append",
            default=[],
            metavar="KEY=VAL",
            help="override a check tolerance (repeatable)",
        )
        p.add_argument("--report", default=None, help="report path (default: stdout)")

    common(sub.add_parser("audit-oracle", help="isometry audit of an oracle config"))
    common(sub.add_parser("verify-extension", help="build and verify the extension"))
    common(sub.add_parser("classify-gln", help="canonical-form classification"))
    common(sub.add_parser("radical", help="Jacobson radical of an algebra config"))
    gal = sub.add_parser("gallery", help="run a built-in counterexample")
    gal.add_argument("--name", required=True, choices=["cx2", "dame"])
    common(gal, needs_config=False)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    report = {
        "schema": SCHEMA_VERSION,
        "version": __version__,
        "command": args.command,
        "seed": args.seed,
    }
    try:
        tols = _parse_tols(args.tol)
        extra: dict = {}
        if args.command == "gallery":
            report["config"] = {"name": args.name}
            checks, extra = _cmd_gallery(args.name, args.seed)
        else:
            cfg = load_config(args.config)
            report["config"] = cfg
            if args.command == "audit-oracle":
                checks = _cmd_audit_oracle(cfg, args.seed, tols)
            elif args.command == "verify-extension":
                checks = _cmd_verify_extension(cfg, args.seed, tols)
            elif args.command == "classify-gln":
                checks, extra = _cmd_classify(cfg, args.seed, tols)
            else:  # radical
                checks, extra = _cmd_radical(cfg)
    except ConfigError as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG_ERROR
    report["checks"] = checks
    report.update(extra)
    report["pass"] = all(c["pass"] for c in checks)
    text = dump_report(report)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report["pass"] else EXIT_CHECK_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
