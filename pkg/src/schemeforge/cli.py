"""Command-line interface.

Exit codes: 0 for success or an accepted certificate, 1 for a mathematical
rejection (failed hypotheses, rejected scheme), 2 for input errors. That
split lets shell pipelines tell "the matrix is not a scheme" apart from
"the file is broken".
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import io
from .hoffman import (
    HoffmanHypothesisError,
    hoffman_polynomial,
    hoffman_product_form_check,
    minimal_polynomial,
)
from .matrix import RationalMatrix
from .predistance import PredistanceHypothesisError, predistance_basis, verify_hoffman_sum
from .scheme import detect_scheme
from .spectral import (
    ASSERTION_TOL,
    ITERATION_TOL,
    RootConvergenceError,
    SpectrumDegeneracyError,
    idempotents,
    perron_check,
    roots,
)
from .stochastic import classify, entry_decomposition, random_lambda_ds

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INPUT_ERROR = 2

DEFAULT_SEED = 0
SEED_ENV_VAR = "SCHEMEFORGE_SEED"


def _seed_value(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schemeforge",
        description="Exact analysis of lambda-doubly stochastic rational matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def file_command(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("file", help="matrix file")
        cmd.add_argument("--json", action="store_true", help="emit a JSON report")
        return cmd

    file_command("analyze", "classify the matrix (nonnegativity, lambda, normality, irreducibility)")
    file_command("hoffman", "compute and verify the Hoffman polynomial")
    file_command("predistance", "compute the predistance polynomial basis")
    file_command("scheme", "decide whether the matrix generates a commutative association scheme")
    file_command("decompose", "split the matrix over its distinct positive entries")
    spectrum = file_command("spectrum", "numeric eigenvalues, idempotents, Perron report")
    spectrum.add_argument("--tol", type=float, default=ITERATION_TOL, help="root iteration tolerance")
    spectrum.add_argument(
        "--check-tol", type=float, default=ASSERTION_TOL, help="tolerance for invariant checks"
    )
    gen = sub.add_parser("gen", help="generate a random lambda-doubly stochastic matrix")
    gen.add_argument("order", type=int, help="matrix order n")
    gen.add_argument("terms", type=int, help="number of permutation terms k")
    gen.add_argument("--seed", type=_seed_value, default=None, help="64-bit unsigned seed")
    gen.add_argument("--out", default=None, help="output file (default: stdout)")
    return parser


def _load_matrix(path: str) -> RationalMatrix:
    with open(path, "r", encoding="utf-8") as handle:
        return io.parse_matrix(handle.read())


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)


def _classification_report(cls) -> dict:
    return {
        "order": cls.order,
        "nonnegative": cls.nonnegative,
        "lambda": io.fraction_str(cls.lam) if cls.lam is not None else None,
        "doubly_stochastic": cls.doubly_stochastic,
        "normal": cls.normal,
        "irreducible": cls.irreducible,
    }


def _cmd_analyze(args) -> int:
    b = _load_matrix(args.file)
    cls = classify(b)
    report = {"classification": _classification_report(cls)}
    lam = io.fraction_str(cls.lam) if cls.lam is not None else "none"
    _emit(
        report,
        args.json,
        [
            f"order: {cls.order}",
            f"nonnegative: {cls.nonnegative}",
            f"lambda: {lam}",
            f"doubly stochastic: {cls.doubly_stochastic}",
            f"normal: {cls.normal}",
            f"irreducible: {cls.irreducible}",
        ],
    )
    return EXIT_OK if cls.hoffman_ready else EXIT_REJECTED


def _cmd_hoffman(args) -> int:
    b = _load_matrix(args.file)
    try:
        info = hoffman_polynomial(b)
    except HoffmanHypothesisError as exc:
        _emit({"hoffman": {"rejected": exc.hypothesis}}, args.json, [f"rejected: {exc.hypothesis}"])
        return EXIT_REJECTED
    report = {
        "hoffman": {
            "lambda": io.fraction_str(info.lam),
            "q": io.poly_coefficients(info.q),
            "h": io.poly_coefficients(info.h),
            "verified": True,
        }
    }
    _emit(
        report,
        args.json,
        [
            f"lambda: {io.fraction_str(info.lam)}",
            f"h(t) = {info.h}",
            f"h coefficients (ascending): {info.h.coefficient_line()}",
            f"q coefficients (ascending): {info.q.coefficient_line()}",
            "verification: h(B) = J holds exactly",
        ],
    )
    return EXIT_OK


def _cmd_predistance(args) -> int:
    b = _load_matrix(args.file)
    try:
        family = predistance_basis(b)
    except PredistanceHypothesisError as exc:
        _emit(
            {"predistance": {"rejected": exc.hypothesis}}, args.json, [f"rejected: {exc.hypothesis}"]
        )
        return EXIT_REJECTED
    hoffman_sum_ok = verify_hoffman_sum(family, b)
    report = {
        "predistance": {
            "lambda": io.fraction_str(family.lam),
            "polynomials": [io.poly_coefficients(p) for p in family.polys],
            "norms_squared": [io.fraction_str(v) for v in family.norms_sq],
            "hoffman_sum_verified": hoffman_sum_ok,
        }
    }
    lines = [f"lambda: {io.fraction_str(family.lam)}", f"d: {family.d}"]
    for i, p in enumerate(family.polys):
        lines.append(f"p_{i}(t) = {p}")
        lines.append(f"  coefficients (ascending): {p.coefficient_line()}")
        lines.append(f"  p_{i}(lambda) = {io.fraction_str(family.norms_sq[i])}")
    lines.append(
        "hoffman sum: verified" if hoffman_sum_ok else "hoffman sum: FAILED"
    )
    _emit(report, args.json, lines)
    return EXIT_OK if hoffman_sum_ok else EXIT_REJECTED


def _scheme_report(b: RationalMatrix, certificate) -> dict:
    cls = classify(b)
    hoffman_coeffs = None
    predistance_polys = None
    if cls.hoffman_ready:
        hoffman_coeffs = io.poly_coefficients(hoffman_polynomial(b).h)
        if cls.normal:
            predistance_polys = [
                io.poly_coefficients(p) for p in predistance_basis(b, classification=cls).polys
            ]
    report = {
        "verdict": "accepted" if certificate.accepted else "rejected",
        "reason": certificate.reason.describe() if certificate.reason else None,
        "lambda": io.fraction_str(cls.lam) if cls.lam is not None else None,
        "d": certificate.d,
        "D": certificate.diameter,
        "hoffman": hoffman_coeffs,
        "predistance": predistance_polys,
        "classes": (
            [io.zero_one_grid(a) for a in certificate.class_matrices]
            if certificate.class_matrices
            else None
        ),
        "intersection_numbers": (
            [[[int(v) for v in row] for row in plane] for plane in certificate.intersection_tensor]
            if certificate.intersection_tensor
            else None
        ),
        "transpose_map": (
            list(certificate.transpose_perm) if certificate.transpose_perm else None
        ),
    }
    return report


def _cmd_scheme(args) -> int:
    b = _load_matrix(args.file)
    certificate = detect_scheme(b)
    report = _scheme_report(b, certificate)
    lines = [f"verdict: {report['verdict']}"]
    if certificate.reason is not None:
        lines.append(f"reason: {certificate.reason.describe()}")
    if report["lambda"] is not None:
        lines.append(f"lambda: {report['lambda']}")
    if certificate.d is not None:
        lines.append(f"d: {certificate.d}  D: {certificate.diameter}")
    if certificate.accepted:
        lines.append(f"classes: {len(certificate.class_matrices)}")
        for i, p in enumerate(certificate.generator_polynomials):
            lines.append(f"p_{i}(t) = {p}")
        lines.append(f"transpose map: {list(certificate.transpose_perm)}")
        lines.append("intersection numbers (A_i A_j = sum_h p[h] A_h):")
        for i, plane in enumerate(certificate.intersection_tensor):
            for j, row in enumerate(plane):
                lines.append(f"  ({i},{j}): {[int(v) for v in row]}")
    _emit(report, args.json, lines)
    return EXIT_OK if certificate.accepted else EXIT_REJECTED


def _cmd_decompose(args) -> int:
    b = _load_matrix(args.file)
    try:
        decomposition = entry_decomposition(b)
    except ValueError as exc:
        _emit({"decomposition": {"rejected": str(exc)}}, args.json, [f"rejected: {exc}"])
        return EXIT_REJECTED
    report = {
        "decomposition": {
            "coefficients": [io.fraction_str(c) for c in decomposition.coefficients],
            "indicators": [io.zero_one_grid(f) for f in decomposition.indicators],
        }
    }
    lines = [f"distinct positive entries: {len(decomposition.coefficients)}"]
    for c, f in zip(decomposition.coefficients, decomposition.indicators):
        support = sum(1 for row in f.rows for v in row if v)
        lines.append(f"coefficient {io.fraction_str(c)}: {support} positions")
    _emit(report, args.json, lines)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    b = _load_matrix(args.file)
    cls = classify(b)
    minimal = minimal_polynomial(b)
    try:
        spectrum = roots(minimal.poly, tol=args.tol)
    except RootConvergenceError as exc:
        _emit(
            {"spectrum": {"error": "no convergence", "residuals": list(exc.residuals)}},
            args.json,
            [f"root iteration failed to converge; residuals {list(exc.residuals)}"],
        )
        return EXIT_REJECTED
    section: dict = {
        "eigenvalues": [{"re": z.real, "im": z.imag} for z in spectrum.eigenvalues],
        "residuals": list(spectrum.residuals),
    }
    lines = ["eigenvalues:"]
    for z, r in zip(spectrum.eigenvalues, spectrum.residuals):
        lines.append(f"  {z.real:+.12f} {z.imag:+.12f}i   |m| residual {r:.3e}")
    product_residual = None
    if cls.hoffman_ready:
        report_perron = perron_check(b, spectrum, tol=args.check_tol, classification=cls)
        section["perron"] = {
            "lambda": report_perron.lam,
            "max_modulus": report_perron.max_modulus,
            "modulus_matches": report_perron.modulus_matches,
            "perron_simple": report_perron.perron_simple,
            "allones_eigenvector_exact": report_perron.allones_eigenvector_exact,
        }
        lines.append(
            "perron: modulus_matches={0} simple={1} B*1=lambda*1 exact={2}".format(
                report_perron.modulus_matches,
                report_perron.perron_simple,
                report_perron.allones_eigenvector_exact,
            )
        )
        product_residual = hoffman_product_form_check(b, list(spectrum.eigenvalues[1:]))
        section["hoffman_product_residual"] = product_residual
        lines.append(f"hoffman product-form residual: {product_residual:.3e}")
    try:
        family = idempotents(b, spectrum, tol=args.check_tol)
        section["idempotent_residuals"] = family.residuals
        lines.append(
            "idempotent residuals: "
            + " ".join(f"{k}={v:.3e}" for k, v in family.residuals.items())
        )
    except SpectrumDegeneracyError as exc:
        section["idempotent_residuals"] = None
        section["idempotent_note"] = str(exc)
        lines.append(f"idempotents skipped: {exc}")
    _emit({"spectrum": section}, args.json, lines)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.order < 1 or args.terms < 1:
        print("gen: order and terms must be positive", file=sys.stderr)
        return EXIT_INPUT_ERROR
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV_VAR)
        try:
            seed = _seed_value(env) if env is not None else DEFAULT_SEED
        except (argparse.ArgumentTypeError, ValueError):
            print(f"gen: invalid {SEED_ENV_VAR} value {env!r}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    b = random_lambda_ds(args.order, args.terms, seed)
    text = io.serialize_matrix(b, comment=f"random lambda-DS matrix n={args.order} k={args.terms} seed={seed}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


_HANDLERS = {
    "analyze": _cmd_analyze,
    "hoffman": _cmd_hoffman,
    "predistance": _cmd_predistance,
    "scheme": _cmd_scheme,
    "decompose": _cmd_decompose,
    "spectrum": _cmd_spectrum,
    "gen": _cmd_gen,
}


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT_ERROR
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except io.MatrixParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
