"""Command-line front end: eval, verify, bracket, resolve.

Numeric output uses shortest-round-trip decimal text (repr), so emitted CSV
parses back to bit-identical floats.  Diagnostics go to stderr.  Exit codes:
0 all good, 1 verification failures, 2 usage or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import catalog, verify
from .core import DEFAULT_CONTROL, SeriesControl
from .errors import ConfluentError, VariantResolutionError
from .series import PhiParams, chi_eval_optimal, chi_partial, phi, psi
from .transforms import chi_via_phi
from .quadrature import integrate_semi_infinite


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(float(v))
    return str(v)


def _parse_values(text: str) -> tuple[float, ...]:
    """Comma list (0.5,1,2) or start:step:count triple (0.5:0.25:4)."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(
                f"expected start:step:count, got {text!r}"
            )
        start, step, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise argparse.ArgumentTypeError("count must be >= 1")
        return tuple(start + i * step for i in range(count))
    try:
        return tuple(float(tok) for tok in text.split(",") if tok)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _control(args) -> SeriesControl:
    rel = getattr(args, "rel_tol", None)
    mx = getattr(args, "max_terms", None)
    if rel is None and mx is None:
        return DEFAULT_CONTROL
    return SeriesControl(
        rel_tol=rel if rel is not None else DEFAULT_CONTROL.rel_tol,
        max_terms=mx if mx is not None else DEFAULT_CONTROL.max_terms,
    )


def _emit_records(rows: list[dict], fmt: str, out) -> None:
    if not rows:
        return
    fields = list(rows[0].keys())
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(fields)
        for r in rows:
            w.writerow([_fmt(r[k]) for k in fields])
    elif fmt == "records":
        for r in rows:
            out.write(" ".join(f"{k}={_fmt(r[k])}" for k in fields) + "\n")
    else:
        widths = {
            k: max(len(k), *(len(_fmt(r[k])) for r in rows)) for k in fields
        }
        out.write("  ".join(k.ljust(widths[k]) for k in fields) + "\n")
        for r in rows:
            out.write("  ".join(_fmt(r[k]).ljust(widths[k]) for k in fields) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_eval(args) -> int:
    control = _control(args)
    rows = []
    if args.function == "phi":
        if args.alpha is None or args.beta is None or args.x is None:
            raise ConfluentError("phi needs --alpha, --beta and --x")
        r = phi(PhiParams(args.alpha, args.beta, args.x), control)
        rows.append(
            {"value": r.value, "abs_err_est": r.abs_err_est,
             "method": r.method, "work": r.work}
        )
    elif args.function == "psi":
        if args.alpha is None or args.x is None:
            raise ConfluentError("psi needs --alpha and --x")
        r = psi(args.alpha, args.x, control)
        rows.append(
            {"value": r.value, "abs_err_est": r.abs_err_est,
             "method": r.method, "work": r.work}
        )
    else:
        if args.alpha is None or args.beta is None or args.x is None:
            raise ConfluentError("chi needs --alpha, --beta and --x")
        if args.mode == "optimal":
            br = chi_eval_optimal(args.alpha, args.beta, args.x)
            r = br.to_eval_result()
            rows.append(
                {"value": r.value, "abs_err_est": r.abs_err_est,
                 "method": r.method, "work": r.work,
                 "lower": br.lower, "upper": br.upper, "k_opt": br.k_opt,
                 "bound_first_omitted": br.bound_first_omitted,
                 "bound_printed": br.bound_printed}
            )
        else:
            r = chi_via_phi(args.alpha, args.beta, args.x, control)
            rows.append(
                {"value": r.value, "abs_err_est": r.abs_err_est,
                 "method": r.method, "work": r.work}
            )
    _emit_records(rows, args.format, sys.stdout)
    return 0


def _grid_from_args(key: str, args) -> verify.GridSpec:
    base = verify.DEFAULT_GRIDS[key]
    kw = {}
    if args.alpha is not None:
        kw["alphas"] = args.alpha
    if args.beta is not None:
        kw["betas"] = args.beta
    if args.gamma is not None:
        kw["gammas"] = args.gamma
    if args.x is not None:
        kw["xs"] = args.x
    if args.lam is not None:
        kw["alphas"] = args.lam
    if args.v is not None:
        kw["xs"] = args.v
    if args.abs_tol is not None:
        kw["abs_tol"] = args.abs_tol
    if args.rel_tol is not None:
        kw["rel_tol"] = args.rel_tol
    if not kw:
        return base
    merged = {
        "alphas": kw.get("alphas", base.alphas),
        "betas": kw.get("betas", base.betas),
        "gammas": kw.get("gammas", base.gammas),
        "xs": kw.get("xs", base.xs),
        "abs_tol": kw.get("abs_tol", base.abs_tol),
        "rel_tol": kw.get("rel_tol", base.rel_tol),
    }
    return verify.GridSpec(**merged)


def _report_row(rep: verify.IdentityReport) -> dict:
    row = {"id": rep.identity}
    for name, value in rep.params.items():
        row[name] = value
    row.update(
        lhs=rep.lhs, rhs=rep.rhs,
        abs_residual=rep.abs_residual, rel_residual=rep.rel_residual,
        lhs_err_est=rep.lhs_err_est, rhs_err_est=rep.rhs_err_est,
        passed=rep.passed,
    )
    if rep.reason:
        row["reason"] = rep.reason
    return row


def _cmd_verify(args) -> int:
    if args.all:
        keys = catalog.registry()
    else:
        if args.id is None:
            print("verify: give an identity key or --all", file=sys.stderr)
            return 2
        if args.id not in catalog.registry():
            print(f"verify: unknown identity {args.id!r}", file=sys.stderr)
            return 2
        keys = [args.id]
    all_pass = True
    rows = []
    for key in keys:
        grid = _grid_from_args(key, args)
        for rep in verify.run_identity_grid(key, grid):
            rows.append(_report_row(rep))
            all_pass &= rep.passed
    _emit_records(rows, args.format, sys.stdout)
    return 0 if all_pass else 1


def _cmd_bracket(args) -> int:
    ps = chi_partial(args.alpha, args.beta, args.x, args.kmax)
    if args.alpha == 0.0 or args.beta == 0.0:
        reference = 1.0  # every correction term vanishes
    else:
        spec = catalog.lhs_spec(
            "eq15", {"alpha": args.alpha, "beta": args.beta, "x": args.x}
        )
        reference = integrate_semi_infinite(spec, 1e-13, 1e-12).value
    rows = []
    for k in range(len(ps.terms)):
        diff = ps.partials[k] - reference
        sign = "0" if diff == 0.0 else ("+" if diff > 0 else "-")
        rows.append(
            {"k": k, "term": ps.terms[k], "partial": ps.partials[k], "sign": sign}
        )
    _emit_records(rows, args.format, sys.stdout)
    print(f"reference={_fmt(reference)} k_opt={ps.k_opt}", file=sys.stderr)
    return 0


def _cmd_resolve(args) -> int:
    try:
        adopted = verify.resolve_variants()
    except VariantResolutionError as exc:
        print(f"resolve: {exc}", file=sys.stderr)
        return 1
    rows = []
    for key in ("eq33", "eq42", "eq46"):
        reps = verify.run_identity_grid(
            key, verify.PROBE_GRIDS[key], variant=adopted[key]
        )
        worst = max(r.rel_residual for r in reps)
        rows.append(
            {"id": key, "adopted_variant": adopted[key],
             "candidates": len(catalog.variant_tags(key)), "worst_rel_residual": worst}
        )
    _emit_records(rows, args.format, sys.stdout)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confluent",
        description="Evaluate the confluent series and verify the integral catalog.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate phi, psi or chi")
    p_eval.add_argument("function", choices=("phi", "psi", "chi"))
    p_eval.add_argument("--alpha", type=float)
    p_eval.add_argument("--beta", type=float)
    p_eval.add_argument("--x", type=float)
    p_eval.add_argument("--mode", choices=("optimal", "transformed"), default="optimal",
                        help="chi only: bracketed truncation or the convergent form")
    p_eval.add_argument("--rel-tol", dest="rel_tol", type=float)
    p_eval.add_argument("--max-terms", dest="max_terms", type=int)
    p_eval.add_argument("--format", choices=("table", "csv", "records"), default="records")
    p_eval.set_defaults(func=_cmd_eval)

    p_ver = sub.add_parser("verify", help="run identity grids against the oracle")
    p_ver.add_argument("id", nargs="?")
    p_ver.add_argument("--all", action="store_true")
    p_ver.add_argument("--alpha", type=_parse_values)
    p_ver.add_argument("--beta", type=_parse_values)
    p_ver.add_argument("--gamma", type=_parse_values)
    p_ver.add_argument("--x", type=_parse_values)
    p_ver.add_argument("--lam", type=_parse_values)
    p_ver.add_argument("--v", type=_parse_values)
    p_ver.add_argument("--abs-tol", dest="abs_tol", type=float)
    p_ver.add_argument("--rel-tol", dest="rel_tol", type=float)
    p_ver.add_argument("--format", choices=("table", "csv", "records"), default="table")
    p_ver.set_defaults(func=_cmd_verify)

    p_br = sub.add_parser("bracket", help="partial-sum table with oracle signs")
    p_br.add_argument("--alpha", type=float, required=True)
    p_br.add_argument("--beta", type=float, required=True)
    p_br.add_argument("--x", type=float, required=True)
    p_br.add_argument("--kmax", type=int, default=30)
    p_br.add_argument("--format", choices=("table", "csv", "records"), default="table")
    p_br.set_defaults(func=_cmd_bracket)

    p_res = sub.add_parser("resolve", help="adopt typo variants empirically")
    p_res.add_argument("--format", choices=("table", "csv", "records"), default="table")
    p_res.set_defaults(func=_cmd_resolve)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ConfluentError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
