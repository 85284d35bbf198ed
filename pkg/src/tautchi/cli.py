"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 a check failed, 2 bad input.
The default output mode comes from ``TAUTCHI_OUTPUT`` (``json`` or ``text``).
"""
from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from .exactalg import UVPoly
from .hilbloc import Specialization, enumerate_fixed_points, find_specialization, hilb_chi_series
from .inclexcl import CoeffSeq, combine_direct, combine_log, combine_strata
from .powerseries import QSeries
from .toricgeom import (
    ProjProduct,
    ToricLineBundle,
    ToricSurface,
    builtin,
    make_blowup_scenario,
)
from .verify import (
    describe_space,
    generator_report,
    predicted_closed_form,
    predicted_series,
    verify_conjecture_surface,
    verify_inclusion_exclusion,
)


class InputError(ValueError):
    pass


# --- parsing -----------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        return [int(x) for x in json.loads(text)]
    return [int(x) for x in text.split(",") if x.strip()]


def parse_surface(text: str) -> ToricSurface:
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        kind = data.get("type")
        if kind in ("p2", "p1xp1"):
            return builtin(kind)
        if kind == "fe":
            return builtin("hirzebruch", int(data["e"]))
        if kind == "fan":
            return ToricSurface(tuple(tuple(r) for r in data["rays"]))
        raise InputError(f"unknown surface type {kind!r}")
    low = text.lower()
    if low in ("p2", "p1xp1"):
        return builtin(low)
    for prefix in ("hirzebruch:", "fe:", "f"):
        if low.startswith(prefix) and low[len(prefix):].isdigit():
            return builtin("hirzebruch", int(low[len(prefix):]))
    raise InputError(f"cannot parse surface {text!r}")


def parse_bundle(text: str, S: ToricSurface) -> ToricLineBundle:
    """Full ray coefficients, or a shorter list padded with zeros
    (``"1"`` on P^2 is ``O(1)``; ``"1,0"`` on P^1 x P^1 is ``O(1, 0)``)."""
    text = text.strip()
    if text.startswith("{"):
        coeffs = [int(x) for x in json.loads(text)["ray_coeffs"]]
    else:
        coeffs = _int_list(text)
    if not coeffs or len(coeffs) > S.n_rays:
        raise InputError(f"bundle {text!r} does not fit a fan with {S.n_rays} rays")
    return ToricLineBundle(tuple(coeffs) + (0,) * (S.n_rays - len(coeffs)))


def parse_coeff_seq(text: str) -> CoeffSeq:
    text = text.strip()
    if text.startswith("["):
        data = json.loads(text)
        return CoeffSeq([UVPoly.from_json(x) if isinstance(x, list) else UVPoly.from_json(str(x))
                         for x in data])
    return CoeffSeq(_int_list(text))


def _space_and_bundles(args):
    if args.lam:
        X = ProjProduct(tuple(_int_list(args.lam)))
        K = tuple(_int_list(args.K)) if args.K else (0,) * len(X.lam)
        L = tuple(_int_list(args.L)) if args.L else (0,) * len(X.lam)
        if len(K) != len(X.lam) or len(L) != len(X.lam):
            raise InputError("bundle length must equal the number of factors")
        return X, K, L
    if not args.surface:
        raise InputError("one of --surface or --lambda is required")
    S = parse_surface(args.surface)
    K = parse_bundle(args.K, S) if args.K else ToricLineBundle.trivial(S)
    L = parse_bundle(args.L, S) if args.L else ToricLineBundle.trivial(S)
    return S, K, L


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def _positive(text: str) -> int:
    n = _nonneg(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


# --- text rendering ------------------------------------------------------------

def _series_lines(name: str, s: QSeries) -> list[str]:
    return [f"{name}[Q^{n}] = {c}" for n, c in enumerate(s.coeffs)]


def _emit(payload: dict, text_lines: list[str], mode: str, out) -> None:
    if mode == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


# --- subcommands -----------------------------------------------------------------

def cmd_combine(args, out) -> int:
    a, b, d = parse_coeff_seq(args.a), parse_coeff_seq(args.b), parse_coeff_seq(args.d)
    N = args.order
    if min(a.order, b.order, d.order) < N:
        raise InputError(f"sequences must have at least {N} entries")
    a, b, d = a.truncate(N), b.truncate(N), d.truncate(N)
    via_log = combine_log(a, b, d, N)
    via_direct = combine_direct(a, b, d, N)
    via_strata = CoeffSeq([combine_strata(a, b, d, n) for n in range(1, N + 1)])
    agree = via_log == via_direct == via_strata
    payload = {
        "order": N,
        "log": [c.to_json() for c in via_log.entries],
        "direct": [c.to_json() for c in via_direct.entries],
        "strata": [c.to_json() for c in via_strata.entries],
        "agree": agree,
    }
    lines = [f"c_{n} = {c}" for n, c in enumerate(via_log.entries, start=1)]
    lines.append(f"routes agree: {agree}")
    _emit(payload, lines, args.format, out)
    return 0 if agree else 1


def cmd_predict(args, out) -> int:
    X, K, L = _space_and_bundles(args)
    s = predicted_series(X, K, L, args.order)
    closed = predicted_closed_form(X, K, L, args.order)
    payload = {"space": describe_space(X), "series": s.to_json(),
               "closed_form": closed.to_json(), "agree": s == closed}
    lines = _series_lines("predicted", s) + [f"closed form agrees: {s == closed}"]
    _emit(payload, lines, args.format, out)
    return 0 if s == closed else 1


def _parse_spec(text):
    if text is None:
        return None
    vals = _int_list(text)
    if len(vals) != 2:
        raise InputError("--spec expects two integers alpha,beta")
    return Specialization(*vals)


def cmd_hilb(args, out) -> int:
    S = parse_surface(args.surface)
    K = parse_bundle(args.K, S) if args.K else ToricLineBundle.trivial(S)
    L = parse_bundle(args.L, S) if args.L else ToricLineBundle.trivial(S)
    spec = _parse_spec(args.spec) or find_specialization(S, args.order)
    s = hilb_chi_series(S, K, L, args.order, spec)
    counts = [len(enumerate_fixed_points(S, n)) for n in range(args.order + 1)]
    payload = {"series": s.to_json(), "specialization": spec.to_json(),
               "fixed_points": counts, "surface": describe_space(S)}
    lines = _series_lines("chi", s) + [f"specialization: {spec.to_json()}",
                                       f"fixed points per n: {counts}"]
    _emit(payload, lines, args.format, out)
    return 0


def _report_out(report, args, out) -> int:
    payload = report.to_json(include_timing=not args.no_timing)
    lines = (_series_lines("lhs", report.lhs) + _series_lines("rhs", report.rhs)
             + [f"residual zero: {report.residual.is_zero()}",
                f"verdict: {'PASS' if report.passed else 'FAIL'}"])
    _emit(payload, lines, args.format, out)
    return 0 if report.passed else 1


def cmd_check_conjecture(args, out) -> int:
    S = parse_surface(args.surface)
    K = parse_bundle(args.K, S) if args.K else ToricLineBundle.trivial(S)
    L = parse_bundle(args.L, S) if args.L else ToricLineBundle.trivial(S)
    return _report_out(verify_conjecture_surface(S, K, L, args.order, _parse_spec(args.spec)),
                       args, out)


def cmd_check_degeneration(args, out) -> int:
    S = parse_surface(args.surface)
    if not 0 <= args.chart < S.n_rays:
        raise InputError(f"chart index must lie in [0, {S.n_rays})")
    K0 = parse_bundle(args.K0, S) if args.K0 else ToricLineBundle.trivial(S)
    L0 = parse_bundle(args.L0, S) if args.L0 else ToricLineBundle.trivial(S)
    sc = make_blowup_scenario(S, args.chart, K0, args.cK, L0, args.cL)
    return _report_out(verify_inclusion_exclusion(sc, args.order), args, out)


def cmd_generators(args, out) -> int:
    entries = generator_report(args.dim, args.order)
    payload = {"dim": args.dim, "count": len(entries), "generators": [
        {"space": X.to_json(), "K": {"m": list(K)}, "L": {"m": list(L)}, "series": s.to_json()}
        for (X, K, L), s in entries
    ]}
    lines = [f"{len(entries)} generators in dimension {args.dim}"]
    for (X, K, L), s in entries:
        lines.append(f"P^{list(X.lam)}  K={list(K)}  L={list(L)}  Q^1: {s.coeffs[1] if s.order else ''}")
    _emit(payload, lines, args.format, out)
    return 0


# --- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    default_mode = os.environ.get("TAUTCHI_OUTPUT", "json")
    if default_mode not in ("json", "text"):
        default_mode = "json"
    p = argparse.ArgumentParser(prog="tautchi", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "text"), default=default_mode)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("combine", help="solve the inclusion-exclusion system three ways")
    c.add_argument("--a", required=True)
    c.add_argument("--b", required=True)
    c.add_argument("--d", required=True)
    c.add_argument("--order", type=_nonneg, required=True)
    c.set_defaults(func=cmd_combine)

    def space_args(sp, surface_required=True):
        sp.add_argument("--surface", required=surface_required)
        sp.add_argument("--K")
        sp.add_argument("--L")
        sp.add_argument("--order", type=_nonneg, required=True)

    pr = sub.add_parser("predict", help="predicted series and its closed form")
    space_args(pr, surface_required=False)
    pr.add_argument("--lambda", dest="lam", help="factor dimensions of a product of projective spaces")
    pr.set_defaults(func=cmd_predict)

    h = sub.add_parser("hilb", help="localized series on Hilb^n of a toric surface")
    space_args(h)
    h.add_argument("--spec", help="explicit specialization alpha,beta")
    h.set_defaults(func=cmd_hilb)

    cc = sub.add_parser("check-conjecture", help="compare localization with the prediction")
    space_args(cc)
    cc.add_argument("--spec")
    cc.add_argument("--no-timing", action="store_true")
    cc.set_defaults(func=cmd_check_conjecture)

    cd = sub.add_parser("check-degeneration", help="inclusion-exclusion on a blow-up degeneration")
    cd.add_argument("--surface", required=True)
    cd.add_argument("--chart", type=_nonneg, default=0)
    cd.add_argument("--K0")
    cd.add_argument("--cK", type=int, default=0)
    cd.add_argument("--L0")
    cd.add_argument("--cL", type=int, default=0)
    cd.add_argument("--order", type=_nonneg, required=True)
    cd.add_argument("--no-timing", action="store_true")
    cd.set_defaults(func=cmd_check_degeneration)

    g = sub.add_parser("generators", help="predicted series of the cobordism generators")
    g.add_argument("--dim", type=_positive, required=True)
    g.add_argument("--order", type=_nonneg, required=True)
    g.set_defaults(func=cmd_generators)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, ValueError, KeyError, json.JSONDecodeError) as exc:
        err.write(f"tautchi: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
