"""Command-line front end.

Exit status: 0 success, 1 well-formed input for which the checked property
is false, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, channel, construct, search
from .validate import Code, is_cac, is_scac, leave

OK, PROPERTY_FALSE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _emit_tsv(header, rows) -> None:
    sys.stdout.write("\t".join(header) + "\n")
    for row in rows:
        sys.stdout.write("\t".join("" if v is None else str(v) for v in row) + "\n")


def _load_code(path: str) -> Code:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return Code.from_json(text)
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def cmd_verify(args) -> int:
    code = _load_code(args.file)
    report = is_scac(code) if args.mode == "scac" else is_cac(code)
    _emit(report.to_dict())
    ok = report.is_scac if args.mode == "scac" else report.is_cac
    return OK if ok else PROPERTY_FALSE


def cmd_double(args) -> int:
    code = _load_code(args.file)
    try:
        doubled = construct.double_code(code)
    except construct.NotACAC as exc:
        print(f"double: {exc}", file=sys.stderr)
        return PROPERTY_FALSE
    _emit(doubled.to_dict())
    return OK


_BOUND_COLS = ["provenance", "kind", "lower", "upper", "applicable", "note"]


def cmd_bound(args) -> int:
    L = args.L
    results = []
    if L % 2 == 0:
        results += [("M_S", r) for r in bounds.ms_results(L)]
    results += [("M", r) for r in bounds.m_cac_results(L)]
    if L >= 3 and L % 2:
        value, _ = construct.m_e_with_witness(L)
        results.append(("M^e", bounds.BoundResult.exact(value, "M^e(L,3) matching formula")))
    if not args.all:
        results = [(q, r) for q, r in results if r.applicable]
    if args.tsv:
        _emit_tsv(["quantity", *_BOUND_COLS], [[q, *(r.to_dict()[c] for c in _BOUND_COLS)] for q, r in results])
    else:
        summary = bounds.ms_exact(L).to_dict() if L % 2 == 0 else bounds.m_cac_exact(L).to_dict()
        _emit({"L": L, "results": [{"quantity": q, **r.to_dict()} for q, r in results], "summary": summary})
    return OK


def cmd_search(args) -> int:
    try:
        outcome = search.max_code(
            args.L,
            args.weight,
            args.mode,
            budget=args.budget,
            equi_only=args.equi_only,
            workers=args.threads,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(outcome.to_dict(stats=args.stats))
    if not outcome.proven_optimal:
        print("search: node budget exhausted; optimum is only a lower bound", file=sys.stderr)
    return OK


def cmd_equi(args) -> int:
    L = args.L
    if L < 3 or L % 2 == 0:
        raise UsageError(f"equi needs odd L >= 3, got {L}")
    graph = construct.build_graph(L)
    if args.tsv:
        _emit_tsv(["L", "cycle_index", "vertices"], ([r[0], r[1], " ".join(map(str, r[2:]))] for r in graph.tsv_rows()))
        return OK
    value, witness = construct.m_e_with_witness(L)
    lv = leave(witness)
    _emit(
        {
            "L": L,
            "cycles": [list(c) for c in graph.cycles],
            "n_odd": graph.n_odd,
            "m_e": value,
            "witness": witness.to_dict(),
            "leave": list(lv.residues),
            "tight": lv.tight,
            "tight_exists": construct.tight_exists(L),
            "leave2_exists": construct.leave2_exists(L),
        }
    )
    return OK


def _parse_offsets(text: str):
    try:
        return [tok.strip() for tok in text.split(",") if tok.strip()]
    except AttributeError:
        raise UsageError("bad --offsets") from None


def cmd_simulate(args) -> int:
    code = _load_code(args.file)
    if args.offsets is not None:
        try:
            report = channel.simulate(code, _parse_offsets(args.offsets))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit(report.to_dict())
        return OK
    victims = [args.victim] if args.victim is not None else range(len(code))
    out = []
    for v in victims:
        if not 0 <= v < len(code):
            raise UsageError(f"victim {v} out of range")
        if args.sample:
            if args.seed is None:
                raise UsageError("--sample requires --seed")
            wc = channel.sampled_sigma(code, v, args.sample, args.seed)
        else:
            if len(code) > args.max_users:
                raise UsageError(f"{len(code)} users exceeds --max-users {args.max_users}; use --sample")
            wc = channel.worst_case(code, v)
        out.append(
            {"victim": v, "sigma": wc.sigma, "offsets": [float(x) for x in wc.offsets], "exact": wc.exact}
        )
    _emit({"worst_case": out})
    return OK if all(r["sigma"] >= 1 for r in out) else PROPERTY_FALSE


def cmd_catalog(args) -> int:
    if args.lo > args.hi:
        raise UsageError("--from must not exceed --to")
    rows = bounds.catalog(args.lo, args.hi)
    oracle = {}
    if args.search_upto:
        for r in rows:
            if r["L"] <= args.search_upto:
                oracle[r["L"]] = search.max_code(r["L"], 3, search.SCAC).optimum
    for r in rows:
        r["search"] = oracle.get(r["L"])
    if args.figure:
        from .plotting import plot_catalog

        plot_catalog(rows, args.figure, oracle=oracle or None)
    cols = ["L", "lower", "upper", "exact", "provenance"] + (["search"] if oracle else [])
    if args.json:
        _emit([{c: r[c] for c in cols} for r in rows])
    else:
        _emit_tsv(cols, ([("yes" if r[c] else "no") if c == "exact" else r[c] for c in cols] for r in rows))
    return OK


def cmd_audit(args) -> int:
    lengths = args.lengths or [12, 16, 20, 24, 28, 32]
    rows = bounds.audit_4t_table(lengths, oracle=lambda L: search.max_code(L, 3, search.CAC).optimum)
    _emit(rows)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scac", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check a code file for the CAC or SCAC property")
    s.add_argument("--mode", choices=["cac", "scac"], default="scac")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("double", help="map a CAC of length L to an SCAC of length 2L")
    s.add_argument("file")
    s.set_defaults(func=cmd_double)

    s = sub.add_parser("bound", help="closed-form values and bounds for length L")
    s.add_argument("L", type=_positive_int)
    s.add_argument("--all", action="store_true", help="include statements whose hypotheses fail")
    s.add_argument("--tsv", action="store_true")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("search", help="exact maximum code size by branch and bound")
    s.add_argument("L", type=_positive_int)
    s.add_argument("--mode", choices=["cac", "scac"], default="scac")
    s.add_argument("--weight", type=_positive_int, default=3)
    s.add_argument("--budget", type=_positive_int, default=search.DEFAULT_BUDGET)
    s.add_argument("--equi-only", action="store_true")
    s.add_argument("--threads", type=_positive_int, default=search.default_workers())
    s.add_argument("--stats", action="store_true", help="include node counts")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("equi", help="G(L) cycles, M^e(L,3) and a matching witness (odd L)")
    s.add_argument("L", type=_positive_int)
    s.add_argument("--tsv", action="store_true", help="dump the cycle decomposition")
    s.set_defaults(func=cmd_equi)

    s = sub.add_parser("simulate", help="run the asynchronous collision channel")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--offsets", help="comma-separated offsets in slots, multiples of 0.5")
    g.add_argument("--worst-case", action="store_true")
    s.add_argument("--victim", type=int)
    s.add_argument("--sample", type=_positive_int, help="random offset samples instead of exact search")
    s.add_argument("--seed", type=int)
    s.add_argument("--max-users", type=_positive_int, default=4)
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("catalog", help="table of M_S(L,3) brackets over a range of L")
    s.add_argument("--from", dest="lo", type=_positive_int, required=True)
    s.add_argument("--to", dest="hi", type=_positive_int, required=True)
    s.add_argument("--json", action="store_true")
    s.add_argument("--figure", help="also render the table to this image file")
    s.add_argument("--search-upto", type=int, default=0, help="add exact search values up to this L")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("audit", help="integrality audit of the M(4t,3) table against search")
    s.add_argument("lengths", nargs="*", type=_positive_int)
    s.set_defaults(func=cmd_audit)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"scac {args.command}: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
