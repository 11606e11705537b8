"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .census import CensusError, QuarticDensities, bayes_posterior, default_grid, empirical_ratio, summary, to_csv
from .lmfdb import LmfdbError, QuerySpec, fetch_all, load_fixtures
from .permgroup import GroupError, dihedral_group, subgroup_lattice, symmetric_group
from .polynomial import PolynomialError, discriminant, parse_polynomial

DOMAIN_ERRORS = (PolynomialError, GroupError, CensusError, LmfdbError, ValueError, KeyError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    stdout: str
    stderr: str = ""


def _table(rows: Sequence[Sequence], header: Sequence[str]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True) if args.json else text)


# ------------------------------------------------------------------ commands


def cmd_classify(args) -> int:
    from .numfield import classify_field

    res = classify_field(parse_polynomial(args.poly))
    rows = [
        ("polynomial", res.polynomial),
        ("signature", tuple(res.signature)),
        ("discriminant", res.discriminant),
        ("galois", f"{res.label} ({res.label.name}) via {res.galois.method}, {res.galois.primes_used} primes"),
        ("category", res.category.value),
    ]
    if res.cubic_signature:
        rows.append(("cubic subfield", res.cubic_signature))
    for poly, kind in res.subfields:
        rows.append(("subfield", f"{poly} [{kind}]"))
    for note in res.notes:
        rows.append(("note", note))
    _emit(args, res.to_dict(), _table(rows, ("field", "value")))
    return 0


def cmd_galois(args) -> int:
    from .numfield import identify_galois

    gal = identify_galois(parse_polynomial(args.poly), prime_budget=args.primes)
    rows = [(code, why) for code, why in gal.candidates_eliminated]
    text = f"{gal.label} ({gal.label.name})  method={gal.method}  primes={gal.primes_used}\n"
    text += _table(rows, ("eliminated", "reason"))
    _emit(args, gal.to_dict(), text)
    return 0


def cmd_signature(args) -> int:
    from .numfield import signature

    f = parse_polynomial(args.poly)
    sig = signature(f)
    d = discriminant(f)
    payload = {"polynomial": str(f), "r1": sig.r1, "r2": sig.r2, "discriminant": str(d)}
    _emit(args, payload, f"{f}: (r1, r2) = ({sig.r1}, {sig.r2}), disc = {d}")
    return 0


def _named_group(name: str):
    from .transitive import reference_group

    key = name.lower()
    if key == "d4":
        return dihedral_group(4)
    if key == "d6":
        return dihedral_group(6)
    if key == "s4":
        return symmetric_group(4)
    return reference_group(name)


def cmd_lattice(args) -> int:
    lat = subgroup_lattice(_named_group(args.group))
    if args.dot:
        print(lat.to_dot(args.group.lower()))
    elif args.json:
        print(lat.to_json())
    else:
        rows = [
            (i, K.order, c, " ".join(str(g) for g in K.generators) or "()")
            for i, (K, c) in enumerate(zip(lat.nodes, lat.class_ids))
        ]
        print(_table(rows, ("node", "order", "class", "generators")))
        print(f"{len(lat.nodes)} subgroups, {len(lat.edges)} covering edges")
    return 0


def cmd_theorem_check(args) -> int:
    from .casework import verify_all, verify_case_analysis

    reports = verify_all() if args.all or not args.label else [verify_case_analysis(args.label)]
    payload = {"passed": all(r.passed for r in reports), "reports": [r.to_dict() for r in reports]}
    rows = [(r.label, len(r.checks) - len(r.failures()), len(r.checks), "pass" if r.passed else "FAIL") for r in reports]
    text = _table(rows, ("label", "passed", "checks", "status"))
    for r in reports:
        for c in r.failures():
            text += f"\n{r.label}: {c.name}: expected {c.expected!r}, observed {c.observed!r}"
    _emit(args, payload, text)
    return 0 if payload["passed"] else 1


def cmd_bayes(args) -> int:
    pub = QuarticDensities.published()
    d = QuarticDensities(
        args.pD4 if args.pD4 is not None else pub.p_D4,
        args.pS4 if args.pS4 is not None else pub.p_S4,
        args.pTIS4 if args.pTIS4 is not None else pub.p_TI_given_S4,
        args.pTID4 if args.pTID4 is not None else pub.p_TI_given_D4,
    )
    res = bayes_posterior(d)
    s4, cm = res.rounded
    _emit(args, res.to_dict(), f"P(S4 | totally imaginary) = {s4}\nP(CM-type)                = {cm}")
    return 0


def _census_records(args):
    if args.offline:
        name = "quartic_census" if args.degree == 4 else "sextic_by_label"
        recs = load_fixtures(name)
    else:
        q = QuerySpec(degree=args.degree, signature=(0, args.degree // 2), max_abs_disc=args.xmax, page_size=1000)
        recs = fetch_all(q, allow_network=False)
    return [r for r in recs if r.degree == args.degree and 2 * r.r2 == r.degree and r.abs_disc <= args.xmax]


def cmd_census(args) -> int:
    recs = _census_records(args)
    grid = default_grid(recs, args.points) or [args.xmax]
    counts = empirical_ratio(recs, grid)
    if args.csv:
        print(to_csv(counts), end="")
    else:
        rows = [(c.bound, c.n_TI, c.n_CM, "undefined" if c.ratio is None else f"{float(c.ratio):.4f}") for c in counts]
        text = _table(rows, ("X", "n_TI", "n_CM", "ratio")) + "\n(finite-X counts, not asymptotic limits)"
        _emit(args, summary(counts, args.degree), text)
    return 0


def cmd_fetch(args) -> int:
    sig = (0, args.degree // 2) if args.totally_imaginary else None
    q = QuerySpec(
        degree=None if args.label else args.degree,
        signature=sig,
        galois_label=args.galois,
        cm=args.cm,
        max_abs_disc=args.max_disc,
        label=args.label,
        page_size=args.page_size,
    )
    recs = fetch_all(q, allow_network=True, max_pages=args.pages)
    _emit(args, {"fetched": len(recs)}, f"fetched {len(recs)} records into the cache")
    return 0


# ------------------------------------------------------------------ parser


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cmfields", description="CM-type classification of quartic and sextic fields")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("classify", cmd_classify, "classify a totally imaginary quartic or sextic field")
    sp.add_argument("--poly", required=True)
    sp = add("galois", cmd_galois, "identify the Galois group")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--primes", type=int, default=200)
    sp = add("signature", cmd_signature, "signature and polynomial discriminant")
    sp.add_argument("--poly", required=True)
    sp = add("lattice", cmd_lattice, "subgroup lattice as a table, JSON or DOT")
    sp.add_argument("--group", required=True, help="d4, d6, s4 or a transitive label such as 6T3")
    sp.add_argument("--dot", action="store_true")
    sp = add("theorem-check", cmd_theorem_check, "re-derive the case analysis for sextic labels")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--label")
    g.add_argument("--all", action="store_true")
    sp = add("bayes", cmd_bayes, "posterior share of S4 fields among totally imaginary quartics")
    for flag in ("--pD4", "--pS4", "--pTIS4", "--pTID4"):
        sp.add_argument(flag, type=str, default=None)
    sp = add("census", cmd_census, "empirical CM-type ratios from cached or bundled records")
    sp.add_argument("--degree", type=int, choices=(4, 6), required=True)
    sp.add_argument("--xmax", type=int, required=True)
    sp.add_argument("--offline", action="store_true", help="use bundled fixtures only")
    sp.add_argument("--points", type=int, default=10)
    sp.add_argument("--csv", action="store_true")
    sp = add("fetch", cmd_fetch, "download records into the cache (uses the network)")
    sp.add_argument("--degree", type=int, choices=(4, 6))
    sp.add_argument("--label")
    sp.add_argument("--galois")
    sp.add_argument("--cm", type=_bool)
    sp.add_argument("--max-disc", type=int)
    sp.add_argument("--totally-imaginary", action="store_true")
    sp.add_argument("--page-size", type=int, default=100)
    sp.add_argument("--pages", type=int, default=10)
    return p


def run(argv: Sequence[str]) -> CommandOutcome:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            args = build_parser().parse_args(list(argv))
            if args.command == "fetch" and not (args.degree or args.label):
                raise UsageError("fetch needs --degree or --label")
            code = args.fn(args)
        except UsageError as exc:
            print(exc, file=sys.stderr)
            code = 2
        except SystemExit as exc:  # --help
            code = 0 if exc.code in (0, None) else 2
        except DOMAIN_ERRORS as exc:
            as_json = "--json" in argv
            msg = {"error": type(exc).__name__, "message": str(exc)}
            print(json.dumps(msg) if as_json else f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            code = 1
    return CommandOutcome(code, out.getvalue(), err.getvalue())


def main(argv: Sequence[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.stdout)
    sys.stderr.write(res.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
