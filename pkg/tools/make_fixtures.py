"""Regenerate the bundled field fixtures without network access.

Ground truth comes from PARI/GP (through cypari), which shares no code with
the classifier:

  defining polynomial  polredabs, which is also the canonical form used for
                       de-duplication
  field discriminant   nfdisc
  Galois group         polgalois with the nTk numbering switched on
  CM flag              totally imaginary with a totally real subfield of half
                       the degree (nfsubfields + polsturm)
  quadratic subfields  nfsubfields(f, 2), each reduced by polredabs

Candidate polynomials come from several families built with sympy.

Usage: python tools/make_fixtures.py [--per-label 50] [--seed 1]
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys
import time
from pathlib import Path

import mpmath
import sympy
from cypari import pari
from sympy import Poly, resultant, symbols

from cmfields.lmfdb import LmfdbRecord, serialize
from cmfields.transitive import ADMISSIBLE_SEXTIC

X, Y = symbols("x y")
OUT = Path(__file__).resolve().parents[1] / "src" / "cmfields" / "data" / "fixtures"

NAMED_FIELDS = [
    ("4.0.229.1", [1, -1, 0, 0, 1]),
    ("6.0.14283.1", [1, -1, 1, -2, 1, 0, 1]),
    ("6.0.29095.1", [1, -1, 3, -1, 3, -1, 1]),
    ("6.0.309123.1", [21, 12, 19, -5, -6, 1, 1]),
]

pari.default("new_galois_format", 1)
pari.allocatemem(2 * 10**9, silent=True)


# ---------------------------------------------------------------- oracles


def _gp(coeffs):
    return pari.Pol(list(reversed(coeffs)))


def _coeffs(pol) -> list[int]:
    return [int(c) for c in reversed(pari.Vec(pol))]


def oracle_reduce(coeffs) -> list[int]:
    return _coeffs(pari.polredabs(_gp(coeffs)))


def oracle_label(coeffs) -> str:
    g = pari.polgalois(_gp(coeffs))
    return f"{len(coeffs) - 1}T{int(g[2])}"


def oracle_disc(coeffs) -> int:
    return int(pari.nfdisc(_gp(coeffs)))


def oracle_real_roots(coeffs) -> int:
    return int(pari.polsturm(_gp(coeffs)))


def oracle_is_cm(coeffs) -> bool:
    n = len(coeffs) - 1
    if n % 2 or oracle_real_roots(coeffs):
        return False
    return any(int(pari.polsturm(sub[0])) == n // 2 for sub in pari.nfsubfields(_gp(coeffs), n // 2))


def oracle_quadratic_subfields(coeffs) -> list[list[int]]:
    if (len(coeffs) - 1) % 2:
        return []
    return sorted(_coeffs(pari.polredabs(sub[0])) for sub in pari.nfsubfields(_gp(coeffs), 2))


# ---------------------------------------------------------------- families


def _expand(expr) -> list[int]:
    return [int(c) for c in reversed(Poly(sympy.expand(expr), X).all_coeffs())]


def fam_random(rng, n, B):
    return [rng.randint(-B, B) for _ in range(n)] + [1]


def fam_even(rng, B):
    a, b, c = (rng.randint(-B, B) for _ in range(3))
    return [c, 0, b, 0, a, 0, 1]


def fam_even_cyclic(rng, B):
    m = rng.randint(-B, B)
    g = Y**3 - m * Y**2 - (m + 3) * Y - 1
    s = rng.randint(-B, B)
    g = sympy.expand(g.subs(Y, Y + s))
    return _expand(g.subs(Y, -(X**2)) * -1)


def _cubic(rng, B, cyclic=False):
    if cyclic:
        m = rng.randint(-B, B)
        return Y**3 - m * Y**2 - (m + 3) * Y - 1
    a, b, c = (rng.randint(-B, B) for _ in range(3))
    return Y**3 + a * Y**2 + b * Y + c


def fam_compositum(rng, B, cyclic=False):
    g = _cubic(rng, B, cyclic)
    d = rng.randint(1, 3 * B)
    return _expand(resultant(g, (X - Y) ** 2 + d, Y))


def fam_norm(rng, B, pure=False):
    d = rng.choice([1, 2, 3, 7, 11, 15, 5, 6])
    s = symbols("s")
    if pure:
        P = X**3 - (rng.randint(-B, B) + rng.randint(1, B) * s)
    else:
        P = X**3 + sum((rng.randint(-B, B) + rng.randint(-B, B) * s) * X**k for k in range(3))
    N = sympy.expand(P * P.subs(s, -s)).subs(s**2, -d)
    return _expand(N)


def fam_kummer(rng, B):
    a, b = rng.randint(-B, B), rng.randint(1, 3 * B)
    return [b, 0, 0, a, 0, 0, 1]


def fam_s3_closure(rng, B):
    """Cubic with negative discriminant joined with the square root of that discriminant."""
    while True:
        a, b, c = (rng.randint(-B, B) for _ in range(3))
        g = Y**3 + a * Y**2 + b * Y + c
        d = int(sympy.discriminant(g, Y))
        if d < 0:
            core = sympy.sqrt(-d).as_coeff_Mul()[1] ** 2  # squarefree part of -d
            return _expand(resultant(g, (X - Y) ** 2 + int(core), Y))


def fam_kummer_eisenstein(rng, B):
    """x^3 - alpha for alpha in Z[sqrt -3], normed down to Q."""
    s = symbols("s")
    P = X**3 - (rng.randint(-B, B) + rng.randint(1, B) * s)
    return _expand(sympy.expand(P * P.subs(s, -s)).subs(s**2, -3))


def fam_even_square_norm(rng, B):
    """g(x^2) with -g(0) disc(g) a square, which cuts C2 wr S3 down to the odd S4."""
    while True:
        a, b, c = (rng.randint(-B, B) for _ in range(3))
        d = int(sympy.discriminant(Y**3 + a * Y**2 + b * Y + c, Y))
        v = -c * d
        if v > 0 and sympy.integer_nthroot(v, 2)[1]:
            return [c, 0, b, 0, a, 0, 1]


def fam_cayley(rng, B, dps: int = 120):
    """Cayley's sextic resolvent of a quintic with exactly three real roots."""
    while True:
        q = [rng.randint(-B, B) for _ in range(5)] + [1]
        if q[0] == 0:
            continue
        with mpmath.workdps(dps):
            r = mpmath.polyroots(list(reversed(q)), maxsteps=500, extraprec=2 * dps)
            if sum(1 for z in r if abs(mpmath.im(z)) < mpmath.mpf(10) ** -30) != 3:
                continue
            vals = []
            for perm in itertools.permutations(range(1, 5)):
                cyc = (0,) + perm
                A = sum(r[cyc[i]] * r[cyc[(i + 1) % 5]] for i in range(5))
                Bv = sum(r[cyc[i]] * r[cyc[(i + 2) % 5]] for i in range(5))
                w = (A - Bv) ** 2
                if all(abs(w - v) > mpmath.mpf(10) ** -40 for v in vals):
                    vals.append(w)
            if len(vals) != 6:
                continue
            coeffs = [mpmath.mpc(1)]
            for v in vals:
                coeffs = [(coeffs[i - 1] if i else 0) - v * (coeffs[i] if i < len(coeffs) else 0) for i in range(len(coeffs) + 1)]
            out = [int(mpmath.nint(mpmath.re(c))) for c in coeffs]
        return out


MAKERS = [
    ({"6T16", "6T11", "6T13", "6T9"}, lambda rng: fam_random(rng, 6, rng.choice([2, 3, 5]))),
    ({"6T11", "6T3", "6T1"}, lambda rng: fam_even(rng, 6)),
    ({"6T6", "6T1"}, lambda rng: fam_even_cyclic(rng, rng.choice([4, 8, 16]))),
    ({"6T3"}, lambda rng: fam_compositum(rng, 4)),
    ({"6T1"}, lambda rng: fam_compositum(rng, rng.choice([4, 8, 16]), cyclic=True)),
    ({"6T13", "6T9"}, lambda rng: fam_norm(rng, 3)),
    ({"6T13", "6T9", "6T5"}, lambda rng: fam_norm(rng, 4, pure=True)),
    ({"6T9", "6T5", "6T2", "6T13"}, lambda rng: fam_kummer(rng, 6)),
    ({"6T2"}, lambda rng: fam_s3_closure(rng, 5)),
    ({"6T5"}, lambda rng: fam_kummer_eisenstein(rng, rng.choice([6, 12, 24]))),
    ({"6T8"}, lambda rng: fam_even_square_norm(rng, 12)),
    ({"6T14"}, lambda rng: fam_cayley(rng, 4)),
]


def sextic_candidates(rng, wanted):
    """Endless candidates, drawn only from families aimed at labels still short of their quota."""
    while True:
        open_makers = [m for aims, m in MAKERS if aims & wanted()]
        if not open_makers:
            return
        try:
            yield rng.choice(open_makers)(rng)
        except (mpmath.mp.NoConvergence, ValueError, ZeroDivisionError):
            continue


# ---------------------------------------------------------------- pipeline


def totally_imaginary(coeffs) -> bool:
    return oracle_real_roots(coeffs) == 0


class Collector:
    def __init__(self):
        self.records: dict[str, list[LmfdbRecord]] = {}
        self.seen: set[tuple[int, ...]] = set()
        self.counter = 0

    def add(self, coeffs, label: str | None = None, source: str = "generated", wanted=None) -> LmfdbRecord | None:
        red = oracle_reduce(coeffs)
        if tuple(red) in self.seen:
            return None
        gal = oracle_label(red)
        if wanted is not None and gal not in wanted:
            return None
        self.seen.add(tuple(red))
        n = len(red) - 1
        dk = oracle_disc(red)
        if label is None:
            self.counter += 1
            label = f"{n}.0.{abs(dk)}.g{self.counter}"
        rec = LmfdbRecord(
            label=label,
            coefficients=tuple(red),
            degree=n,
            r2=n // 2,
            galois_label=gal,
            is_cm=oracle_is_cm(red),
            abs_disc=abs(dk),
            subfields=tuple(tuple(q) for q in oracle_quadratic_subfields(red)),
            source=source,
        )
        self.records.setdefault(gal, []).append(rec)
        return rec


def _take(col: Collector, per_label: int) -> list[LmfdbRecord]:
    out = []
    for t in sorted(col.records, key=lambda s: int(s[2:])):
        out.extend(col.records[t][:per_label])
    return out


def sextic_fixtures(per_label: int, seed: int, max_seconds: float, checkpoint=None) -> list[LmfdbRecord]:
    rng = random.Random(seed)
    col = Collector()
    targets = {f"6T{k}" for k in ADMISSIBLE_SEXTIC}
    start = last = time.time()

    def wanted():
        return {t for t in targets if len(col.records.get(t, [])) < per_label}

    for coeffs in sextic_candidates(rng, wanted):
        now = time.time()
        if now - start > max_seconds:
            break
        if now - last > 120:
            last = now
            print("progress:", {t: len(col.records.get(t, [])) for t in sorted(targets)}, f"{now - start:.0f}s", file=sys.stderr)
            if checkpoint is not None:
                checkpoint.write_text(serialize(_take(col, per_label)))
        if len(coeffs) != 7 or coeffs[0] == 0 or max(map(abs, coeffs)) > 10**15:
            continue
        try:
            if not pari.polisirreducible(_gp(coeffs)) or not totally_imaginary(coeffs):
                continue
            col.add(coeffs, wanted=wanted())
        except Exception as exc:  # oracle failures: skip the candidate
            print(f"skip {coeffs}: {type(exc).__name__}", file=sys.stderr)
    counts = {t: len(col.records.get(t, [])) for t in sorted(targets, key=lambda s: int(s[2:]))}
    print("sextic counts:", counts, f"{time.time() - start:.0f}s", file=sys.stderr)
    return _take(col, per_label)


def quartic_census(B: int) -> list[LmfdbRecord]:
    """Totally imaginary quartic fields from monic quartics with coefficients in [-B, B]."""
    col = Collector()
    for c in itertools.product(range(-B, B + 1), repeat=4):
        coeffs = list(c) + [1]
        if coeffs[0] == 0:
            continue
        if not pari.polisirreducible(_gp(coeffs)) or not totally_imaginary(coeffs):
            continue
        try:
            col.add(coeffs)
        except Exception as exc:
            print(f"skip {coeffs}: {type(exc).__name__}", file=sys.stderr)
    recs = [r for rs in col.records.values() for r in rs]
    return sorted(recs, key=lambda r: (r.abs_disc, r.coefficients))


def named_fixtures() -> list[LmfdbRecord]:
    col = Collector()
    out = []
    for label, coeffs in NAMED_FIELDS:
        rec = col.add(coeffs, label=label, source="reconstructed")
        assert rec is not None and rec.abs_disc == int(label.split(".")[2]), label
        out.append(rec)
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--per-label", type=int, default=50)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--quartic-box", type=int, default=5)
    ap.add_argument("--max-seconds", type=float, default=3600)
    ap.add_argument("--only", choices=["named", "sextic", "quartic"])
    args = ap.parse_args(argv)
    OUT.mkdir(parents=True, exist_ok=True)
    if args.only in (None, "named"):
        (OUT / "named_fields.jsonl").write_text(serialize(named_fixtures()))
    if args.only in (None, "sextic"):
        (OUT / "sextic_by_label.jsonl").write_text(serialize(sextic_fixtures(args.per_label, args.seed, args.max_seconds, OUT / "sextic_by_label.jsonl")))
    if args.only in (None, "quartic"):
        (OUT / "quartic_census.jsonl").write_text(serialize(quartic_census(args.quartic_box)))
    for p in sorted(OUT.glob("*.jsonl")):
        print(p.name, sum(1 for _ in p.open()), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
