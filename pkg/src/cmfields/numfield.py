"""Number-field invariants of a defining polynomial, and field classification.

The decision path is exact: discriminants and Sturm counts are integer
computations, and every numerically located object (a factor of ``f``, a
block polynomial of the two-set resolvent) is rounded and then confirmed by
exact division before it is used.

Galois groups are identified by Frobenius cycle types.  Types never seen in
a candidate group eliminate it outright; beyond that the candidates are
ranked by Chebotarev likelihood and any candidate trailing the best by more
than ``margin`` nats is dropped.  The chance that the true group is ever
dropped this way is below ``exp(-margin)`` (Ville's inequality), so the
identification is probabilistic, not a proof.  What the sieve cannot settle
is passed to the factorization pattern of the two-set resolvent.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import mpmath
import numpy as np

from .classifier import (
    Category,
    FieldTypeVerdict,
    classify_quartic,
    classify_sextic,
    needs_cubic_signature,
)
from .permgroup import CycleType, parts_parity
from .polynomial import (
    IntegerPolynomial,
    PolynomialError,
    count_real_roots,
    discriminant,
    factor_degrees_mod_p,
    interpolate,
    is_square,
    parse_polynomial,
    polynomial_sqrt,
    primes,
    resultant,
)
from .transitive import (
    TransitiveLabel,
    all_labels,
    cycle_type_distribution,
    reference_group,
)
from .permgroup import intermediate_subgroups

DEFAULT_PRIME_BUDGET = 200
DEFAULT_MIN_PRIMES = 50
DEFAULT_MARGIN = 20.0
MAX_TSCHIRNHAUS = 20


class FieldError(ValueError):
    pass


class GaloisAmbiguityError(FieldError):
    pass


class ResolventError(FieldError):
    pass


def as_polynomial(f) -> IntegerPolynomial:
    if isinstance(f, IntegerPolynomial):
        return f
    if isinstance(f, str):
        return parse_polynomial(f)
    return IntegerPolynomial(tuple(f))


# --------------------------------------------------------------------------
# signature


@dataclass(frozen=True)
class SignatureResult:
    r1: int
    r2: int

    @property
    def degree(self) -> int:
        return self.r1 + 2 * self.r2

    def as_tuple(self) -> tuple[int, int]:
        return (self.r1, self.r2)

    def __iter__(self):
        return iter((self.r1, self.r2))


def signature(f) -> SignatureResult:
    """``(r1, r2)`` by Sturm's theorem over the whole real line."""
    f = as_polynomial(f)
    if f.degree < 1:
        raise FieldError("signature needs degree at least 1")
    if discriminant(f) == 0:
        raise FieldError(f"{f} is not squarefree")
    r1 = count_real_roots(f)
    return SignatureResult(r1, (f.degree - r1) // 2)


# --------------------------------------------------------------------------
# numerics


def _mignotte_digits(f: IntegerPolynomial) -> int:
    norm = math.isqrt(sum(a * a for a in f.coeffs)) + 1
    bound = (2 ** f.degree) * norm * abs(f.lc)
    return len(str(bound))


def numeric_roots(f: IntegerPolynomial, dps: int | None = None) -> list:
    """All complex roots of ``f`` at ``dps`` decimal digits."""
    dps = dps or max(40, 2 * _mignotte_digits(f) + 20)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(a) for a in f.descending()]
        steps = 200
        while True:
            try:
                roots = mpmath.polyroots(coeffs, maxsteps=steps, extraprec=2 * dps)
                break
            except mpmath.libmp.libhyper.NoConvergence:
                if steps > 20000:
                    raise FieldError(f"root finding did not converge for {f}")
                steps *= 4
        return [mpmath.mpc(r) for r in roots]


def _round_poly(values: Sequence, lead: int, tol) -> IntegerPolynomial | None:
    """``lead * prod(x - v)`` rounded to integers, or ``None`` if not close to integral."""
    coeffs = [mpmath.mpc(lead)]
    for v in values:
        nxt = [mpmath.mpc(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= c * v
        coeffs = nxt
    out = []
    for c in coeffs:
        if abs(c.imag) > tol:
            return None
        n = int(mpmath.nint(c.real))
        if abs(c.real - n) > tol:
            return None
        out.append(n)
    return IntegerPolynomial(tuple(out))


# --------------------------------------------------------------------------
# irreducibility


def _subset_sums(parts: Sequence[int]) -> set[int]:
    sums = {0}
    for d in parts:
        sums |= {s + d for s in sums}
    return sums


def possible_factor_degrees(f: IntegerPolynomial, n_primes: int = 40) -> set[int]:
    """Degrees a rational factor of ``f`` could have, by intersecting patterns mod good primes."""
    n = f.degree
    disc = discriminant(f)
    possible = set(range(1, n))
    used = 0
    for p in primes():
        if used >= n_primes or not possible:
            break
        if f.lc % p == 0 or disc % p == 0:
            continue
        used += 1
        possible &= _subset_sums(factor_degrees_mod_p(f, p))
    return possible


def find_rational_factor(f: IntegerPolynomial, degrees: Sequence[int] | None = None) -> IntegerPolynomial | None:
    """A proper factor of ``f`` in ``Z[x]``, found by rounding products of numeric roots."""
    n = f.degree
    degrees = sorted(d for d in (degrees or range(1, n)) if 1 <= d <= n // 2)
    if not degrees:
        return None
    dps = max(40, 2 * _mignotte_digits(f) + 20)
    roots = numeric_roots(f, dps)
    with mpmath.workdps(dps):
        tol = mpmath.mpf(10) ** (-(dps // 3))
        for d in degrees:
            for subset in itertools.combinations(range(n), d):
                g = _round_poly([roots[i] for i in subset], f.lc, tol)
                if g is None:
                    continue
                g = g.primitive_part()
                if g.degree == d and g.divides(f):
                    return g
    return None


def is_irreducible(f) -> bool:
    """Irreducibility over the rationals.

    Certified by an irreducible reduction modulo some prime, else by
    incompatible factor-degree patterns across primes, else by an
    exhaustive search for factors through rounded root products.
    """
    f = as_polynomial(f)
    if f.degree < 1:
        raise FieldError("constant polynomials are neither reducible nor irreducible")
    if f.degree == 1:
        return True
    f = f.primitive_part()
    if discriminant(f) == 0:
        return False
    disc = discriminant(f)
    possible = set(range(1, f.degree))
    used = 0
    for p in primes():
        if used >= 40:
            break
        if f.lc % p == 0 or disc % p == 0:
            continue
        used += 1
        degs = factor_degrees_mod_p(f, p)
        if len(degs) == 1:
            return True
        possible &= _subset_sums(degs)
        if not possible:
            return True
    return find_rational_factor(f, sorted(possible)) is None


# --------------------------------------------------------------------------
# Frobenius cycle types


def frobenius_stream(f: IntegerPolynomial) -> Iterator[tuple[int, tuple[int, ...]]]:
    """``(p, factor degrees of f mod p)`` for every prime not dividing ``lc(f) disc(f)``."""
    disc = discriminant(f)
    for p in primes():
        if f.lc % p == 0 or disc % p == 0:
            continue
        yield p, factor_degrees_mod_p(f, p)


def frobenius_patterns(f, prime_budget: int = DEFAULT_PRIME_BUDGET) -> set[CycleType]:
    """Cycle types seen among the first ``prime_budget`` good primes."""
    f = as_polynomial(f)
    out = set()
    for _, parts in itertools.islice(frobenius_stream(f), prime_budget):
        out.add(CycleType(parts, parts_parity(parts)))
    return out


@lru_cache(maxsize=None)
def pair_orbit_sizes(code) -> tuple[int, ...]:
    """Orbit lengths of a reference group on unordered pairs of points."""
    G = reference_group(code)
    n = G.degree
    pairs = {frozenset(p) for p in itertools.combinations(range(n), 2)}
    sizes = []
    while pairs:
        start = pairs.pop()
        orbit = {start}
        frontier = [start]
        while frontier:
            s = frontier.pop()
            for g in G.generators:
                t = frozenset(g(i) for i in s)
                if t not in orbit:
                    orbit.add(t)
                    frontier.append(t)
        pairs -= orbit
        sizes.append(len(orbit))
    return tuple(sorted(sizes, reverse=True))


@lru_cache(maxsize=None)
def block_system_count(code, block_size: int = 2) -> int:
    """Number of block systems with blocks of the given size (subfields of degree ``n / block_size``)."""
    G = reference_group(code)
    H = G.stabilizer(0)
    return sum(1 for k in intermediate_subgroups(G, H) if k.group.order == block_size * H.order)


@dataclass(frozen=True)
class GaloisIdentification:
    label: TransitiveLabel
    method: str
    primes_used: int
    candidates_eliminated: tuple[tuple[str, str], ...]
    observed_types: tuple[tuple[tuple[int, ...], int], ...] = ()
    discriminant_is_square: bool = False
    resolvent_degrees: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "label": self.label.code,
            "name": self.label.name,
            "method": self.method,
            "primes_used": self.primes_used,
            "candidates_eliminated": [list(x) for x in self.candidates_eliminated],
            "observed_types": [[list(t), n] for t, n in self.observed_types],
            "discriminant_is_square": self.discriminant_is_square,
            "resolvent_degrees": list(self.resolvent_degrees) if self.resolvent_degrees else None,
        }


def identify_galois(
    f,
    prime_budget: int = DEFAULT_PRIME_BUDGET,
    min_primes: int = DEFAULT_MIN_PRIMES,
    margin: float = DEFAULT_MARGIN,
) -> GaloisIdentification:
    """Transitive label of the Galois group of an irreducible quartic or sextic."""
    f = as_polynomial(f)
    n = f.degree
    if n not in (4, 6):
        raise FieldError(f"Galois identification supports degrees 4 and 6, not {n}")
    if not is_irreducible(f):
        raise FieldError(f"{f} is reducible")
    disc = discriminant(f)
    square = is_square(disc)
    alive = {lab: 0.0 for lab in all_labels(n)}
    eliminated: list[tuple[str, str]] = []

    def drop(lab, why):
        del alive[lab]
        eliminated.append((lab.code, why))

    for lab in list(alive):
        if reference_group(lab).is_even() != square:
            drop(lab, "discriminant square test")
    dist = {lab: cycle_type_distribution(lab) for lab in alive}
    seen: Counter = Counter()
    used = 0
    for _, parts in frobenius_stream(f):
        used += 1
        seen[parts] += 1
        for lab in list(alive):
            q = dist[lab].get(parts, 0.0)
            if q == 0.0:
                drop(lab, f"cycle type {list(parts)} not realized")
            else:
                alive[lab] += math.log(q)
        if alive:
            best = max(alive.values())
            for lab in [lab for lab, ll in alive.items() if best - ll > margin]:
                drop(lab, f"likelihood deficit {best - alive[lab]:.1f} nats")
        if (len(alive) <= 1 and used >= min_primes) or used >= prime_budget:
            break
    method = "sieve"
    rdeg = None
    if len(alive) > 1:
        method = "sieve+resolvent"
        rdeg = resolvent_factor_degrees(f)
        for lab in list(alive):
            if pair_orbit_sizes(lab) != rdeg:
                drop(lab, f"two-set resolvent factors as {list(rdeg)}")
    if len(alive) != 1:
        left = sorted(lab.code for lab in alive)
        raise GaloisAmbiguityError(f"could not separate {left or 'any candidate'} for {f}")
    (lab,) = alive
    types = tuple(sorted(seen.items(), key=lambda kv: (-kv[1], kv[0])))
    return GaloisIdentification(lab, method, used, tuple(eliminated), types, square, rdeg)


def ambiguity_table(degree: int = 6) -> list[dict]:
    """Pairwise separability of the reference groups by Frobenius statistics.

    ``kl`` is the Kullback-Leibler divergence of cycle-type distributions
    (``None`` when the first group has a type the second lacks, so a single
    prime can separate them); ``needs_resolvent`` marks pairs whose
    distributions coincide so that only the resolvent can split them.
    """
    labs = all_labels(degree)
    out = []
    for a, b in itertools.permutations(labs, 2):
        if reference_group(a).is_even() != reference_group(b).is_even():
            continue
        pa, pb = cycle_type_distribution(a), cycle_type_distribution(b)
        if any(t not in pb for t in pa):
            kl = None
        else:
            kl = sum(q * math.log(q / pb[t]) for t, q in pa.items())
        out.append(
            {
                "true": a.code,
                "other": b.code,
                "same_type_set": set(pa) == set(pb),
                "kl": kl,
                "needs_resolvent": kl is not None and kl < 1e-12,
                "pair_orbits_differ": pair_orbit_sizes(a) != pair_orbit_sizes(b),
            }
        )
    return out


# --------------------------------------------------------------------------
# two-set resolvent


@dataclass(frozen=True)
class ResolventReport:
    """The monic polynomial with roots ``t_i + t_j`` (``i < j``).

    ``t`` runs over the roots of ``base``: the monic normalization of the
    input, after a Tschirnhaus change of variable ``t = x + k x^2`` when
    ``shift_used = k > 0`` was needed to make the pair sums distinct.
    """

    resolvent: IntegerPolynomial
    cubic_factors: tuple[tuple[IntegerPolynomial, SignatureResult], ...]
    shift_used: int
    base: IntegerPolynomial
    quadratic_factors: tuple[tuple[IntegerPolynomial, SignatureResult], ...] = ()

    def to_dict(self) -> dict:
        return {
            "resolvent": self.resolvent.to_list(),
            "degree": self.resolvent.degree,
            "shift_used": self.shift_used,
            "base": self.base.to_list(),
            "cubic_factors": [[str(p), list(s)] for p, s in self.cubic_factors],
            "quadratic_factors": [[str(p), list(s)] for p, s in self.quadratic_factors],
        }


def tschirnhaus(g: IntegerPolynomial, k: int) -> IntegerPolynomial:
    """Characteristic polynomial of ``t = x + k x^2`` over the roots of monic ``g``."""
    if k == 0:
        return g
    n = g.degree
    xs = list(range(-(n // 2), n - n // 2 + 1))
    vals = [resultant(g, IntegerPolynomial((y, -1, -k))) for y in xs]
    return interpolate(xs, vals)


def _pair_sum_polynomial(h: IntegerPolynomial) -> IntegerPolynomial:
    n = h.degree
    if n == 1:
        return IntegerPolynomial((1,))
    N = n * n
    xs = list(range(-(N // 2), N - N // 2 + 1))
    # Res_x(h(x), h(y - x)) = prod_i h(y - t_i) = prod_{i,j} (y - t_i - t_j)
    vals = [resultant(h, h.compose(IntegerPolynomial((y, -1)))) for y in xs]
    full = interpolate(xs, vals)
    diagonal = h.scale_roots(2)
    return polynomial_sqrt(full.exact_div(diagonal))


def two_set_resolvent(f, max_shift: int = MAX_TSCHIRNHAUS) -> ResolventReport:
    f = as_polynomial(f)
    n = f.degree
    if not 2 <= n <= 6:
        raise ResolventError(f"two-set resolvent supports degrees 2..6, not {n}")
    if discriminant(f) == 0:
        raise ResolventError(f"{f} is not squarefree")
    g, _ = f.monic_normalization()
    for k in range(max_shift + 1):
        h = tschirnhaus(g, k)
        if discriminant(h) == 0:
            continue
        S = _pair_sum_polynomial(h)
        if S.degree >= 1 and discriminant(S) == 0:
            continue
        cubics, quads = _block_factors(h, S)
        return ResolventReport(S, cubics, k, h, quads)
    raise ResolventError(f"no squarefree two-set resolvent within {max_shift} transformations")


def _matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    a = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1 :]
        for m in _matchings(rest):
            yield [(a, points[i])] + m


def _block_factors(h: IntegerPolynomial, S: IntegerPolynomial):
    """Block-sum polynomials for every block system with blocks of size 2."""
    n = h.degree
    if n not in (4, 6):
        return (), ()
    dps = max(40, 2 * _mignotte_digits(h) + 20)
    roots = numeric_roots(h, dps)
    found = []
    with mpmath.workdps(dps):
        tol = mpmath.mpf(10) ** (-(dps // 3))
        for m in _matchings(tuple(range(n))):
            sums = [roots[a] + roots[b] for a, b in m]
            poly = _round_poly(sums, 1, tol)
            if poly is None or not poly.divides(S):
                continue
            if poly not in [p for p, _ in found]:
                found.append((poly, signature(poly)))
    if n == 6:
        return tuple(found), ()
    return (), tuple(found)


def resolvent_factor_degrees(f) -> tuple[int, ...]:
    """Degrees of the irreducible factors over Q of the two-set resolvent.

    Factors are located as minimal sets of pair sums whose polynomial is
    integral and divides the resolvent exactly.
    """
    report = two_set_resolvent(f)
    h, S = report.base, report.resolvent
    n = h.degree
    dps = max(40, 2 * _mignotte_digits(h) + 20)
    roots = numeric_roots(h, dps)
    pairs = list(itertools.combinations(range(n), 2))
    with mpmath.workdps(dps):
        sums = [roots[a] + roots[b] for a, b in pairs]
    m = len(sums)
    approx = np.array([complex(s) for s in sums])
    masks = np.arange(1 << m, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(m)) & 1).astype(float)
    traces = bits @ approx
    scale = max(1.0, float(np.abs(approx).sum()))
    near = (np.abs(traces.imag) < 1e-7 * scale) & (np.abs(traces.real - np.round(traces.real)) < 1e-7 * scale)
    candidates = sorted((int(x) for x in masks[near] if x), key=lambda x: (bin(x).count("1"), x))
    covered = 0
    degrees = []
    with mpmath.workdps(dps):
        tol = mpmath.mpf(10) ** (-(dps // 3))
        for mask in candidates:
            if mask & covered:
                continue
            members = [sums[i] for i in range(m) if mask >> i & 1]
            poly = _round_poly(members, 1, tol)
            if poly is not None and poly.divides(S):
                covered |= mask
                degrees.append(len(members))
            if covered == (1 << m) - 1:
                break
    if covered != (1 << m) - 1:
        raise ResolventError("could not factor the two-set resolvent")
    return tuple(sorted(degrees, reverse=True))


# --------------------------------------------------------------------------
# subfields


def _kind(sig: SignatureResult) -> str:
    if sig.r2 == 0:
        return "totally_real"
    return "totally_imaginary" if sig.r1 == 0 else "mixed"


def cubic_subfields(f, label: TransitiveLabel | None = None) -> list[tuple[IntegerPolynomial, SignatureResult]]:
    """Defining cubics (block sums) of the cubic subfields of a sextic field."""
    f = as_polynomial(f)
    if f.degree != 6:
        raise FieldError("cubic subfields are computed for sextic fields only")
    report = two_set_resolvent(f)
    found = list(report.cubic_factors)
    if label is not None:
        expected = block_system_count(label, 2)
        if len(found) != expected:
            raise ResolventError(f"found {len(found)} cubic subfields but {label} has {expected}")
    return found


def cubic_subfield_signature(f, label: TransitiveLabel | None = None) -> str:
    """``"totally_real"``, ``"mixed"`` or ``"none"`` for the cubic subfield of a totally imaginary sextic."""
    f = as_polynomial(f)
    if f.degree != 6:
        raise FieldError("cubic subfield signature needs a sextic")
    if signature(f).as_tuple() != (0, 3):
        raise FieldError(f"{f} is not totally imaginary")
    if label is None:
        label = identify_galois(f).label
    found = cubic_subfields(f, label)
    if not found:
        return "none"
    kinds = {_kind(s) for _, s in found}
    if len(kinds) != 1:
        raise ResolventError(f"conjugate cubic subfields with different signatures: {kinds}")
    return kinds.pop()


def quadratic_subfields(f, label: TransitiveLabel | None = None) -> list[tuple[IntegerPolynomial, SignatureResult]]:
    """Defining quadratics (block sums) of the quadratic subfields of a quartic field."""
    f = as_polynomial(f)
    if f.degree != 4:
        raise FieldError("quadratic subfields are computed for quartic fields only")
    found = list(two_set_resolvent(f).quadratic_factors)
    if label is not None:
        expected = block_system_count(label, 2)
        if len(found) != expected:
            raise ResolventError(f"found {len(found)} quadratic subfields but {label} has {expected}")
    return found


# --------------------------------------------------------------------------
# end-to-end classification


@dataclass(frozen=True)
class ClassificationResult:
    polynomial: IntegerPolynomial
    signature: SignatureResult
    discriminant: int
    galois: GaloisIdentification
    verdict: FieldTypeVerdict
    category: Category
    cubic_signature: tuple[int, int] | None = None
    subfields: tuple[tuple[str, str], ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def label(self) -> TransitiveLabel:
        return self.galois.label

    @property
    def is_cm(self) -> bool:
        return self.category is Category.CM_FIELD

    def to_dict(self) -> dict:
        return {
            "polynomial": str(self.polynomial),
            "coefficients": self.polynomial.to_list(),
            "signature": list(self.signature),
            "discriminant": str(self.discriminant),
            "galois": self.galois.to_dict(),
            "category": self.category.value,
            "table_verdict": self.verdict.to_dict(),
            "cubic_signature": list(self.cubic_signature) if self.cubic_signature else None,
            "subfields": [list(s) for s in self.subfields],
            "notes": list(self.notes),
        }


def classify_field(f, prime_budget: int = DEFAULT_PRIME_BUDGET) -> ClassificationResult:
    """CM field / CM-type / TR-type for a totally imaginary quartic or sextic field."""
    f = as_polynomial(f)
    n = f.degree
    if n not in (4, 6):
        raise FieldError(f"classification supports degrees 4 and 6, not {n}")
    if not is_irreducible(f):
        raise FieldError(f"{f} is reducible")
    sig = signature(f)
    if sig.r1 != 0:
        raise FieldError(f"{f} is not totally imaginary: signature {tuple(sig)}")
    gal = identify_galois(f, prime_budget=prime_budget)
    lab = gal.label
    notes: list[str] = []
    if n == 4:
        verdict = classify_quartic(lab)
        quads = quadratic_subfields(f, lab)
        subfields = tuple((str(p), _kind(s)) for p, s in quads)
        category = verdict.category
        if category is Category.CM_TYPE:
            real = any(s.r2 == 0 for _, s in quads)
            category = Category.CM_FIELD if real else Category.CM_TYPE_NOT_CM
            notes.append("CM field versus CM-type split from quadratic subfield signatures (beyond the quartic table)")
        return ClassificationResult(f, sig, discriminant(f), gal, verdict, category, None, subfields, tuple(notes))
    cubics = cubic_subfields(f, lab)
    kinds = {_kind(s) for _, s in cubics}
    if len(kinds) > 1:
        raise ResolventError(f"conjugate cubic subfields with different signatures: {kinds}")
    cubic_sig = cubics[0][1].as_tuple() if cubics else None
    verdict = classify_sextic(lab, cubic_sig if needs_cubic_signature(lab) else None)
    subfields = tuple((str(p), _kind(s)) for p, s in cubics)
    return ClassificationResult(f, sig, discriminant(f), gal, verdict, verdict.category, cubic_sig, subfields, tuple(notes))
