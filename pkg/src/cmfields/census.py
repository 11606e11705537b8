"""Quartic density posterior and empirical CM-type ratios."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .classifier import Category


class CensusError(ValueError):
    pass


def _exact(x) -> Fraction:
    """Exact rational from a Fraction, int, decimal string or float (read via its shortest repr)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def round5(x: Fraction) -> Decimal:
    """Half-even rounding to five decimal places."""
    return (Decimal(x.numerator) / Decimal(x.denominator)).quantize(Decimal("0.00001"), rounding=ROUND_HALF_EVEN)


@dataclass(frozen=True)
class QuarticDensities:
    p_D4: Fraction
    p_S4: Fraction
    p_TI_given_S4: Fraction
    p_TI_given_D4: Fraction

    def __init__(self, p_D4, p_S4, p_TI_given_S4, p_TI_given_D4):
        vals = [_exact(v) for v in (p_D4, p_S4, p_TI_given_S4, p_TI_given_D4)]
        for name, v in zip(("p_D4", "p_S4", "p_TI_given_S4", "p_TI_given_D4"), vals):
            if not 0 <= v <= 1:
                raise CensusError(f"{name} = {v} is not a probability")
            object.__setattr__(self, name, v)
        if abs(self.p_D4 + self.p_S4 - 1) > Fraction(1, 10**9):
            raise CensusError("p_D4 + p_S4 must equal 1")

    @classmethod
    def published(cls) -> QuarticDensities:
        """Published asymptotic densities, as exact five-digit decimals."""
        return cls(Fraction(17111, 100000), Fraction(82889, 100000), Fraction(30, 100), Fraction(71747, 100000))


@dataclass(frozen=True)
class BayesResult:
    p_S4_given_TI: Fraction
    p_CM: Fraction

    @property
    def rounded(self) -> tuple[Decimal, Decimal]:
        return round5(self.p_S4_given_TI), round5(self.p_CM)

    def to_dict(self) -> dict:
        s4, cm = self.rounded
        return {
            "p_S4_given_TI": str(s4),
            "p_CM": str(cm),
            "exact": {"p_S4_given_TI": str(self.p_S4_given_TI), "p_CM": str(self.p_CM)},
        }


def bayes_posterior(d: QuarticDensities) -> BayesResult:
    """Share of ``S4`` fields among totally imaginary quartics; the rest are CM-type."""
    s4 = d.p_TI_given_S4 * d.p_S4
    denom = s4 + d.p_TI_given_D4 * d.p_D4
    if denom == 0:
        raise CensusError("no totally imaginary mass: posterior undefined")
    post = s4 / denom
    return BayesResult(post, 1 - post)


# --------------------------------------------------------------------------
# empirical ratios


@dataclass(frozen=True)
class CensusCounts:
    bound: int
    n_TI: int
    n_CM: int

    def __post_init__(self):
        if not 0 <= self.n_CM <= self.n_TI:
            raise CensusError("need 0 <= n_CM <= n_TI")

    @property
    def defined(self) -> bool:
        return self.n_TI > 0

    @property
    def ratio(self) -> Fraction | None:
        return Fraction(self.n_CM, self.n_TI) if self.n_TI else None

    def to_dict(self) -> dict:
        r = self.ratio
        return {
            "X": self.bound,
            "n_TI": self.n_TI,
            "n_CM": self.n_CM,
            "ratio": None if r is None else float(r),
            "ratio_exact": None if r is None else str(r),
        }


def is_cm_type(category: Category) -> bool:
    return category.is_cm_type


def _default_category(record) -> Category:
    from .numfield import classify_field

    return classify_field(record.coefficients).category


def empirical_ratio(
    records: Sequence,
    x_grid: Iterable[int],
    verdicts: Mapping[str, Category] | Callable | None = None,
) -> list[CensusCounts]:
    """Counts of totally imaginary and CM-type fields with ``|disc| <= X`` for each ``X``.

    ``verdicts`` maps record labels to categories, or is a callable taking
    a record; by default every record is classified from its polynomial.
    """
    records = list(records)
    if len({r.degree for r in records}) > 1:
        raise CensusError("records span several degrees")
    for r in records:
        if 2 * r.r2 != r.degree:
            raise CensusError(f"{r.label} is not totally imaginary")
    if verdicts is None:
        verdicts = _default_category
    lookup = verdicts if callable(verdicts) else (lambda r: verdicts[r.label])
    flagged = sorted((r.abs_disc, is_cm_type(lookup(r))) for r in records)
    out = []
    for X in sorted(x_grid):
        within = [cm for d, cm in flagged if d <= X]
        out.append(CensusCounts(int(X), len(within), sum(within)))
    return out


def default_grid(records: Sequence, points: int = 10) -> list[int]:
    """Evenly spaced discriminant bounds up to the largest discriminant present."""
    if not records:
        return []
    top = max(r.abs_disc for r in records)
    return sorted({max(1, top * k // points) for k in range(1, points + 1)})


def to_csv(counts: Sequence[CensusCounts]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["X", "n_TI", "n_CM", "ratio"])
    for c in counts:
        w.writerow([c.bound, c.n_TI, c.n_CM, "" if c.ratio is None else f"{float(c.ratio):.6f}"])
    return buf.getvalue()


def summary(counts: Sequence[CensusCounts], degree: int) -> dict:
    """JSON-ready summary.  Ratios are finite-``X`` observations, not limits."""
    last = next((c for c in reversed(counts) if c.defined), None)
    out = {
        "degree": degree,
        "non_asymptotic": True,
        "rows": [c.to_dict() for c in counts],
        "largest_X": last.bound if last else None,
        "ratio_at_largest_X": float(last.ratio) if last else None,
    }
    if degree == 4:
        limit = bayes_posterior(QuarticDensities.published()).p_CM
        out["asymptotic_limit"] = float(limit)
    return out


def summary_json(counts: Sequence[CensusCounts], degree: int) -> str:
    return json.dumps(summary(counts, degree), indent=2, sort_keys=True)
