"""Client for the number-field tables of the LMFDB.

Network access is opt-in.  Every response is cached as JSON Lines under a
directory keyed by the SHA-256 of the request URL, and bundled fixtures let
the whole validation path run offline.

Environment:
  CMFIELDS_LMFDB_URL   API base (default ``https://www.lmfdb.org/api``)
  CMFIELDS_CACHE_DIR   cache directory (default ``~/.cache/cmfields``)
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import time
import urllib.error
import urllib.parse
import urllib.request
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Sequence

log = logging.getLogger(__name__)

DEFAULT_BASE_URL = "https://www.lmfdb.org/api"
DEFAULT_CACHE_DIR = Path.home() / ".cache" / "cmfields"
TABLE = "nf_fields"
RETRIES = 3
BACKOFF = 0.5
TIMEOUT = 30


class LmfdbError(RuntimeError):
    pass


class NetworkDisabled(LmfdbError):
    pass


class RecordError(ValueError):
    pass


def base_url() -> str:
    return os.environ.get("CMFIELDS_LMFDB_URL", DEFAULT_BASE_URL).rstrip("/")


def cache_dir() -> Path:
    return Path(os.environ.get("CMFIELDS_CACHE_DIR", DEFAULT_CACHE_DIR))


# --------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class LmfdbRecord:
    label: str
    coefficients: tuple[int, ...]
    degree: int
    r2: int
    galois_label: str
    is_cm: bool
    abs_disc: int
    subfields: tuple[tuple[int, ...], ...] | None = None
    source: str = "lmfdb"

    def __post_init__(self):
        parts = self.label.split(".")
        if len(parts) != 4:
            raise RecordError(f"malformed label {self.label!r}")
        if self.degree != len(self.coefficients) - 1 or self.coefficients[-1] == 0:
            raise RecordError(f"{self.label}: degree does not match coefficients")
        r1 = self.degree - 2 * self.r2
        if r1 < 0:
            raise RecordError(f"{self.label}: r2 too large")
        if (int(parts[0]), int(parts[1]), int(parts[2])) != (self.degree, r1, self.abs_disc):
            raise RecordError(f"{self.label}: label disagrees with degree, r1 or |disc|")
        if not self.galois_label.startswith(f"{self.degree}T"):
            raise RecordError(f"{self.label}: Galois label {self.galois_label} has the wrong degree")

    @property
    def r1(self) -> int:
        return self.degree - 2 * self.r2

    @property
    def quadratic_subfields(self) -> list[tuple[int, ...]] | None:
        if self.subfields is None:
            return None
        return [s for s in self.subfields if len(s) == 3]

    @property
    def has_imaginary_quadratic_subfield(self) -> bool | None:
        quads = self.quadratic_subfields
        if quads is None:
            return None
        return any(b * b - 4 * a * c < 0 for a, b, c in quads)

    @property
    def is_cm_type(self) -> bool | None:
        """CM field itself, or containing an imaginary quadratic (hence CM) subfield.

        For degrees 4 and 6 these are the only possible CM subfields.
        """
        if self.is_cm:
            return True
        return self.has_imaginary_quadratic_subfield

    def to_row(self) -> dict:
        row = {
            "label": self.label,
            "coeffs": list(self.coefficients),
            "degree": self.degree,
            "r2": self.r2,
            "galois_label": self.galois_label,
            "cm": self.is_cm,
            "disc_abs": self.abs_disc,
        }
        if self.subfields is not None:
            row["subfields"] = [list(s) for s in self.subfields]
        if self.source != "lmfdb":
            row["source"] = self.source
        return row

    @classmethod
    def from_row(cls, row: dict) -> LmfdbRecord:
        try:
            subs = row.get("subfields")
            return cls(
                label=str(row["label"]),
                coefficients=tuple(int(c) for c in row["coeffs"]),
                degree=int(row["degree"]),
                r2=int(row["r2"]),
                galois_label=str(row["galois_label"]),
                is_cm=bool(row["cm"]),
                abs_disc=int(row["disc_abs"]),
                subfields=None if subs is None else tuple(tuple(int(c) for c in s) for s in subs),
                source=str(row.get("source", "lmfdb")),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, RecordError):
                raise
            raise RecordError(f"bad row {row.get('label', '?')}: {exc}") from exc


def serialize(records: Iterable[LmfdbRecord]) -> str:
    """JSON Lines, one record per line, keys sorted."""
    return "".join(json.dumps(r.to_row(), sort_keys=True) + "\n" for r in records)


def parse_jsonl(text: str) -> list[LmfdbRecord]:
    return [LmfdbRecord.from_row(json.loads(line)) for line in text.splitlines() if line.strip()]


def parse_records_with_stats(payload: bytes | str) -> tuple[list[LmfdbRecord], int]:
    """Records from an API response, plus the number of rows skipped as invalid."""
    try:
        doc = json.loads(payload)
    except json.JSONDecodeError as exc:
        raise LmfdbError(f"malformed JSON payload: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("data"), list):
        raise LmfdbError("payload has no data array")
    out, skipped = [], 0
    for row in doc["data"]:
        try:
            out.append(LmfdbRecord.from_row(row))
        except RecordError as exc:
            skipped += 1
            log.warning("skipping record: %s", exc)
    return out, skipped


def parse_records(payload: bytes | str) -> list[LmfdbRecord]:
    return parse_records_with_stats(payload)[0]


# --------------------------------------------------------------------------
# queries


@dataclass(frozen=True)
class QuerySpec:
    degree: int | None = None
    signature: tuple[int, int] | None = None
    galois_label: str | None = None
    cm: bool | None = None
    max_abs_disc: int | None = None
    label: str | None = None
    page_size: int = 100
    offset: int = 0

    def __post_init__(self):
        if not 1 <= self.page_size <= 1000:
            raise ValueError("page_size must lie in [1, 1000]")
        if self.offset < 0:
            raise ValueError("offset must be non-negative")

    def page(self, offset: int) -> QuerySpec:
        return QuerySpec(
            self.degree, self.signature, self.galois_label, self.cm, self.max_abs_disc, self.label, self.page_size, offset
        )


def build_query(q: QuerySpec) -> str:
    """Request URL for a query.

    Template: ``{base}/nf_fields/?_format=json&<filters>&_limit=N&_offset=K``
    with filters in a fixed order: ``label``, ``degree``, ``r2``,
    ``galois_label``, ``cm``, ``disc_abs`` (as ``lte<N>``).
    """
    params: list[tuple[str, str]] = [("_format", "json")]
    if q.label is not None:
        if any(v is not None for v in (q.degree, q.signature, q.galois_label, q.cm, q.max_abs_disc)):
            raise ValueError("a label lookup cannot be combined with other filters")
        params.append(("label", q.label))
    else:
        if q.degree is None:
            raise ValueError("a search needs a degree")
        params.append(("degree", f"i{q.degree}"))
        if q.signature is not None:
            r1, r2 = q.signature
            if r1 + 2 * r2 != q.degree:
                raise ValueError(f"signature {q.signature} does not fit degree {q.degree}")
            params.append(("r2", f"i{r2}"))
        if q.galois_label is not None:
            if not q.galois_label.startswith(f"{q.degree}T"):
                raise ValueError(f"Galois label {q.galois_label} does not fit degree {q.degree}")
            params.append(("galois_label", q.galois_label))
        if q.cm is not None:
            params.append(("cm", "true" if q.cm else "false"))
        if q.max_abs_disc is not None:
            params.append(("disc_abs", f"lte{q.max_abs_disc}"))
    params += [("_limit", str(q.page_size)), ("_offset", str(q.offset))]
    return f"{base_url()}/{TABLE}/?{urllib.parse.urlencode(params)}"


def label_query(label: str) -> str:
    return build_query(QuerySpec(label=label, page_size=1))


# --------------------------------------------------------------------------
# cache and transport


def cache_path(url: str, directory: Path | None = None) -> Path:
    key = hashlib.sha256(url.encode()).hexdigest()
    return (directory or cache_dir()) / f"{key}.jsonl"


def _http_get(url: str) -> bytes:
    last: Exception | None = None
    for attempt in range(RETRIES + 1):
        try:
            with urllib.request.urlopen(url, timeout=TIMEOUT) as resp:
                return resp.read()
        except (urllib.error.URLError, TimeoutError, OSError) as exc:
            last = exc
            if attempt < RETRIES:
                time.sleep(BACKOFF * 2**attempt)
    raise LmfdbError(f"GET {url} failed after {RETRIES} retries: {last}")


def fetch_page(
    q: QuerySpec,
    allow_network: bool = False,
    directory: Path | None = None,
    transport: Callable[[str], bytes] = _http_get,
) -> list[LmfdbRecord]:
    url = build_query(q)
    path = cache_path(url, directory)
    if path.exists():
        return parse_jsonl(path.read_text())
    if not allow_network:
        raise NetworkDisabled(f"{url} is not cached and network access is off")
    records = parse_records(transport(url))
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(serialize(records))
    tmp.replace(path)
    return records


def fetch_all(
    q: QuerySpec,
    allow_network: bool = False,
    max_pages: int = 100,
    directory: Path | None = None,
    transport: Callable[[str], bytes] = _http_get,
) -> list[LmfdbRecord]:
    out: list[LmfdbRecord] = []
    offset = q.offset
    for _ in range(max_pages):
        page = fetch_page(q.page(offset), allow_network, directory, transport)
        out.extend(page)
        if len(page) < q.page_size:
            break
        offset += q.page_size
    return out


# --------------------------------------------------------------------------
# fixtures


def fixture_names() -> list[str]:
    root = resources.files("cmfields") / "data" / "fixtures"
    return sorted(p.name[: -len(".jsonl")] for p in root.iterdir() if p.name.endswith(".jsonl"))


def load_fixtures(name: str | None = None) -> list[LmfdbRecord]:
    """Records from one bundled fixture file, or from all of them."""
    root = resources.files("cmfields") / "data" / "fixtures"
    names = [name] if name else fixture_names()
    out = []
    for n in names:
        out.extend(parse_jsonl((root / f"{n}.jsonl").read_text()))
    return out


def find_fixture(label: str) -> LmfdbRecord:
    for r in load_fixtures():
        if r.label == label:
            return r
    raise KeyError(label)


# --------------------------------------------------------------------------
# cross-validation


@dataclass(frozen=True)
class RecordCheck:
    label: str
    galois_expected: str
    galois_found: str | None
    cm_expected: bool
    category: str | None
    cm_type_expected: bool | None
    error: str | None = None

    @property
    def galois_agrees(self) -> bool:
        return self.galois_found == self.galois_expected

    @property
    def cm_agrees(self) -> bool:
        return self.category is not None and (self.category == "CM_FIELD") == self.cm_expected

    @property
    def cm_type_agrees(self) -> bool | None:
        if self.cm_type_expected is None or self.category is None:
            return None
        return (self.category != "TR_TYPE") == self.cm_type_expected

    @property
    def agrees(self) -> bool:
        return self.error is None and self.galois_agrees and self.cm_agrees and self.cm_type_agrees is not False

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "galois_expected": self.galois_expected,
            "galois_found": self.galois_found,
            "cm_expected": self.cm_expected,
            "category": self.category,
            "cm_type_expected": self.cm_type_expected,
            "agrees": self.agrees,
            "error": self.error,
        }


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[RecordCheck, ...]
    by_label: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def agreements(self) -> int:
        return sum(c.agrees for c in self.checks)

    @property
    def mismatches(self) -> list[RecordCheck]:
        return [c for c in self.checks if not c.agrees]

    @property
    def rate(self) -> float:
        return self.agreements / self.total if self.total else 1.0

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "agreements": self.agreements,
            "rate": self.rate,
            "by_label": self.by_label,
            "mismatches": [c.to_dict() for c in self.mismatches],
        }


def cross_validate(records: Sequence[LmfdbRecord], classify: Callable | None = None) -> ValidationReport:
    """Classify every record and compare with its Galois label, CM flag and subfield data."""
    if classify is None:
        from .numfield import classify_field as classify
    checks = []
    for r in records:
        try:
            res = classify(r.coefficients)
            found, cat, err = res.label.code, res.category.value, None
        except Exception as exc:  # reported per record, never fatal
            found, cat, err = None, None, f"{type(exc).__name__}: {exc}"
        checks.append(RecordCheck(r.label, r.galois_label, found, r.is_cm, cat, r.is_cm_type, err))
    tally: dict[str, Counter] = defaultdict(Counter)
    for c in checks:
        tally[c.galois_expected]["total"] += 1
        tally[c.galois_expected]["agree"] += c.agrees
    by_label = {k: dict(v) for k, v in sorted(tally.items())}
    return ValidationReport(tuple(checks), by_label)
