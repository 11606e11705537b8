"""CM field / CM-type / TR-type decisions from Galois-group data.

Two independent routes are provided.  :func:`classify_configuration` is a
general oracle: given ``G = Gal(F_s/Q)``, ``H = Gal(F_s/F)`` and complex
conjugation ``c`` it searches the overgroups of ``H`` for a CM subfield.
:func:`classify_sextic` and :func:`classify_quartic` are plain table
lookups by transitive label.  The exhaustive comparison of the two lives in
:mod:`cmfields.casework`.

Subfields of ``F`` correspond to subgroups ``H <= K <= G``; an embedding of
``F^K`` is a left coset ``gK`` and ``c`` fixes it exactly when the embedding
is real.  So ``F^K`` is totally real iff ``c`` lies in every conjugate of
``K`` and totally imaginary iff ``c`` fixes no coset of ``G/K``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .permgroup import (
    GroupError,
    Permutation,
    PermutationGroup,
    coset_action,
    subgroup_classes,
)
from .transitive import ADMISSIBLE_SEXTIC, TransitiveLabel, identify_transitive_label, label as _label


class Category(str, enum.Enum):
    CM_FIELD = "CM_FIELD"
    CM_TYPE_NOT_CM = "CM_TYPE_NOT_CM"
    TR_TYPE = "TR_TYPE"
    # coarse answer of the quartic table, which cannot split CM fields off
    CM_TYPE = "CM_TYPE"

    @property
    def is_cm_type(self) -> bool:
        return self is not Category.TR_TYPE

    def __str__(self) -> str:
        return self.value


class ConfigurationError(GroupError):
    pass


class InadmissibleLabel(GroupError):
    pass


def _element_order_le_2(c: Permutation) -> bool:
    return (c * c).is_identity()


@dataclass(frozen=True)
class GroupConfiguration:
    """``(G, H, c)``: Galois group, stabilizer of ``F``, complex conjugation."""

    G: PermutationGroup
    H: PermutationGroup
    c: Permutation

    @classmethod
    def point_stabilizer(cls, G: PermutationGroup, c: Permutation, point: int = 0) -> GroupConfiguration:
        """Configuration of a transitive group acting on its own points."""
        return cls(G, G.stabilizer(point), c)

    @property
    def degree(self) -> int:
        return self.G.order // self.H.order

    def violations(self) -> list[str]:
        G, H, c = self.G, self.H, self.c
        t = G.table
        out = []
        if not H.is_subgroup_of(G):
            return ["H is not contained in G"]
        if c not in G:
            return ["c is not an element of G"]
        if G.order % H.order:
            out.append("|H| does not divide |G|")
        hm = t.mask_of(H)
        if t.core_mask(hm) != 1 << t.identity:
            out.append("core(G, H) is not trivial")
        if not _element_order_le_2(c):
            out.append("c has order greater than 2")
        elif c.is_identity():
            out.append("c is the identity")
        elif t.fixed_coset_reps(hm, t.element_index(c)):
            out.append("c fixes a coset of G/H")
        return out

    def validate(self) -> None:
        bad = self.violations()
        if bad:
            raise ConfigurationError("; ".join(bad))

    @property
    def is_valid(self) -> bool:
        return not self.violations()

    def transitive_label(self) -> TransitiveLabel:
        """Label of ``G`` acting on ``G/H``."""
        return identify_transitive_label(coset_action(self.G, self.H).image)


@dataclass(frozen=True)
class SubfieldReport:
    """The subfield ``F^K`` for an intermediate group ``H <= K <= G``.

    ``index`` is ``[K:H]``, the degree of ``F`` over the subfield, and
    ``degree`` is ``[G:K]``, the degree of the subfield over ``Q``.
    """

    group: PermutationGroup
    index: int
    degree: int
    signature: tuple[int, int]
    is_galois_over_Q: bool

    @property
    def kind(self) -> str:
        r1, r2 = self.signature
        if r2 == 0:
            return "totally_real"
        return "totally_imaginary" if r1 == 0 else "mixed"

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "degree": self.degree,
            "signature": list(self.signature),
            "kind": self.kind,
            "is_galois_over_Q": self.is_galois_over_Q,
            "group_order": self.group.order,
        }


@dataclass(frozen=True)
class CMWitness:
    """``K1 <= K0`` of index 2: ``F^K0`` totally real, ``F^K1`` totally imaginary."""

    K0: PermutationGroup
    K1: PermutationGroup

    def to_dict(self) -> dict:
        return {
            "K0_order": self.K0.order,
            "K1_order": self.K1.order,
            "K0_generators": [str(g) for g in self.K0.generators],
            "K1_generators": [str(g) for g in self.K1.generators],
        }


@dataclass(frozen=True)
class FieldTypeVerdict:
    category: Category
    witness: CMWitness | None = None
    subfields: tuple[SubfieldReport, ...] = ()
    source: str = "oracle"
    notes: tuple[str, ...] = field(default_factory=tuple)

    def cubic_subfields(self) -> list[SubfieldReport]:
        return [s for s in self.subfields if s.degree == 3]

    def quadratic_subfields(self) -> list[SubfieldReport]:
        return [s for s in self.subfields if s.degree == 2]

    def to_dict(self) -> dict:
        return {
            "category": self.category.value,
            "source": self.source,
            "witness": self.witness.to_dict() if self.witness else None,
            "subfields": [s.to_dict() for s in self.subfields],
            "notes": list(self.notes),
        }


def subfield_signature(G: PermutationGroup, K: PermutationGroup, c: Permutation) -> tuple[int, int]:
    """Signature ``(r1, r2)`` of the fixed field of ``K``, read off from ``c`` acting on ``G/K``."""
    if not _element_order_le_2(c):
        raise ConfigurationError("c must have order at most 2")
    t = G.table
    km = t.mask_of(K)
    r1 = len(t.fixed_coset_reps(km, t.element_index(c)))
    return r1, (G.order // K.order - r1) // 2


def _subfield_report(G, H, t, mask, ci) -> SubfieldReport:
    K = t.subgroup(mask)
    r1 = len(t.fixed_coset_reps(mask, ci))
    deg = t.n // K.order
    return SubfieldReport(K, K.order // H.order, deg, (r1, (deg - r1) // 2), t.core_mask(mask) == mask)


def classify_configuration(cfg: GroupConfiguration) -> FieldTypeVerdict:
    """Decide the type of ``F`` by searching for a CM subfield.

    A CM subfield is ``F^K1`` with ``K1 >= H`` of index 2 in some ``K0``
    such that ``F^K0`` is totally real and ``F^K1`` totally imaginary.
    """
    cfg.validate()
    G, H = cfg.G, cfg.H
    t = G.table
    hm = t.mask_of(H)
    ci = t.element_index(cfg.c)
    over = t.overgroup_masks(hm)
    masks = sorted(over, key=lambda m: (m.bit_count(), m))
    imaginary = {m for m in masks if m != t.full and not t.fixed_coset_reps(m, ci)}
    real = {m for m in masks if len(t.fixed_coset_reps(m, ci)) * m.bit_count() == t.n}
    pairs = [
        (k0, k1)
        for k1 in masks
        if k1 in imaginary
        for k0 in masks
        if k0 in real and k0.bit_count() == 2 * k1.bit_count() and k1 & ~k0 == 0
    ]
    subfields = tuple(_subfield_report(G, H, t, m, ci) for m in masks if m not in (hm, t.full))
    if not pairs:
        return FieldTypeVerdict(Category.TR_TYPE, None, subfields)
    own = [p for p in pairs if p[1] == hm]
    k0, k1 = (own or pairs)[0]
    cat = Category.CM_FIELD if own else Category.CM_TYPE_NOT_CM
    return FieldTypeVerdict(cat, CMWitness(t.subgroup(k0), t.subgroup(k1)), subfields)


# --------------------------------------------------------------------------
# table lookups

_SEXTIC_TABLE = {
    1: Category.CM_FIELD,
    2: Category.CM_TYPE_NOT_CM,
    5: Category.CM_TYPE_NOT_CM,
    6: Category.CM_FIELD,
    8: Category.TR_TYPE,
    9: Category.CM_TYPE_NOT_CM,
    13: Category.CM_TYPE_NOT_CM,
    14: Category.TR_TYPE,
    16: Category.TR_TYPE,
}

# split by the signature of the unique cubic subfield
_SEXTIC_SPLIT = {
    3: {(3, 0): Category.CM_FIELD, (1, 1): Category.CM_TYPE_NOT_CM},
    11: {(3, 0): Category.CM_FIELD, (1, 1): Category.TR_TYPE},
}

SEXTIC_SUBFIELDS = {
    1: "imaginary quadratic, totally real cubic",
    2: "imaginary quadratic, mixed signature cubic",
    3: "imaginary quadratic, cubic",
    5: "imaginary quadratic",
    6: "totally real cubic",
    8: "mixed signature cubic",
    9: "imaginary quadratic",
    11: "cubic",
    13: "imaginary quadratic",
    14: "none",
    16: "none",
}


def needs_cubic_signature(code) -> bool:
    lab = _label(code)
    return lab.degree == 6 and lab.index in _SEXTIC_SPLIT


def classify_sextic(code, cubic_signature: tuple[int, int] | None = None) -> FieldTypeVerdict:
    """Table verdict for a totally imaginary sextic field with Galois group ``code``."""
    lab = _label(code)
    if lab.degree != 6 or lab.index not in ADMISSIBLE_SEXTIC:
        raise InadmissibleLabel(f"{lab} is not the Galois group of a totally imaginary sextic field")
    if lab.index in _SEXTIC_SPLIT:
        if cubic_signature is None:
            raise InadmissibleLabel(f"{lab} needs the signature of its cubic subfield")
        sig = tuple(cubic_signature)
        if sig not in _SEXTIC_SPLIT[lab.index]:
            raise InadmissibleLabel(f"impossible cubic signature {sig}")
        cat = _SEXTIC_SPLIT[lab.index][sig]
    else:
        cat = _SEXTIC_TABLE[lab.index]
    return FieldTypeVerdict(cat, source="table", notes=(f"{lab} ({lab.name}): {SEXTIC_SUBFIELDS[lab.index]}",))


def classify_quartic(code) -> FieldTypeVerdict:
    """Quartic table: imprimitive groups give CM-type, ``A4``/``S4`` give TR-type.

    The table cannot tell CM fields from CM-type fields with a smaller CM
    subfield; use :func:`classify_configuration` for that refinement.
    """
    lab = _label(code)
    if lab.degree != 4:
        raise InadmissibleLabel(f"{lab} is not a quartic label")
    cat = Category.TR_TYPE if lab.index in (4, 5) else Category.CM_TYPE
    note = "primitive" if cat is Category.TR_TYPE else "imprimitive"
    return FieldTypeVerdict(cat, source="table", notes=(f"{lab} ({lab.name}) is {note}",))


def an_exclusion_check(n: int, r2: int) -> bool:
    """True when a degree-``n`` field with ``r2`` complex places cannot have group ``A_n``.

    The discriminant of such a field has sign ``(-1)^r2``, while a Galois
    group inside ``A_n`` forces a square, hence positive, discriminant.
    """
    if n <= 0 or r2 < 0 or 2 * r2 > n:
        raise ValueError(f"inconsistent degree {n} and r2 = {r2}")
    return r2 % 2 == 1


# --------------------------------------------------------------------------
# configuration enumeration


def valid_configurations(G: PermutationGroup, degree: int) -> list[GroupConfiguration]:
    """Every ``(H, c)`` for ``G`` with ``[G:H] = degree``, up to simultaneous conjugacy.

    ``H`` runs over class representatives with trivial core and ``c`` over
    the involutions fixing no coset of ``G/H``, taken up to conjugation by
    the normalizer of ``H``.
    """
    t = G.table
    trivial = 1 << t.identity
    involutions = [i for i in range(t.n) if i != t.identity and t.mul_idx(i, i) == t.identity]
    out = []
    for cls in subgroup_classes(G):
        H = cls[0]
        if H.order * degree != G.order:
            continue
        hm = t.mask_of(H)
        if t.core_mask(hm) != trivial:
            continue
        normal = t.indices(t.normalizer_mask(hm))
        seen: set[int] = set()
        for i in involutions:
            if i in seen or t.fixed_coset_reps(hm, i):
                continue
            seen |= {t.conjugate_index(g, i) for g in normal}
            out.append(GroupConfiguration(G, H, t.element(i)))
    return out


def configurations_for_label(code) -> list[GroupConfiguration]:
    """Valid configurations of the reference group whose coset action carries this label.

    An abstract group can have several core-free subgroups of the right
    index; ``S_4`` acting on the cosets of ``C_4`` is 6T8, not 6T7.
    """
    from .transitive import reference_group

    lab = _label(code)
    return [cfg for cfg in valid_configurations(reference_group(lab), lab.degree) if cfg.transitive_label() == lab]


def cubic_signature_of(verdict: FieldTypeVerdict) -> tuple[int, int] | None:
    cubics = verdict.cubic_subfields()
    return cubics[0].signature if len(cubics) == 1 else None


def verify_case_analysis(code):
    """Exhaustive check of the per-group case analysis; see :mod:`cmfields.casework`."""
    from .casework import verify_case_analysis as run

    return run(code)
