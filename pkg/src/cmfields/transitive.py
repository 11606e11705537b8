"""Transitive groups of degree 4 and 6 and their ``nTk`` labels.

Every label has a hard-coded reference generating set.  A group is labelled
by comparing a fingerprint (order plus the multiset of cycle types) with the
references; should two references ever share a fingerprint, the candidates
are separated by an explicit conjugacy test inside ``S_n``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .permgroup import (
    GroupError,
    Permutation,
    PermutationGroup,
    generate,
    subgroup_classes,
    symmetric_group,
)


class UnknownLabel(GroupError):
    pass


@dataclass(frozen=True, order=True)
class TransitiveLabel:
    degree: int
    index: int
    name: str = ""

    def __post_init__(self):
        limit = {4: 5, 6: 16}.get(self.degree)
        if limit is None or not 1 <= self.index <= limit:
            raise UnknownLabel(f"no transitive group {self.degree}T{self.index}")
        if not self.name:
            object.__setattr__(self, "name", _NAMES[(self.degree, self.index)])

    @property
    def code(self) -> str:
        return f"{self.degree}T{self.index}"

    def __str__(self) -> str:
        return self.code

    @classmethod
    def parse(cls, text: str) -> TransitiveLabel:
        try:
            deg, idx = str(text).strip().upper().split("T")
            return cls(int(deg), int(idx))
        except ValueError as exc:
            raise UnknownLabel(f"malformed transitive label {text!r}") from exc


_NAMES = {
    (4, 1): "C4",
    (4, 2): "V4",
    (4, 3): "D4",
    (4, 4): "A4",
    (4, 5): "S4",
    (6, 1): "C6",
    (6, 2): "S3",
    (6, 3): "D6",
    (6, 4): "A4",
    (6, 5): "S3xC3",
    (6, 6): "A4xC2",
    (6, 7): "S4+",
    (6, 8): "S4",
    (6, 9): "S3xS3",
    (6, 10): "C3^2:C4",
    (6, 11): "S4xC2",
    (6, 12): "A5",
    (6, 13): "C3^2:D4",
    (6, 14): "S5",
    (6, 15): "A6",
    (6, 16): "S6",
}

ADMISSIBLE_SEXTIC = (1, 2, 3, 5, 6, 8, 9, 11, 13, 14, 16)


def label(code: str | TransitiveLabel) -> TransitiveLabel:
    return code if isinstance(code, TransitiveLabel) else TransitiveLabel.parse(code)


def _p(cycles, n=6) -> Permutation:
    return Permutation.from_cycles(cycles, n)


# The six edges of a tetrahedron on vertices 0..3, ordered so that point i
# and point i+3 are opposite edges.
_EDGES = [(0, 1), (0, 2), (0, 3), (2, 3), (1, 3), (1, 2)]
ANTIPODE = _p([(0, 3), (1, 4), (2, 5)])


def _edge_action(v: tuple[int, ...]) -> Permutation:
    pos = {frozenset(e): i for i, e in enumerate(_EDGES)}
    return Permutation(pos[frozenset((v[a], v[b]))] for a, b in _EDGES)


def _vertex_perm(cycles) -> tuple[int, ...]:
    return Permutation.from_cycles(cycles, 4).images


_S4_EDGE_GENS = [_edge_action(_vertex_perm([(0, 1, 2, 3)])), _edge_action(_vertex_perm([(0, 1)]))]
_A4_EDGE_GENS = [_edge_action(_vertex_perm([(0, 1, 2)])), _edge_action(_vertex_perm([(0, 1), (2, 3)]))]


def _twisted(v: tuple[int, ...]) -> Permutation:
    """Edge action of ``v``, times the antipode when ``v`` is odd on vertices."""
    g = _edge_action(v)
    return g * ANTIPODE if Permutation(v).sign == -1 else g


def _reference_generators() -> dict[tuple[int, int], list[Permutation]]:
    four = lambda c: _p(c, 4)  # noqa: E731
    s4_vertex = [_vertex_perm([(0, 1, 2, 3)]), _vertex_perm([(0, 1)])]
    return {
        (4, 1): [four([(0, 1, 2, 3)])],
        (4, 2): [four([(0, 1), (2, 3)]), four([(0, 2), (1, 3)])],
        (4, 3): [four([(0, 1, 2, 3)]), four([(0, 2)])],
        (4, 4): [four([(0, 1, 2)]), four([(0, 1), (2, 3)])],
        (4, 5): [four([(0, 1, 2, 3)]), four([(0, 1)])],
        (6, 1): [_p([(0, 1, 2, 3, 4, 5)])],
        (6, 2): [_p([(0, 1, 2), (3, 4, 5)]), _p([(0, 3), (1, 5), (2, 4)])],
        (6, 3): [_p([(0, 1, 2, 3, 4, 5)]), _p([(0, 5), (1, 4), (2, 3)])],
        (6, 4): list(_A4_EDGE_GENS),
        (6, 5): [_p([(0, 1, 2)]), _p([(3, 4, 5)]), _p([(0, 3), (1, 5), (2, 4)])],
        (6, 6): list(_A4_EDGE_GENS) + [ANTIPODE],
        (6, 7): list(_S4_EDGE_GENS),
        (6, 8): [_twisted(v) for v in s4_vertex],
        (6, 9): [_p([(0, 1, 2)]), _p([(3, 4, 5)]), _p([(1, 2), (4, 5)]), _p([(0, 3), (1, 4), (2, 5)])],
        (6, 10): [_p([(0, 1, 2)]), _p([(3, 4, 5)]), _p([(0, 5, 2, 3), (1, 4)])],
        (6, 11): list(_S4_EDGE_GENS) + [ANTIPODE],
        # PSL2(5) and PGL2(5) on the projective line over F5, infinity = 5
        (6, 12): [_p([(0, 1, 2, 3, 4)]), _p([(0, 5), (1, 4)])],
        (6, 13): [_p([(0, 1, 2)]), _p([(1, 2)]), _p([(0, 3), (1, 4), (2, 5)])],
        (6, 14): [_p([(0, 1, 2, 3, 4)]), _p([(0, 5), (1, 4)]), _p([(1, 2, 4, 3)])],
        (6, 15): [_p([(0, 1, 2)]), _p([(1, 2, 3, 4, 5)])],
        (6, 16): [_p([(0, 1, 2, 3, 4, 5)]), _p([(0, 1)])],
    }


_ORDERS = {
    (4, 1): 4, (4, 2): 4, (4, 3): 8, (4, 4): 12, (4, 5): 24,
    (6, 1): 6, (6, 2): 6, (6, 3): 12, (6, 4): 12, (6, 5): 18, (6, 6): 24, (6, 7): 24, (6, 8): 24,
    (6, 9): 36, (6, 10): 36, (6, 11): 48, (6, 12): 60, (6, 13): 72, (6, 14): 120, (6, 15): 360, (6, 16): 720,
}  # fmt: skip


@lru_cache(maxsize=None)
def reference_group(code: str | TransitiveLabel) -> PermutationGroup:
    lab = label(code)
    G = generate(_reference_generators()[(lab.degree, lab.index)], lab.degree)
    if G.order != _ORDERS[(lab.degree, lab.index)] or not G.is_transitive():
        raise AssertionError(f"bad reference construction for {lab}")
    return G


def all_labels(degree: int) -> list[TransitiveLabel]:
    count = {4: 5, 6: 16}.get(degree)
    if count is None:
        raise UnknownLabel(f"unsupported degree {degree}")
    return [TransitiveLabel(degree, k) for k in range(1, count + 1)]


def fingerprint(G: PermutationGroup) -> tuple:
    """Order together with the sorted multiset of cycle types."""
    return (G.order, tuple(sorted(G.cycle_type_counts().items())))


@lru_cache(maxsize=None)
def _fingerprint_table(degree: int) -> dict[tuple, list[TransitiveLabel]]:
    table: dict[tuple, list[TransitiveLabel]] = {}
    for lab in all_labels(degree):
        table.setdefault(fingerprint(reference_group(lab)), []).append(lab)
    return table


@lru_cache(maxsize=None)
def _symmetric(degree: int) -> PermutationGroup:
    return symmetric_group(degree)


def conjugate_in_symmetric(A: PermutationGroup, B: PermutationGroup) -> bool:
    """Whether ``A`` and ``B`` are conjugate inside the full symmetric group."""
    if A.degree != B.degree or A.order != B.order:
        return False
    S = _symmetric(A.degree)
    t = S.table
    a, b = t.mask_of(A), t.mask_of(B)
    return b in t.conjugate_masks(a, range(t.n))


def identify_transitive_label(G: PermutationGroup) -> TransitiveLabel:
    if G.degree not in (4, 6):
        raise UnknownLabel(f"unsupported degree {G.degree}")
    if not G.is_transitive():
        raise GroupError("group is not transitive")
    cands = _fingerprint_table(G.degree).get(fingerprint(G), [])
    if len(cands) > 1:
        cands = [lab for lab in cands if conjugate_in_symmetric(G, reference_group(lab))]
    if len(cands) != 1:
        raise UnknownLabel(f"no unique transitive label for {G!r}")
    return cands[0]


def has_222_element(G: PermutationGroup) -> bool:
    return any(parts == (2, 2, 2) for parts in G.cycle_type_counts())


@lru_cache(maxsize=None)
def transitive_subgroup_classes(degree: int) -> tuple[tuple[TransitiveLabel, PermutationGroup], ...]:
    """Conjugacy classes of transitive subgroups of ``S_n``, found by exhaustive enumeration."""
    out = []
    for cls in subgroup_classes(_symmetric(degree)):
        rep = cls[0]
        if rep.is_transitive():
            out.append((identify_transitive_label(rep), rep))
    return tuple(sorted(out, key=lambda t: t[0]))


def s6_groups_with_222() -> list[TransitiveLabel]:
    """Transitive classes of ``S_6`` containing an element of cycle type (2,2,2)."""
    return [lab for lab, rep in transitive_subgroup_classes(6) if has_222_element(rep)]


def ambiguous_fingerprints(degree: int) -> list[list[TransitiveLabel]]:
    """Groups of labels whose references share a fingerprint."""
    return [labs for labs in _fingerprint_table(degree).values() if len(labs) > 1]


def relabel(G: PermutationGroup, sigma: Permutation) -> PermutationGroup:
    """``sigma G sigma^-1``: the same group with points renamed by ``sigma``."""
    inv = sigma.inverse()
    return generate([sigma * g * inv for g in G.generators], G.degree)


def all_point_relabelings(degree: int):
    return (Permutation(p) for p in itertools.permutations(range(degree)))


def cycle_type_sets() -> dict[str, frozenset]:
    """Set of cycle types occurring in each degree-6 reference group."""
    return {lab.code: frozenset(reference_group(lab).cycle_type_counts()) for lab in all_labels(6)}


def cycle_type_distribution(code: str | TransitiveLabel) -> dict[tuple[int, ...], float]:
    """Chebotarev densities of the cycle types of a reference group."""
    G = reference_group(code)
    counts: Counter = G.cycle_type_counts()
    return {parts: n / G.order for parts, n in counts.items()}
