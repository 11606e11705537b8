"""Exact permutation groups of small degree.

Groups are stored as their full element sets; everything here is meant for
orders up to ``|S_6| = 720``.  Points are 0-based.  Products compose right
to left, ``(p * q)(i) == p(q(i))``, so ``g * x * g.inverse()`` relabels the
cycles of ``x`` by ``g``.

Heavy lifting (closures, conjugation, coset labelling) happens on a
multiplication table of the ambient group (:class:`GroupTable`), where a
subgroup is an ``int`` bitmask over the table's element indices.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels

MAX_ENUMERATION_ORDER = 720


class GroupError(ValueError):
    """Invalid group-theoretic input."""


class GroupTooLarge(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


# --------------------------------------------------------------------------
# permutations


class Permutation:
    """A bijection of ``{0, ..., n-1}`` given by its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence], degree: int, labels: Sequence | None = None) -> Permutation:
        """Build from disjoint cycles.

        ``labels`` optionally names the points, e.g. ``labels="123abc"`` lets
        ``("1", "a", "2", "b")`` stand for the cycle ``(0 3 1 4)``.
        """
        pos = {lab: i for i, lab in enumerate(labels)} if labels is not None else None
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            pts = [pos[c] for c in cyc] if pos is not None else [int(c) for c in cyc]
            if len(set(pts)) != len(pts) or seen & set(pts):
                raise GroupError(f"cycles are not disjoint: {cycles}")
            seen.update(pts)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                if not 0 <= a < degree:
                    raise GroupError(f"point {a} out of range for degree {degree}")
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise GroupError("degree mismatch in product")
        s = self.images
        return Permutation._trusted(tuple(s[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """``g * self * g^-1``."""
        return g * self * g.inverse()

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True))) if self.degree else 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    @property
    def sign(self) -> int:
        return -1 if (self.degree - len(self.cycles(include_fixed=True))) % 2 else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) if cyc else "()"

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"


@dataclass(frozen=True)
class CycleType:
    parts: tuple[int, ...]
    parity: str

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


def cycle_type(p: Permutation) -> CycleType:
    """Descending cycle lengths of ``p`` (fixed points count as 1s) and parity."""
    parts = tuple(sorted((len(c) for c in p.cycles(include_fixed=True)), reverse=True))
    parity = "odd" if (p.degree - len(parts)) % 2 else "even"
    return CycleType(parts, parity)


def parts_parity(parts: Sequence[int]) -> str:
    return "odd" if (sum(parts) - len(parts)) % 2 else "even"


# --------------------------------------------------------------------------
# groups


class PermutationGroup:
    """A finite permutation group held as its full element set."""

    def __init__(self, degree: int, elements: Iterable, generators: Iterable = (), *, check: bool = True):
        imgs = frozenset(e.images if isinstance(e, Permutation) else tuple(e) for e in elements)
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g) for g in generators)
        if any(len(e) != degree for e in imgs) or any(g.degree != degree for g in gens):
            raise GroupError("element degree does not match group degree")
        self.degree = degree
        self._images = imgs
        self._gens = gens
        self._origin: tuple[GroupTable, int] | None = None
        if check:
            self._validate()

    def _validate(self) -> None:
        ident = tuple(range(self.degree))
        if ident not in self._images:
            raise GroupError("element set lacks the identity")
        gens = self._gens or self._greedy_generators()
        closed = generate(gens, self.degree, check=False)
        if closed._images != self._images:
            raise GroupError("element set is not closed under composition")
        if not self._gens:
            self._gens = tuple(gens)

    def _greedy_generators(self) -> list[Permutation]:
        gens: list[Permutation] = []
        span = {tuple(range(self.degree))}
        for img in sorted(self._images):
            if img not in span:
                gens.append(Permutation._trusted(img))
                span = generate(gens, self.degree, check=False)._images
                if len(span) > len(self._images):
                    break
        return gens

    # --- basic protocol -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._images)

    def __len__(self) -> int:
        return len(self._images)

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(Permutation._trusted(i) for i in sorted(self._images))

    @property
    def images(self) -> frozenset:
        return self._images

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        img = p.images if isinstance(p, Permutation) else tuple(p)
        return img in self._images

    @property
    def generators(self) -> tuple[Permutation, ...]:
        if not self._gens:
            self._gens = tuple(self._greedy_generators())
        return self._gens

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __eq__(self, other) -> bool:
        return isinstance(other, PermutationGroup) and self.degree == other.degree and self._images == other._images

    def __hash__(self) -> int:
        return hash((self.degree, self._images))

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.generators)) if self.order > 1 else ""
        return f"<PermutationGroup degree={self.degree} order={self.order} gens=[{gens}]>"

    # --- structure -------------------------------------------------------

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and self._images <= other._images

    def orbits(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            orb = {start}
            frontier = [start]
            while frontier:
                i = frontier.pop()
                for g in self.generators:
                    j = g(i)
                    if j not in orb:
                        orb.add(j)
                        frontier.append(j)
            seen |= orb
            out.append(frozenset(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def stabilizer(self, point: int) -> PermutationGroup:
        return self.table.subgroup(self.table.mask_where(lambda p: p.images[point] == point))

    def center(self) -> PermutationGroup:
        gens = self.generators
        return self.table.subgroup(self.table.mask_where(lambda p: all(p * g == g * p for g in gens)))

    def is_normal_in(self, G: PermutationGroup) -> bool:
        return core(G, self) == self

    def is_even(self) -> bool:
        """True when every element is an even permutation."""
        return all(g.sign == 1 for g in self.generators)

    def cycle_type_counts(self) -> Counter:
        return Counter(cycle_type(p).parts for p in self.elements)

    @cached_property
    def table(self) -> GroupTable:
        return GroupTable(self)


def generate(gens: Sequence, degree: int, *, check: bool = True) -> PermutationGroup:
    """The group generated by ``gens``; generators are recorded as given."""
    perms = [g if isinstance(g, Permutation) else Permutation(g) for g in gens]
    if check and any(p.degree != degree for p in perms):
        raise GroupError(f"generator degree mismatch: expected {degree}, got {[p.degree for p in perms]}")
    ident = tuple(range(degree))
    imgs = {ident}
    frontier = [ident]
    gimgs = [p.images for p in perms if not p.is_identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gimgs:
                y = tuple(x[i] for i in g)
                if y not in imgs:
                    imgs.add(y)
                    nxt.append(y)
        frontier = nxt
    return PermutationGroup(degree, imgs, perms, check=False)


def from_cycle_strings(cycle_lists: Sequence[Sequence[Sequence]], degree: int, labels: Sequence | None = None) -> PermutationGroup:
    """Convenience: ``generate`` from generators written as cycle lists."""
    return generate([Permutation.from_cycles(c, degree, labels) for c in cycle_lists], degree)


def symmetric_group(n: int) -> PermutationGroup:
    if n <= 1:
        return generate([], max(n, 1))
    gens = [Permutation.from_cycles([range(n)], n), Permutation.from_cycles([(0, 1)], n)]
    return generate(gens, n)


def alternating_group(n: int) -> PermutationGroup:
    gens = [Permutation.from_cycles([(0, 1, i)], n) for i in range(2, n)]
    return generate(gens, n)


def cyclic_group(n: int) -> PermutationGroup:
    return generate([Permutation.from_cycles([range(n)], n)], n)


def dihedral_group(m: int) -> PermutationGroup:
    """Symmetries of a regular ``m``-gon on its vertices, order ``2m``.

    Generators are the rotation ``r = (0 1 ... m-1)`` and the reflection
    ``s: i -> -i`` fixing vertex 0, in that order.
    """
    r = Permutation.from_cycles([range(m)], m)
    s = Permutation([(-i) % m for i in range(m)])
    return generate([r, s], m)


# --------------------------------------------------------------------------
# multiplication tables


class GroupTable:
    """Multiplication table of a group; subgroups become bitmasks."""

    def __init__(self, group: PermutationGroup):
        self.group = group
        self.degree = group.degree
        self.perms: list[tuple] = sorted(group.images)
        self.n = n = len(self.perms)
        self.index = {p: i for i, p in enumerate(self.perms)}
        self.identity = self.index[tuple(range(group.degree))]
        arr = np.array(self.perms, dtype=np.int64).reshape(n, group.degree)
        weights = group.degree ** np.arange(group.degree, dtype=np.int64)
        codes = arr @ weights
        order = np.argsort(codes)
        sorted_codes = codes[order]
        prod = arr[:, arr] if group.degree else np.zeros((n, n, 0), dtype=np.int64)
        prod_codes = prod @ weights
        mul = order[np.searchsorted(sorted_codes, prod_codes)]
        self.mul = np.ascontiguousarray(mul.reshape(-1), dtype=np.intc)
        self.inv = np.ascontiguousarray(np.argmax(mul == self.identity, axis=1), dtype=np.intc)
        self.full = (1 << n) - 1
        self._subgroups: dict[int, PermutationGroup] = {}
        self._native: dict[str, tuple] = {}

    # --- backend plumbing --------------------------------------------------

    def native(self, backend: str | None = None) -> tuple:
        backend = backend or kernels.BACKEND
        if backend not in self._native:
            self._native[backend] = (kernels.as_backend(self.mul, backend), kernels.as_backend(self.inv, backend))
        return self._native[backend]

    def mul_idx(self, a: int, b: int) -> int:
        return int(self.mul[a * self.n + b])

    # --- masks ---------------------------------------------------------------

    def indices(self, mask: int) -> list[int]:
        out = []
        base = 0
        while mask:
            chunk = mask & 0xFFFFFFFFFFFFFFFF
            while chunk:
                low = chunk & -chunk
                out.append(base + low.bit_length() - 1)
                chunk ^= low
            mask >>= 64
            base += 64
        return out

    @staticmethod
    def mask_of_indices(idx: Iterable[int]) -> int:
        m = 0
        for i in idx:
            m |= 1 << i
        return m

    def mask_of(self, K: PermutationGroup | Iterable[Permutation]) -> int:
        if isinstance(K, PermutationGroup):
            if K._origin is not None and K._origin[0] is self:
                return K._origin[1]
            imgs = K.images
        else:
            imgs = [p.images for p in K]
        try:
            return self.mask_of_indices(self.index[p] for p in imgs)
        except KeyError as exc:
            raise NotASubgroup("not contained in the ambient group") from exc

    def mask_where(self, pred) -> int:
        return self.mask_of_indices(i for i, p in enumerate(self.perms) if pred(Permutation._trusted(p)))

    def element(self, i: int) -> Permutation:
        return Permutation._trusted(self.perms[i])

    def element_index(self, p: Permutation) -> int:
        try:
            return self.index[p.images]
        except KeyError as exc:
            raise NotASubgroup(f"{p} is not in the group") from exc

    def order_of(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul_idx(x, i)
            k += 1
        return k

    # --- kernels -----------------------------------------------------------

    def closure(self, gens: Sequence[int]) -> int:
        mul, _ = self.native()
        _, packed = kernels.closure(mul, self.n, list(gens), self.identity)
        return int.from_bytes(packed, "little")

    def conjugate_masks(self, mask: int, conjugators: Iterable[int]) -> list[int]:
        mul, inv = self.native()
        packed = kernels.conjugate_masks(mul, inv, self.n, self.indices(mask), list(conjugators))
        return [int.from_bytes(b, "little") for b in packed]

    def left_cosets(self, mask: int) -> tuple[list[int], list[int]]:
        """Coset label of each element, and one representative per coset."""
        mul, _ = self.native()
        return kernels.left_coset_labels(mul, self.n, self.indices(mask))

    def conjugate_index(self, g: int, x: int) -> int:
        return self.mul_idx(self.mul_idx(g, x), int(self.inv[g]))

    # --- derived structure -------------------------------------------------

    def subgroup(self, mask: int, gens: Sequence[int] | None = None) -> PermutationGroup:
        K = self._subgroups.get(mask)
        if K is None:
            g = [self.element(i) for i in gens] if gens is not None else ()
            K = PermutationGroup(self.degree, (self.perms[i] for i in self.indices(mask)), g, check=False)
            K._origin = (self, mask)
            self._subgroups[mask] = K
        return K

    def core_mask(self, mask: int) -> int:
        _, reps = self.left_cosets(mask)
        out = mask
        for m in self.conjugate_masks(mask, reps):
            out &= m
        return out

    def normalizer_mask(self, mask: int) -> int:
        conj = self.conjugate_masks(mask, range(self.n))
        return self.mask_of_indices(g for g, m in enumerate(conj) if m == mask)

    def fixed_coset_reps(self, mask: int, c: int) -> list[int]:
        """Representatives ``g`` of the left cosets ``gK`` with ``c g K = g K``."""
        _, reps = self.left_cosets(mask)
        inv = self.inv
        out = []
        for g in reps:
            y = self.mul_idx(self.mul_idx(int(inv[g]), c), g)
            if mask >> y & 1:
                out.append(g)
        return out

    def overgroup_masks(self, mask: int, gens: Sequence[int] | None = None) -> dict[int, list[int]]:
        """All subgroups containing ``mask`` (which must be a subgroup), with generators."""
        if gens is None:
            gens = self.generators_of(mask)
        found = {mask: list(gens)}
        frontier = [mask]
        while frontier:
            nxt = []
            for K in frontier:
                _, reps = self.left_cosets(K)
                kg = found[K]
                for g in reps:
                    if K >> g & 1:
                        continue
                    J = self.closure(kg + [g])
                    if J not in found:
                        found[J] = kg + [g]
                        nxt.append(J)
            frontier = nxt
        return found

    def generators_of(self, mask: int) -> list[int]:
        gens: list[int] = []
        span = 1 << self.identity
        for i in self.indices(mask):
            if not span >> i & 1:
                gens.append(i)
                span = self.closure(gens)
                if span == mask:
                    break
        return gens

    @cached_property
    def catalog(self) -> SubgroupCatalog:
        return SubgroupCatalog(self)


class SubgroupCatalog:
    """Every subgroup of a table's group, grouped into conjugacy classes.

    Built by cyclic extension over conjugacy-class representatives: each
    representative is joined with every cyclic subgroup of prime-power order
    it does not contain, and each new join contributes its whole class.
    Every subgroup is a join of prime-power cyclic subgroups, and joins
    commute with conjugation, so no class is missed.
    """

    def __init__(self, table: GroupTable):
        if table.n > MAX_ENUMERATION_ORDER:
            raise GroupTooLarge(f"group of order {table.n} exceeds enumeration bound {MAX_ENUMERATION_ORDER}")
        self.table = table
        cyclic: dict[int, int] = {}
        for i in range(table.n):
            k = table.order_of(i)
            if k > 1 and _is_prime_power(k):
                m = table.closure([i])
                cyclic.setdefault(m, i)
        self.cyclic = sorted(cyclic.items(), key=lambda t: (t[0].bit_count(), t[0]))
        self.class_of: dict[int, int] = {}
        self.classes: list[list[int]] = []
        self.class_gens: list[list[int]] = []
        self._add_class(1 << table.identity, [])
        todo = [0]
        while todo:
            cid = todo.pop()
            rep = self.classes[cid][0]
            gens = self.class_gens[cid]
            for cmask, c in self.cyclic:
                if cmask & ~rep == 0:
                    continue
                J = table.closure(gens + [c])
                if J not in self.class_of:
                    todo.append(self._add_class(J, gens + [c]))
        order = sorted(range(len(self.classes)), key=lambda c: (self.classes[c][0].bit_count(), self.classes[c][0]))
        remap = {old: new for new, old in enumerate(order)}
        self.classes = [self.classes[c] for c in order]
        self.class_gens = [self.class_gens[c] for c in order]
        self.class_of = {m: remap[c] for m, c in self.class_of.items()}

    def _add_class(self, mask: int, gens: list[int]) -> int:
        cid = len(self.classes)
        t = self.table
        _, reps = t.left_cosets(t.normalizer_mask(mask)) if mask.bit_count() > 1 else ([], [t.identity])
        masks = []
        for m in t.conjugate_masks(mask, reps):
            if m not in self.class_of:
                self.class_of[m] = cid
                masks.append(m)
        masks.sort()
        masks.remove(mask)
        self.classes.append([mask] + masks)
        self.class_gens.append(gens)
        return cid

    def all_masks(self) -> list[int]:
        return [m for cls in self.classes for m in cls]


def _is_prime_power(k: int) -> bool:
    p = next(d for d in range(2, k + 1) if k % d == 0)
    while k % p == 0:
        k //= p
    return k == 1


def _ambient_mask(G: PermutationGroup, K: PermutationGroup) -> int:
    if K.degree != G.degree:
        raise NotASubgroup("degree mismatch")
    return G.table.mask_of(K)


# --------------------------------------------------------------------------
# public operations


def all_subgroups(G: PermutationGroup) -> list[PermutationGroup]:
    """Every subgroup of ``G`` exactly once, ordered by (order, class)."""
    cat = G.table.catalog
    return [G.table.subgroup(m) for m in cat.all_masks()]


def subgroup_classes(G: PermutationGroup) -> list[list[PermutationGroup]]:
    """Subgroups of ``G`` grouped by ``G``-conjugacy; first entry is the class representative."""
    t = G.table
    cat = t.catalog
    out = []
    for masks, gens in zip(cat.classes, cat.class_gens):
        out.append([t.subgroup(masks[0], gens)] + [t.subgroup(m) for m in masks[1:]])
    return out


def core(G: PermutationGroup, K: PermutationGroup) -> PermutationGroup:
    """Intersection of all ``G``-conjugates of ``K``: the largest normal subgroup of ``G`` inside ``K``."""
    t = G.table
    mask = _ambient_mask(G, K)
    if t.closure(t.indices(mask)) != mask:
        raise NotASubgroup("K is not a subgroup")
    return t.subgroup(t.core_mask(mask))


def normalizer(G: PermutationGroup, K: PermutationGroup) -> PermutationGroup:
    t = G.table
    return t.subgroup(t.normalizer_mask(_ambient_mask(G, K)))


def are_conjugate(G: PermutationGroup, A: PermutationGroup, B: PermutationGroup) -> bool:
    t = G.table
    a, b = _ambient_mask(G, A), _ambient_mask(G, B)
    if a.bit_count() != b.bit_count():
        return False
    return b in t.conjugate_masks(a, range(t.n))


@dataclass(frozen=True)
class Coset:
    """The left coset ``representative * K``."""

    representative: Permutation
    elements: frozenset

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements


def left_cosets(G: PermutationGroup, K: PermutationGroup) -> list[Coset]:
    t = G.table
    mask = _ambient_mask(G, K)
    labels, reps = t.left_cosets(mask)
    members: list[list[Permutation]] = [[] for _ in reps]
    for i, lab in enumerate(labels):
        members[lab].append(t.element(i))
    return [Coset(t.element(r), frozenset(m)) for r, m in zip(reps, members)]


def fixed_cosets(G: PermutationGroup, K: PermutationGroup, c: Permutation) -> list[Coset]:
    """Left cosets ``gK`` with ``c g K = g K``, i.e. ``g^-1 c g`` in ``K``."""
    t = G.table
    mask = _ambient_mask(G, K)
    ci = t.element_index(c)
    fixed = set(t.fixed_coset_reps(mask, ci))
    return [cs for cs in left_cosets(G, K) if t.index[cs.representative.images] in fixed]


@dataclass(frozen=True)
class CosetAction:
    """``G`` acting on its left cosets of ``K`` by left multiplication."""

    cosets: tuple[Coset, ...]
    image: PermutationGroup
    _table: GroupTable
    _labels: tuple[int, ...]

    def __call__(self, g: Permutation) -> Permutation:
        t = self._table
        gi = t.element_index(g)
        return Permutation(self._labels[t.mul_idx(gi, t.index[cs.representative.images])] for cs in self.cosets)

    @property
    def is_faithful(self) -> bool:
        return self.image.order == self._table.n


def coset_action(G: PermutationGroup, K: PermutationGroup) -> CosetAction:
    """Permutation representation of ``G`` on ``G/K``; coset 0 is ``K`` itself."""
    t = G.table
    mask = _ambient_mask(G, K)
    labels, reps = t.left_cosets(mask)
    cosets = left_cosets(G, K)
    start = labels[t.identity]
    order = [start] + [i for i in range(len(reps)) if i != start]
    relabel = {old: new for new, old in enumerate(order)}
    labels2 = tuple(relabel[x] for x in labels)
    cosets2 = tuple(cosets[i] for i in order)
    act = CosetAction(cosets2, PermutationGroup(1, [(0,)], check=False), t, labels2)
    gens = [act(g) for g in G.generators]
    image = generate(gens, len(cosets2), check=False)
    return CosetAction(cosets2, image, t, labels2)


@dataclass(frozen=True)
class IntermediateSubgroup:
    group: PermutationGroup
    index_over_base: int
    index_in_ambient: int
    proper: bool


def intermediate_subgroups(G: PermutationGroup, H: PermutationGroup) -> list[IntermediateSubgroup]:
    """All ``K`` with ``H <= K <= G``, ordered by increasing order.

    ``H`` and ``G`` themselves are included with ``proper=False``.
    """
    t = G.table
    mask = _ambient_mask(G, H)
    if t.closure(t.indices(mask)) != mask:
        raise NotASubgroup("H is not a subgroup")
    found = t.overgroup_masks(mask)
    out = []
    for m, gens in sorted(found.items(), key=lambda kv: (kv[0].bit_count(), kv[0])):
        K = t.subgroup(m)
        out.append(IntermediateSubgroup(K, K.order // H.order, G.order // K.order, m != mask and m != t.full))
    return out


def maximal_subgroup_classes(G: PermutationGroup) -> list[PermutationGroup]:
    """One representative per conjugacy class of maximal subgroups."""
    t = G.table
    out = []
    for cls in subgroup_classes(G):
        K = cls[0]
        m = t.mask_of(K)
        if m == t.full:
            continue
        _, reps = t.left_cosets(m)
        gens = t.generators_of(m)
        if all(t.closure(gens + [g]) == t.full for g in reps if not m >> g & 1):
            out.append(K)
    return out


# --------------------------------------------------------------------------
# lattices


@dataclass
class SubgroupLattice:
    """Subgroups of a group with covering (maximal-subgroup) edges.

    ``edges`` holds pairs ``(lower, upper)`` of node indices.
    """

    nodes: list[PermutationGroup]
    edges: list[tuple[int, int]]
    class_ids: list[int]

    def node_index(self, K: PermutationGroup) -> int:
        return self.nodes.index(K)

    def covers(self, lower: PermutationGroup, upper: PermutationGroup) -> bool:
        return (self.node_index(lower), self.node_index(upper)) in set(self.edges)

    def to_dict(self) -> dict:
        return {
            "nodes": [
                {"id": i, "order": K.order, "class": c, "generators": [str(g) for g in K.generators]}
                for i, (K, c) in enumerate(zip(self.nodes, self.class_ids))
            ],
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self, name: str = "lattice") -> str:
        lines = [f"graph {name} {{", "  rankdir=BT;"]
        for i, K in enumerate(self.nodes):
            gens = ",".join(str(g) for g in K.generators) or "1"
            lines.append(f'  n{i} [label="{K.order}: <{gens}>"];')
        for a, b in self.edges:
            lines.append(f"  n{a} -- n{b};")
        lines.append("}")
        return "\n".join(lines)


def subgroup_lattice(G: PermutationGroup) -> SubgroupLattice:
    t = G.table
    cat = t.catalog
    masks = cat.all_masks()
    nodes = [t.subgroup(m) for m in masks]
    class_ids = [cat.class_of[m] for m in masks]
    by_size: dict[int, list[int]] = {}
    for i, m in enumerate(masks):
        by_size.setdefault(m.bit_count(), []).append(i)
    edges = []
    for j, upper in enumerate(masks):
        below = [i for i, m in enumerate(masks) if i != j and m & ~upper == 0]
        for i in below:
            lo = masks[i]
            if not any(k != i and masks[k] & ~upper == 0 and lo & ~masks[k] == 0 and masks[k] != lo for k in below):
                edges.append((i, j))
    return SubgroupLattice(nodes, edges, class_ids)
