"""Pure-Python twin of ``_kernels.pyx``; same signatures, same results."""

from __future__ import annotations

from collections import deque
from typing import Sequence


def _pack(indices, n: int) -> bytes:
    bits = bytearray((n + 7) // 8)
    for i in indices:
        bits[i >> 3] |= 1 << (i & 7)
    return bytes(bits)


def closure(mul: Sequence[int], n: int, gens, identity: int):
    gens = list(gens)
    seen = bytearray(n)
    seen[identity] = 1
    queue = deque([identity])
    while queue:
        row = queue.popleft() * n
        for g in gens:
            y = mul[row + g]
            if not seen[y]:
                seen[y] = 1
                queue.append(y)
    members = [i for i in range(n) if seen[i]]
    return members, _pack(members, n)


def conjugate_masks(mul: Sequence[int], inv: Sequence[int], n: int, members, conjugators):
    out = []
    for g in conjugators:
        gi = inv[g]
        row = g * n
        out.append(_pack((mul[mul[row + x] * n + gi] for x in members), n))
    return out


def left_coset_labels(mul: Sequence[int], n: int, members):
    label = [-1] * n
    reps = []
    for g in range(n):
        if label[g] >= 0:
            continue
        c = len(reps)
        reps.append(g)
        row = g * n
        for x in members:
            label[mul[row + x]] = c
    return label, reps
