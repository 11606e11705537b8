# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for group tables.

A group of order ``n`` is described by a flat row-major multiplication
table ``mul`` with ``mul[i*n + j] = index(e_i * e_j)`` and an inverse map
``inv``.  Subsets are returned as little-endian packed bitmasks (``bytes``)
so the caller can turn them into Python integers with ``int.from_bytes``.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


def closure(const int[::1] mul, int n, gens, int identity):
    """Subgroup generated by ``gens``: (sorted member indices, packed mask)."""
    cdef Py_ssize_t ng = len(gens)
    cdef int *g = <int *> malloc((ng + 1) * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef unsigned char *seen = <unsigned char *> malloc(n)
    cdef Py_ssize_t nbytes = (n + 7) // 8
    cdef unsigned char *bits = <unsigned char *> malloc(nbytes)
    cdef Py_ssize_t head = 0, tail = 0, k
    cdef int x, y, i
    if g == NULL or queue == NULL or seen == NULL or bits == NULL:
        free(g); free(queue); free(seen); free(bits)
        raise MemoryError()
    try:
        for k in range(ng):
            g[k] = gens[k]
        memset(seen, 0, n)
        memset(bits, 0, nbytes)
        seen[identity] = 1
        queue[tail] = identity
        tail += 1
        while head < tail:
            x = queue[head]
            head += 1
            for k in range(ng):
                y = mul[x * n + g[k]]
                if not seen[y]:
                    seen[y] = 1
                    queue[tail] = y
                    tail += 1
        members = []
        for i in range(n):
            if seen[i]:
                members.append(i)
                bits[i >> 3] |= <unsigned char> (1 << (i & 7))
        return members, bits[:nbytes]
    finally:
        free(g); free(queue); free(seen); free(bits)


def conjugate_masks(const int[::1] mul, const int[::1] inv, int n,
                    members, conjugators):
    """Packed masks of ``g K g^-1`` for every ``g`` in ``conjugators``."""
    cdef Py_ssize_t m = len(members)
    cdef Py_ssize_t nbytes = (n + 7) // 8
    cdef int *mem = <int *> malloc((m + 1) * sizeof(int))
    cdef unsigned char *bits = <unsigned char *> malloc(nbytes)
    cdef Py_ssize_t k
    cdef int g, gi, y
    if mem == NULL or bits == NULL:
        free(mem); free(bits)
        raise MemoryError()
    out = []
    try:
        for k in range(m):
            mem[k] = members[k]
        for g in conjugators:
            gi = inv[g]
            memset(bits, 0, nbytes)
            for k in range(m):
                y = mul[mul[g * n + mem[k]] * n + gi]
                bits[y >> 3] |= <unsigned char> (1 << (y & 7))
            out.append(bits[:nbytes])
        return out
    finally:
        free(mem); free(bits)


def left_coset_labels(const int[::1] mul, int n, members):
    """Label every element by the index of its left coset ``gK``."""
    cdef Py_ssize_t m = len(members)
    cdef int *mem = <int *> malloc((m + 1) * sizeof(int))
    cdef int *label = <int *> malloc(n * sizeof(int))
    cdef Py_ssize_t k
    cdef int g, count = 0
    if mem == NULL or label == NULL:
        free(mem); free(label)
        raise MemoryError()
    try:
        for k in range(m):
            mem[k] = members[k]
        for g in range(n):
            label[g] = -1
        reps = []
        for g in range(n):
            if label[g] >= 0:
                continue
            reps.append(g)
            for k in range(m):
                label[mul[g * n + mem[k]]] = count
            count += 1
        return [label[g] for g in range(n)], reps
    finally:
        free(mem); free(label)
