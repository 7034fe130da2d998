"""Partitions, compositions, multipartitions, and the dominance order.

Partitions are plain tuples of positive integers in weakly decreasing
order; the empty partition is ().  Compositions are tuples of non-negative
integers.  Multipartitions are tuples of partitions (empty components
allowed).  All operations accept zero-padded input and strip zeros on
normalization, so equality stays structural.
"""

from .errors import NegativeEntryError, NonMonotoneError, SizeMismatchError

Partition = tuple
Composition = tuple
Multipartition = tuple


def normalize(raw):
    """Canonical partition: zeros stripped, weakly decreasing enforced."""
    parts = tuple(int(p) for p in raw)
    if any(p < 0 for p in parts):
        raise NegativeEntryError(f"negative part in {parts}")
    parts = tuple(p for p in parts if p > 0)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise NonMonotoneError(f"parts increase in {parts}")
    return parts


def normalize_multi(components):
    """Canonical multipartition: each component normalized, order kept."""
    return tuple(normalize(c) for c in components)


def size(p):
    return sum(p)


def multi_size(m):
    return sum(sum(c) for c in m)


def part(p, i):
    """Part i (0-indexed) with zero padding past the length."""
    return p[i] if i < len(p) else 0


def dominates(a, b):
    """True iff every prefix sum of a is >= the prefix sum of b."""
    a, b = normalize(a), normalize(b)
    if sum(a) != sum(b):
        raise SizeMismatchError(f"|{a}| != |{b}|")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += part(a, i)
        sb += part(b, i)
        if sa < sb:
            return False
    return True


def contains(outer, inner):
    """True iff the diagram of inner fits inside that of outer."""
    outer, inner = normalize(outer), normalize(inner)
    return all(part(outer, i) >= part(inner, i) for i in range(len(inner)))


def is_horizontal_strip(outer, inner):
    """Whether outer/inner is a horizontal strip, with the strip size.

    Returns (True, |outer| - |inner|) when inner is contained in outer and
    the skew diagram has at most one box per column; (False, 0) otherwise.
    Non-containment is a false return, not an error.
    """
    outer, inner = normalize(outer), normalize(inner)
    if not contains(outer, inner):
        return False, 0
    if any(part(outer, i + 1) > part(inner, i) for i in range(len(outer))):
        return False, 0
    return True, sum(outer) - sum(inner)


def tilde(m):
    """Row-wise sum of a multipartition's components."""
    m = normalize_multi(m)
    depth = max((len(c) for c in m), default=0)
    return tuple(sum(part(c, i) for c in m) for i in range(depth))


def sort_to_partition(w):
    """Partition rearrangement of a composition, with the stable permutation.

    The permutation lists original indices in decreasing order of value,
    ties keeping input order; the returned partition drops zero parts.
    """
    w = tuple(int(x) for x in w)
    if any(x < 0 for x in w):
        raise NegativeEntryError(f"negative part in {w}")
    order = tuple(sorted(range(len(w)), key=lambda i: (-w[i], i)))
    partition = tuple(w[i] for i in order if w[i] > 0)
    return partition, order


def conjugate(p):
    """Transpose of the Young diagram."""
    p = normalize(p)
    if not p:
        return ()
    return tuple(sum(1 for row in p if row > j) for j in range(p[0]))


def partitions_of(n, max_part=None):
    """All partitions of n in decreasing lexicographic order."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def bounded_compositions(total, caps):
    """All tuples v with 0 <= v[i] <= caps[i] and sum(v) == total."""
    caps = tuple(caps)
    if total > sum(caps):
        return
    if not caps:
        if total == 0:
            yield ()
        return
    tail_room = sum(caps[1:])
    for first in range(max(0, total - tail_room), min(caps[0], total) + 1):
        for rest in bounded_compositions(total - first, caps[1:]):
            yield (first,) + rest


def multipartitions_of(n, r):
    """All r-component multipartitions of n, components in a fixed order."""
    if r == 0:
        if n == 0:
            yield ()
        return
    for head_size in range(n, -1, -1):
        for head in partitions_of(head_size):
            for rest in multipartitions_of(n - head_size, r - 1):
                yield (head,) + rest
