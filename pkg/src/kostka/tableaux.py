"""Semistandard Young tableaux and multitableaux.

A tableau is a tuple of row tuples; its shape is the tuple of row lengths.
A multitableau is a tuple of tableaux, one per multipartition component.
Enumeration here is deliberately brute force (backtracking over horizontal
strips): it serves as the independent oracle that the fast counting
predicates are checked against.
"""

from itertools import product

from .errors import NotDominatedError, ShapeMismatchError, SizeMismatchError
from .partitions import (
    bounded_compositions,
    dominates,
    normalize,
    normalize_multi,
    part,
    tilde,
)


def shape_of(rows):
    return tuple(len(r) for r in rows)


def is_semistandard(rows, shape=None):
    """True iff rows weakly increase and columns strictly increase.

    If a shape is supplied, row lengths must match it exactly.
    """
    rows = tuple(tuple(r) for r in rows)
    if shape is not None and shape_of(rows) != normalize(shape):
        raise ShapeMismatchError(f"rows {shape_of(rows)} vs shape {tuple(shape)}")
    lengths = shape_of(rows)
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    for r in rows:
        if any(r[c] > r[c + 1] for c in range(len(r) - 1)):
            return False
    for i in range(len(rows) - 1):
        if any(rows[i][c] >= rows[i + 1][c] for c in range(len(rows[i + 1]))):
            return False
    return True


def weight(rows):
    """Composition counting occurrences of each entry, up to the largest."""
    entries = [e for r in rows for e in r]
    top = max(entries, default=0)
    return tuple(sum(1 for e in entries if e == i) for i in range(1, top + 1))


def multi_weight(components):
    """Coordinate-wise sum of the component weights."""
    weights = [weight(c) for c in components]
    depth = max((len(w) for w in weights), default=0)
    return tuple(sum(part(w, i) for w in weights) for i in range(depth))


def greedy_tableau(shape, mu):
    """The bottom-up greedy filling of shape by horizontal strips.

    Entries are placed from the largest down: each entry's boxes go on the
    lowest rows first (longest columns first), right to left within a row,
    never directly above a box of the same pass or an unfilled box.  The
    result is semistandard with weight mu whenever shape dominates mu.
    """
    shape = normalize(shape)
    mu = normalize(mu)
    if sum(shape) != sum(mu):
        raise SizeMismatchError(f"|{shape}| != |{mu}|")
    if not dominates(shape, mu):
        raise NotDominatedError(f"{shape} does not dominate {mu}")
    rows = [[0] * width for width in shape]
    cur = list(shape)
    for entry in range(len(mu), 0, -1):
        remaining = mu[entry - 1]
        prev = tuple(cur)
        for i in range(len(cur) - 1, -1, -1):
            free = cur[i] - part(prev, i + 1)
            take = min(remaining, free)
            for c in range(cur[i] - take, cur[i]):
                rows[i][c] = entry
            cur[i] -= take
            remaining -= take
            if remaining == 0:
                break
    return tuple(tuple(r) for r in rows)


def _column_lengths(shape):
    if not shape:
        return ()
    return tuple(sum(1 for row in shape if row > c) for c in range(shape[0]))


def redistribute_columns(rows, target):
    """Split a tableau's columns into a multitableau of the target shape.

    Columns are processed left to right; each goes to the lowest-indexed
    component still needing a column of that exact length, preserving
    left-to-right order within every component.  Requires the row-wise sum
    of the target to equal the tableau's shape.
    """
    rows = tuple(tuple(r) for r in rows)
    target = normalize_multi(target)
    shape = shape_of(rows)
    if tilde(target) != shape:
        raise ShapeMismatchError(f"tilde {tilde(target)} != shape {shape}")
    needed = []
    for comp in target:
        counts = {}
        for length in _column_lengths(comp):
            counts[length] = counts.get(length, 0) + 1
        needed.append(counts)
    assigned = [[] for _ in target]
    width = shape[0] if shape else 0
    for c in range(width):
        col = [rows[i][c] for i in range(len(shape)) if shape[i] > c]
        length = len(col)
        for j, counts in enumerate(needed):
            if counts.get(length, 0) > 0:
                counts[length] -= 1
                assigned[j].append(col)
                break
        else:
            raise ShapeMismatchError(f"no component needs a column of length {length}")
    components = []
    for j, comp in enumerate(target):
        cols = assigned[j]
        comp_rows = tuple(
            tuple(col[i] for col in cols if len(col) > i) for i in range(len(comp))
        )
        components.append(comp_rows)
    return tuple(components)


def _strips_between(inner, outer, m):
    """All nu with inner <= nu <= outer and nu/inner a horizontal m-strip."""
    n_rows = len(outer)

    def rec(i, remaining):
        if i == n_rows:
            if remaining == 0:
                yield ()
            return
        lo = part(inner, i)
        hi = min(outer[i], lo + remaining)
        if i >= 1:
            hi = min(hi, part(inner, i - 1))  # at most one new box per column
        for v in range(lo, hi + 1):
            for rest in rec(i + 1, remaining - (v - lo)):
                yield (v,) + rest

    for nu in rec(0, m):
        yield tuple(v for v in nu if v > 0)


def _chain_to_rows(shape, chain):
    rows = [[0] * width for width in shape]
    prev = ()
    for entry, nu in enumerate(chain, start=1):
        for i in range(len(nu)):
            for c in range(part(prev, i), nu[i]):
                rows[i][c] = entry
        prev = nu
    return tuple(tuple(r) for r in rows)


def enumerate_tableaux(shape, w):
    """All semistandard tableaux of the given shape and weight.

    Ordered lexicographically by row-major entry sequence; the list length
    is the Kostka number.
    """
    shape = normalize(shape)
    w = tuple(int(x) for x in w)
    if sum(shape) != sum(w):
        raise SizeMismatchError(f"|{shape}| != |{w}|")
    results = []

    def extend(i, inner, chain):
        if i == len(w):
            results.append(_chain_to_rows(shape, chain))
            return
        for nu in _strips_between(inner, shape, w[i]):
            extend(i + 1, nu, chain + [nu])

    extend(0, (), [])
    results.sort(key=lambda rows: tuple(e for r in rows for e in r))
    return results


def enumerate_multitableaux(shapes, w):
    """All semistandard multitableaux of the given shape and total weight.

    Ordered lexicographically by the concatenated component entry
    sequences.
    """
    shapes = normalize_multi(shapes)
    w = tuple(int(x) for x in w)
    if sum(sum(c) for c in shapes) != sum(w):
        raise SizeMismatchError(f"|{shapes}| != |{w}|")
    sizes = [sum(c) for c in shapes]
    results = []
    for split in _weight_splits(sizes, w):
        per_comp = [enumerate_tableaux(shapes[j], split[j]) for j in range(len(shapes))]
        if any(not lst for lst in per_comp):
            continue
        results.extend(product(*per_comp))
    results.sort(
        key=lambda mt: tuple(e for rows in mt for r in rows for e in r)
    )
    return results


def _weight_splits(sizes, w):
    """All ways to split weight w into per-component weights of given sizes."""
    if not sizes:
        if all(x == 0 for x in w):
            yield ()
        return
    for head in bounded_compositions(sizes[0], w):
        rest_w = tuple(w[i] - head[i] for i in range(len(w)))
        for rest in _weight_splits(sizes[1:], rest_w):
            yield (head,) + rest
