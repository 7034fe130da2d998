"""Kostka numbers and the fast positivity / multiplicity-one predicates.

Counting goes through a memoized horizontal-strip recursion, exact at any
size thanks to Python integers.  The multiplicity-one predicates never
count: they run a single left-to-right scan that either produces a block
certificate or reports failure, so they stay fast even for partitions with
thousands of parts.
"""

from functools import lru_cache

from .errors import SizeMismatchError
from .partitions import (
    bounded_compositions,
    dominates,
    normalize,
    normalize_multi,
    part,
    sort_to_partition,
    tilde,
)


@lru_cache(maxsize=None)
def _strip_count(shape, w):
    while w and w[-1] == 0:
        w = w[:-1]
    if not w:
        return 1 if not shape else 0
    m = w[-1]
    total = 0
    for inner in _inner_shapes(shape, m):
        total += _strip_count(inner, w[:-1])
    return total


def _inner_shapes(shape, m):
    """All nu contained in shape with shape/nu a horizontal m-strip."""
    n_rows = len(shape)

    def rec(i, remaining):
        if i == n_rows:
            if remaining == 0:
                yield ()
            return
        hi = shape[i]
        lo = max(part(shape, i + 1), hi - remaining)
        for v in range(hi, lo - 1, -1):
            for rest in rec(i + 1, remaining - (hi - v)):
                yield (v,) + rest

    for nu in rec(0, m):
        yield tuple(v for v in nu if v > 0)


def kostka(shape, w):
    """Number of semistandard tableaux of the given shape and weight."""
    shape = normalize(shape)
    w = tuple(int(x) for x in w)
    if sum(shape) != sum(w):
        raise SizeMismatchError(f"|{shape}| != |{w}|")
    return _strip_count(shape, w)


def kostka_multi(shapes, w):
    """Number of semistandard multitableaux of the given shape and weight.

    Sums, over all splits of w into per-component weights of the right
    sizes, the product of the single-shape counts.
    """
    shapes = normalize_multi(shapes)
    w = tuple(int(x) for x in w)
    if sum(sum(c) for c in shapes) != sum(w):
        raise SizeMismatchError(f"|{shapes}| != |{w}|")

    def rec(j, remaining):
        if j == len(shapes):
            return 1 if all(x == 0 for x in remaining) else 0
        total = 0
        for v in bounded_compositions(sum(shapes[j]), remaining):
            factor = _strip_count(shapes[j], v)
            if factor:
                rest = tuple(remaining[i] - v[i] for i in range(len(remaining)))
                total += factor * rec(j + 1, rest)
        return total

    return rec(0, w)


def is_positive(shapes, mu):
    """Whether any multitableau of the given shape and weight exists.

    Decided without counting: positivity holds iff the row-wise component
    sum dominates the weight.
    """
    shapes = normalize_multi(shapes)
    mu, _ = sort_to_partition(mu)
    if sum(sum(c) for c in shapes) != sum(mu):
        raise SizeMismatchError(f"|{shapes}| != |{mu}|")
    return dominates(tilde(shapes), mu)


class _BlockRuns:
    """Run-length view of the block parts seen so far in one component.

    A block prefix stays admissible only while it has at most two runs of
    equal parts, and with two runs the first or the last run must have
    length one (all parts equal but the last, or first part above a flat
    tail).  Anything else can never extend to an admissible block.
    """

    __slots__ = ("runs",)

    def __init__(self):
        self.runs = []

    def push(self, value):
        if self.runs and self.runs[-1][0] == value:
            self.runs[-1][1] += 1
        else:
            self.runs.append([value, 1])

    def reset(self):
        self.runs.clear()

    @property
    def is_rectangular(self):
        return len(self.runs) <= 1

    def admissible(self):
        if len(self.runs) > 2:
            return False
        if len(self.runs) == 2:
            return self.runs[0][1] == 1 or self.runs[1][1] == 1
        return True


def is_multiplicity_one(shape, weight):
    """Index certificate iff exactly one tableau of this shape/weight exists.

    Greedy scan: grow the current block one row at a time, maintaining the
    running dominance of the block and the two admissible block shapes;
    cut a block as soon as its shape and weight sizes balance.  Returns
    the tuple of cut indices (1-based, ending at the weight length), or
    None when the count differs from one.
    """
    shape = normalize(shape)
    mu, _ = sort_to_partition(weight)
    if sum(shape) != sum(mu):
        raise SizeMismatchError(f"|{shape}| != |{mu}|")
    if len(shape) > len(mu):
        return None
    lam = shape + (0,) * (len(mu) - len(shape))
    indices = []
    block = _BlockRuns()
    lam_sum = mu_sum = 0
    for i in range(len(mu)):
        block.push(lam[i])
        if not block.admissible():
            return None
        lam_sum += lam[i]
        mu_sum += mu[i]
        if lam_sum < mu_sum:
            return None
        if lam_sum == mu_sum:
            indices.append(i + 1)
            block.reset()
            lam_sum = mu_sum = 0
    if lam_sum != 0:
        return None
    return tuple(indices)


def is_multiplicity_one_multi(shapes, weight):
    """Index certificate iff exactly one multitableau exists.

    Same greedy scan as the single-partition case, with the block
    conditions per component: within a block, at most one component may be
    non-rectangular (in one of the two admissible near-rectangular forms)
    and all others must be rectangular.
    """
    shapes = normalize_multi(shapes)
    mu, _ = sort_to_partition(weight)
    if sum(sum(c) for c in shapes) != sum(mu):
        raise SizeMismatchError(f"|{shapes}| != |{mu}|")
    if any(len(c) > len(mu) for c in shapes):
        return None
    l = len(mu)
    padded = [c + (0,) * (l - len(c)) for c in shapes]
    blocks = [_BlockRuns() for _ in shapes]
    indices = []
    lam_sum = mu_sum = 0
    for i in range(l):
        for j, b in enumerate(blocks):
            b.push(padded[j][i])
            if not b.admissible():
                return None
        if sum(1 for b in blocks if not b.is_rectangular) > 1:
            return None
        lam_sum += sum(padded[j][i] for j in range(len(shapes)))
        mu_sum += mu[i]
        if lam_sum < mu_sum:
            return None
        if lam_sum == mu_sum:
            indices.append(i + 1)
            for b in blocks:
                b.reset()
            lam_sum = mu_sum = 0
    if lam_sum != 0:
        return None
    return tuple(indices)


def _block_shape_ok(parts):
    """Condition (2) on a single-partition block, straight from its statement."""
    if len(parts) <= 1:
        return True
    head_flat = all(p == parts[0] for p in parts[:-1])
    tail_flat = parts[0] > parts[1] and all(p == parts[1] for p in parts[1:])
    return head_flat or tail_flat


def _block_prefix_dominates(a, b):
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return sa == sb


def verify_certificate(shape, mu, indices):
    """Re-check a single-partition certificate block by block.

    Deliberately independent of the scan: slices the blocks out and tests
    the dominance and shape conditions directly against their definitions.
    """
    shape = normalize(shape)
    mu = normalize(mu)
    indices = tuple(indices)
    if len(mu) == 0:
        return indices == () and shape == ()
    if list(indices) != sorted(set(indices)) or not indices or indices[-1] != len(mu):
        return False
    if any(i < 1 for i in indices):
        return False
    lam = shape + (0,) * (len(mu) - len(shape))
    if len(lam) != len(mu):
        return False
    prev = 0
    for cut in indices:
        lam_block = lam[prev:cut]
        mu_block = mu[prev:cut]
        if not _block_prefix_dominates(lam_block, mu_block):
            return False
        if not _block_shape_ok(lam_block):
            return False
        prev = cut
    return True


def _multi_block_shape_ok(component_blocks):
    """Condition (2) on a multipartition block: one near-rectangle at most."""
    irregular = 0
    for parts in component_blocks:
        if all(p == parts[0] for p in parts):
            continue
        near_last = (
            all(p == parts[0] for p in parts[:-1]) and parts[-1] < parts[0]
        )
        near_first = (
            parts[0] > parts[1] and all(p == parts[1] for p in parts[1:])
        )
        if not (near_last or near_first):
            return False
        irregular += 1
    return irregular <= 1


def verify_certificate_multi(shapes, mu, indices):
    """Re-check a multipartition certificate block by block."""
    shapes = normalize_multi(shapes)
    mu = normalize(mu)
    indices = tuple(indices)
    if len(mu) == 0:
        return indices == () and all(c == () for c in shapes)
    if list(indices) != sorted(set(indices)) or not indices or indices[-1] != len(mu):
        return False
    if any(i < 1 for i in indices):
        return False
    l = len(mu)
    if any(len(c) > l for c in shapes):
        return False
    padded = [c + (0,) * (l - len(c)) for c in shapes]
    prev = 0
    for cut in indices:
        comp_blocks = [p[prev:cut] for p in padded]
        tilde_block = tuple(sum(p[i] for p in padded) for i in range(prev, cut))
        if not _block_prefix_dominates(tilde_block, mu[prev:cut]):
            return False
        if not _multi_block_shape_ok(comp_blocks):
            return False
        prev = cut
    return True


def unique_weight(shape):
    """True iff the shape itself is the only weight giving a unique tableau.

    Holds exactly when consecutive parts (and the last part against zero)
    differ by at most one.
    """
    shape = normalize(shape)
    return all(
        part(shape, i) - part(shape, i + 1) <= 1 for i in range(len(shape))
    )


def unique_weight_multi(shapes):
    """True iff the row-wise component sum is the only unique-count weight.

    At every row boundary either the summed drop is at most one, or at
    least two components drop there.
    """
    shapes = normalize_multi(shapes)
    summed = tilde(shapes)
    for i in range(len(summed)):
        if part(summed, i) - part(summed, i + 1) <= 1:
            continue
        droppers = sum(
            1 for c in shapes if part(c, i) - part(c, i + 1) >= 1
        )
        if droppers < 2:
            return False
    return True
