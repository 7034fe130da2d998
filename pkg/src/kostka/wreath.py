"""Character combinatorics of cyclic wreath products with symmetric groups.

Irreducible characters of the wreath product of a cyclic group of order r
with S_n are labelled by r-component multipartitions of n; component j
corresponds to the character c -> c^(j-1).  The permutation character
induced from the order-d subgroup (d dividing r) wreathed with a Young
subgroup decomposes with multipartition Kostka numbers as multiplicities,
supported on labels whose component j is empty unless d divides j - 1.
"""

from math import factorial
from typing import NamedTuple

from .counting import kostka_multi
from .errors import InvalidDivisorError
from .partitions import (
    conjugate,
    dominates,
    normalize,
    normalize_multi,
    partitions_of,
    tilde,
)


class Constituent(NamedTuple):
    label: tuple
    multiplicity: int


def hook_length_degree(shape):
    """Number of standard Young tableaux of the shape (hook length formula)."""
    shape = normalize(shape)
    conj = conjugate(shape)
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(sum(shape)) // hooks


def irreducible_degree(label):
    """Degree of the irreducible character labelled by a multipartition.

    For abelian base groups every linear factor is 1, leaving
    n! * prod SYT(component) / prod |component|!.
    """
    label = normalize_multi(label)
    n = sum(sum(c) for c in label)
    deg = factorial(n)
    for c in label:
        deg = deg * hook_length_degree(c) // factorial(sum(c))
    return deg


def _allowed_labels(r, d, n):
    """Labels with component j empty unless d divides j - 1."""
    allowed = [j for j in range(r) if j % d == 0]

    def assign(slots, remaining):
        if not slots:
            if remaining == 0:
                yield {}
            return
        for head_size in range(remaining, -1, -1):
            for head in partitions_of(head_size):
                for rest in assign(slots[1:], remaining - head_size):
                    yield {slots[0]: head, **rest}

    for chosen in assign(allowed, n):
        yield tuple(chosen.get(j, ()) for j in range(r))


def decompose_permutation_character(r, d, mu):
    """Constituents of the permutation character for parameters (r, d, mu).

    Returns every allowed-support label paired with its multipartition
    Kostka multiplicity against mu, zero multiplicities omitted, ordered
    lexicographically by label.
    """
    mu = normalize(mu)
    if r < 1 or d < 1 or r % d != 0:
        raise InvalidDivisorError(f"{d} does not divide {r}")
    n = sum(mu)
    out = []
    for label in _allowed_labels(r, d, n):
        if not dominates(tilde(label), mu):
            continue
        m = kostka_multi(label, mu)
        if m:
            out.append(Constituent(label, m))
    out.sort(key=lambda c: c.label)
    return out
