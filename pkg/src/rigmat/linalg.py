"""Exact and modular rank computations for small rational matrices."""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from typing import Sequence

from sympy import nextprime

Row = Sequence[Fraction]


def integer_rows(rows: Sequence[Row]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; row rank is unchanged."""
    out = []
    for row in rows:
        d = 1
        for x in row:
            d = lcm(d, Fraction(x).denominator)
        out.append([int(Fraction(x) * d) for x in row])
    return out


def exact_rank(rows: Sequence[Row]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = integer_rows(rows)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            f = a[r][col]
            row_r, row_p = a[r], a[rank]
            for c in range(col, ncols):
                row_r[c] = (p * row_r[c] - f * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def random_prime(seed: int, bits: int = 62) -> int:
    rng = random.Random(seed)
    return int(nextprime(rng.randrange(1 << (bits - 1), 1 << bits)))


def reduce_mod(rows: Sequence[Row], p: int) -> list[list[int]]:
    out = []
    for row in rows:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {p}")
            r.append(x.numerator * pow(x.denominator, -1, p) % p)
        out.append(r)
    return out


class Echelon:
    """Row echelon basis mod p, grown one vector at a time.

    ``rows`` holds (pivot column, vector normalised to 1 at the pivot).
    Instances are treated as immutable so they can be shared between subsets.
    """

    __slots__ = ("p", "rows")

    def __init__(self, p: int, rows: tuple = ()):
        self.p = p
        self.rows = rows

    def reduce(self, vec: Sequence[int]) -> list[int]:
        p = self.p
        v = list(vec)
        for piv, b in self.rows:
            c = v[piv]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, b)]
        return v

    def extended(self, vec: Sequence[int]) -> "Echelon | None":
        """A new echelon including ``vec``, or None when vec is already in the span."""
        v = self.reduce(vec)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return None
        inv = pow(v[piv], -1, self.p)
        v = [x * inv % self.p for x in v]
        return Echelon(self.p, self.rows + ((piv, v),))

    def __len__(self) -> int:
        return len(self.rows)


def modular_rank(rows: Sequence[Sequence[int]], p: int) -> int:
    ech = Echelon(p)
    for r in rows:
        nxt = ech.extended(r)
        if nxt is not None:
            ech = nxt
    return len(ech)
