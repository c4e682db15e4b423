"""Concrete abstract rigidity matroids: generic rigidity matroids and the cycle matroid."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import ceil, comb

from .edges import complete_mask, edge_list, vmask
from .errors import GenericityNotCertified
from .linalg import exact_rank
from .matroid import Matroid, cycle_matroid, from_matrix

COORD_BOUND = 1 << 20
RESAMPLES = 8


def rank_formula(k: int, m: int) -> int:
    """Rank of K(U), |U| = k, in any m-dimensional abstract rigidity matroid."""
    if k <= m + 1:
        return comb(k, 2)
    return m * k - comb(m + 1, 2)


@dataclass(frozen=True)
class Embedding:
    n: int
    m: int
    coords: tuple[tuple[Fraction, ...], ...]
    bound: int = COORD_BOUND

    def __post_init__(self):
        coords = tuple(tuple(Fraction(x) for x in p) for p in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} points, got {len(coords)}")
        if any(len(p) != self.m for p in coords):
            raise ValueError(f"every point needs {self.m} coordinates")
        if any(abs(x) > self.bound for p in coords for x in p):
            raise ValueError(f"coordinates must lie in [-{self.bound}, {self.bound}]")
        if len(set(coords)) != self.n:
            raise ValueError("embedding has coincident points")

    @classmethod
    def random(cls, n: int, m: int, rng: random.Random, bound: int = COORD_BOUND) -> "Embedding":
        while True:
            pts = tuple(tuple(Fraction(rng.randint(-bound, bound)) for _ in range(m))
                        for _ in range(n))
            if len(set(pts)) == n:
                return cls(n, m, pts, bound)

    def restricted(self, vertices) -> "Embedding":
        """The embedding of the listed vertices, relabelled 0..k-1 in the given order."""
        vs = list(vertices)
        return Embedding(len(vs), self.m, tuple(self.coords[v] for v in vs), self.bound)

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m,
                "coords": [[f"{x.numerator}/{x.denominator}" for x in p] for p in self.coords]}

    @classmethod
    def from_json(cls, data: dict) -> "Embedding":
        coords = tuple(tuple(Fraction(x) for x in p) for p in data["coords"])
        bound = max([COORD_BOUND] + [ceil(abs(x)) for p in coords for x in p])
        return cls(int(data["n"]), int(data["m"]), coords, bound)


@dataclass(frozen=True)
class RigidityMatrix:
    """Rows indexed by edges (lexicographic); column k*n + v holds coordinate k of vertex v."""

    n: int
    m: int
    rows: tuple[tuple[Fraction, ...], ...]

    def rank(self, edge_indices=None) -> int:
        idx = range(len(self.rows)) if edge_indices is None else edge_indices
        return exact_rank([self.rows[i] for i in idx])


def rigidity_matrix(p: Embedding) -> RigidityMatrix:
    n, m = p.n, p.m
    rows = []
    for u, v in edge_list(n):
        row = [Fraction(0)] * (m * n)
        for k in range(m):
            d = p.coords[u][k] - p.coords[v][k]
            row[k * n + u] = d
            row[k * n + v] = -d
        rows.append(tuple(row))
    return RigidityMatrix(n, m, tuple(rows))


def rigidity_matroid(p: Embedding, seed: int = 0) -> Matroid:
    """The linear matroid of the rows of p's rigidity matrix (no genericity check)."""
    return from_matrix(p.n, rigidity_matrix(p).rows, seed=seed)


def genericity_failures(M: Matroid, m: int) -> list[frozenset[int]]:
    """Vertex sets U whose K(U) misses the abstract-rigidity rank formula."""
    bad = []
    for k in range(M.n + 1):
        expect = rank_formula(k, m)
        for U in combinations(range(M.n), k):
            if M.rank(complete_mask(vmask(U), M.n)) != expect:
                bad.append(frozenset(U))
    return bad


def generic_embedding(n: int, m: int, seed: int) -> tuple[Embedding, Matroid]:
    if n < m + 1:
        raise ValueError(f"need n >= m+1, got n={n}, m={m}")
    rng = random.Random(seed)
    for _ in range(1 + RESAMPLES):
        p = Embedding.random(n, m, rng)
        M = rigidity_matroid(p, seed)
        if not genericity_failures(M, m):
            return p, M
    raise GenericityNotCertified(
        f"no certified generic embedding for n={n}, m={m}, seed={seed} after {1 + RESAMPLES} draws")


@lru_cache(maxsize=64)
def generic_rigidity_matroid(n: int, m: int, seed: int = 0) -> Matroid:
    return generic_embedding(n, m, seed)[1]


def cycle_matroid_arm(n: int) -> Matroid:
    if n < 2:
        raise ValueError("the cycle matroid needs at least two vertices")
    return cycle_matroid(n)
