"""Finite matroids on (subsets of) the edge set K(V).

Every matroid answers rank queries through one of three backends:

* ``BasisFamily`` -- an explicit list of bases;
* ``LinearRep``   -- one exact rational row vector per edge;
* ``CycleGraph``  -- the cycle matroid of K(V), rank = |V(X)| - #components.

For ground sets of at most ``TABLE_BITS`` edges the whole rank function is
tabulated once (a numpy array indexed by edge bit mask) and every family
enumeration is a vectorised scan of that table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import ceil
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .edges import EdgeSet, edge_list, full_mask, iter_bits, num_edges, support_mask, vertices_of
from .errors import (CapExceeded, EmptyFamily, ExchangeViolation, ResidueMismatch, TNotClosed,
                     UnequalCardinality)
from .linalg import Echelon, exact_rank, random_prime, reduce_mod
from .reports import AxiomReport, Witnesses

ENUM_CAP = 21            # max ground size for family enumeration
TABLE_BITS = 21          # max ambient edge count for a full rank table
AUTO_TABLE_BITS = 15     # tables are built eagerly up to this size
CLOSURE_CAP = 15         # exhaustive closure-axiom validation (2^15 subsets)
CROSSCHECK_FRACTION = 0.01


# -- numpy helpers ----------------------------------------------------------

@lru_cache(maxsize=8)
def submasks(ground: int) -> np.ndarray:
    """All submasks of ``ground`` in increasing order, as int64."""
    bits = list(iter_bits(ground))
    idx = np.arange(1 << len(bits), dtype=np.int64)
    out = np.zeros_like(idx)
    for j, b in enumerate(bits):
        out |= ((idx >> j) & 1) << b
    out.setflags(write=False)
    return out


def popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.int16)


def _sorted_masks(arr: np.ndarray) -> list[int]:
    arr = np.unique(arr)
    order = np.lexsort((arr, popcount(arr)))
    return [int(x) for x in arr[order]]


@dataclass
class FamilyReport:
    kind: str
    members: list[EdgeSet]

    def __iter__(self) -> Iterator[EdgeSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def __contains__(self, X) -> bool:
        return X in set(self.members)

    def bits(self) -> list[int]:
        return [X.bits for X in self.members]


# -- backends ---------------------------------------------------------------

class BasisFamily:
    kind = "bases"

    def __init__(self, bases: Sequence[int]):
        self.bases = tuple(sorted(set(bases)))

    def rank(self, x: int, n: int) -> int:
        return max((b & x).bit_count() for b in self.bases)

    def table(self, n: int, ground: int) -> np.ndarray:
        subs = submasks(ground)
        indep = np.zeros(1 << num_edges(n), dtype=bool)
        indep[np.array(self.bases, dtype=np.int64)] = True
        for e in iter_bits(ground):
            lo = subs[(subs >> e) & 1 == 0]
            indep[lo] |= indep[lo | (1 << e)]
        rank = np.where(indep, np.bitwise_count(np.arange(indep.size, dtype=np.int64)), 0)
        rank = rank.astype(np.int8)
        for e in iter_bits(ground):
            lo = subs[(subs >> e) & 1 == 0]
            hi = lo | (1 << e)
            rank[hi] = np.maximum(rank[hi], rank[lo])
        return rank


class CycleGraph:
    kind = "cycle"

    def rank(self, x: int, n: int) -> int:
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        table = edge_list(n)
        for i in iter_bits(x):
            u, v = table[i]
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                r += 1
        return r

    def table(self, n: int, ground: int) -> np.ndarray:
        subs = submasks(ground)
        # min-label propagation: after n rounds each vertex carries its component minimum
        labels = np.tile(np.arange(n, dtype=np.int8), (subs.size, 1))
        support = np.zeros(subs.size, dtype=np.int64)
        edges = edge_list(n)
        present = {i: ((subs >> i) & 1).astype(bool) for i in iter_bits(ground)}
        for i, on in present.items():
            u, v = edges[i]
            support |= np.where(on, (1 << u) | (1 << v), 0)
        for _ in range(max(n - 1, 1)):
            for i, on in present.items():
                u, v = edges[i]
                low = np.minimum(labels[:, u], labels[:, v])
                labels[on, u] = low[on]
                labels[on, v] = low[on]
        roots = labels == np.arange(n, dtype=np.int8)
        in_support = ((support[:, None] >> np.arange(n)) & 1).astype(bool)
        components = (roots & in_support).sum(axis=1)
        out = np.zeros(1 << num_edges(n), dtype=np.int8)
        out[subs] = (popcount(support) - components).astype(np.int8)
        return out


def _splitmix(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
    return x ^ (x >> 31)


class LinearRep:
    """Row vectors over Q, one per edge of K(V).

    Ranks are computed modulo a seeded random 62-bit prime and cross-checked
    against exact rational elimination on a seeded sample of at least 1% of
    the computed values.  Any disagreement raises ResidueMismatch.
    """

    kind = "linear"

    def __init__(self, rows: Sequence[Sequence[Fraction]], seed: int = 0):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        self.seed = seed
        self.prime = random_prime(seed)
        while True:
            try:
                self.mod_rows = reduce_mod(self.rows, self.prime)
                break
            except ZeroDivisionError:
                self.prime = random_prime(self.prime)
        self.checked = 0
        self.queries = 0

    def exact(self, x: int) -> int:
        return exact_rank([self.rows[i] for i in iter_bits(x)])

    def _verify(self, x: int, r: int) -> None:
        self.checked += 1
        exact = self.exact(x)
        if exact != r:
            raise ResidueMismatch(f"rank mod {self.prime} is {r} but exact rank is {exact} "
                                  f"for edge mask {x:#x}")

    def rank(self, x: int, n: int) -> int:
        ech = Echelon(self.prime)
        for i in iter_bits(x):
            nxt = ech.extended(self.mod_rows[i])
            if nxt is not None:
                ech = nxt
        r = len(ech)
        self.queries += 1
        if _splitmix(x ^ self.seed) % 64 == 0:
            self._verify(x, r)
        return r

    def table(self, n: int, ground: int) -> np.ndarray:
        subs = submasks(ground)
        out = np.zeros(1 << num_edges(n), dtype=np.int8)
        if subs.size > 1 << AUTO_TABLE_BITS:
            for x in subs.tolist():
                out[x] = self.rank(x, n)
            return out
        ech: dict[int, Echelon] = {0: Echelon(self.prime)}
        for x in subs[1:].tolist():
            top = x.bit_length() - 1
            prev = ech[x ^ (1 << top)]
            nxt = prev.extended(self.mod_rows[top])
            ech[x] = prev if nxt is None else nxt
            out[x] = len(ech[x])
        rng = random.Random(self.seed)
        sample = rng.sample(range(subs.size), max(1, ceil(CROSSCHECK_FRACTION * subs.size)))
        for j in sorted(set(sample) | {subs.size - 1}):
            x = int(subs[j])
            self._verify(x, int(out[x]))
        self.queries += subs.size
        return out


# -- the matroid ------------------------------------------------------------

class Matroid:
    """Immutable matroid on ``ground`` (a bit mask inside K(V), |V| = n)."""

    def __init__(self, n: int, backend, ground: int | None = None, _root: "Matroid | None" = None):
        self.n = n
        self.backend = backend
        self.ground = full_mask(n) if ground is None else ground
        if self.ground & ~full_mask(n):
            raise ValueError("ground set must lie inside K(V)")
        self._root = _root if _root is not None else self
        self._rank_tab: np.ndarray | None = None
        self._cl_tab: np.ndarray | None = None
        self._cache: dict[int, int] = {}
        self._r: int | None = None

    # representation ------------------------------------------------------

    @property
    def kind(self) -> str:
        return self.backend.kind

    @property
    def is_restricted(self) -> bool:
        return self._root is not self

    @property
    def vertices(self) -> frozenset[int]:
        return vertices_of(support_mask(self.ground, self.n))

    @property
    def ground_set(self) -> EdgeSet:
        return EdgeSet(self.n, self.ground)

    def __repr__(self) -> str:
        g = "" if self.ground == full_mask(self.n) else f", ground={self.ground:#x}"
        return f"Matroid(n={self.n}, {self.kind}, rank={self.r}{g})"

    def _bits(self, X) -> int:
        if isinstance(X, EdgeSet):
            if X.n != self.n:
                raise ValueError(f"edge set over K_{X.n} given to a matroid over K_{self.n}")
            x = X.bits
        else:
            x = int(X)
        if x & ~self.ground:
            raise ValueError("set is not contained in the ground set")
        return x

    def _es(self, x: int) -> EdgeSet:
        return EdgeSet(self.n, x)

    # tables --------------------------------------------------------------

    def has_table(self) -> bool:
        return self._root._rank_tab is not None

    def rank_table(self) -> np.ndarray:
        """Rank of every submask of the root ground set, indexed by bit mask."""
        root = self._root
        if root._rank_tab is None:
            nbits = num_edges(self.n)
            if nbits > TABLE_BITS:
                raise CapExceeded(f"rank table for {nbits} edges exceeds cap {TABLE_BITS}")
            tab = root.backend.table(self.n, root.ground)
            tab.setflags(write=False)
            root._rank_tab = tab
        return root._rank_tab

    def closure_table(self) -> np.ndarray:
        """Closure (in the root matroid) of every submask of the root ground."""
        root = self._root
        if root._cl_tab is None:
            rk = self.rank_table()
            subs = submasks(root.ground)
            base = rk[subs]
            cl = subs.copy()
            for e in iter_bits(root.ground):
                cl |= np.where(rk[subs | (1 << e)] == base, 1 << e, 0)
            tab = np.zeros(rk.size, dtype=np.int64)
            tab[subs] = cl
            tab.setflags(write=False)
            root._cl_tab = tab
        return root._cl_tab

    def _subsets(self) -> np.ndarray:
        return submasks(self.ground)

    def _enum_guard(self, cap: int = ENUM_CAP) -> None:
        g = self.ground.bit_count()
        if g > cap:
            raise CapExceeded(f"ground set of {g} elements exceeds enumeration cap {cap}")

    # oracle --------------------------------------------------------------

    def _rank_bits(self, x: int) -> int:
        root = self._root
        if root._rank_tab is None and num_edges(self.n) <= AUTO_TABLE_BITS:
            self.rank_table()
        if root._rank_tab is not None:
            return int(root._rank_tab[x])
        r = root._cache.get(x)
        if r is None:
            r = root.backend.rank(x, self.n)
            root._cache[x] = r
        return r

    def rank(self, X) -> int:
        return self._rank_bits(self._bits(X))

    @property
    def r(self) -> int:
        if self._r is None:
            self._r = self._rank_bits(self.ground)
        return self._r

    def is_independent(self, X) -> bool:
        x = self._bits(X)
        return self._rank_bits(x) == x.bit_count()

    def _closure_bits(self, x: int) -> int:
        root = self._root
        if root._cl_tab is not None or (root._rank_tab is not None and self.ground.bit_count() > 10):
            return int(self.closure_table()[x]) & self.ground
        r = self._rank_bits(x)
        out = x
        for e in iter_bits(self.ground & ~x):
            if self._rank_bits(x | 1 << e) == r:
                out |= 1 << e
        return out

    def closure(self, X) -> EdgeSet:
        """Largest superset of X with the same rank."""
        return self._es(self._closure_bits(self._bits(X)))

    def closure_by_hyperplanes(self, X) -> EdgeSet:
        """Intersection of all hyperplanes containing X (the ground set if there are none)."""
        x = self._bits(X)
        out = self.ground
        for h in self.hyperplanes().bits():
            if x & ~h == 0:
                out &= h
        return self._es(out)

    def is_closed(self, X) -> bool:
        x = self._bits(X)
        return self._closure_bits(x) == x

    def is_spanning(self, X) -> bool:
        return self.rank(X) == self.r

    def is_basis(self, X) -> bool:
        x = self._bits(X)
        return x.bit_count() == self.r and self._rank_bits(x) == self.r

    def is_circuit(self, X) -> bool:
        x = self._bits(X)
        k = x.bit_count()
        if k == 0 or self._rank_bits(x) != k - 1:
            return False
        return all(self._rank_bits(x ^ (1 << e)) == k - 1 for e in iter_bits(x))

    def is_hyperplane(self, X) -> bool:
        x = self._bits(X)
        return self._rank_bits(x) == self.r - 1 and self._closure_bits(x) == x

    def is_cocircuit(self, X) -> bool:
        x = self._bits(X)
        return self.is_hyperplane(self.ground & ~x)

    # families ------------------------------------------------------------

    def _family(self, kind: str, masks) -> FamilyReport:
        return FamilyReport(kind, [self._es(x) for x in _sorted_masks(np.asarray(masks, dtype=np.int64))])

    def bases(self, cap: int = ENUM_CAP) -> FamilyReport:
        self._enum_guard(cap)
        subs = self._subsets()
        rk = self.rank_table()[subs]
        return self._family("bases", subs[(rk == self.r) & (popcount(subs) == self.r)])

    def independent_masks(self) -> np.ndarray:
        self._enum_guard()
        subs = self._subsets()
        return subs[self.rank_table()[subs] == popcount(subs)]

    def circuits(self, cap: int = ENUM_CAP) -> FamilyReport:
        """Minimal dependent sets: rank |X|-1 with every one-element deletion independent."""
        self._enum_guard(cap)
        rk = self.rank_table()
        subs = self._subsets()
        pc = popcount(subs)
        cand = subs[rk[subs] == pc - 1]
        k = popcount(cand) - 1
        ok = np.ones(cand.size, dtype=bool)
        for e in iter_bits(self.ground):
            has = ((cand >> e) & 1).astype(bool)
            ok &= ~has | (rk[cand ^ (1 << e)] == k)
        return self._family("circuits", cand[ok])

    def flats(self, cap: int = ENUM_CAP) -> FamilyReport:
        self._enum_guard(cap)
        subs = self._subsets()
        cl = self.closure_table()[subs] & self.ground
        return self._family("flats", subs[cl == subs])

    def hyperplanes(self, cap: int = ENUM_CAP) -> FamilyReport:
        """Closures of independent (r-1)-sets, deduplicated and filtered to maximal members."""
        self._enum_guard(cap)
        if self.r == 0:
            return FamilyReport("hyperplanes", [])
        subs = self._subsets()
        rk = self.rank_table()[subs]
        pc = popcount(subs)
        gens = subs[(pc == self.r - 1) & (rk == self.r - 1)]
        cand = np.unique(self.closure_table()[gens] & self.ground)
        inside = ((cand[:, None] & ~cand[None, :]) == 0) & (cand[:, None] != cand[None, :])
        return self._family("hyperplanes", cand[~inside.any(axis=1)])

    def cocircuits(self, cap: int = ENUM_CAP) -> FamilyReport:
        return self._family("cocircuits", [self.ground & ~h for h in self.hyperplanes(cap).bits()])

    # serialisation ---------------------------------------------------------

    def to_json(self) -> dict:
        root = self._root
        out = {"n": self.n, "rank": self.r, "backend": self.kind}
        if self.kind == "bases":
            out["bases"] = [list(iter_bits(b)) for b in root.backend.bases]
        elif self.kind == "linear":
            out["matrix"] = [[f"{x.numerator}/{x.denominator}" for x in row]
                             for row in root.backend.rows]
            out["seed"] = root.backend.seed
        if root.ground != full_mask(self.n):
            out["root_ground"] = list(iter_bits(root.ground))
        if self.ground != root.ground:
            out["ground"] = list(iter_bits(self.ground))
        return out


# -- constructors -----------------------------------------------------------

def _mask(X, n: int) -> int:
    if isinstance(X, EdgeSet):
        if X.n != n:
            raise ValueError(f"edge set over K_{X.n} given for n={n}")
        return X.bits
    if isinstance(X, int):
        return X
    return EdgeSet.from_indices(n, X).bits


def find_exchange_violation(bases: Sequence[int]) -> tuple[int, int, int] | None:
    """First (B1, B2, x) with x in B1-B2 and no y in B2-B1 making B1-x+y a basis."""
    bs = sorted(set(bases))
    if len(bs) < 2:
        return None
    members = set(bs)
    universe = 0
    for b in bs:
        universe |= b
    arr = np.array(bs, dtype=np.int64)
    # swaps[x][i]: the y for which bs[i] - x + y is again a basis
    swaps = {}
    for x in iter_bits(universe):
        col = np.zeros(len(bs), dtype=np.int64)
        for i, b in enumerate(bs):
            if b >> x & 1:
                base = b ^ (1 << x)
                ys = 0
                for y in iter_bits(universe & ~b):
                    if base | (1 << y) in members:
                        ys |= 1 << y
                col[i] = ys
        swaps[x] = col
    block = 512
    for start in range(0, len(bs), block):
        b1 = arr[start:start + block, None]
        for x in iter_bits(universe):
            need = ((b1 >> x) & 1).astype(bool) & ~((arr[None, :] >> x) & 1).astype(bool)
            if not need.any():
                continue
            avail = swaps[x][start:start + block, None] & arr[None, :] & ~b1
            bad = need & (avail == 0)
            if bad.any():
                i, j = np.argwhere(bad)[0]
                return bs[start + int(i)], bs[int(j)], x
    return None


def validate_bases(bases: Sequence[int]) -> None:
    if not bases:
        raise EmptyFamily("a matroid needs at least one basis")
    sizes = {b.bit_count() for b in bases}
    if len(sizes) > 1:
        raise UnequalCardinality(f"bases have different sizes {sorted(sizes)}")
    bad = find_exchange_violation(bases)
    if bad is not None:
        raise ExchangeViolation(*bad)


def from_bases(n: int, bases: Iterable, ground=None, *, validate: bool = True) -> Matroid:
    masks = [_mask(B, n) for B in bases]
    g = full_mask(n) if ground is None else _mask(ground, n)
    if any(b & ~g for b in masks):
        raise ValueError("every basis must lie inside the ground set")
    if validate:
        validate_bases(masks)
    elif not masks:
        raise EmptyFamily("a matroid needs at least one basis")
    return Matroid(n, BasisFamily(masks), g)


def from_matrix(n: int, rows: Sequence[Sequence], ground=None, seed: int = 0) -> Matroid:
    if len(rows) != num_edges(n):
        raise ValueError(f"need one row per edge of K_{n} ({num_edges(n)}), got {len(rows)}")
    g = full_mask(n) if ground is None else _mask(ground, n)
    return Matroid(n, LinearRep(rows, seed), g)


def cycle_matroid(n: int) -> Matroid:
    return Matroid(n, CycleGraph())


def uniform_matroid(n: int, r: int, ground=None) -> Matroid:
    g = full_mask(n) if ground is None else _mask(ground, n)
    els = list(iter_bits(g))
    if not 0 <= r <= len(els):
        raise ValueError(f"rank {r} impossible on {len(els)} elements")
    bases = [sum(1 << e for e in c) for c in combinations(els, r)]
    return from_bases(n, bases, g, validate=False)


def free_matroid(n: int, ground=None) -> Matroid:
    g = full_mask(n) if ground is None else _mask(ground, n)
    return from_bases(n, [g], g)


def restriction(M: Matroid, T) -> Matroid:
    t = M._bits(T)
    R = Matroid(M.n, M._root.backend, t, _root=M._root)
    return R


def dual(M: Matroid, cap: int = ENUM_CAP) -> Matroid:
    comps = [M.ground & ~b for b in M.bases(cap).bits()]
    return from_bases(M.n, comps, M.ground)


def matroid_from_json(data: dict) -> Matroid:
    n = int(data["n"])
    backend = data["backend"]
    root_ground = None
    if "root_ground" in data:
        root_ground = EdgeSet.from_indices(n, data["root_ground"]).bits
    if backend == "bases":
        g = root_ground if root_ground is not None else full_mask(n)
        M = from_bases(n, [EdgeSet.from_indices(n, b).bits for b in data["bases"]], g)
    elif backend == "linear":
        rows = [[Fraction(x) for x in row] for row in data["matrix"]]
        M = from_matrix(n, rows, root_ground, seed=int(data.get("seed", 0)))
    elif backend == "cycle":
        M = cycle_matroid(n)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    if "ground" in data:
        M = restriction(M, EdgeSet.from_indices(n, data["ground"]))
    if "rank" in data and int(data["rank"]) != M.r:
        raise ValueError(f"declared rank {data['rank']} but the data has rank {M.r}")
    return M


# -- closure operators and the basis/closure correspondence --------------------

class ClosureOperator:
    """A function 2^S -> 2^S on a ground set S inside K(V), held as a table."""

    def __init__(self, n: int, table: np.ndarray, ground: int | None = None):
        self.n = n
        self.ground = full_mask(n) if ground is None else ground
        self.table = table

    @classmethod
    def from_function(cls, n: int, fn: Callable[[EdgeSet], EdgeSet], ground=None) -> "ClosureOperator":
        g = full_mask(n) if ground is None else _mask(ground, n)
        if g.bit_count() > CLOSURE_CAP:
            raise CapExceeded(f"closure table over {g.bit_count()} elements exceeds {CLOSURE_CAP}")
        tab = np.zeros(1 << num_edges(n), dtype=np.int64)
        for x in submasks(g).tolist():
            tab[x] = _mask(fn(EdgeSet(n, x)), n)
        return cls(n, tab, g)

    def __call__(self, X) -> EdgeSet:
        return EdgeSet(self.n, int(self.table[_mask(X, self.n)]))


def closure_operator(M: Matroid) -> ClosureOperator:
    tab = M.closure_table() & M.ground
    return ClosureOperator(M.n, tab, M.ground)


def _spanning_table(n: int, ground: int, bases: Sequence[int]) -> np.ndarray:
    subs = submasks(ground)
    span = np.zeros(1 << num_edges(n), dtype=bool)
    span[np.array(bases, dtype=np.int64)] = True
    for e in iter_bits(ground):
        lo = subs[(subs >> e) & 1 == 0]
        span[lo | (1 << e)] |= span[lo]
    return span


def closure_from_hyperplanes(n: int, hyperplanes: Iterable, ground=None) -> ClosureOperator:
    """X -> intersection of the given sets containing X (the whole ground if none do)."""
    g = full_mask(n) if ground is None else _mask(ground, n)
    if g.bit_count() > CLOSURE_CAP:
        raise CapExceeded(f"closure table over {g.bit_count()} elements exceeds {CLOSURE_CAP}")
    subs = submasks(g)
    cl = np.full(subs.size, g, dtype=np.int64)
    for h in hyperplanes:
        h = _mask(h, n)
        inside = (subs & ~h) == 0
        cl[inside] &= h
    tab = np.zeros(1 << num_edges(n), dtype=np.int64)
    tab[subs] = cl
    return ClosureOperator(n, tab, g)


def hyperplanes_from_bases(n: int, bases: Sequence[int], ground: int) -> list[int]:
    """Maximal sets containing no basis."""
    span = _spanning_table(n, ground, bases)
    subs = submasks(ground)
    cand = subs[~span[subs]]
    maximal = np.ones(cand.size, dtype=bool)
    for e in iter_bits(ground):
        out_e = ((cand >> e) & 1) == 0
        maximal &= ~out_e | span[cand | (1 << e)]
    return _sorted_masks(cand[maximal])


def closure_from_bases(n: int, bases: Iterable, ground=None) -> ClosureOperator:
    M = from_bases(n, bases, ground)
    return closure_from_hyperplanes(n, hyperplanes_from_bases(n, M.backend.bases, M.ground), M.ground)


def bases_from_closure(sigma: ClosureOperator) -> list[EdgeSet]:
    """Maximal sets A with x not in sigma(A - x) for every x in A."""
    subs = submasks(sigma.ground)
    tab = sigma.table
    indep = np.ones(subs.size, dtype=bool)
    for e in iter_bits(sigma.ground):
        has = ((subs >> e) & 1).astype(bool)
        indep &= ~has | (((tab[subs ^ (1 << e)] >> e) & 1) == 0)
    full = np.zeros(tab.size, dtype=bool)
    full[subs] = indep
    ind = subs[indep]
    maximal = np.ones(ind.size, dtype=bool)
    for e in iter_bits(sigma.ground):
        out_e = ((ind >> e) & 1) == 0
        maximal &= ~(out_e & full[ind | (1 << e)])
    return [EdgeSet(sigma.n, x) for x in _sorted_masks(ind[maximal])]


def validate_closure_axioms(sigma: ClosureOperator, max_witnesses: int | None = 100) -> AxiomReport:
    """Extensive, monotone, idempotent, exchange: each checked over every subset."""
    g = sigma.ground
    if g.bit_count() > CLOSURE_CAP:
        raise CapExceeded(f"{g.bit_count()} elements exceeds closure validation cap {CLOSURE_CAP}")
    n = sigma.n
    es = lambda x: EdgeSet(n, int(x))
    subs = submasks(g)
    cl = sigma.table[subs]
    w = Witnesses(max_witnesses)
    for a in subs[(cl & ~g) != 0]:
        w.add("closure.range", A=es(a), image=es(sigma.table[a]))
    for a in subs[(cl & subs) != subs]:
        w.add("closure.i", A=es(a), image=es(sigma.table[a]))
    # monotonicity on covering pairs A < A+e implies it for all A < B
    for e in iter_bits(g):
        lo = subs[(subs >> e) & 1 == 0]
        bad = lo[(sigma.table[lo] & ~sigma.table[lo | (1 << e)]) != 0]
        for a in bad:
            w.add("closure.ii", A=es(a), B=es(int(a) | 1 << e))
    inner = sigma.table[cl & g]
    for a in subs[inner != cl]:
        w.add("closure.iii", A=es(a))
    for x in iter_bits(g):
        for y in iter_bits(g):
            if x == y:
                continue
            # x in cl(A+y) - cl(A) must force y in cl(A+x)
            with_y = sigma.table[subs | (1 << y)]
            with_x = sigma.table[subs | (1 << x)]
            bad = subs[(((with_y >> x) & 1) == 1) & (((cl >> x) & 1) == 0)
                       & (((with_x >> y) & 1) == 0)]
            for a in bad:
                w.add("closure.iv", A=es(a), x=x, y=y)
    return AxiomReport.from_witnesses("closure", w)


# -- circuit/cocircuit facts --------------------------------------------------

def check_circuit_cocircuit_intersection(M: Matroid, max_witnesses: int | None = 100) -> AxiomReport:
    C = np.array(M.circuits().bits(), dtype=np.int64)
    D = np.array(M.cocircuits().bits(), dtype=np.int64)
    w = Witnesses(max_witnesses)
    if C.size and D.size:
        sizes = np.bitwise_count(C[:, None] & D[None, :])
        for i, j in np.argwhere(sizes == 1):
            w.add("cocircprop", circuit=M._es(int(C[i])), cocircuit=M._es(int(D[j])))
    return AxiomReport.from_witnesses("circuit_cocircuit", w,
                                      circuits=int(C.size), cocircuits=int(D.size))


def check_flat_by_circuits(M: Matroid, F) -> bool:
    """F is closed iff no circuit has exactly one element outside F."""
    f = M._bits(F)
    C = np.array(M.circuits().bits(), dtype=np.int64)
    if C.size == 0:
        return True
    return not bool((np.bitwise_count(C & ~f) == 1).any())


def chain_lengths(M: Matroid, T) -> set[int]:
    """Lengths of all maximal chains of flats from T up to the ground set."""
    t = M._bits(T)
    if not M.is_closed(t):
        raise TNotClosed("the chain must start at a closed set")
    fl = np.array([f for f in M.flats().bits() if f & t == t], dtype=np.int64)
    # above[i, j]: flat j strictly contains flat i
    above = ((fl[:, None] & ~fl[None, :]) == 0) & (fl[:, None] != fl[None, :])
    a = above.astype(np.float32)
    between = (a @ a) > 0
    covers = above & ~between
    order = np.argsort(-popcount(fl), kind="stable")
    lengths: dict[int, set[int]] = {}
    for i in order.tolist():
        if int(fl[i]) == M.ground:
            lengths[i] = {0}
        else:
            lengths[i] = {1 + l for j in np.flatnonzero(covers[i]).tolist() for l in lengths[j]}
    start = int(np.flatnonzero(fl == t)[0])
    return lengths[start]


def verify_chain_rank(M: Matroid, T) -> bool:
    return chain_lengths(M, T) == {M.r - M.rank(T)}
