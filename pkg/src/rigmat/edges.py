"""Edge sets of a complete graph K(V) on vertices 0..n-1.

Edges are indexed lexicographically in their canonical form (u, v), u < v:
(0,1), (0,2), ..., (0,n-1), (1,2), ...  Edge sets are bit masks over that
index; the same layout is used by every other module and by the JSON form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple


def num_edges(n: int) -> int:
    return n * (n - 1) // 2


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"loop edge ({a},{a}) is not an edge of K(V)")
        return cls(a, b) if a < b else cls(b, a)

    def __str__(self) -> str:
        return f"{self.u}{self.v}" if max(self) < 10 else f"{self.u}-{self.v}"


def edge_rank(e: tuple[int, int], n: int) -> int:
    u, v = e
    if not (0 <= u < v):
        raise ValueError(f"edge {e} is not canonical (need 0 <= u < v)")
    if v >= n:
        raise ValueError(f"endpoint {v} out of range for n={n}")
    return u * n - u * (u + 1) // 2 + (v - u - 1)


@lru_cache(maxsize=None)
def edge_list(n: int) -> tuple[Edge, ...]:
    return tuple(Edge(u, v) for u, v in combinations(range(n), 2))


def edge_unrank(i: int, n: int) -> Edge:
    if not 0 <= i < num_edges(n):
        raise ValueError(f"edge index {i} out of range for n={n}")
    return edge_list(n)[i]


# -- bit-level helpers (vertex sets as int masks) ---------------------------

def vmask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def vertices_of(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def _endpoint_masks(n: int) -> tuple[int, ...]:
    return tuple((1 << u) | (1 << v) for u, v in edge_list(n))


@lru_cache(maxsize=None)
def star_mask(v: int, n: int) -> int:
    out = 0
    for i, (a, b) in enumerate(edge_list(n)):
        if a == v or b == v:
            out |= 1 << i
    return out


@lru_cache(maxsize=1 << 16)
def complete_mask(vm: int, n: int) -> int:
    """K(W) as an edge mask, for W given as a vertex mask."""
    out = 0
    for i, ends in enumerate(_endpoint_masks(n)):
        if ends & vm == ends:
            out |= 1 << i
    return out


def support_mask(bits: int, n: int) -> int:
    ends = _endpoint_masks(n)
    out = 0
    for i in iter_bits(bits):
        out |= ends[i]
    return out


def full_mask(n: int) -> int:
    return (1 << num_edges(n)) - 1


# -- EdgeSet ----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class EdgeSet:
    """A subset of K(V) with |V| = n, stored as a bit mask over edge indices."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.bits < 0 or self.bits >> num_edges(self.n):
            raise ValueError(f"bit pattern {self.bits:#x} exceeds K_{self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "EdgeSet":
        bits = 0
        for a, b in edges:
            bits |= 1 << edge_rank(Edge.of(a, b), n)
        return cls(n, bits)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "EdgeSet":
        bits = 0
        for i in indices:
            if not 0 <= i < num_edges(n):
                raise ValueError(f"edge index {i} out of range for n={n}")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "EdgeSet":
        return cls(n, full_mask(n))

    def indices(self) -> list[int]:
        return list(iter_bits(self.bits))

    def edges(self) -> list[Edge]:
        table = edge_list(self.n)
        return [table[i] for i in iter_bits(self.bits)]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, e) -> bool:
        if isinstance(e, int):
            return bool(self.bits >> e & 1)
        return bool(self.bits >> edge_rank(Edge.of(*e), self.n) & 1)

    def _other(self, other: "EdgeSet") -> int:
        if not isinstance(other, EdgeSet):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"edge sets over K_{self.n} and K_{other.n} do not mix")
        return other.bits

    def __or__(self, other):
        return EdgeSet(self.n, self.bits | self._other(other))

    def __and__(self, other):
        return EdgeSet(self.n, self.bits & self._other(other))

    def __sub__(self, other):
        return EdgeSet(self.n, self.bits & ~self._other(other))

    def __xor__(self, other):
        return EdgeSet(self.n, self.bits ^ self._other(other))

    def __le__(self, other):
        return self.bits & ~self._other(other) == 0

    def __lt__(self, other):
        return self <= other and self.bits != other.bits

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def complement(self) -> "EdgeSet":
        return EdgeSet(self.n, full_mask(self.n) & ~self.bits)

    def support(self) -> frozenset[int]:
        return vertices_of(support_mask(self.bits, self.n))

    def sort_key(self) -> tuple[int, int]:
        return (len(self), self.bits)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "EdgeSet":
        return cls.from_edges(int(data["n"]), (tuple(e) for e in data["edges"]))

    def __repr__(self) -> str:
        return f"EdgeSet(n={self.n}, {{{','.join(str(e) for e in self.edges())}}})"


def sorted_family(family: Iterable[EdgeSet]) -> list[EdgeSet]:
    """Deduplicate and order by (cardinality, bit pattern)."""
    return sorted(set(family), key=EdgeSet.sort_key)


# -- named constructions ----------------------------------------------------

def _check_vertices(vs: Iterable[int], n: int) -> frozenset[int]:
    vs = frozenset(vs)
    bad = [v for v in vs if not 0 <= v < n]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} out of range for n={n}")
    return vs


def complete_edges(W: Iterable[int], n: int) -> EdgeSet:
    return EdgeSet(n, complete_mask(vmask(_check_vertices(W, n)), n))


def support(E: EdgeSet) -> frozenset[int]:
    return E.support()


def star(v: int, n: int) -> EdgeSet:
    _check_vertices([v], n)
    return EdgeSet(n, star_mask(v, n))


def bigstar(Vp: Iterable[int], n: int) -> EdgeSet:
    Vp = _check_vertices(Vp, n)
    rest = vmask(range(n)) & ~vmask(Vp)
    return EdgeSet(n, full_mask(n) & ~complete_mask(rest, n))


def delta(v: int, A: Iterable[int], n: int, vertices: Iterable[int] | None = None) -> EdgeSet:
    """K({v} | A) | K(X - {v}) where X is ``vertices`` (default: all of V)."""
    A = _check_vertices(A, n)
    X = _check_vertices(range(n) if vertices is None else vertices, n)
    if v in A:
        raise ValueError(f"vertex {v} must not lie in A")
    if v not in X or not A <= X:
        raise ValueError("v and A must lie in the vertex set")
    return EdgeSet(n, complete_mask(vmask(A | {v}), n) | complete_mask(vmask(X - {v}), n))


def valence(E: EdgeSet, v: int) -> int:
    return (E.bits & star_mask(v, E.n)).bit_count()


def hm_family(n: int, m: int, vertices: Iterable[int] | None = None) -> list[EdgeSet]:
    """All K(V1) | K(V2) with V1 | V2 = X, |V1 & V2| = m-1 and neither side inside the other."""
    if m < 1:
        raise ValueError("dimension m must be at least 1")
    X = sorted(_check_vertices(range(n) if vertices is None else vertices, n))
    if len(X) <= m - 1:
        raise ValueError(f"need at least m={m} vertices, got {len(X)}")
    out = set()
    for inter in combinations(X, m - 1):
        rest = [v for v in X if v not in inter]
        im = vmask(inter)
        # fix rest[0] on side one so each unordered split is produced once
        first, others = rest[0], rest[1:]
        for r in range(len(others)):
            for extra in combinations(others, r):
                side1 = im | vmask(extra) | (1 << first)
                side2 = im | (vmask(rest) & ~(vmask(extra) | (1 << first)))
                out.add(EdgeSet(n, complete_mask(side1, n) | complete_mask(side2, n)))
    return sorted_family(out)


def hm1_family(n: int, m: int, vertices: Iterable[int] | None = None) -> list[EdgeSet]:
    """The sets delta(v, A) with |A| = m-1, over the vertex set ``vertices``."""
    if m < 1:
        raise ValueError("dimension m must be at least 1")
    X = sorted(_check_vertices(range(n) if vertices is None else vertices, n))
    out = set()
    for v in X:
        others = [u for u in X if u != v]
        for A in combinations(others, m - 1):
            out.add(delta(v, A, n, X))
    return sorted_family(out)


def stars_minus(n: int, k: int, vertices: Iterable[int] | None = None) -> list[EdgeSet]:
    """Every vertex star (inside K(X)) with k of its edges deleted."""
    X = _check_vertices(range(n) if vertices is None else vertices, n)
    xm = complete_mask(vmask(X), n)
    out = set()
    for v in X:
        s = star_mask(v, n) & xm
        for drop in combinations(list(iter_bits(s)), k):
            out.add(EdgeSet(n, s & ~vmask(drop)))
    return sorted_family(out)


def zero_extension(E: EdgeSet, anchors: Iterable[int], w: int) -> EdgeSet:
    anchors = _check_vertices(anchors, E.n)
    sup = E.support()
    _check_vertices([w], E.n)
    if w in sup:
        raise ValueError(f"new vertex {w} already lies in the support")
    if not anchors <= sup:
        raise ValueError(f"anchors {sorted(anchors - sup)} are not in the support")
    return E | EdgeSet.from_edges(E.n, ((a, w) for a in anchors))


# -- connectivity -----------------------------------------------------------

def _adjacency(bits: int, n: int) -> list[int]:
    adj = [0] * n
    table = edge_list(n)
    for i in iter_bits(bits):
        u, v = table[i]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _connected(alive: int, adj: list[int]) -> bool:
    if alive == 0:
        return True
    seen = alive & -alive
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen == alive


def find_vertex_cut(E: EdgeSet, k: int) -> frozenset[int] | None:
    """A set of fewer than k support vertices whose removal disconnects (V(E), E), if any."""
    sup = support_mask(E.bits, E.n)
    adj = _adjacency(E.bits, E.n)
    verts = sorted(iter_bits(sup))
    for size in range(min(k, len(verts))):
        for U in combinations(verts, size):
            um = vmask(U)
            if not _connected(sup & ~um, adj):
                return frozenset(U)
    return None


def is_k_vertex_connected(E: EdgeSet, k: int) -> bool:
    if not E:
        raise ValueError("connectivity of the empty edge set is undefined")
    if len(E.support()) < k + 1:
        return False
    return find_vertex_cut(E, k) is None
