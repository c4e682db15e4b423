"""Executable characterizations of m-dimensional abstract rigidity matroids.

Every check returns an AxiomReport.  Checks that quantify over pairs or
families of edge sets run exhaustively on at most ``EXHAUSTIVE_VERTICES``
vertices and otherwise on a seeded sample; the report's scope records which.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .edges import (EdgeSet, complete_mask, find_vertex_cut, hm1_family, hm_family, iter_bits,
                    num_edges, star_mask, stars_minus, support_mask, vmask, zero_extension)
from .errors import CapExceeded, PreconditionNotMet
from .matroid import Matroid, restriction, submasks
from .reports import AxiomReport, Scope, Witnesses

EXHAUSTIVE_VERTICES = 5
DEFAULT_SAMPLES = 2000
FLAT_PAIR_CAP = 2000      # all pairs of flats are checked only below this many flats
LAMAN_MAX_SUPPORT = 16

SUITES = ("prop6", "C", "D", "H", "B", "Z", "laman", "ext", "hm", "connect", "2dim",
          "twoparts", "bottom")


# -- tables -----------------------------------------------------------------

@lru_cache(maxsize=4)
def support_table(n: int) -> np.ndarray:
    nb = num_edges(n)
    idx = np.arange(1 << nb, dtype=np.int64)
    out = np.zeros_like(idx)
    for i in range(nb):
        ends = support_mask(1 << i, n)
        out |= np.where((idx >> i) & 1, ends, 0)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=8)
def complete_table(n: int) -> np.ndarray:
    out = np.array([complete_mask(v, n) for v in range(1 << n)], dtype=np.int64)
    out.setflags(write=False)
    return out


def _vertex_mask(M: Matroid) -> int:
    return support_mask(M.ground, M.n)


def _require_dim(M: Matroid, m: int) -> int:
    if m < 1:
        raise ValueError("dimension m must be at least 1")
    k = len(M.vertices)
    if k < m + 1:
        raise ValueError(f"need at least m+1={m + 1} vertices, matroid has {k}")
    return k


def _resolve(scope: Scope | None, M: Matroid) -> Scope:
    small = len(M.vertices) <= EXHAUSTIVE_VERTICES
    if scope is None:
        return Scope.exhaustive() if small else Scope.sampled(DEFAULT_SAMPLES, 0)
    if scope.is_exhaustive and not small:
        raise CapExceeded(f"exhaustive scope is limited to {EXHAUSTIVE_VERTICES} vertices")
    return scope


def rigid_mask_array(M: Matroid) -> np.ndarray:
    """Boolean array over M's ground submasks: is the set rigid?"""
    subs = M._subsets()
    cl = M.closure_table()[subs] & M.ground
    return cl == complete_table(M.n)[support_table(M.n)[subs]]


def is_rigid(M: Matroid, E) -> bool:
    e = M._bits(E)
    return M._closure_bits(e) == complete_mask(support_mask(e, M.n), M.n)


# -- C1 / C2 ----------------------------------------------------------------

def _c1_pairs(M: Matroid, m: int, E: np.ndarray, F: np.ndarray, w: Witnesses) -> int:
    """Check C1 on the pairs (E[i], F[i]); returns how many pairs were checked."""
    sup, kt = support_table(M.n), complete_table(M.n)
    cl = M.closure_table()
    se, sf = sup[E], sup[F]
    small = np.bitwise_count(se & sf) < m
    allowed = kt[se] | kt[sf]
    bad = small & (((cl[E | F] & M.ground) & ~allowed) != 0)
    for i in np.flatnonzero(bad).tolist():
        w.add("C1", E=M._es(int(E[i])), F=M._es(int(F[i])))
    return int(E.size)


def _c2_pairs(M: Matroid, m: int, E: np.ndarray, F: np.ndarray, w: Witnesses) -> int:
    sup, kt = support_table(M.n), complete_table(M.n)
    cl = M.closure_table()
    se, sf = sup[E], sup[F]
    big = np.bitwise_count(se & sf) >= m
    union = E | F
    bad = big & ((cl[union] & M.ground) != kt[se | sf])
    for i in np.flatnonzero(bad).tolist():
        w.add("C2", E=M._es(int(E[i])), F=M._es(int(F[i])))
    return int(E.size)


def _upper_pairs(arr: np.ndarray, block: int = 1024):
    for start in range(0, arr.size, block):
        k = min(block, arr.size - start)
        rows = np.repeat(np.arange(start, start + k), arr.size)
        cols = np.tile(np.arange(arr.size), k)
        keep = cols >= rows
        yield arr[rows[keep]], arr[cols[keep]]


def check_C1(M: Matroid, m: int, scope: Scope | None = None, max_witnesses: int | None = 100) -> AxiomReport:
    _require_dim(M, m)
    scope = _resolve(scope, M)
    w = Witnesses(max_witnesses)
    checked = 0
    if scope.is_exhaustive:
        subs = M._subsets()
        for E, F in _upper_pairs(subs):
            checked += _c1_pairs(M, m, E, F, w)
        return AxiomReport.from_witnesses("C1", w, scope, pairs_checked=checked)
    rng = np.random.default_rng(scope.seed)
    # complete sets dominate: sigma(E | F) <= sigma(K(V(E)) | K(V(F)))
    vsets = submasks(_vertex_mask(M))
    kt = complete_table(M.n)[vsets]
    E, F = np.meshgrid(kt, kt, indexing="ij")
    checked += _c1_pairs(M, m, E.ravel(), F.ravel(), w)
    flats = np.array(M.flats().bits(), dtype=np.int64)
    if flats.size <= FLAT_PAIR_CAP:
        for E, F in _upper_pairs(flats):
            checked += _c1_pairs(M, m, E, F, w)
        flat_mode = "all"
    else:
        i = rng.integers(0, flats.size, scope.count)
        j = rng.integers(0, flats.size, scope.count)
        checked += _c1_pairs(M, m, flats[i], flats[j], w)
        flat_mode = "sampled"
    subs = M._subsets()
    i = rng.integers(0, subs.size, scope.count)
    j = rng.integers(0, subs.size, scope.count)
    checked += _c1_pairs(M, m, subs[i], subs[j], w)
    return AxiomReport.from_witnesses("C1", w, scope, pairs_checked=checked, flat_pairs=flat_mode)


def check_C2(M: Matroid, m: int, scope: Scope | None = None, max_witnesses: int | None = 100) -> AxiomReport:
    _require_dim(M, m)
    scope = _resolve(scope, M)
    w = Witnesses(max_witnesses)
    subs = M._subsets()
    rigid = subs[rigid_mask_array(M)]
    checked = 0
    if scope.is_exhaustive:
        for E, F in _upper_pairs(rigid):
            checked += _c2_pairs(M, m, E, F, w)
        return AxiomReport.from_witnesses("C2", w, scope, pairs_checked=checked,
                                          rigid_sets=int(rigid.size))
    # a rigid E has closure K(V(E)), so rigid flats K(S) represent every rigid pair
    flats = np.array(M.flats().bits(), dtype=np.int64)
    sup, kt = support_table(M.n), complete_table(M.n)
    rigid_flats = flats[flats == kt[sup[flats]]]
    for E, F in _upper_pairs(rigid_flats):
        checked += _c2_pairs(M, m, E, F, w)
    rng = np.random.default_rng(scope.seed)
    i = rng.integers(0, rigid.size, scope.count)
    j = rng.integers(0, rigid.size, scope.count)
    checked += _c2_pairs(M, m, rigid[i], rigid[j], w)
    return AxiomReport.from_witnesses("C2", w, scope, pairs_checked=checked,
                                      rigid_sets=int(rigid.size), rigid_flats=int(rigid_flats.size))


def check_C(M: Matroid, m: int, scope: Scope | None = None, max_witnesses: int | None = 100) -> AxiomReport:
    """The defining conditions C1 and C2 together."""
    c1 = check_C1(M, m, scope, max_witnesses)
    c2 = check_C2(M, m, scope, max_witnesses)
    w = Witnesses(max_witnesses)
    for v in c1.violations + c2.violations:
        w.add(**v)
    # witnesses beyond either sub-check's cap still count
    w.count = sum(r.details.get("violation_count", len(r.violations)) for r in (c1, c2))
    return AxiomReport.from_witnesses("C", w, c1.scope, C1=c1.passed, C2=c2.passed)


# -- characterizations by cocircuits, hyperplanes, bases and circuits ---------------

def _stars_minus(M: Matroid, m: int) -> list[EdgeSet]:
    return stars_minus(M.n, m - 1, M.vertices)


def _k_sets(M: Matroid, size: int) -> list[tuple[frozenset[int], EdgeSet]]:
    return [(frozenset(U), EdgeSet(M.n, complete_mask(vmask(U), M.n)))
            for U in combinations(sorted(M.vertices), size)]


def arm_rank(num_vertices: int, m: int) -> int:
    return m * num_vertices - comb(m + 1, 2)


def _prop6_parts(M: Matroid, m: int, w: Witnesses) -> tuple[bool, bool, bool]:
    before = w.count
    for S in _stars_minus(M, m):
        if not M.is_cocircuit(S):
            w.add("not_cocircuit", set=S, condition="i")
    ok_i = w.count == before
    before = w.count
    for U, K in _k_sets(M, m + 2):
        if not M.is_circuit(K):
            w.add("not_circuit", set=K, condition="ii")
    ok_ii = w.count == before
    expect = arm_rank(len(M.vertices), m)
    ok_iii = M.r == expect
    if not ok_iii:
        w.add("rank", expected=expect, actual=M.r, condition="iii")
    return ok_i, ok_ii, ok_iii


def is_arm_prop6(M: Matroid, m: int, max_witnesses: int | None = 100) -> AxiomReport:
    """Stars minus m-1 edges are cocircuits; K_{m+2} are circuits; rank m|V| - C(m+1,2).

    ``passed`` requires all three.  Two of three already characterise the
    class, which in turn forces the third; ``two_of_three`` records the
    weaker count and ``inconsistent`` flags the (impossible) case of exactly two.
    """
    _require_dim(M, m)
    w = Witnesses(max_witnesses)
    parts = _prop6_parts(M, m, w)
    held = sum(parts)
    return AxiomReport.from_witnesses("prop6", w, i=parts[0], ii=parts[1], iii=parts[2],
                                      two_of_three=held >= 2, inconsistent=held == 2)


def _valences(masks: np.ndarray, M: Matroid) -> np.ndarray:
    """valence[k, j] = valence of vertex verts[j] in masks[k]."""
    verts = sorted(M.vertices)
    cols = [np.bitwise_count(masks & star_mask(v, M.n)) for v in verts]
    return np.stack(cols, axis=1) if cols else np.zeros((masks.size, 0), dtype=np.uint8)


def check_D(M: Matroid, m: int, max_witnesses: int | None = 100) -> AxiomReport:
    k = _require_dim(M, m)
    w = Witnesses(max_witnesses)
    cocirc = np.array(M.cocircuits().bits(), dtype=np.int64)
    if cocirc.size:
        small = np.bitwise_count(support_table(M.n)[cocirc]) <= k - m
        for c in cocirc[small].tolist():
            w.add("D1", cocircuit=M._es(c))
    d1 = not w
    for S in _stars_minus(M, m):
        if not M.is_cocircuit(S):
            w.add("not_cocircuit", set=S, condition="D2")
    return AxiomReport.from_witnesses("D", w, D1=d1, D2=_ok(w, "D2"))


def _ok(w: Witnesses, cond: str) -> bool:
    return not any(v.get("condition") == cond for v in w.items)


def check_H(M: Matroid, m: int, max_witnesses: int | None = 100) -> AxiomReport:
    k = _require_dim(M, m)
    w = Witnesses(max_witnesses)
    hyp = np.array(M.hyperplanes().bits(), dtype=np.int64)
    if hyp.size:
        full = (_valences(hyp, M) == k - 1).sum(axis=1)
        for h in hyp[full > m - 1].tolist():
            w.add("H1", hyperplane=M._es(h))
    h1 = not w
    for H in hm1_family(M.n, m, M.vertices):
        if not M.is_hyperplane(H):
            w.add("not_hyperplane", set=H, condition="H2")
    return AxiomReport.from_witnesses("H", w, H1=h1, H2=_ok(w, "H2"))


def _bigstars(M: Matroid, m: int) -> list[EdgeSet]:
    vm = _vertex_mask(M)
    out = []
    for Vp in combinations(sorted(M.vertices), m):
        rest = vm & ~vmask(Vp)
        out.append(EdgeSet(M.n, M.ground & ~complete_mask(rest, M.n)))
    return out


def check_B(M: Matroid, m: int, max_witnesses: int | None = 100) -> AxiomReport:
    _require_dim(M, m)
    w = Witnesses(max_witnesses)
    bases = np.array(M.bases().bits(), dtype=np.int64)
    vm = _vertex_mask(M)
    if bases.size:
        spanning = support_table(M.n)[bases] == vm
        low = (_valences(bases, M) < m).any(axis=1)
        for b in bases[~spanning | low].tolist():
            w.add("B1", basis=M._es(b))
    b1 = not w
    for S in _bigstars(M, m):
        if not M.is_basis(S):
            w.add("not_basis", set=S, condition="B2")
    return AxiomReport.from_witnesses("B", w, B1=b1, B2=_ok(w, "B2"))


def _circuit_low_valence(M: Matroid, m: int, w: Witnesses, kind: str) -> None:
    circ = np.array(M.circuits().bits(), dtype=np.int64)
    if not circ.size:
        return
    val = _valences(circ, M)
    low = ((val > 0) & (val < m + 1)).any(axis=1)
    for c in circ[low].tolist():
        w.add(kind, circuit=M._es(c))


def check_Z(M: Matroid, m: int, max_witnesses: int | None = 100) -> AxiomReport:
    _require_dim(M, m)
    w = Witnesses(max_witnesses)
    _circuit_low_valence(M, m, w, "Z1")
    z1 = not w
    for U, K in _k_sets(M, m + 2):
        if not M.is_circuit(K):
            w.add("not_circuit", set=K, condition="Z2")
    return AxiomReport.from_witnesses("Z", w, Z1=z1, Z2=_ok(w, "Z2"))


# -- Laman counts -----------------------------------------------------------

def laman_bound(k: int, m: int) -> int:
    return m * k - comb(m + 1, 2)


def laman_check(E: EdgeSet, m: int, max_witnesses: int | None = 100) -> AxiomReport:
    """Laman's count on every induced subgraph with at least m vertices."""
    sup = sorted(E.support())
    if len(sup) > LAMAN_MAX_SUPPORT:
        raise CapExceeded(f"support of {len(sup)} vertices exceeds {LAMAN_MAX_SUPPORT}")
    w = Witnesses(max_witnesses)
    for k in range(max(m, 1), len(sup) + 1):
        bound = laman_bound(k, m)
        if len(E) <= bound:
            continue
        for U in combinations(sup, k):
            cnt = (E.bits & complete_mask(vmask(U), E.n)).bit_count()
            if cnt > bound:
                w.add("laman", E=E, U=frozenset(U), count=cnt, bound=bound)
    return AxiomReport.from_witnesses("laman", w)


def check_laman_independent(M: Matroid, m: int, max_witnesses: int | None = 100) -> AxiomReport:
    """Laman's condition is hereditary, so checking every basis covers all independent sets."""
    w = Witnesses(max_witnesses)
    for B in M.bases():
        for v in laman_check(B, m, None).violations:
            w.add(**v)
    return AxiomReport.from_witnesses("laman", w, bases_checked=len(M.bases()))


# -- extension lemma ----------------------------------------------------------

def _sample_masks(arr: np.ndarray, scope: Scope, salt: int) -> list[int]:
    if scope.is_exhaustive or arr.size <= scope.count:
        return arr.tolist()
    rng = random.Random(scope.seed * 1_000_003 + salt)
    return sorted(rng.sample(arr.tolist(), scope.count))


def _extensions(M: Matroid, e: int, sizes):
    """Every (anchors, w, extension) with w outside V(e) and |anchors| in ``sizes``."""
    sup = support_mask(e, M.n)
    outside = _vertex_mask(M) & ~sup
    sverts = list(iter_bits(sup))
    E = M._es(e)
    for w in iter_bits(outside):
        for k in sizes:
            if k > len(sverts):
                break
            for anchors in combinations(sverts, k):
                yield frozenset(anchors), w, zero_extension(E, anchors, w)


def check_extension_lemma(M: Matroid, m: int, scope: Scope | None = None,
                          max_witnesses: int | None = 100) -> AxiomReport:
    _require_dim(M, m)
    scope = _resolve(scope, M)
    for S in _stars_minus(M, m):
        if not M.is_cocircuit(S):
            raise PreconditionNotMet(f"{S!r} is a vertex star minus {m - 1} edges but not a cocircuit")
    w = Witnesses(max_witnesses)
    _circuit_low_valence(M, m, w, "ext.i")
    indep = _sample_masks(M.independent_masks(), scope, 1)
    for e in indep:
        for anchors, v, X in _extensions(M, e, range(0, m + 1)):
            if not M.is_independent(X):
                w.add("ext.ii", E=M._es(e), anchors=anchors, w=v)
    c2 = check_C2(M, m, scope, max_witnesses=1).passed
    if c2:
        subs = M._subsets()
        rigid = _sample_masks(subs[rigid_mask_array(M)], scope, 2)
        for e in rigid:
            for anchors, v, X in _extensions(M, e, range(m, len(M.vertices))):
                if not is_rigid(M, X):
                    w.add("ext.iii", E=M._es(e), anchors=anchors, w=v)
    return AxiomReport.from_witnesses("ext", w, scope, C2=c2, iii_checked=c2)


# -- prescribed hyperplanes ------------------------------------------------------

def check_hm_subset(M: Matroid, m: int, max_witnesses: int | None = 100) -> AxiomReport:
    _require_dim(M, m)
    w = Witnesses(max_witnesses)
    fam = hm_family(M.n, m, M.vertices)
    for H in fam:
        if not M.is_hyperplane(H):
            w.add("not_hyperplane", set=H, condition="hm")
    n_hyp = len(M.hyperplanes())
    return AxiomReport.from_witnesses("hm", w, strict=(not w) and n_hyp > len(fam),
                                      hm_count=len(fam), hyperplane_count=n_hyp)


def check_connect(M: Matroid, m: int, scope: Scope | None = None,
                  max_witnesses: int | None = 100) -> AxiomReport:
    """Every rigid set on at least m+1 vertices is m-vertex-connected."""
    _require_dim(M, m)
    scope = _resolve(scope, M)
    subs = M._subsets()
    big = np.bitwise_count(support_table(M.n)[subs]) >= m + 1
    rigid = subs[rigid_mask_array(M) & big]
    if scope.is_exhaustive or rigid.size == 0:
        sample = rigid.tolist()
    else:
        # seeded uniform draws with replacement over all rigid sets
        rng = random.Random(scope.seed)
        sample = [int(rigid[rng.randrange(rigid.size)]) for _ in range(scope.count)]
    w = Witnesses(max_witnesses)
    verdict: dict[int, frozenset | None] = {}
    for e in sample:
        if e not in verdict:
            verdict[e] = find_vertex_cut(M._es(e), m)
        if verdict[e] is not None:
            w.add("connect", E=M._es(e), cut=verdict[e])
    return AxiomReport.from_witnesses("connect", w, scope, rigid_sets_checked=len(sample),
                                      distinct_checked=len(verdict),
                                      rigid_sets_total=int(rigid.size))


def hm1_condition_violations(M: Matroid, m: int, sets, w: Witnesses) -> None:
    for X in sets:
        R = restriction(M, complete_mask(vmask(X), M.n))
        for H in hm1_family(M.n, m, X):
            if not R.is_hyperplane(H):
                w.add("2dim", X=frozenset(X), set=H)


def check_theorem_2dim(M: Matroid, m: int, ordering=None, max_witnesses: int | None = 100) -> AxiomReport:
    """hm1(K(X)) are hyperplanes of M restricted to K(X), for every X with |X| >= m+1.

    With ``ordering`` only the prefixes of that vertex enumeration are used.
    The report also carries the prop6 verdict and whether the two agree.
    """
    _require_dim(M, m)
    verts = sorted(M.vertices)
    if ordering is None:
        sets = [X for k in range(m + 1, len(verts) + 1) for X in combinations(verts, k)]
    else:
        ordering = list(ordering)
        if sorted(ordering) != verts:
            raise ValueError("ordering must enumerate the matroid's vertices")
        sets = [tuple(ordering[:k]) for k in range(m + 1, len(ordering) + 1)]
    w = Witnesses(max_witnesses)
    hm1_condition_violations(M, m, sets, w)
    arm = is_arm_prop6(M, m).passed
    return AxiomReport.from_witnesses("2dim", w, prop6=arm, agrees=arm == (not w),
                                      filtration=ordering)


def _hm1_status(M: Matroid, m: int) -> tuple[bool, bool]:
    fam = hm1_family(M.n, m, M.vertices)
    return all(M.is_closed(H) for H in fam), all(M.is_hyperplane(H) for H in fam)


def check_twoparts(M: Matroid, m: int, max_witnesses: int | None = 100) -> AxiomReport:
    """K(V - v0) is closed; with hm1 hyperplanes its rank is r - m, via a saturated chain."""
    _require_dim(M, m)
    closed, hyper = _hm1_status(M, m)
    if not closed:
        raise PreconditionNotMet("some member of hm1 is not closed")
    w = Witnesses(max_witnesses)
    verts = sorted(M.vertices)
    for v0 in verts:
        rest = [v for v in verts if v != v0]
        K = EdgeSet(M.n, complete_mask(vmask(rest), M.n))
        if not M.is_closed(K):
            w.add("twoparts.closed", v0=v0)
        if not hyper:
            continue
        if M.rank(K) != M.r - m:
            w.add("twoparts.rank", v0=v0, expected=M.r - m, actual=M.rank(K))
        a0 = rest[:m]
        F = M.ground
        for j, a in enumerate(a0, start=1):
            F &= delta_bits(M, v0, [x for x in a0 if x != a])
            if M.rank(F) != M.r - j:
                w.add("twoparts.chain", v0=v0, step=j, set=M._es(F))
    return AxiomReport.from_witnesses("twoparts", w, rank_checked=hyper)


def delta_bits(M: Matroid, v: int, A) -> int:
    X = M.vertices
    return complete_mask(vmask(set(A) | {v}), M.n) | complete_mask(vmask(X - {v}), M.n)


def _smallest_circuit(M: Matroid, x: int) -> int | None:
    for k in range(1, x.bit_count() + 1):
        for c in combinations(list(iter_bits(x)), k):
            cm = vmask(c)
            if M.is_circuit(cm):
                return cm
    return None


def check_bottom(M: Matroid, m: int, require_precondition: bool = False,
                 max_witnesses: int | None = 100) -> AxiomReport:
    """K(V') is independent for every m-set V'.

    The lemma assumes every member of hm1 is closed; that status is recorded
    in the report, and enforced only when ``require_precondition`` is set.
    """
    _require_dim(M, m)
    closed, _ = _hm1_status(M, m)
    if require_precondition and not closed:
        raise PreconditionNotMet("some member of hm1 is not closed")
    w = Witnesses(max_witnesses)
    for U, K in _k_sets(M, m):
        if not M.is_independent(K):
            c = _smallest_circuit(M, K.bits)
            w.add("bottom", V=U, circuit=M._es(c))
    return AxiomReport.from_witnesses("bottom", w, precondition=closed)


# -- dispatch ----------------------------------------------------------------------

def run_suite(name: str, M: Matroid, m: int, scope: Scope | None = None) -> AxiomReport:
    if name == "prop6":
        return is_arm_prop6(M, m)
    if name == "C":
        return check_C(M, m, scope)
    if name == "D":
        return check_D(M, m)
    if name == "H":
        return check_H(M, m)
    if name == "B":
        return check_B(M, m)
    if name == "Z":
        return check_Z(M, m)
    if name == "laman":
        return check_laman_independent(M, m)
    if name == "ext":
        return check_extension_lemma(M, m, scope)
    if name == "hm":
        return check_hm_subset(M, m)
    if name == "connect":
        return check_connect(M, m, scope)
    if name == "2dim":
        return check_theorem_2dim(M, m)
    if name == "twoparts":
        return check_twoparts(M, m)
    if name == "bottom":
        return check_bottom(M, m)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


def arm_verdicts(M: Matroid, m: int, scope: Scope | None = None) -> dict[str, bool]:
    """Verdict of every route that decides membership in the class."""
    return {
        "prop6": is_arm_prop6(M, m).passed,
        "D": check_D(M, m).passed,
        "H": check_H(M, m).passed,
        "B": check_B(M, m).passed,
        "Z": check_Z(M, m).passed,
        "C": check_C(M, m, scope).passed,
    }


# -- independent re-check of witnesses ---------------------------------------------------

def _vs(x) -> frozenset[int]:
    return frozenset(x)


def recheck_violation(M: Matroid, m: int, v: dict) -> bool:
    """Re-evaluate one violation from its witness alone; True if it still fails."""
    kind = v["kind"]
    n = M.n
    verts = M.vertices
    if kind == "C1":
        E, F = v["E"], v["F"]
        if len(E.support() & F.support()) >= m:
            return False
        allowed = complete_mask(vmask(E.support()), n) | complete_mask(vmask(F.support()), n)
        return bool(M.closure(E | F).bits & ~allowed)
    if kind == "C2":
        E, F = v["E"], v["F"]
        return (is_rigid(M, E) and is_rigid(M, F) and len(E.support() & F.support()) >= m
                and not is_rigid(M, E | F))
    if kind == "not_cocircuit":
        return not M.is_cocircuit(v["set"])
    if kind == "not_circuit":
        return not M.is_circuit(v["set"])
    if kind == "not_hyperplane":
        return not M.is_hyperplane(v["set"])
    if kind == "not_basis":
        return not M.is_basis(v["set"])
    if kind == "rank":
        return M.r != arm_rank(len(verts), m)
    if kind == "D1":
        C = v["cocircuit"]
        return M.is_cocircuit(C) and len(C.support()) <= len(verts) - m
    if kind == "H1":
        H = v["hyperplane"]
        full = sum(1 for x in verts if (H.bits & star_mask(x, n)).bit_count() == len(verts) - 1)
        return M.is_hyperplane(H) and full > m - 1
    if kind == "B1":
        B = v["basis"]
        low = any(0 < (B.bits & star_mask(x, n)).bit_count() < m for x in verts)
        return M.is_basis(B) and (B.support() != verts or low)
    if kind in ("Z1", "ext.i"):
        C = v["circuit"]
        low = any((C.bits & star_mask(x, n)).bit_count() < m + 1 for x in C.support())
        return M.is_circuit(C) and low
    if kind == "laman":
        E, U = v["E"], _vs(v["U"])
        cnt = (E.bits & complete_mask(vmask(U), n)).bit_count()
        return len(U) >= m and cnt > laman_bound(len(U), m)
    if kind == "ext.ii":
        E = v["E"]
        X = zero_extension(E, v["anchors"], v["w"])
        return len(v["anchors"]) <= m and M.is_independent(E) and not M.is_independent(X)
    if kind == "ext.iii":
        E = v["E"]
        X = zero_extension(E, v["anchors"], v["w"])
        return len(v["anchors"]) >= m and is_rigid(M, E) and not is_rigid(M, X)
    if kind == "connect":
        E, U = v["E"], _vs(v["cut"])
        if not is_rigid(M, E) or len(U) >= m:
            return False
        rest = E.support() - U
        keep = EdgeSet(n, E.bits & complete_mask(vmask(rest), n))
        return len(rest) > 0 and not _connected_on(keep, rest)
    if kind == "2dim":
        X = _vs(v["X"])
        R = restriction(M, complete_mask(vmask(X), n))
        return not R.is_hyperplane(v["set"])
    if kind == "twoparts.closed":
        return not M.is_closed(complete_mask(vmask(verts - {v["v0"]}), n))
    if kind == "twoparts.rank":
        return M.rank(complete_mask(vmask(verts - {v["v0"]}), n)) != M.r - m
    if kind == "twoparts.chain":
        return M.rank(v["set"]) != M.r - v["step"]
    if kind == "bottom":
        return not M.is_independent(complete_mask(vmask(_vs(v["V"])), n))
    if kind == "cocircprop":
        C, D = v["circuit"], v["cocircuit"]
        return M.is_circuit(C) and M.is_cocircuit(D) and len(C & D) == 1
    raise ValueError(f"no re-check for violation kind {kind!r}")


def _connected_on(E: EdgeSet, verts: frozenset[int]) -> bool:
    adj = {x: 0 for x in verts}
    for u, v in E.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    start = min(verts)
    seen = 1 << start
    stack = [start]
    while stack:
        x = stack.pop()
        new = adj[x] & ~seen
        seen |= new
        stack.extend(iter_bits(new))
    return seen == vmask(verts)
