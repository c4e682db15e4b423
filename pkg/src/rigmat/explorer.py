"""Small-case search: matroid enumeration, the two-dimensional criterion, and
candidates whose hyperplanes contain every prescribed two-clique union."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterator

import numpy as np

from .checkers import check_hm_subset, check_theorem_2dim, is_arm_prop6
from .edges import full_mask, hm_family, iter_bits, num_edges
from .errors import CapExceeded, MatroidError
from .matroid import (Matroid, bases_from_closure, closure_from_hyperplanes, from_bases,
                      matroid_from_json)
from .reports import AxiomReport

MAX_GROUND = 10
MAX_BASES = 20
EXHAUSTIVE_POOL = 16
ATTEMPTS_PER_CANDIDATE = 20

VERDICTS = ("equivalence-confirmed", "discrepancy", "counterexample",
            "exhausted-no-counterexample", "budget-exhausted")


# -- enumeration --------------------------------------------------------------------

def _ground_for(ground_size: int, n: int | None) -> tuple[int, int]:
    if n is None:
        n = 2
        while num_edges(n) < ground_size:
            n += 1
    if num_edges(n) < ground_size:
        raise ValueError(f"K_{n} has only {num_edges(n)} edges")
    return n, (1 << ground_size) - 1


def _exchange_ok(cands: list[int], fams: np.ndarray) -> np.ndarray:
    """Vectorised basis exchange over many subfamilies (bit i of a family = cands[i])."""
    index = {b: i for i, b in enumerate(cands)}
    ok = np.ones(fams.size, dtype=bool)
    for i, b1 in enumerate(cands):
        has_i = ((fams >> i) & 1).astype(bool)
        for j, b2 in enumerate(cands):
            if i == j:
                continue
            has_ij = has_i & ((fams >> j) & 1).astype(bool)
            for x in iter_bits(b1 & ~b2):
                swap = 0
                for y in iter_bits(b2 & ~b1):
                    swap |= 1 << index[(b1 ^ (1 << x)) | (1 << y)]
                ok &= ~has_ij | ((fams & swap) != 0)
    return ok


def enumerate_matroids(ground_size: int, rank: int, n: int | None = None) -> Iterator[Matroid]:
    """Every matroid of the given rank on the first ``ground_size`` edges of K_n.

    Families are filtered through basis exchange and produced in increasing
    order of their subfamily bit mask; no isomorphism reduction is applied.
    """
    if ground_size > MAX_GROUND:
        raise CapExceeded(f"ground size {ground_size} exceeds {MAX_GROUND}")
    if not 0 <= rank <= ground_size:
        raise ValueError(f"rank {rank} is impossible on {ground_size} elements")
    if comb(ground_size, rank) > MAX_BASES:
        raise CapExceeded(f"C({ground_size},{rank}) = {comb(ground_size, rank)} exceeds {MAX_BASES}")
    n, ground = _ground_for(ground_size, n)
    cands = [sum(1 << e for e in c) for c in combinations(range(ground_size), rank)]
    fams = np.arange(1, 1 << len(cands), dtype=np.int64)
    for chunk in np.array_split(fams, max(1, fams.size // 65536)):
        for f in chunk[_exchange_ok(cands, chunk)].tolist():
            bases = [cands[i] for i in iter_bits(f)]
            yield from_bases(n, bases, ground, validate=False)


# -- findings -------------------------------------------------------------------------

@dataclass
class Finding:
    verdict: str
    n: int
    m: int
    seed: int = 0
    budget: int = 0
    matroid: dict | None = None
    reports: list[AxiomReport] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    mode: str = "question"

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "mode": self.mode, "n": self.n, "m": self.m,
                "seed": self.seed, "budget": self.budget, "matroid": self.matroid,
                "reports": [r.to_json() for r in self.reports], "stats": self.stats}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> "Finding":
        return cls(data["verdict"], int(data["n"]), int(data["m"]), int(data.get("seed", 0)),
                   int(data.get("budget", 0)), data.get("matroid"),
                   [AxiomReport.from_json(r) for r in data.get("reports", [])],
                   dict(data.get("stats", {})), data.get("mode", "question"))


def _rerun(report: AxiomReport, M: Matroid, m: int) -> AxiomReport:
    if report.suite == "hm":
        return check_hm_subset(M, m)
    if report.suite == "prop6":
        return is_arm_prop6(M, m)
    if report.suite == "2dim":
        return check_theorem_2dim(M, m)
    raise ValueError(f"cannot re-run suite {report.suite!r}")


def finding_problems(data: dict | Finding) -> list[str]:
    """Re-verify a finding from its serialisation alone; an empty list means it holds up."""
    f = data if isinstance(data, Finding) else Finding.from_json(data)
    problems = []
    if f.matroid is None:
        if f.verdict in ("counterexample", "discrepancy"):
            problems.append(f"verdict {f.verdict} carries no matroid")
        return problems
    try:
        M = matroid_from_json(f.matroid)
    except (MatroidError, ValueError, KeyError) as exc:
        return [f"matroid does not load: {exc}"]
    for old in f.reports:
        new = _rerun(old, M, f.m)
        if new.to_json() != old.to_json():
            problems.append(f"report {old.suite} does not reproduce")
    if f.verdict == "counterexample":
        if not check_hm_subset(M, f.m).passed:
            problems.append("prescribed family is not contained in the hyperplanes")
        if f.mode == "closing-corollary":
            if check_theorem_2dim(M, f.m).passed:
                problems.append("restricted hyperplane condition holds everywhere")
        elif is_arm_prop6(M, f.m).passed:
            problems.append("matroid is an abstract rigidity matroid")
    elif f.verdict == "discrepancy":
        if check_theorem_2dim(M, f.m).passed == is_arm_prop6(M, f.m).passed:
            problems.append("criterion and prop6 verdict agree")
    return problems


def verify_finding(data: dict | Finding) -> bool:
    return not finding_problems(data)


# -- the two-dimensional criterion on a full enumeration ----------------------------

Check = Callable[[Matroid, int], bool]


def _criterion(M: Matroid, m: int) -> bool:
    return check_theorem_2dim(M, m).passed


def _arm(M: Matroid, m: int) -> bool:
    return is_arm_prop6(M, m).passed


def confirm_theorem_2dim(n: int, m: int, criterion: Check = _criterion, arm: Check = _arm) -> Finding:
    """Compare the restricted-hyperplane criterion with prop6 on every matroid of ARM rank.

    ``criterion`` and ``arm`` can be replaced to exercise the harness itself.
    """
    if n < m + 1:
        raise ValueError(f"need n >= m+1, got n={n}, m={m}")
    rank = m * n - comb(m + 1, 2)
    total = arms = 0
    for M in enumerate_matroids(num_edges(n), rank, n):
        total += 1
        a = arm(M, m)
        arms += a
        if criterion(M, m) != a:
            return Finding("discrepancy", n, m, matroid=M.to_json(),
                           reports=[check_theorem_2dim(M, m), is_arm_prop6(M, m)],
                           stats={"matroids": total, "arm": arms}, mode="confirm-2dim")
    return Finding("equivalence-confirmed", n, m, stats={"matroids": total, "arm": arms},
                   mode="confirm-2dim")


# -- candidate hyperplane families ---------------------------------------------------------

def _incomparable_pool(required: list[int], ground: int) -> list[int]:
    subs = np.arange(ground + 1, dtype=np.int64)
    subs = subs[(subs & ~ground) == 0]
    req = np.array(required, dtype=np.int64)
    below = ((subs[:, None] & ~req[None, :]) == 0).any(axis=1)
    above = ((req[None, :] & ~subs[:, None]) == 0).any(axis=1)
    keep = ~below & ~above & (subs != ground)
    return subs[keep].tolist()


def _uncovered(family: list[int], ground: int) -> tuple[np.ndarray, np.ndarray]:
    """Pairwise intersections B of members, with the elements x for which no member holds B | {x}."""
    fam = np.array(sorted(family), dtype=np.int64)
    if fam.size < 2:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    inter = np.unique((fam[:, None] & fam[None, :])[~np.eye(fam.size, dtype=bool)])
    inside = (inter[:, None] & ~fam[None, :]) == 0
    cover = np.bitwise_or.reduce(np.where(inside, fam[None, :], 0), axis=1)
    missing = ground & ~cover
    bad = missing != 0
    return inter[bad], missing[bad]


def hyperplane_axiom_violation(family: list[int], ground: int) -> tuple[int, int] | None:
    """First (H1 & H2, missing elements) with no member containing (H1 & H2) | {x}, or None."""
    inter, missing = _uncovered(family, ground)
    if inter.size == 0:
        return None
    return int(inter[0]), int(missing[0])


def _find_violation(family: list[int], ground: int, rng: random.Random,
                    probes: int = 64) -> tuple[int, int] | None:
    """A random uncovered (H1 & H2, missing); cheap random probes before the full scan."""
    fam = np.array(family, dtype=np.int64)
    for _ in range(probes):
        i, j = rng.randrange(fam.size), rng.randrange(fam.size)
        if i == j:
            continue
        base = int(fam[i] & fam[j])
        cover = int(np.bitwise_or.reduce(fam[(base & ~fam) == 0]))
        if ground & ~cover:
            return base, ground & ~cover
    inter, miss = _uncovered(family, ground)
    if inter.size == 0:
        return None
    k = rng.randrange(inter.size)
    return int(inter[k]), int(miss[k])


def _is_antichain(family: list[int]) -> bool:
    for a, b in combinations(family, 2):
        if a & ~b == 0 or b & ~a == 0:
            return False
    return True


def matroid_from_hyperplanes(n: int, family: list[int], ground: int) -> Matroid | None:
    """The matroid whose hyperplane family is exactly ``family``, or None."""
    sigma = closure_from_hyperplanes(n, family, ground)
    try:
        M = from_bases(n, [b.bits for b in bases_from_closure(sigma)], ground)
    except MatroidError:
        return None
    if sorted(M.hyperplanes().bits()) != sorted(family):
        return None
    return M


class _Search:
    def __init__(self, n: int, m: int, budget: int, seed: int):
        if n < m + 2:
            raise ValueError(f"need n >= m+2, got n={n}, m={m}")
        if budget < 1:
            raise ValueError("budget must be positive")
        self.n, self.m, self.budget, self.seed = n, m, budget, seed
        self.ground = full_mask(n)
        self.required = [h.bits for h in hm_family(n, m)]
        self.pool = _incomparable_pool(self.required, self.ground)
        self.stats = {"tested": 0, "pruned": 0, "distinct": 0, "pool": len(self.pool)}
        self.seen: set[tuple[int, ...]] = set()

    @property
    def exhaustive(self) -> bool:
        return len(self.pool) <= EXHAUSTIVE_POOL

    def _matroid(self, family: list[int]) -> Matroid | None:
        """The candidate's matroid, or None if it is invalid or was already tested."""
        key = tuple(sorted(family))
        if key in self.seen:
            self.stats["tested"] += 1
            return None
        if not _is_antichain(family) or hyperplane_axiom_violation(family, self.ground):
            self.stats["pruned"] += 1
            return None
        M = matroid_from_hyperplanes(self.n, list(key), self.ground)
        if M is None:
            self.stats["pruned"] += 1
            return None
        self.stats["tested"] += 1
        self.seen.add(key)
        self.stats["distinct"] += 1
        return M

    def _antichains(self, start: int, chosen: list[int]) -> Iterator[list[int]]:
        yield chosen
        for i in range(start, len(self.pool)):
            h = self.pool[i]
            if all(h & ~c and c & ~h for c in chosen):
                yield from self._antichains(i + 1, chosen + [h])

    def _grow(self, rng: random.Random) -> list[int] | None:
        family = list(self.required)
        elements = list(iter_bits(self.ground))
        # how eagerly a new hyperplane is grown beyond the required base | {x};
        # large values almost always dead-end, so most attempts stay minimal
        greed = 0.0 if rng.random() < 0.5 else 0.1 * rng.random()
        while True:
            bad = _find_violation(family, self.ground, rng)
            if bad is None:
                return family
            base, missing = bad
            x = rng.choice(list(iter_bits(missing)))
            h = base | (1 << x)
            if any(f & ~h == 0 for f in self.required):
                return None
            # members inside the new set were too small: merge them into it.  The
            # down-closure of the family strictly grows, so this terminates.
            family = [f for f in family if f & ~h]
            rest = [e for e in elements if not h >> e & 1]
            rng.shuffle(rest)
            for e in rest:
                if rng.random() >= greed:
                    continue
                g = h | (1 << e)
                if g != self.ground and not any(f & ~g == 0 for f in family):
                    h = g
            family.append(h)

    def candidates(self) -> Iterator[Matroid]:
        """Matroids whose hyperplanes contain the prescribed family, until the budget is spent."""
        if self.exhaustive:
            for extra in self._antichains(0, []):
                if self.stats["tested"] >= self.budget:
                    return
                M = self._matroid(self.required + extra)
                if M is not None:
                    yield M
            self.stats["complete"] = True
            return
        rng = random.Random(self.seed)
        attempts = 0
        while self.stats["tested"] < self.budget and attempts < ATTEMPTS_PER_CANDIDATE * self.budget:
            attempts += 1
            family = self._grow(rng)
            if family is None:
                self.stats["pruned"] += 1
                continue
            M = self._matroid(family)
            if M is not None:
                yield M
        self.stats["attempts"] = attempts

    def finish(self, mode: str) -> Finding:
        verdict = "exhausted-no-counterexample" if self.stats.get("complete") else "budget-exhausted"
        return Finding(verdict, self.n, self.m, self.seed, self.budget, stats=self.stats,
                       mode=mode)


def search_question(n: int, m: int, budget: int = 1000, seed: int = 0) -> Finding:
    """Look for a matroid on K_n whose hyperplanes contain hm_family(n, m) but which is not an ARM."""
    s = _Search(n, m, budget, seed)
    for M in s.candidates():
        arm = is_arm_prop6(M, m)
        if not arm.passed:
            return Finding("counterexample", n, m, seed, budget, M.to_json(),
                           [check_hm_subset(M, m), arm], s.stats)
    return s.finish("question")


def check_closing_corollary(n: int, m: int, budget: int = 1000, seed: int = 0) -> Finding:
    """Same candidates; look for one violating the restricted hyperplane condition on some K(X)."""
    s = _Search(n, m, budget, seed)
    for M in s.candidates():
        crit = check_theorem_2dim(M, m)
        if not crit.passed:
            return Finding("counterexample", n, m, seed, budget, M.to_json(),
                           [check_hm_subset(M, m), crit], s.stats, mode="closing-corollary")
    return s.finish("closing-corollary")
