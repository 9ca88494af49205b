"""Exact M(L,w) and M_S(L,w) by orbit enumeration plus branch and bound.

Difference sets are invariant under translation and reflection, so one
candidate per orbit suffices. The search is a maximum set packing over the
candidates' masks (d* for CAC, d+ for SCAC).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .ring import Codeword, difference_profile
from .validate import Code, is_cac, is_scac

CAC, SCAC = "cac", "scac"
DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class CandidateClass:
    codeword: Codeword
    mask: int

    @property
    def size(self) -> int:
        return self.mask.bit_count()


def canonical(elements, L: int) -> tuple[int, ...]:
    """Least sorted tuple among all translates of the set and its reflection
    that contain 0."""
    best = None
    for sign in (1, -1):
        pts = [(sign * x) % L for x in elements]
        for a in pts:
            t = tuple(sorted((x - a) % L for x in pts))
            if best is None or t < best:
                best = t
    return best


def _is_equi(elements, L: int) -> bool:
    """True if some translate of the set is {0, g, ..., (w-1)g} mod L."""
    target = set(elements)
    w = len(target)
    for a in target:
        for g in range(1, L):
            if {(a + j * g) % L for j in range(w)} == target:
                return True
    return False


def enumerate_classes(L: int, omega: int, mode: str = CAC, equi_only: bool = False) -> list[CandidateClass]:
    """One candidate per translation/reflection orbit, sorted by mask size
    then codeword. In SCAC mode codewords with 1 in d* are dropped."""
    if L < 3 or omega < 2:
        raise ValueError(f"need L >= 3 and omega >= 2, got L={L}, omega={omega}")
    if mode not in (CAC, SCAC):
        raise ValueError(f"unknown mode {mode!r}")
    unit = (1 << 1) | (1 << (L - 1))
    out = []
    for rest in combinations(range(1, L), omega - 1):
        els = (0, *rest)
        if canonical(els, L) != els:
            continue
        if equi_only and not _is_equi(els, L):
            continue
        prof = difference_profile(Codeword(L, els))
        if mode == SCAC:
            if prof.d_star & unit:
                continue
            mask = prof.d_plus
        else:
            mask = prof.d_star
        out.append(CandidateClass(Codeword(L, els), mask))
    out.sort(key=lambda c: (c.size, c.codeword.elements))
    return out


@dataclass
class SearchOutcome:
    mode: str
    L: int
    omega: int
    optimum: int
    witness: Code
    nodes_explored: int
    proven_optimal: bool

    def to_dict(self, stats: bool = False) -> dict:
        out = {
            "mode": self.mode,
            "L": self.L,
            "w": self.omega,
            "optimum": self.optimum,
            "proven_optimal": self.proven_optimal,
            "witness": self.witness.to_dict(),
        }
        if stats:
            out["nodes_explored"] = self.nodes_explored
        return out


class _Budget(Exception):
    pass


class _Packer:
    """Depth-first maximum packing with a capacity bound: the free residues
    must hold the remaining masks, so at most k more fit where k is the
    longest prefix of the (ascending) candidate sizes summing to <= free."""

    def __init__(self, masks, sizes, budget):
        self.masks = masks
        self.sizes = sizes
        self.budget = budget
        self.nodes = 0
        self.best = []

    def _cap(self, cands, used):
        reach = 0
        for c in cands:
            reach |= self.masks[c]
        free = (reach & ~used).bit_count()
        k = 0
        for c in cands:
            free -= self.sizes[c]
            if free < 0:
                break
            k += 1
        return k

    def run(self, chosen, cands, used):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget
        if len(chosen) > len(self.best):
            self.best = list(chosen)
        if len(chosen) + self._cap(cands, used) <= len(self.best):
            return
        for i, c in enumerate(cands):
            if len(chosen) + 1 + self._cap(cands[i + 1 :], used) <= len(self.best):
                return
            m = self.masks[c]
            nxt = [d for d in cands[i + 1 :] if not self.masks[d] & (used | m)]
            chosen.append(c)
            self.run(chosen, nxt, used | m)
            chosen.pop()


def _solve_subtree(args):
    masks, sizes, budget, first, cands = args
    p = _Packer(masks, sizes, budget)
    try:
        p.run([first], cands, masks[first])
        done = True
    except _Budget:
        done = False
    return p.best, p.nodes, done


def max_code(
    L: int,
    omega: int = 3,
    mode: str = CAC,
    budget: int = DEFAULT_BUDGET,
    equi_only: bool = False,
    workers: int = 1,
) -> SearchOutcome:
    classes = enumerate_classes(L, omega, mode, equi_only)
    masks = [c.mask for c in classes]
    sizes = [c.size for c in classes]
    if workers > 1 and len(classes) > 1:
        best, nodes, proven = _parallel(masks, sizes, budget, workers)
    else:
        packer = _Packer(masks, sizes, budget)
        proven = True
        try:
            packer.run([], list(range(len(classes))), 0)
        except _Budget:
            proven = False
        best, nodes = packer.best, packer.nodes
    witness = Code(L, omega, tuple(classes[i].codeword for i in best))
    report = is_scac(witness) if mode == SCAC else is_cac(witness)
    ok = report.is_scac if mode == SCAC else report.is_cac
    if not ok:
        raise AssertionError(f"search produced an invalid {mode} witness: {witness}")
    return SearchOutcome(mode, L, omega, len(best), witness, nodes, proven)


def _parallel(masks, sizes, budget, workers):
    """Independent first-level subtrees; each is searched with no incumbent
    so results do not depend on scheduling. The winner is the earliest
    subtree reaching the maximum, which is what the sequential search keeps."""
    n = len(masks)
    jobs = []
    for i in range(n):
        cands = [d for d in range(i + 1, n) if not masks[d] & masks[i]]
        jobs.append((masks, sizes, budget, i, cands))
    best, nodes, proven = [], 1, True
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for found, k, done in pool.map(_solve_subtree, jobs):
            nodes += k
            proven = proven and done
            if found and len(found) > len(best):
                best = found
    return best, nodes, proven


def iter_max_codes(L: int, omega: int = 3, mode: str = CAC, size: int | None = None):
    """Yield every packing of ``size`` candidate classes (default: the
    optimum) as a Code built from class representatives."""
    classes = enumerate_classes(L, omega, mode)
    if size is None:
        size = max_code(L, omega, mode).optimum
    masks = [c.mask for c in classes]

    def rec(chosen, start, used):
        if len(chosen) == size:
            yield Code(L, omega, tuple(classes[i].codeword for i in chosen))
            return
        for i in range(start, len(classes)):
            if not masks[i] & used:
                chosen.append(i)
                yield from rec(chosen, i + 1, used | masks[i])
                chosen.pop()

    yield from rec([], 0, 0)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("SCAC_THREADS", "1")))
    except ValueError:
        return 1
