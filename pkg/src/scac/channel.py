"""Slot-asynchronous collision channel without feedback.

Time is measured in half-slot units internally: an offset ``delta`` is stored
as the integer ``2*delta mod 2L``. Two packets collide iff their start times
are less than one slot apart on the circle of circumference L; a zero gap is a
total overlap, anything else a partial one. Packets that merely abut do not
collide.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .validate import Code

TOTAL, PARTIAL = "total", "partial"


def to_half_slots(offset, L: int) -> int:
    """Half-slot representation of a real offset; only multiples of 1/2."""
    twice = Fraction(str(offset)) * 2 if not isinstance(offset, Fraction) else offset * 2
    if twice.denominator != 1:
        raise ValueError(f"offset {offset} is not a multiple of half a slot")
    return int(twice) % (2 * L)


@dataclass(frozen=True)
class Collision:
    victim: int
    victim_slot: int
    interferer: int
    interferer_slot: int
    kind: str


@dataclass
class SimulationReport:
    sigma: list[int]
    collisions: list[Collision] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "sigma": self.sigma,
            "collisions": [
                {
                    "victim": c.victim,
                    "victim_slot": c.victim_slot,
                    "interferer": c.interferer,
                    "interferer_slot": c.interferer_slot,
                    "kind": c.kind,
                }
                for c in self.collisions
            ],
        }


def _gap(a: int, b: int, period: int) -> int:
    d = (a - b) % period
    return min(d, period - d)


def simulate_half(code: Code, twice_offsets: Sequence[int]) -> SimulationReport:
    """Simulate one period with offsets already in half-slot units."""
    if len(twice_offsets) != len(code):
        raise ValueError(f"{len(twice_offsets)} offsets for {len(code)} users")
    period = 2 * code.length
    starts = [
        [(2 * t + off) % period for t in cw.elements]
        for cw, off in zip(code.codewords, twice_offsets)
    ]
    sigma = []
    log = []
    for i, cw in enumerate(code.codewords):
        ok = 0
        for t, pi in zip(cw.elements, starts[i]):
            hit = False
            for j, other in enumerate(code.codewords):
                if j == i:
                    continue
                for s, pj in zip(other.elements, starts[j]):
                    g = _gap(pi, pj, period)
                    if g < 2:
                        hit = True
                        log.append(Collision(i, t, j, s, TOTAL if g == 0 else PARTIAL))
            ok += not hit
        sigma.append(ok)
    return SimulationReport(sigma, log)


def simulate(code: Code, offsets: Sequence) -> SimulationReport:
    """Per-user success counts over one period of L slots; ``offsets`` are
    real delays in slots (multiples of 1/2)."""
    if len(offsets) != len(code):
        raise ValueError(f"{len(offsets)} offsets for {len(code)} users")
    return simulate_half(code, [to_half_slots(o, code.length) for o in offsets])


def _hit_masks(code: Code, victim: int, j: int) -> dict[int, int]:
    """Distinct victim-packet hit patterns of interferer j, keyed by pattern,
    with the first half-slot offset realizing each one."""
    period = 2 * code.length
    vs = [2 * t for t in code.codewords[victim].elements]
    js = [2 * s for s in code.codewords[j].elements]
    out: dict[int, int] = {}
    for off in range(period):
        m = 0
        for k, pv in enumerate(vs):
            if any(_gap(pv, (ps + off) % period, period) < 2 for ps in js):
                m |= 1 << k
        out.setdefault(m, off)
    return out


@dataclass(frozen=True)
class WorstCase:
    sigma: int
    offsets: tuple[Fraction, ...]  # victim at 0
    exact: bool = True


def worst_case(code: Code, victim: int, active: Optional[Sequence[int]] = None) -> WorstCase:
    """Least success count of ``victim`` over all offsets of the other
    (active) users, victim offset fixed at 0.

    Each interferer's effect on the victim depends only on its own offset, so
    the grid minimum reduces to choosing one hit pattern per interferer; the
    reachable unions are tracked instead of walking the full (2L)^(M-1)
    grid."""
    if not 0 <= victim < len(code):
        raise IndexError(f"victim {victim} out of range")
    others = [j for j in (active if active is not None else range(len(code))) if j != victim]
    reach: dict[int, tuple[int, ...]] = {0: ()}
    for j in others:
        masks = _hit_masks(code, victim, j)
        nxt: dict[int, tuple[int, ...]] = {}
        for r, offs in reach.items():
            for m, off in masks.items():
                nxt.setdefault(r | m, offs + (off,))
        reach = nxt
    w = code.weight
    best = max(reach, key=lambda r: (r.bit_count(), -r))
    twice = [0] * len(code)
    for j, off in zip(others, reach[best]):
        twice[j] = off
    return WorstCase(w - best.bit_count(), tuple(Fraction(t, 2) for t in twice))


def worst_case_sigma(code: Code, victim: int, active: Optional[Sequence[int]] = None) -> int:
    return worst_case(code, victim, active).sigma


def grid_min_sigma(code: Code, victim: int, max_users: int = 4) -> int:
    """Brute-force minimum over the full half-slot grid via ``simulate_half``."""
    if len(code) > max_users:
        raise ValueError(f"{len(code)} users exceeds max_users={max_users}; use sampling")
    period = 2 * code.length
    others = [j for j in range(len(code)) if j != victim]
    best = code.weight
    for combo in product(range(period), repeat=len(others)):
        twice = [0] * len(code)
        for j, off in zip(others, combo):
            twice[j] = off
        best = min(best, simulate_half(code, twice).sigma[victim])
        if best == 0:
            break
    return best


def sampled_sigma(code: Code, victim: int, samples: int, seed: int) -> WorstCase:
    """Minimum over uniformly sampled half-slot offsets; not exact."""
    rng = random.Random(seed)
    period = 2 * code.length
    best = None
    for _ in range(samples):
        twice = [0 if j == victim else rng.randrange(period) for j in range(len(code))]
        s = simulate_half(code, twice).sigma[victim]
        if best is None or s < best[0]:
            best = (s, twice)
    if best is None:
        raise ValueError("need at least one sample")
    return WorstCase(best[0], tuple(Fraction(t, 2) for t in best[1]), exact=False)
