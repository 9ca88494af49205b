"""CAC / SCAC membership, solitary gaps, the gap-count condition and leaves."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .ring import (
    E_ROUGH,
    O_ROUGH,
    Codeword,
    Interval,
    decompose,
    difference_profile,
    residues,
)


@dataclass(frozen=True)
class Code:
    length: int
    weight: int
    codewords: tuple[Codeword, ...]

    def __post_init__(self):
        cws = tuple(self.codewords)
        object.__setattr__(self, "codewords", cws)
        for cw in cws:
            if cw.length != self.length or cw.weight != self.weight:
                raise ValueError(
                    f"codeword {cw} does not match length {self.length} / weight {self.weight}"
                )
        if len(set(cws)) != len(cws):
            raise ValueError("codewords must be pairwise distinct")

    @classmethod
    def of(cls, codewords, length: int, weight: Optional[int] = None) -> "Code":
        cws = tuple(Codeword.of(c, length) for c in codewords)
        if weight is None:
            weight = cws[0].weight if cws else 0
        return cls(length, weight, cws)

    def __len__(self):
        return len(self.codewords)

    def to_dict(self) -> dict:
        return {
            "L": self.length,
            "w": self.weight,
            "codewords": [list(cw.elements) for cw in self.codewords],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "Code":
        try:
            L = int(obj["L"])
            w = int(obj["w"])
            raw = obj["codewords"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed code object: {exc}") from None
        if not isinstance(raw, list):
            raise ValueError("'codewords' must be a list")
        return cls(L, w, tuple(Codeword.of(c, L) for c in raw))

    @classmethod
    def from_json(cls, text: str) -> "Code":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Violation:
    indices: tuple[int, ...]
    condition: str
    witness: int


# condition tags used in Violation.condition
CAC_OVERLAP = "d* overlap"
SCAC_UNIT = "1 in d*"
SCAC_OVERLAP = "d+ overlap"


@dataclass
class ValidationReport:
    is_cac: bool
    is_scac: bool
    violations: list[Violation] = field(default_factory=list)
    solitary_gap_counts: Optional[list[int]] = None

    def to_dict(self) -> dict:
        return {
            "is_cac": self.is_cac,
            "is_scac": self.is_scac,
            "violations": [
                {"codewords": list(v.indices), "condition": v.condition, "witness": v.witness}
                for v in self.violations
            ],
            "solitary_gap_counts": self.solitary_gap_counts,
        }


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _cac_violations(profiles) -> list[Violation]:
    out = []
    for j in range(len(profiles)):
        for k in range(j + 1, len(profiles)):
            common = profiles[j].d_star & profiles[k].d_star
            if common:
                out.append(Violation((j, k), CAC_OVERLAP, _lowest(common)))
    return out


def _scac_violations(profiles, L: int) -> list[Violation]:
    out = []
    unit = (1 << 1) | (1 << (L - 1))
    for j, p in enumerate(profiles):
        if p.d_star & unit:
            out.append(Violation((j,), SCAC_UNIT, _lowest(p.d_star & unit)))
    for j in range(len(profiles)):
        for k in range(j + 1, len(profiles)):
            common = profiles[j].d_plus & profiles[k].d_plus
            if common:
                out.append(Violation((j, k), SCAC_OVERLAP, _lowest(common)))
    return out


def _report(code: Code, keep: str) -> ValidationReport:
    profiles = [difference_profile(cw) for cw in code.codewords]
    cac = _cac_violations(profiles)
    scac = _scac_violations(profiles, code.length)
    report = ValidationReport(is_cac=not cac, is_scac=not scac)
    report.violations = cac if keep == "cac" else scac
    if report.is_scac:
        report.solitary_gap_counts = [len(solitary_gaps(code, j)) for j in range(len(code))]
    return report


def is_cac(code: Code) -> ValidationReport:
    """Report whose violations list pairs with intersecting d*."""
    return _report(code, "cac")


def is_scac(code: Code) -> ValidationReport:
    """Report whose violations list unit differences and intersecting d+."""
    return _report(code, "scac")


def union_dplus(code: Code) -> int:
    m = 0
    for cw in code.codewords:
        m |= difference_profile(cw).d_plus
    return m


def code_tubes(code: Code, merged: bool = False) -> list[Interval]:
    """Tubes of the code's shifted difference sets.

    By default these are the tubes of each d+(I) taken separately. With
    ``merged`` the union is decomposed as one set, so adjacent tubes of
    different codewords fuse into one longer tube.
    """
    L = code.length
    if merged:
        return list(decompose(union_dplus(code), L).tubes)
    return [t for cw in code.codewords for t in decompose(difference_profile(cw).d_plus, L).tubes]


def solitary_gaps(code: Code, j: int, merged: bool = False) -> list[Interval]:
    """E-rough (O-rough) gaps of d+(I_j) that include no E-rough (O-rough)
    tube of the code. ``j`` is 0-based.

    With per-codeword tubes (the default) every tube meeting a gap of I_j
    lies wholly inside it, which is what makes each solitary gap leave a
    residue uncovered. Merged tubes can straddle a gap boundary; see
    ``code_tubes``.
    """
    if not 0 <= j < len(code):
        raise IndexError(f"codeword index {j} out of range for a code of size {len(code)}")
    own = decompose(difference_profile(code.codewords[j]).d_plus, code.length)
    tubes = code_tubes(code, merged)
    out = []
    for gap in own.gaps:
        if gap.kind not in (E_ROUGH, O_ROUGH):
            continue
        if not any(t.kind == gap.kind and gap.contains(t) for t in tubes):
            out.append(gap)
    return out


def gap_bound_check(code: Code) -> bool:
    """L >= 2 + lambda_j + sum |d+(I)| for every codeword j."""
    total = sum(difference_profile(cw).d_plus.bit_count() for cw in code.codewords)
    return all(
        code.length >= 2 + len(solitary_gaps(code, j)) + total for j in range(len(code))
    )


@dataclass(frozen=True)
class Leave:
    residues: tuple[int, ...]
    tight: bool
    # |leave| < 4 and {L/3, 2L/3} not inside the leave
    small: bool


def leave(code: Code) -> Leave:
    L = code.length
    covered = 0
    for cw in code.codewords:
        covered |= difference_profile(cw).d
    rest = residues(((1 << L) - 1) & ~covered)
    thirds = L % 3 == 0 and L // 3 in rest and 2 * L // 3 in rest
    return Leave(tuple(rest), not rest, len(rest) < 4 and not thirds)
