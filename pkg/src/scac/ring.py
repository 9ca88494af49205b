"""Residue-ring primitives: codewords, difference sets, tubes and gaps.

Sets of residues are kept as Python ints used as bitmaps (bit ``x`` set means
residue ``x`` is a member), so disjointness tests are a single ``&``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

E_ROUGH = "E-rough"
O_ROUGH = "O-rough"
FLAT = "flat"


def to_mask(residues: Iterable[int]) -> int:
    m = 0
    for x in residues:
        m |= 1 << x
    return m


def residues(mask: int) -> list[int]:
    """Members of a bitmap in ascending order."""
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def rotate(mask: int, k: int, L: int) -> int:
    """The set ``mask + {k}`` in Z_L."""
    k %= L
    full = (1 << L) - 1
    return ((mask << k) | (mask >> (L - k))) & full


@dataclass(frozen=True)
class Codeword:
    length: int
    elements: tuple[int, ...]

    def __post_init__(self):
        L = self.length
        if L < 1:
            raise ValueError(f"length must be positive, got {L}")
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if not els:
            raise ValueError("a codeword needs at least one element")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {els}")
        if els[0] < 0 or els[-1] >= L:
            raise ValueError(f"elements must lie in [0, {L - 1}]: {els}")

    @classmethod
    def of(cls, elements: Iterable[int], length: int) -> "Codeword":
        """Build from arbitrary integers, reducing mod ``length``; repeats are an error."""
        reduced = [x % length for x in elements]
        if len(set(reduced)) != len(reduced):
            raise ValueError(f"repeated residues mod {length}: {list(elements)}")
        return cls(length, tuple(sorted(reduced)))

    @property
    def weight(self) -> int:
        return len(self.elements)

    def translate(self, c: int) -> "Codeword":
        return Codeword.of((x + c for x in self.elements), self.length)

    def reflect(self) -> "Codeword":
        return Codeword.of((-x for x in self.elements), self.length)

    def scale(self, a: int, length: Optional[int] = None) -> "Codeword":
        return Codeword.of((a * x for x in self.elements), length or self.length)

    def __str__(self) -> str:
        return format_codeword(self)


_TEXT_RE = re.compile(r"^\s*\{\s*([0-9,\s]*)\}\s*@\s*(\d+)\s*$")


def parse_codeword(text: str) -> Codeword:
    """Parse the ``{0,4,7}@26`` text form."""
    m = _TEXT_RE.match(text)
    if not m:
        raise ValueError(f"not a codeword literal: {text!r}")
    body, L = m.group(1), int(m.group(2))
    els = [int(tok) for tok in body.replace(" ", "").split(",") if tok]
    if sorted(set(els)) != sorted(els) or any(x >= L for x in els):
        raise ValueError(f"invalid codeword literal: {text!r}")
    return Codeword(L, tuple(sorted(els)))


def format_codeword(cw: Codeword) -> str:
    return "{" + ",".join(map(str, cw.elements)) + "}@" + str(cw.length)


@dataclass(frozen=True)
class DifferenceProfile:
    """d, d* and d+ of a codeword as bitmaps over Z_L."""

    length: int
    d: int
    d_star: int
    d_plus: int

    @property
    def d_set(self) -> set[int]:
        return set(residues(self.d))

    @property
    def d_star_set(self) -> set[int]:
        return set(residues(self.d_star))

    @property
    def d_plus_set(self) -> set[int]:
        return set(residues(self.d_plus))


def difference_profile(cw: Codeword) -> DifferenceProfile:
    L = cw.length
    d = 0
    for a in cw.elements:
        for b in cw.elements:
            d |= 1 << ((a - b) % L)
    d_star = d & ~1
    d_plus = d_star | rotate(d_star, 1, L)
    return DifferenceProfile(L, d, d_star, d_plus)


@dataclass(frozen=True)
class Interval:
    x: int
    y: int
    kind: str

    def __len__(self):
        return self.y - self.x + 1

    def contains(self, other: "Interval") -> bool:
        return self.x <= other.x and other.y <= self.y


def roughness(x: int, y: int) -> str:
    if x % 2 == 0 and y % 2 == 0:
        return E_ROUGH
    if x % 2 == 1 and y % 2 == 1:
        return O_ROUGH
    return FLAT


@dataclass(frozen=True)
class TubeGapDecomposition:
    length: int
    tubes: tuple[Interval, ...]
    gaps: tuple[Interval, ...]

    def union_mask(self) -> int:
        """Re-union of the tubes; equals the decomposed set."""
        return to_mask(v for t in self.tubes for v in range(t.x, t.y + 1))


def decompose(subset, L: int) -> TubeGapDecomposition:
    """Split a subset of {2,...,L-1} into maximal runs (tubes) and the runs
    of its complement within {2,...,L-1} (gaps)."""
    mask = subset if isinstance(subset, int) else to_mask(subset)
    if mask < 0 or mask >> L:
        raise ValueError(f"set has members outside Z_{L}")
    if mask & 0b11:
        raise ValueError("set must not contain 0 or 1")
    tubes, gaps = [], []
    x = 2
    while x < L:
        inside = bool(mask >> x & 1)
        y = x
        while y + 1 < L and bool(mask >> (y + 1) & 1) == inside:
            y += 1
        (tubes if inside else gaps).append(Interval(x, y, roughness(x, y)))
        x = y + 1
    return TubeGapDecomposition(L, tuple(tubes), tuple(gaps))


def equi_codeword(g: int, omega: int, L: int) -> Codeword:
    """The codeword {0, g, 2g, ..., (omega-1)g} mod L, generator g <= L/2."""
    if not 1 <= g or 2 * g > L:
        raise ValueError(f"generator must satisfy 1 <= g <= L/2, got g={g}, L={L}")
    els = [(j * g) % L for j in range(omega)]
    if len(set(els)) != omega:
        raise ValueError(f"generator {g} repeats elements mod {L} at weight {omega}")
    return Codeword(L, tuple(sorted(els)))


@dataclass(frozen=True)
class CodewordClass:
    """Weight-3 codeword type.

    ``kind`` is one of E1 (g = L/4), E2 (g = L/3), N1 (g = (L-1)/3),
    N2 (g = (L+1)/3), ``equi`` (any other generator) or ``nonequi``.
    ``predicted_dplus_size`` is the theoretical |d+| for an SCAC-admissible
    codeword of even length; when ``predicted_exact`` is false it is only a
    lower bound. Outside that setting it is None.
    """

    kind: str
    generator: Optional[int]
    q: Optional[tuple[int, int, int]]
    dplus_size: int
    predicted_dplus_size: Optional[int]
    predicted_exact: bool
    dispersive: bool
    exceptional: bool
    admissible: bool

    @property
    def equi(self) -> bool:
        return self.generator is not None


def gap_triple(cw: Codeword) -> tuple[int, int, int]:
    """Cyclic gaps between the three elements, ascending (q_l, q_m, q_u)."""
    a, b, c = cw.elements
    L = cw.length
    return tuple(sorted((b - a, c - b, L - (c - a))))


def is_dispersive(prof: DifferenceProfile) -> bool:
    return prof.d & rotate(prof.d, 1, prof.length) == 0


def classify(cw: Codeword) -> CodewordClass:
    if cw.weight != 3:
        raise ValueError(f"classification is only defined for weight 3, got weight {cw.weight}")
    L = cw.length
    if L < 6:
        raise ValueError(f"classification needs L >= 6, got {L}")
    prof = difference_profile(cw)
    ql, qm, qu = gap_triple(cw)
    admissible = ql >= 2
    dstar_size = prof.d_star.bit_count()
    dplus_size = prof.d_plus.bit_count()
    theory = L % 2 == 0 and admissible

    generator = None
    q = None
    if ql == qm == qu:
        generator = ql
    elif ql == qm:
        generator = ql
    elif qm == qu:
        generator = qm
    else:
        q = (ql, qm, qu)

    predicted, exact = None, True
    if generator is not None:
        g = generator
        if 4 * g == L:
            kind = "E1"
        elif 3 * g == L:
            kind = "E2"
        elif 3 * g == L - 1:
            kind = "N1"
        elif 3 * g == L + 1:
            kind = "N2"
        else:
            kind = "equi"
        if theory:
            predicted = {"E2": 4, "E1": 6, "N1": 6, "N2": 6}.get(kind, 8)
    else:
        kind = "nonequi"
        if theory:
            if 2 * qu < L:
                special = ql + 1 == qm == qu - 1 and 3 * qm == L
            else:
                special = qm == ql + 1 and 4 * qm == L + 2 and 2 * qu == L
            predicted, exact = (8, True) if special else (10, False)

    return CodewordClass(
        kind=kind,
        generator=generator,
        q=q,
        dplus_size=dplus_size,
        predicted_dplus_size=predicted,
        predicted_exact=exact,
        dispersive=is_dispersive(prof),
        exceptional=dstar_size < 4,
        admissible=admissible,
    )
