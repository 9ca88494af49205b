"""Closed-form values and bounds for M(L,3) and M_S(L,3).

Every formula is evaluated with exact rational arithmetic. A formula whose
hypotheses fail, or whose value is not an integer, comes back with
``applicable=False`` and a diagnostic instead of being rounded.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .construct import (
    ODD_3_P5,
    ODD_3_SAFE7,
    ODD_9_P5,
    ODD_P5,
    ODD_SAFE,
    _odd_length_cases,
    m_e_with_witness,
)

EXACT, UPPER, LOWER, BRACKET = "exact", "upper", "lower", "bracket"


@dataclass(frozen=True)
class BoundResult:
    lower: Optional[int]
    upper: Optional[int]
    kind: str
    provenance: str
    applicable: bool = True
    note: str = ""

    @classmethod
    def exact(cls, value: int, provenance: str, note: str = "") -> "BoundResult":
        return cls(value, value, EXACT, provenance, True, note)

    @classmethod
    def upper_bound(cls, value: int, provenance: str) -> "BoundResult":
        return cls(None, value, UPPER, provenance)

    @classmethod
    def lower_bound(cls, value: int, provenance: str) -> "BoundResult":
        return cls(value, None, LOWER, provenance)

    @classmethod
    def inapplicable(cls, provenance: str, note: str) -> "BoundResult":
        return cls(None, None, EXACT, provenance, False, note)

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.kind == EXACT else None

    def to_dict(self) -> dict:
        return asdict(self)


def _integral(value: Fraction, kind: str, provenance: str) -> BoundResult:
    if value.denominator != 1:
        return BoundResult(None, None, kind, provenance, False, f"non-integer value {value}")
    v = int(value)
    if kind == EXACT:
        return BoundResult.exact(v, provenance)
    if kind == UPPER:
        return BoundResult.upper_bound(v, provenance)
    return BoundResult.lower_bound(v, provenance)


# ---------------------------------------------------------------- M_S upper

MS_UPPER = "SCAC upper bound (mod 8/24)"
MS_UPPER_MOD12 = "SCAC upper bound (mod 12)"
MS_UPPER_12_24 = "SCAC upper bound (L = 12 mod 24)"
MS_LEGACY = "legacy SCAC upper bound (floor /6)"
MS_SMALL = "M_S = 1 for L < 18"


def ms_upper(L: int) -> BoundResult:
    if L % 2 or L < 18:
        return BoundResult(None, None, UPPER, MS_UPPER, False, "needs even L >= 18")
    if L % 8 == 0:
        v = Fraction(L, 8)
    elif L % 8 == 4:
        v = Fraction(L - 4, 8)
    elif L % 24 == 6:
        v = Fraction(L + 2, 8)
    elif L % 24 in (2, 10, 18):
        v = Fraction(L - 2, 8)
    else:  # 14, 22 mod 24
        v = Fraction(L - 6, 8)
    return _integral(v, UPPER, MS_UPPER)


def ms_upper_mod12(L: int) -> BoundResult:
    if L % 2 or L < 18:
        return BoundResult(None, None, UPPER, MS_UPPER_MOD12, False, "needs even L >= 18")
    r = L % 12
    if r == 0:
        v = (L + 4) // 8
    elif r in (4, 6, 8):
        v = (L + 2) // 8
    else:
        v = L // 8
    return BoundResult.upper_bound(v, MS_UPPER_MOD12)


def ms_upper_12mod24(L: int) -> BoundResult:
    if L < 18 or L % 24 != 12:
        return BoundResult(None, None, UPPER, MS_UPPER_12_24, False, "needs L = 12 mod 24, L >= 18")
    return _integral(Fraction(L - 4, 8), UPPER, MS_UPPER_12_24)


def ms_upper_legacy(L: int) -> BoundResult:
    if L < 18 or L % 2:
        return BoundResult(None, None, UPPER, MS_LEGACY, False, "needs even L >= 18")
    n, q, r = L, 0, 0
    while n % 3 == 0:
        n //= 3
        q += 1
    while n % 7 == 0:
        n //= 7
        r += 1
    if q == 0 and r == 0:
        v = (L - 2) // 6
    elif r == 0:
        v = L // 6
    elif q == 0:
        v = (L - 1) // 6
    else:
        v = (L + 1) // 6
    return BoundResult.upper_bound(v, MS_LEGACY)


# ---------------------------------------------------------------- M(L,3)

CAC_2MOD4 = "M(L,3) = (L-2)/4 for L = 2 mod 4"
CAC_4T = "M(4t,3) table"
CAC_WU_PLUS = "M(L,3) = (L-1)/4 for L = 2^(2t)+1"
CAC_WU_MINUS = "M(L,3) = (L+1)/4 for L = 2^(2^t)-1"
CAC_MI_MINUS = "M(L,3) = (L-1)/4 for L = 2^(2t-1)-2^t+1"
CAC_MI_PLUS = "M(L,3) = (L-1)/4 for L = 2^(2t-1)+2^t+1"

# (residues of t, modulus, constant c) for the value (7L + c)/64
_TABLE_4T = [
    ((0,), 8, 0),
    ((1,), 8, 8),
    ((2, 10), 24, -48),
    ((3,), 24, 24),
    ((4, 20), 24, -32),
    ((5, 13), 24, -24),
    ((6,), 8, -16),
    ((7,), 8, -8),
    ((11, 19), 24, -40),
    ((12,), 24, 32),
    ((18,), 24, 16),
    ((21,), 24, 40),
]


def table_4t(t: int, L: int) -> Fraction:
    """(7L + c)/64 with c picked by t; L is passed separately because the
    same table also serves as a lower bound for M_S(8t,3)."""
    for rs, mod, c in _TABLE_4T:
        if t % mod in rs:
            return Fraction(7 * L + c, 64)
    raise AssertionError(f"t={t} not covered by the table")


def _matches_power_form(L: int, form, t_min: int) -> Optional[int]:
    t = t_min
    while True:
        v = form(t)
        if v == L:
            return t
        if v > L:
            return None
        t += 1


def m_cac_results(L: int) -> list[BoundResult]:
    """Every closed-form statement about M(L,3), applicable or not."""
    out = []
    if L % 4 == 2:
        out.append(_integral(Fraction(L - 2, 4), EXACT, CAC_2MOD4))
    if L % 4 == 0 and L >= 4:
        t = L // 4
        r = _integral(table_4t(t, L), EXACT, CAC_4T)
        out.append(r)
    forms = [
        (CAC_WU_PLUS, lambda t: 2 ** (2 * t) + 1, 1, Fraction(L - 1, 4)),
        (CAC_WU_MINUS, lambda t: 2 ** (2**t) - 1, 2, Fraction(L + 1, 4)),
        (CAC_MI_MINUS, lambda t: 2 ** (2 * t - 1) - 2**t + 1, 2, Fraction(L - 1, 4)),
        (CAC_MI_PLUS, lambda t: 2 ** (2 * t - 1) + 2**t + 1, 1, Fraction(L - 1, 4)),
    ]
    for name, form, t_min, value in forms:
        if _matches_power_form(L, form, t_min) is not None:
            out.append(_integral(value, EXACT, name))
    if L > 3 and L % 2:
        for name, value in _odd_length_cases(L):
            out.append(BoundResult.exact(value, name))
    return out


def m_cac_exact(L: int) -> BoundResult:
    """First applicable exact value of M(L,3), or an inapplicable result
    collecting the diagnostics of every statement tried."""
    results = m_cac_results(L)
    for r in results:
        if r.applicable:
            return r
    notes = "; ".join(f"{r.provenance}: {r.note}" for r in results) or "no statement covers L"
    return BoundResult.inapplicable("M(L,3) closed forms", notes)


def cac_lower(L: int) -> Optional[BoundResult]:
    """Best constructive lower bound on M(L,3): an exact closed form, or for
    odd L the equi-difference matching witness."""
    best = None
    r = m_cac_exact(L)
    if r.applicable:
        best = BoundResult.lower_bound(r.value, r.provenance)
    if L >= 3 and L % 2:
        v, _ = m_e_with_witness(L)
        if best is None or v > best.lower:
            best = BoundResult.lower_bound(v, "M^e(L,3) matching witness")
    return best


# ---------------------------------------------------------------- M_S(L,3)

MS_COR_4MOD8 = "M_S = (L-4)/8 for L = 4 mod 8"
MS_COR_POW_MINUS2 = "M_S = (L-2)/8 for power forms of L"
MS_COR_POW_PLUS2 = "M_S = (L+2)/8 for L = 2^(2^t+1)-2"
MS_COR_8T = "M_S(8t,3) lower bound via M(4t,3)"
MS_DOUBLING = "doubling: M_S(L,3) >= M(L/2,3)"

# odd-length case of L/2 -> (label, value, divisibility test on L)
_ODD_HALF = {
    ODD_P5: ("SCAC, L/2 odd, 3 not dividing L, p5", lambda L: Fraction(L - 2, 8), lambda L: L % 6 != 0),
    ODD_SAFE: ("SCAC, L/2 odd, 3 not dividing L, one safe prime", lambda L: Fraction(L - 6, 8), lambda L: L % 6 != 0),
    ODD_3_P5: ("SCAC, L/2 odd, 3 || L, p5", lambda L: Fraction(L + 2, 8), lambda L: L % 6 == 0 and L % 18 != 0),
    ODD_3_SAFE7: (
        "SCAC, L/2 odd, 3 || L, one safe prime = 7 mod 8",
        lambda L: Fraction(L - 2, 8),
        lambda L: L % 6 == 0 and L % 18 != 0,
    ),
    ODD_9_P5: ("SCAC, L/2 odd, 9 || L, p5", lambda L: Fraction(L - 2, 8), lambda L: L % 18 == 0 and L % 54 != 0),
}


def ms_results(L: int) -> list[BoundResult]:
    """Every statement bearing on M_S(L,3) for even L, in the order the
    statements appear, with inapplicable ones included."""
    out = []
    if L % 2:
        return [BoundResult.inapplicable(MS_UPPER, "odd L")]
    if 6 <= L < 18:
        out.append(BoundResult.exact(1, MS_SMALL))
        return out
    if L < 6:
        return [BoundResult.inapplicable(MS_SMALL, "no weight-3 SCAC codeword exists for L < 6")]
    out.append(ms_upper_mod12(L))
    out.append(ms_upper_12mod24(L))
    out.append(ms_upper(L))
    out.append(ms_upper_legacy(L))

    if L % 8 == 4:
        out.append(_integral(Fraction(L - 4, 8), EXACT, MS_COR_4MOD8))
    if (
        _matches_power_form(L, lambda t: 2 ** (2 * t + 1) + 2, 1) is not None
        or _matches_power_form(L, lambda t: 2 ** (2 * t) - 2 ** (t + 1) + 2, 2) is not None
        or _matches_power_form(L, lambda t: 2 ** (2 * t) + 2 ** (t + 1) + 2, 1) is not None
    ):
        out.append(_integral(Fraction(L - 2, 8), EXACT, MS_COR_POW_MINUS2))
    if _matches_power_form(L, lambda t: 2 ** (2**t + 1) - 2, 2) is not None:
        out.append(_integral(Fraction(L + 2, 8), EXACT, MS_COR_POW_PLUS2))
    if L % 8 == 0 and L >= 24:
        t = L // 8
        out.append(_integral(table_4t(t, L), LOWER, MS_COR_8T))

    half = L // 2
    if half % 2 and half > 3:
        for name, _ in _odd_length_cases(half):
            label, formula, fits = _ODD_HALF[name]
            if fits(L):
                out.append(_integral(formula(L), EXACT, label))

    low = cac_lower(half) if half >= 3 else None
    if low is not None:
        out.append(BoundResult.lower_bound(low.lower, f"{MS_DOUBLING} [{low.provenance}]"))
    return out


def ms_exact(L: int) -> BoundResult:
    """Sharpest statement about M_S(L,3): exact when a closed form applies or
    the bounds meet, otherwise the bracket [lower, upper]."""
    results = [r for r in ms_results(L) if r.applicable]
    if not results:
        return BoundResult.inapplicable("M_S(L,3)", "no statement applies")
    exacts = [r for r in results if r.kind == EXACT]
    if exacts:
        values = {r.value for r in exacts}
        if len(values) > 1:
            raise ArithmeticError(f"conflicting exact values for M_S({L},3): {exacts}")
        return BoundResult.exact(exacts[0].value, "; ".join(r.provenance for r in exacts))
    uppers = [r for r in results if r.upper is not None]
    lowers = [r for r in results if r.lower is not None]
    hi = min(uppers, key=lambda r: (r.upper, r.provenance != MS_UPPER)) if uppers else None
    lo = max(lowers, key=lambda r: r.lower) if lowers else None
    if hi and lo and hi.upper == lo.lower:
        return BoundResult.exact(hi.upper, f"{hi.provenance}; {lo.provenance}")
    return BoundResult(
        lo.lower if lo else None,
        hi.upper if hi else None,
        BRACKET,
        "; ".join(r.provenance for r in (lo, hi) if r is not None),
    )


def catalog(lo: int, hi: int) -> list[dict]:
    """Rows ``L lower upper exact provenance`` for every even L in [lo, hi]."""
    rows = []
    for L in range(lo, hi + 1):
        if L % 2:
            continue
        r = ms_exact(L)
        if not r.applicable:
            continue
        rows.append(
            {
                "L": L,
                "lower": r.lower,
                "upper": r.upper,
                "exact": r.kind == EXACT,
                "provenance": r.provenance,
            }
        )
    return rows


def audit_4t_table(lengths, oracle=None) -> list[dict]:
    """Evaluate the M(4t,3) table verbatim and with the doubled length
    substituted, flagging non-integers; ``oracle`` maps L -> exact M(L,3)."""
    rows = []
    for L in lengths:
        if L % 4:
            raise ValueError(f"L must be a multiple of 4, got {L}")
        t = L // 4
        verbatim = _integral(table_4t(t, L), EXACT, CAC_4T)
        doubled = table_4t(t, 2 * L)
        rows.append(
            {
                "L": L,
                "t": t,
                "verbatim": str(table_4t(t, L)),
                "verbatim_applicable": verbatim.applicable,
                "note": verbatim.note,
                "doubled_length_value": str(doubled),
                "oracle": None if oracle is None else oracle(L),
            }
        )
    return rows
