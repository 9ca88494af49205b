"""Constructions: doubling, the cycle graph G(L), odd-cycle counts, matching
witnesses for equi-difference codes, and the related existence predicates."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .ring import Codeword
from .validate import Code, is_cac, leave


class NotACAC(ValueError):
    pass


def double_code(code: Code) -> Code:
    """Map each codeword I of a CAC in Z_L to 2I in Z_2L (an SCAC)."""
    report = is_cac(code)
    if not report.is_cac:
        v = report.violations[0]
        raise NotACAC(f"input is not a CAC: codewords {v.indices} share difference {v.witness}")
    L = code.length
    return Code(
        2 * L,
        code.weight,
        tuple(Codeword(2 * L, tuple(2 * x for x in cw.elements)) for cw in code.codewords),
    )


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def is_safe_prime(p: int) -> bool:
    return is_prime(p) and p > 2 and is_prime((p - 1) // 2)


def totient(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


@dataclass(frozen=True)
class OrderPair:
    n: int
    e: int  # least e >= 1 with 2^e = 1 mod n
    c: int  # least c >= 1 with 2^c = +-1 mod n


def orders(n: int) -> OrderPair:
    if n <= 2 or n % 2 == 0:
        raise ValueError(f"orders need an odd n > 2, got {n}")
    c = None
    x, k = 2 % n, 1
    while x != 1:
        if c is None and x == n - 1:
            c = k
        x = x * 2 % n
        k += 1
    return OrderPair(n, k, c if c is not None else k)


def third_condition(p: int) -> bool:
    """p = 5 mod 8, or p = 1 mod 8 with 4 | e_p: the primes contributing no odd cycle."""
    return p % 8 == 5 or (p % 8 == 1 and orders(p).e % 4 == 0)


def fold(x: int, L: int) -> int:
    x %= L
    return min(x, L - x)


@dataclass(frozen=True)
class CycleGraph:
    """G(L) on {1, ..., (L-1)/2}; a -> fold(2a) is a permutation, so the
    graph is the disjoint union of its orbits. Each cycle starts at its least
    vertex and follows the doubling map."""

    L: int
    cycles: tuple[tuple[int, ...], ...]

    @property
    def n_odd(self) -> int:
        return sum(1 for c in self.cycles if len(c) % 2)

    def edges(self):
        for cyc in self.cycles:
            for a in cyc:
                yield a, fold(2 * a, self.L)

    def tsv_rows(self):
        for i, cyc in enumerate(self.cycles):
            yield [self.L, i, *cyc]


def build_graph(L: int) -> CycleGraph:
    if L < 3 or L % 2 == 0:
        raise ValueError(f"G(L) needs odd L >= 3, got {L}")
    half = (L - 1) // 2
    seen = [False] * (half + 1)
    cycles = []
    for start in range(1, half + 1):
        if seen[start]:
            continue
        cyc = []
        v = start
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = fold(2 * v, L)
        cycles.append(tuple(cyc))
    return CycleGraph(L, tuple(cycles))


def n_odd_prime_formula(p: int) -> int:
    """Closed-form odd-cycle count of G(p) for an odd prime p."""
    e = orders(p).e
    r = p % 8
    if r == 7 or (r == 1 and e % 2 == 1):
        return (p - 1) // (2 * e)
    if r == 3 or (r == 1 and e % 4 == 2):
        return (p - 1) // e
    return 0


def n_odd(L: int, check: bool = True) -> int:
    """Odd-cycle count of G(L) by enumeration; for prime L also compared
    against the closed form."""
    count = build_graph(L).n_odd
    if check and is_prime(L):
        expected = n_odd_prime_formula(L)
        if expected != count:
            raise ArithmeticError(f"N_odd({L}): enumeration {count} != formula {expected}")
    return count


def m_e_formula(L: int) -> int:
    return ((L - 1) // 2 - n_odd(L)) // 2 + (1 if L % 3 == 0 else 0)


def _cycle_matching(cyc: tuple[int, ...], L: int) -> list[int]:
    """Generators a of a maximum matching {(a, fold(2a))} in one cycle.

    For odd cycles the least vertex is left uncovered; that is the choice
    giving the lexicographically smallest leave."""
    k = len(cyc)
    if k == 1:
        return []
    if k == 2:
        return [cyc[0]]
    if k % 2 == 0:
        return [cyc[i] for i in range(0, k, 2)]
    # cyc[0] is the least vertex; edge i joins cyc[i] and cyc[i+1]
    return [cyc[i] for i in range(1, k, 2)]


def m_e_with_witness(L: int) -> tuple[int, Code]:
    """M^e(L,3) for odd L together with an equi-difference CAC attaining it."""
    graph = build_graph(L)
    gens = []
    for cyc in graph.cycles:
        gens.extend(_cycle_matching(cyc, L))
    words = [Codeword.of((0, a, 2 * a), L) for a in sorted(gens)]
    if L % 3 == 0:
        words.append(Codeword.of((0, L // 3, 2 * L // 3), L))
    code = Code(L, 3, tuple(words))
    value = ((L - 1) // 2 - graph.n_odd) // 2 + (1 if L % 3 == 0 else 0)
    if value != len(code):
        raise ArithmeticError(f"witness size {len(code)} != formula {value} at L={L}")
    return value, code


def _factor_list(L: int) -> list[tuple[int, int]]:
    return sorted(factorize(L).items())


def tight_exists(L: int) -> bool:
    if L < 3 or L % 2 == 0:
        raise ValueError(f"needs odd L >= 3, got {L}")
    fs = _factor_list(L)
    p1, r1 = fs[0]
    if p1 > 3:
        return all(third_condition(p) for p, _ in fs)
    return r1 == 1 and all(third_condition(p) for p, _ in fs[1:])


def leave2_exists(L: int) -> bool:
    """Sufficient condition for an equi-difference CAC(L,3) whose leave has
    size 2 and differs from {L/3, 2L/3}."""
    if L < 3 or L % 2 == 0:
        raise ValueError(f"needs odd L >= 3, got {L}")
    fs = _factor_list(L)
    p1, r1 = fs[0]
    rest = fs if p1 > 3 else fs[1:]
    if p1 == 3 and r1 == 2:
        return all(third_condition(p) for p, _ in rest)
    if p1 == 3 and r1 != 1:
        return False
    odd_ones = [(p, r) for p, r in rest if not third_condition(p)]
    if len(odd_ones) != 1:
        return False
    p, r = odd_ones[0]
    o = orders(p)
    if p1 > 3:
        return r == 1 and 2 * o.c == p - 1
    return r == 1 and 2 * o.c == p - 1 and o.c == o.e


# labels of the odd-length cases; "p5" means every prime factor > 3 is 5 mod 8
ODD_LENGTH = "odd L, M = M^e"
ODD_P5 = "odd L, 3 not dividing L, p5"
ODD_SAFE = "odd L, 3 not dividing L, one safe prime"
ODD_3_P5 = "odd L, 3 || L, p5"
ODD_3_SAFE7 = "odd L, 3 || L, one safe prime = 7 mod 8"
ODD_9_P5 = "odd L, 9 || L, p5"


def _odd_length_cases(L: int) -> list[tuple[str, int]]:
    fs = factorize(L)
    others = [p for p in fs if p > 3]
    all5 = all(p % 8 == 5 for p in others)

    def one_safe(require7: bool):
        odd = [p for p in others if p % 8 != 5]
        if len(odd) != 1:
            return False
        p = odd[0]
        return is_safe_prime(p) and fs[p] == 1 and (p % 8 == 7 or not require7)

    out = []
    r3 = fs.get(3, 0)
    if r3 == 0:
        if all5:
            out.append((ODD_P5, (L - 1) // 4))
        if one_safe(False):
            out.append((ODD_SAFE, (L - 3) // 4))
    elif r3 == 1:
        if all5:
            out.append((ODD_3_P5, (L + 1) // 4))
        if one_safe(True):
            out.append((ODD_3_SAFE7, (L - 1) // 4))
    elif r3 == 2:
        if all5:
            out.append((ODD_9_P5, (L - 1) // 4))
    return out


def classify_odd_length(L: int):
    """Exact M(L,3) = M^e(L,3) for odd L > 3 whose factorization fits one of
    the safe-prime cases."""
    from .bounds import BoundResult

    if L <= 3 or L % 2 == 0:
        return BoundResult.inapplicable(ODD_LENGTH, f"needs odd L > 3, got {L}")
    cases = _odd_length_cases(L)
    if not cases:
        return BoundResult.inapplicable(ODD_LENGTH, "no case hypothesis holds")
    name, value = cases[0]
    return BoundResult.exact(value, name)


def cycle_length_consistent(L: int) -> bool:
    """Every cycle of G(L) has length c_{L/d}, d = gcd(member, L)."""
    for cyc in build_graph(L).cycles:
        for a in cyc:
            n = L // gcd(a, L)
            expected = 1 if n == 1 else (orders(n).c if n > 2 else 1)
            if len(cyc) != expected:
                return False
    return True


def witness_leave(L: int):
    return leave(m_e_with_witness(L)[1])
