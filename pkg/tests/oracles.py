"""Slow, direct reference implementations used as independent oracles.

Nothing here imports the package; everything works on plain Python sets.
"""

from itertools import combinations, groupby


def d_set(I, L):
    return {(a - b) % L for a in I for b in I}


def d_star(I, L):
    return d_set(I, L) - {0}


def d_plus(I, L):
    ds = d_star(I, L)
    return ds | {(x + 1) % L for x in ds}


def scac_pair_ok(I, J, L):
    """The original pairwise definition: (d* u d*+1 u d*-1)(I) misses d(J)."""
    ds = d_star(I, L)
    spread = ds | {(x + 1) % L for x in ds} | {(x - 1) % L for x in ds}
    return not spread & d_set(J, L)


def is_scac_by_definition(code, L):
    return all(
        scac_pair_ok(I, J, L) and scac_pair_ok(J, I, L)
        for I, J in combinations(code, 2)
    ) and all(1 not in d_star(I, L) for I in code)


def runs(members, lo, hi):
    """Maximal runs of consecutive integers in [lo, hi] that are inside / outside ``members``."""
    inside, outside = [], []
    for key, grp in groupby(range(lo, hi + 1), key=lambda v: v in members):
        g = list(grp)
        (inside if key else outside).append((g[0], g[-1]))
    return inside, outside


def max_packing(L, mode, omega=3):
    """Maximum number of codewords with pairwise disjoint d* (cac) or d+
    (scac, with 1 not in d*). Groups codewords by their difference set and
    runs a plain exhaustive recursion."""
    masks = set()
    for I in combinations(range(L), omega):
        ds = d_star(I, L)
        if mode == "scac":
            if 1 in ds:
                continue
            masks.add(frozenset(d_plus(I, L)))
        else:
            masks.add(frozenset(ds))
    masks = sorted(masks, key=lambda m: (len(m), sorted(m)))

    best = 0

    def rec(start, used, size):
        nonlocal best
        best = max(best, size)
        for i in range(start, len(masks)):
            if not masks[i] & used:
                rec(i + 1, used | masks[i], size + 1)

    rec(0, frozenset(), 0)
    return best


def mult_order(a, n):
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def suborder(n):
    k, x = 1, 2 % n
    while x not in (1, n - 1):
        x = x * 2 % n
        k += 1
    return k


def odd_cycles_by_walk(L):
    """Count odd cycles of G(L) by following b = +-2a edges without using
    any permutation structure: repeatedly walk from an unvisited vertex."""
    half = (L - 1) // 2
    nbr = {}
    for a in range(1, half + 1):
        b = (2 * a) % L
        b = b if b <= half else L - b
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    seen, count = set(), 0
    for v in range(1, half + 1):
        if v in seen:
            continue
        comp, stack = set(), [v]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(nbr[x])
        seen |= comp
        count += len(comp) % 2
    return count
