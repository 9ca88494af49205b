import random

import pytest

from scac.ring import difference_profile
from scac.search import (
    CAC,
    SCAC,
    _Packer,
    canonical,
    enumerate_classes,
    iter_max_codes,
    max_code,
)
from scac.validate import is_cac, is_scac

from oracles import max_packing


@pytest.mark.parametrize(
    "L,mode,opt", [(10, CAC, 2), (16, SCAC, 1), (20, SCAC, 2), (12, CAC, 3), (18, SCAC, 2), (9, CAC, 2)]
)
def test_examples(L, mode, opt):
    out = max_code(L, 3, mode)
    assert out.optimum == opt
    assert out.proven_optimal
    rep = is_scac(out.witness) if mode == SCAC else is_cac(out.witness)
    assert rep.is_scac if mode == SCAC else rep.is_cac


def test_enumerate_classes_small():
    els = [c.codeword.elements for c in enumerate_classes(7, 3)]
    assert els == [(0, 1, 2), (0, 1, 4), (0, 2, 4), (0, 1, 3)]
    assert [c.codeword.elements for c in enumerate_classes(7, 3, SCAC)] == [(0, 2, 4)]


def test_enumerate_scac_drops_unit_difference():
    for c in enumerate_classes(20, 3, SCAC):
        assert not difference_profile(c.codeword).d_star & ((1 << 1) | (1 << 19))


def test_classes_cover_every_orbit():
    from itertools import combinations

    L = 13
    reps = {c.codeword.elements for c in enumerate_classes(L, 3)}
    for I in combinations(range(L), 3):
        assert canonical(I, L) in reps


def test_enumerate_rejects():
    with pytest.raises(ValueError):
        enumerate_classes(2, 3)
    with pytest.raises(ValueError):
        enumerate_classes(10, 3, "nope")


@pytest.mark.parametrize("L", range(5, 25))
def test_cac_matches_direct_oracle(L):
    assert max_code(L, 3, CAC).optimum == max_packing(L, "cac")


@pytest.mark.parametrize("L", range(6, 25))
def test_scac_matches_direct_oracle(L):
    assert max_code(L, 3, SCAC).optimum == max_packing(L, "scac")


def test_weight4_small():
    for L in range(8, 16):
        assert max_code(L, 4, CAC).optimum == max_packing(L, "cac", omega=4)


@pytest.mark.parametrize("L", [17, 22, 28])
def test_order_invariance(L):
    # the capacity bound needs ascending sizes; ties may come in any order
    classes = enumerate_classes(L, 3, CAC)
    masks = [c.mask for c in classes]
    sizes = [c.size for c in classes]
    expected = max_code(L, 3, CAC).optimum
    rng = random.Random(L)
    for _ in range(3):
        order = list(range(len(masks)))
        rng.shuffle(order)
        order.sort(key=lambda i: sizes[i])
        p = _Packer([masks[i] for i in order], [sizes[i] for i in order], 10**8)
        p.run([], list(range(len(order))), 0)
        assert len(p.best) == expected


def test_equi_only_vs_m_e():
    from scac.construct import m_e_with_witness

    for L in range(5, 36, 2):
        assert max_code(L, 3, CAC, equi_only=True).optimum == m_e_with_witness(L)[0]


def test_budget_exhaustion_reports_lower_bound():
    out = max_code(30, 3, CAC, budget=5)
    assert not out.proven_optimal
    assert out.optimum <= 7
    assert is_cac(out.witness).is_cac


def test_parallel_matches_sequential():
    for L, mode in [(21, CAC), (26, SCAC)]:
        seq = max_code(L, 3, mode)
        par = max_code(L, 3, mode, workers=2)
        assert par.optimum == seq.optimum
        assert par.witness == seq.witness
        assert par.proven_optimal


def test_deterministic_witness():
    assert max_code(24, 3, SCAC).witness == max_code(24, 3, SCAC).witness


def test_iter_max_codes_all_valid_and_distinct():
    codes = list(iter_max_codes(20, 3, SCAC))
    assert codes
    assert len(set(codes)) == len(codes)
    for code in codes:
        assert len(code) == 2 and is_scac(code).is_scac


def test_outcome_dict():
    d = max_code(10, 3, CAC).to_dict()
    assert "nodes_explored" not in d
    d = max_code(10, 3, CAC).to_dict(stats=True)
    assert d["optimum"] == 2 and d["nodes_explored"] >= 1
