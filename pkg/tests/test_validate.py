import random

import pytest
from hypothesis import given, settings, strategies as st

from scac.ring import Interval, E_ROUGH, difference_profile
from scac.search import SCAC, iter_max_codes
from scac.validate import (
    Code,
    gap_bound_check,
    is_cac,
    is_scac,
    leave,
    solitary_gaps,
    union_dplus,
)

from oracles import d_set, d_star, is_scac_by_definition

CODE12 = Code.of([[0, 1, 2], [0, 3, 6], [0, 4, 8]], 12)
CODE28 = Code.of([[0, 2, 4], [0, 7, 14], [0, 9, 18]], 28)


def test_code12_is_cac_not_scac():
    assert is_cac(CODE12).is_cac
    r = is_scac(CODE12)
    assert not r.is_scac
    assert r.violations[0].condition == "1 in d*"
    assert r.violations[0].witness == 1


def test_cac_violation_witness():
    r = is_cac(Code.of([[0, 1, 2], [0, 2, 4]], 12))
    assert not r.is_cac
    assert r.violations[0].witness == 2
    assert r.violations[0].indices == (0, 1)


def test_code28_is_scac():
    r = is_scac(CODE28)
    assert r.is_scac and r.is_cac
    assert r.violations == []


def test_doubled_code12_is_scac():
    assert is_scac(Code.of([[0, 2, 4], [0, 6, 12], [0, 8, 16]], 24)).is_scac


def test_solitary_gap_example():
    code = Code.of([[0, 2, 4], [0, 6, 12], [0, 9, 19]], 28)
    assert is_scac(code).is_scac
    assert Interval(2, 8, E_ROUGH) in solitary_gaps(code, 2)


def test_single_codeword_all_rough_gaps_solitary():
    code = Code.of([[0, 2, 4]], 28)
    from scac.ring import decompose

    gaps = decompose(difference_profile(code.codewords[0]).d_plus, 28).gaps
    rough = [g for g in gaps if g.kind != "flat"]
    # the only tubes are the codeword's own, which never sit inside its gaps
    assert solitary_gaps(code, 0) == rough


def test_solitary_count_code28():
    # d+ sets: {2..5, 24..27}, {7,8,14,15,21,22}, {9,10,11,18,19,20}
    # gaps of {0,7,14}: G(2,6) E, G(9,13) O, G(16,20) E, G(23,27) O
    # tubes of {0,9,18}: T(9,11) O-rough and T(18,20) E-rough sit inside the
    # middle two gaps, so only the outer two are solitary
    lam = [len(solitary_gaps(CODE28, j)) for j in range(3)]
    assert lam == is_scac(CODE28).solitary_gap_counts
    g1 = solitary_gaps(CODE28, 1)
    assert [(g.x, g.y) for g in g1] == [(2, 6), (23, 27)]
    # merged union tubes T(7,11) and T(18,22) overrun those gaps instead
    g1m = solitary_gaps(CODE28, 1, merged=True)
    assert [(g.x, g.y) for g in g1m] == [(2, 6), (9, 13), (16, 20), (23, 27)]
    assert gap_bound_check(CODE28)
    assert 28 >= 2 + max(lam) + 20


COUNTER40 = Code.of([[0, 13, 26], [0, 2, 4], [0, 9, 20], [0, 6, 22]], 40)


def test_merged_tube_reading_breaks_gap_count():
    # An optimal SCAC(40,3): merged union tubes straddle the gaps of {0,9,20},
    # giving 4 "solitary" gaps although only residues 8 and 33 are uncovered.
    assert is_scac(COUNTER40).is_scac
    assert len(solitary_gaps(COUNTER40, 2, merged=True)) == 4
    assert ((1 << 40) - 4 & ~union_dplus(COUNTER40)).bit_count() == 2
    assert len(solitary_gaps(COUNTER40, 2)) <= 2
    assert gap_bound_check(COUNTER40)


def test_solitary_example_holds_in_both_readings():
    code = Code.of([[0, 2, 4], [0, 6, 12], [0, 9, 19]], 28)
    assert Interval(2, 8, E_ROUGH) in solitary_gaps(code, 2, merged=True)


def test_solitary_index_error():
    with pytest.raises(IndexError):
        solitary_gaps(CODE28, 3)


def test_gap_bound_trivial():
    assert gap_bound_check(Code.of([[0, 4, 8]], 12))


@pytest.mark.parametrize("L", range(18, 41, 2))
def test_gap_bound_for_optimal_scacs(L):
    for code in iter_max_codes(L, 3, SCAC):
        assert gap_bound_check(code)
        u = union_dplus(code)
        assert u & 0b11 == 0  # inside {2, ..., L-1}


@pytest.mark.parametrize(
    "words,L,expected,tight",
    [
        ([[0, 1, 2]], 5, (), True),
        ([[0, 1, 2], [0, 3, 6]], 9, (4, 5), False),
        ([[0, 1, 2]], 7, (3, 4), False),
    ],
)
def test_leave(words, L, expected, tight):
    lv = leave(Code.of(words, L))
    assert lv.residues == expected
    assert lv.tight == tight


def test_leave_optimality_flag():
    assert not leave(Code.of([[0, 1, 2]], 9)).small  # leave {3,4,5,6} has size 4
    assert leave(Code.of([[0, 1, 2], [0, 3, 6]], 9)).small


@st.composite
def random_codes(draw):
    L = draw(st.integers(6, 36))
    m = draw(st.integers(1, 4))
    seed = draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    words = set()
    for _ in range(m):
        words.add(tuple(sorted(rng.sample(range(L), 3))))
    return Code.of(sorted(words), L)


@settings(max_examples=300)
@given(random_codes())
def test_scac_implies_cac_and_matches_definition(code):
    r = is_scac(code)
    if r.is_scac:
        assert r.is_cac
    els = [c.elements for c in code.codewords]
    assert r.is_scac == is_scac_by_definition(els, code.length)
    cac_direct = all(
        not d_star(a, code.length) & d_star(b, code.length)
        for i, a in enumerate(els)
        for b in els[i + 1 :]
    )
    assert r.is_cac == cac_direct
    for v in r.violations + is_cac(code).violations:
        assert v.witness >= 0


@settings(max_examples=200)
@given(random_codes())
def test_leave_partitions(code):
    L = code.length
    covered = set()
    for c in code.codewords:
        covered |= d_set(c.elements, L)
    lv = leave(code)
    assert set(lv.residues) | covered == set(range(L))
    assert not set(lv.residues) & covered


def test_json_roundtrip():
    text = CODE28.to_json()
    assert Code.from_json(text) == CODE28
    assert CODE28.to_dict() == {"L": 28, "w": 3, "codewords": [[0, 2, 4], [0, 7, 14], [0, 9, 18]]}


@pytest.mark.parametrize(
    "text",
    ['{"L": 12}', '{"L": 12, "w": 3, "codewords": [[0, 1, 1]]}', '{"L": 12, "w": 3, "codewords": [[0, 1]]}'],
)
def test_json_rejects(text):
    with pytest.raises(ValueError):
        Code.from_json(text)
