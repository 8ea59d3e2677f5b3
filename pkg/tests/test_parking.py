from collections import defaultdict

import pytest
from hypothesis import given, strategies as st

from narayana.parking import (
    ParkingFunction,
    ParkingFunctionError,
    TwoLetterPF,
    enumerate_park,
    enumerate_park_bruteforce,
    enumerate_parking_functions,
    enumerate_two_letter,
    is_shuffle,
    level_zero_split,
    lift,
    para_poly,
    para_poly_or_empty,
    para_refined,
    peel,
    peel_steps,
    pf_area,
    pf_dinv,
    reading_word,
    reduce_two_letter,
    two_letter_form,
    unpeel,
    validate_pf,
)
from narayana.polyomino import narayana_count
from narayana.qtpoly import ONE, ZERO, QTPolynomial, q_binomial

PF11 = ParkingFunction((5, 11, 1, 9, 6, 8, 3, 4, 7, 10, 2), (0, 1, 1, 2, 0, 1, 0, 1, 2, 3, 3))
PF16 = ParkingFunction(
    (3, 13, 6, 15, 8, 7, 16, 12, 5, 14, 9, 2, 11, 1, 10, 4),
    (0, 1, 1, 2, 2, 2, 3, 1, 1, 2, 0, 0, 1, 0, 1, 1),
)


def ab_pairs(max_total, min_total=1):
    return [(a, t - a) for t in range(min_total, max_total + 1) for a in range(t + 1)]


def park_size(a, b):
    return narayana_count(a + b + 1, b + 1)


def key(pf):
    return pf.cars, pf.levels


# -- examples -------------------------------------------------------------------

def test_validation_examples():
    assert validate_pf([(1, 0), (2, 1)]).cars == (1, 2)
    with pytest.raises(ParkingFunctionError, match="rise"):
        validate_pf([(2, 0), (1, 1)])
    with pytest.raises(ParkingFunctionError, match="levels"):
        validate_pf([(1, 1), (2, 0)])
    with pytest.raises(ParkingFunctionError, match="levels"):
        validate_pf([(1, 0), (2, 2)])
    with pytest.raises(ParkingFunctionError, match="cars"):
        validate_pf([(1, 0), (1, 0)])
    assert validate_pf(PF11.dominoes) == PF11


def test_reading_word_examples():
    assert reading_word(PF11) == (2, 10, 7, 9, 4, 8, 1, 11, 3, 6, 5)
    assert reading_word(ParkingFunction((1, 2), (0, 0))) == (2, 1)
    assert reading_word(ParkingFunction((1, 2), (0, 1))) == (2, 1)
    assert reading_word(PF16) == (16, 14, 7, 8, 15, 4, 10, 11, 5, 12, 6, 13, 1, 2, 9, 3)


def test_statistic_examples():
    assert (pf_area(PF11), pf_dinv(PF11)) == (14, 8)
    assert (pf_area(ParkingFunction((1, 2), (0, 0))), pf_dinv(ParkingFunction((1, 2), (0, 0)))) == (0, 1)
    assert (pf_area(PF16), pf_dinv(PF16)) == (18, 32)


def test_shuffle_examples():
    assert is_shuffle((2, 1), 1, 1)
    assert not is_shuffle((2, 1, 3), 3, 0)
    sigma = reading_word(PF16)
    # sixteen cars cannot shuffle 1..9 with 10..18, and with 8 + 8 the small
    # cars come out as 7 8 4 5 6 1 2 3
    assert not is_shuffle(sigma, 9, 9)
    assert not is_shuffle(sigma, 8, 8)
    assert [x for x in sigma if x <= 8] == [7, 8, 4, 5, 6, 1, 2, 3]


def test_enumeration_examples():
    got = {key(pf) for pf in enumerate_park(1, 1)}
    assert got == {((1, 2), (0, 0)), ((2, 1), (0, 0)), ((1, 2), (0, 1))}
    for a in range(1, 5):
        for pf in enumerate_park(a, 0):
            assert reading_word(pf) == tuple(range(1, a + 1))
    assert para_poly(1, 1) == QTPolynomial.parse("1 + q + t")
    assert para_poly(1, 1, (0, 0)) == ZERO
    assert para_poly_or_empty(0, 0) == ONE
    with pytest.raises(ValueError):
        list(enumerate_park(0, 0))


def test_reduction_examples():
    assert reduce_two_letter(ParkingFunction((1, 2), (0, 1)), 1, 1).letters == (1, 2)
    with pytest.raises(ParkingFunctionError):
        reduce_two_letter(PF16, 8, 8)
    T = two_letter_form(PF16, 8)
    assert T.letters == (1, 2, 1, 2, 1, 1, 2, 2, 1, 2, 2, 1, 2, 1, 2, 1)
    assert T.levels == PF16.levels
    assert reading_word(T) == (2, 2, 1, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 1, 2, 1)
    assert pf_area(T) == 18
    # the substitution only keeps dinv on shuffle inputs; this one is not
    assert pf_dinv(T) == 16
    assert pf_dinv(lift(T)) == 16 and is_shuffle(reading_word(lift(T)), 8, 8)


def test_two_letter_rise_rule():
    TwoLetterPF((1, 2), (0, 1))
    for letters in [(1, 1), (2, 2), (2, 1)]:
        with pytest.raises(ParkingFunctionError):
            TwoLetterPF(letters, (0, 1))
    with pytest.raises(ParkingFunctionError):
        TwoLetterPF((1, 3), (0, 0))


def test_peel_examples():
    T = two_letter_form(PF16, 8)
    middle, rest, r, s = peel_steps(T)
    assert middle.letters == (2, 1, 2, 1, 1, 2, 2, 1, 2, 2, 2, 1)
    assert middle.levels == (0, 0, 1, 1, 1, 2, 0, 0, 1, 0, 0, 0)
    assert rest.dominoes == middle.dominoes[1:]
    assert (r, s) == (3, 1)
    assert peel(T) == (rest, 3, 1)
    rest, r, s = peel(TwoLetterPF((1, 2), (0, 1)))
    assert (len(rest), r, s) == (0, 1, 0)


# -- oracles --------------------------------------------------------------------

@pytest.mark.parametrize("a,b", ab_pairs(6))
def test_park_matches_bruteforce(a, b):
    fast = {key(pf) for pf in enumerate_park(a, b)}
    slow = {key(pf) for pf in enumerate_park_bruteforce(a, b)}
    assert fast == slow
    assert len(fast) == park_size(a, b)


@pytest.mark.parametrize("k", range(1, 6))
def test_all_parking_functions_counted(k):
    assert sum(1 for _ in enumerate_parking_functions(k)) == (k + 1) ** (k - 1)


@pytest.mark.parametrize("a,b", ab_pairs(6))
def test_reduction_preserves_statistics(a, b):
    for pf in enumerate_park_bruteforce(a, b):
        T = reduce_two_letter(pf, a, b)
        assert (pf_area(T), pf_dinv(T)) == (pf_area(pf), pf_dinv(pf))
        assert lift(T) == pf


@pytest.mark.parametrize("a,b", ab_pairs(8))
def test_lift_is_unique(a, b):
    words = list(enumerate_two_letter(a, b))
    assert len(words) == len(set(words)) == park_size(a, b)
    lifted = {key(lift(T)) for T in words}
    assert len(lifted) == len(words)
    for T in words:
        assert is_shuffle(reading_word(lift(T)), a, b)


@pytest.mark.parametrize("a,b", ab_pairs(8))
def test_refinements_sum_to_total(a, b):
    refined = para_refined(a, b)
    assert sum(refined.values(), ZERO) == para_poly(a, b)
    for (r, s), poly in refined.items():
        assert para_poly(a, b, (r, s)) == poly
    assert (0, 0) not in refined


@given(st.integers(1, 7).flatmap(lambda k: st.permutations(range(1, k + 1))))
def test_reading_word_is_permutation(cars):
    levels = [0] * len(cars)
    pf = ParkingFunction(tuple(cars), tuple(levels))
    assert sorted(reading_word(pf)) == sorted(cars)
    assert reading_word(pf) == tuple(reversed(cars))


# -- peel -------------------------------------------------------------------------

@pytest.mark.parametrize("a,b", ab_pairs(6, 2))
def test_peel_fibers(a, b):
    fibers = defaultdict(list)
    for T in enumerate_two_letter(a, b):
        r, s = level_zero_split(T, 1)
        if s == b:
            continue
        rest, pr, ps = peel(T)
        assert (pr, ps) == (r, s)
        h = sum(1 for d in T.dominoes if d == (1, 1))
        k = sum(1 for d in T.dominoes if d == (2, 1))
        assert k >= 1
        assert rest.letters.count(1) == a - r and rest.letters.count(2) == b - s - 1
        assert level_zero_split(rest, 1) == (h, k - 1)
        assert pf_area(T) - pf_area(rest) == (a - r) + (b - s)
        fibers[(rest, r, s)].append(T)

    for (rest, r, s), members in fibers.items():
        assert set(unpeel(rest, r, s)) == set(members)
        k = level_zero_split(rest, 1)[1] + 1
        total = sum((QTPolynomial.monomial(pf_dinv(T) - pf_dinv(rest), 0) for T in members), ZERO)
        assert total == q_binomial(r + s, r) * q_binomial(r + k - 1, k)


@pytest.mark.parametrize("a,b", ab_pairs(6, 2))
def test_unpeel_lands_in_park(a, b):
    for a2 in range(a + 1):
        for b2 in range(b):
            if a2 + b2 == 0:
                continue
            r, s = a - a2, b - b2 - 1
            for rest in enumerate_two_letter(a2, b2):
                for T in unpeel(rest, r, s):
                    assert level_zero_split(T, 1) == (r, s)
                    assert peel(T) == (rest, r, s)


@pytest.mark.parametrize("a,b", ab_pairs(7))
def test_insertion_constraints(a, b):
    allowed = {(1, 0): {(1, 0), (2, 0), (2, 1)}, (2, 0): {(1, 0), (2, 0)}}
    for T in enumerate_two_letter(a, b):
        for here, nxt in zip(T.dominoes, T.dominoes[1:]):
            if here in allowed:
                assert nxt in allowed[here]
