"""Parking functions and the shuffle polynomials ``Para_{a,b}``.

A parking function is a sequence of dominoes (car over level).  Levels form
a Dyck area word; cars increase across every level rise.  ``Park_{a,b}``
keeps those whose reading word is a shuffle of ``1..a`` and ``a+1..a+b``.

Inside ``Park_{a,b}`` only the split of cars into "small" (``<= a``) and
"large" matters for dinv, so most of the work is done on
:class:`TwoLetterPF` values with letters 1 and 2.  Across a level rise such
a word always has a 1 directly below a 2, and every two-letter word with
that property lifts to exactly one parking function in ``Park_{a,b}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence, Union

from .qtpoly import ONE, ZERO, QTPolynomial


class ParkingFunctionError(ValueError):
    pass


def _check_levels(levels: Sequence[int]) -> None:
    if levels and levels[0] != 0:
        raise ParkingFunctionError("levels: the first level must be 0")
    for i in range(1, len(levels)):
        if levels[i] < 0 or levels[i] > levels[i - 1] + 1:
            raise ParkingFunctionError(
                f"levels: level {levels[i]} at position {i + 1} follows {levels[i - 1]}"
            )


@dataclass(frozen=True)
class ParkingFunction:
    cars: tuple[int, ...]
    levels: tuple[int, ...]

    def __post_init__(self):
        cars, levels = tuple(self.cars), tuple(self.levels)
        object.__setattr__(self, "cars", cars)
        object.__setattr__(self, "levels", levels)
        if len(cars) != len(levels):
            raise ParkingFunctionError("cars and levels differ in length")
        _check_levels(levels)
        if sorted(cars) != list(range(1, len(cars) + 1)):
            raise ParkingFunctionError(f"cars: {cars} is not a permutation of 1..{len(cars)}")
        for i in range(len(cars) - 1):
            if levels[i] < levels[i + 1] and cars[i] > cars[i + 1]:
                raise ParkingFunctionError(
                    f"rise: level rises at position {i + 1} but car {cars[i]} > {cars[i + 1]}"
                )

    @property
    def labels(self) -> tuple[int, ...]:
        return self.cars

    @property
    def dominoes(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.cars, self.levels))

    def __len__(self):
        return len(self.cars)


@dataclass(frozen=True)
class TwoLetterPF:
    letters: tuple[int, ...]
    levels: tuple[int, ...]

    def __post_init__(self):
        letters, levels = tuple(self.letters), tuple(self.levels)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "levels", levels)
        if len(letters) != len(levels):
            raise ParkingFunctionError("letters and levels differ in length")
        if set(letters) - {1, 2}:
            raise ParkingFunctionError("letters must be 1 or 2")
        _check_levels(levels)
        for i in range(len(letters) - 1):
            if levels[i] < levels[i + 1] and (letters[i], letters[i + 1]) != (1, 2):
                raise ParkingFunctionError(
                    f"rise: level rises at position {i + 1} without a 1 below a 2"
                )

    @property
    def labels(self) -> tuple[int, ...]:
        return self.letters

    @property
    def dominoes(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.letters, self.levels))

    def __len__(self):
        return len(self.letters)


AnyPF = Union[ParkingFunction, TwoLetterPF]


def validate_pf(dominoes: Iterable[tuple[int, int]]) -> ParkingFunction:
    dominoes = list(dominoes)
    return ParkingFunction(tuple(c for c, _ in dominoes), tuple(b for _, b in dominoes))


def _reading_order(levels: Sequence[int]) -> list[int]:
    return sorted(range(len(levels)), key=lambda i: (-levels[i], -i))


def reading_word(pf: AnyPF) -> tuple[int, ...]:
    """Labels read by decreasing level, right to left within a level."""
    return tuple(pf.labels[i] for i in _reading_order(pf.levels))


def pf_area(pf: AnyPF) -> int:
    return sum(pf.levels)


def pf_dinv(pf: AnyPF) -> int:
    a, b = pf.labels, pf.levels
    k = len(a)
    return sum(
        1
        for i in range(k)
        for j in range(i + 1, k)
        if (b[i] == b[j] and a[i] < a[j]) or (b[i] == b[j] + 1 and a[i] > a[j])
    )


def is_shuffle(word: Sequence[int], a: int, b: int) -> bool:
    """Is ``word`` an interleaving of ``1..a`` and ``a+1..a+b``?"""
    if len(word) != a + b:
        return False
    small = [x for x in word if x <= a]
    large = [x for x in word if x > a]
    return small == list(range(1, a + 1)) and large == list(range(a + 1, a + b + 1))


def level_zero_split(pf: AnyPF, a: int) -> tuple[int, int]:
    """``(r, s)``: level-0 labels that are ``<= a`` and ``> a``."""
    r = sum(1 for x, lv in zip(pf.labels, pf.levels) if lv == 0 and x <= a)
    s = sum(1 for x, lv in zip(pf.labels, pf.levels) if lv == 0 and x > a)
    return r, s


# -- two-letter form ----------------------------------------------------------

def two_letter_form(pf: ParkingFunction, a: int) -> TwoLetterPF:
    """Replace cars ``<= a`` by 1 and the rest by 2, without any checks
    beyond those of :class:`TwoLetterPF`."""
    return TwoLetterPF(tuple(1 if c <= a else 2 for c in pf.cars), pf.levels)


def reduce_two_letter(pf: ParkingFunction, a: int, b: int) -> TwoLetterPF:
    if len(pf) != a + b or not is_shuffle(reading_word(pf), a, b):
        raise ParkingFunctionError(f"reading word is not a shuffle of 1..{a} and {a + 1}..{a + b}")
    return two_letter_form(pf, a)


def lift(T: TwoLetterPF) -> ParkingFunction:
    """The parking function in ``Park_{a,b}`` whose two-letter form is ``T``
    (``a`` = number of 1s)."""
    a = T.letters.count(1)
    cars = [0] * len(T)
    small, large = 1, a + 1
    for i in _reading_order(T.levels):
        if T.letters[i] == 1:
            cars[i], small = small, small + 1
        else:
            cars[i], large = large, large + 1
    return ParkingFunction(tuple(cars), T.levels)


def enumerate_two_letter(a: int, b: int) -> Iterator[TwoLetterPF]:
    """All two-letter words with ``a`` ones and ``b`` twos satisfying the rise rule."""
    letters: list[int] = []
    levels: list[int] = []

    def extend(ones: int, twos: int):
        if not ones and not twos:
            yield TwoLetterPF(tuple(letters), tuple(levels))
            return
        top = levels[-1] + 1 if levels else 0
        for lv in range(top + 1):
            rise = bool(levels) and lv == top
            for x, left in ((1, ones), (2, twos)):
                if not left or (rise and (letters[-1], x) != (1, 2)):
                    continue
                letters.append(x)
                levels.append(lv)
                yield from extend(ones - (x == 1), twos - (x == 2))
                letters.pop()
                levels.pop()

    yield from extend(a, b)


def _check_ab(a: int, b: int) -> None:
    if a < 0 or b < 0:
        raise ValueError(f"a and b must be non-negative, got {a}, {b}")
    if a + b == 0:
        raise ValueError("Park_{0,0} has no parking functions of positive size")


def enumerate_park(a: int, b: int, rs_filter: Optional[tuple[int, int]] = None) -> Iterator[ParkingFunction]:
    _check_ab(a, b)
    for T in enumerate_two_letter(a, b):
        if rs_filter is not None and level_zero_split(T, 1) != tuple(rs_filter):
            continue
        yield lift(T)


def para_poly(a: int, b: int, rs_filter: Optional[tuple[int, int]] = None) -> QTPolynomial:
    """Sum of ``q^dinv t^area`` over ``Park_{a,b}`` (optionally refined).

    The ``(0, 0)`` refinement is zero by convention.
    """
    _check_ab(a, b)
    if rs_filter is not None and tuple(rs_filter) == (0, 0):
        return ZERO
    acc: dict[tuple[int, int], int] = {}
    for T in enumerate_two_letter(a, b):
        if rs_filter is not None and level_zero_split(T, 1) != tuple(rs_filter):
            continue
        key = (pf_dinv(T), pf_area(T))
        acc[key] = acc.get(key, 0) + 1
    return QTPolynomial(acc)


def para_refined(a: int, b: int) -> dict[tuple[int, int], QTPolynomial]:
    """Every nonzero refinement of :func:`para_poly` in one pass."""
    _check_ab(a, b)
    acc: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
    for T in enumerate_two_letter(a, b):
        bucket = acc.setdefault(level_zero_split(T, 1), {})
        key = (pf_dinv(T), pf_area(T))
        bucket[key] = bucket.get(key, 0) + 1
    return {rs: QTPolynomial(terms) for rs, terms in sorted(acc.items())}


def para_poly_or_empty(a: int, b: int) -> QTPolynomial:
    """``para_poly`` extended by ``Para_{0,0} = 1`` (the empty parking function)."""
    return ONE if a == b == 0 else para_poly(a, b)


# -- brute-force oracle -------------------------------------------------------

def dyck_level_words(k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    word = [0]

    def extend():
        if len(word) == k:
            yield tuple(word)
            return
        for lv in range(word[-1] + 2):
            word.append(lv)
            yield from extend()
            word.pop()

    yield from extend()


def enumerate_parking_functions(k: int) -> Iterator[ParkingFunction]:
    """Every parking function of size ``k`` (slow; for cross-checks)."""
    for levels in dyck_level_words(k):
        rises = [i for i in range(k - 1) if levels[i] < levels[i + 1]]
        for cars in permutations(range(1, k + 1)):
            if all(cars[i] < cars[i + 1] for i in rises):
                yield ParkingFunction(cars, levels)


def enumerate_park_bruteforce(a: int, b: int) -> Iterator[ParkingFunction]:
    _check_ab(a, b)
    for pf in enumerate_parking_functions(a + b):
        if is_shuffle(reading_word(pf), a, b):
            yield pf


# -- peel -----------------------------------------------------------------------

def peel(T: TwoLetterPF) -> tuple[TwoLetterPF, int, int]:
    """Drop level-0 dominoes, lower the rest by one, then drop the leading ``2/0``.

    Returns the smaller word together with the number of removed level-0
    dominoes carrying 1 and carrying 2.
    """
    _, rest, r, s = peel_steps(T)
    return rest, r, s


def peel_steps(T: TwoLetterPF) -> tuple[TwoLetterPF, TwoLetterPF, int, int]:
    """Like :func:`peel` but also returns the intermediate word (before the
    leading ``2/0`` is dropped)."""
    if not T.levels or max(T.levels) < 1:
        raise ValueError("peel needs a domino above level 0")
    r = sum(1 for x, lv in T.dominoes if lv == 0 and x == 1)
    s = sum(1 for x, lv in T.dominoes if lv == 0 and x == 2)
    kept = [(x, lv - 1) for x, lv in T.dominoes if lv > 0]
    if kept[0] != (2, 0) or (len(kept) > 1 and kept[1][1] != 0):
        raise AssertionError(f"peeled word does not start with 2/0 followed by a level-0 domino: {kept[:2]}")
    middle = TwoLetterPF(tuple(x for x, _ in kept), tuple(lv for _, lv in kept))
    rest = kept[1:]
    return middle, TwoLetterPF(tuple(x for x, _ in rest), tuple(lv for _, lv in rest)), r, s


def unpeel(T: TwoLetterPF, r: int, s: int) -> Iterator[TwoLetterPF]:
    """All words that :func:`peel` sends to ``(T, r, s)``.

    Prepend a ``2/0``, raise every level by one, then insert ``r`` dominoes
    ``1/0`` and ``s`` dominoes ``2/0`` in every way that yields a valid word.
    """
    base = [(2, 1)] + [(x, lv + 1) for x, lv in T.dominoes]
    out: list[tuple[int, int]] = []

    def place(i: int, ones: int, twos: int):
        if i == len(base) and not ones and not twos:
            yield tuple(out)
            return
        options = []
        if ones:
            options.append(((1, 0), ones - 1, twos, i))
        if twos:
            options.append(((2, 0), ones, twos - 1, i))
        if i < len(base):
            options.append((base[i], ones, twos, i + 1))
        for domino, o, t, j in options:
            if not out and domino[1] != 0:
                continue
            if out and domino[1] > out[-1][1] and (out[-1][0], domino[0]) != (1, 2):
                continue
            if out and domino[1] > out[-1][1] + 1:
                continue
            out.append(domino)
            yield from place(j, o, t)
            out.pop()

    for word in place(0, r, s):
        yield TwoLetterPF(tuple(x for x, _ in word), tuple(lv for _, lv in word))
