"""Parallelogram polyominoes, their area words, and the statistics
``area``, ``dinv`` and ``bounce``.

A polyomino in an ``m x n`` box is stored as two step strings over ``{"N", "E"}``
running from ``(0, 0)`` to ``(m, n)``; ``upper`` stays strictly above/left of
``lower`` except at the two endpoints.

Letters of an area word are ordered ``0b < 1 < 1b < 2 < 2b < ...``, where
``kb`` is the barred number k.  Everything order-related goes through
:attr:`Letter.rank` (``2k - 1`` for unbarred ``k``, ``2k`` for barred ``k``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Iterator, Optional, Sequence

from .qtpoly import QTPolynomial


@total_ordering
@dataclass(frozen=True)
class Letter:
    value: int
    barred: bool = False

    def __post_init__(self):
        if self.value < 0 or (self.value == 0 and not self.barred):
            raise ValueError(f"no letter {self.value}{'b' if self.barred else ''}")

    @property
    def rank(self) -> int:
        return 2 * self.value if self.barred else 2 * self.value - 1

    @staticmethod
    @lru_cache(maxsize=None)
    def from_rank(rank: int) -> "Letter":
        if rank < 0:
            raise ValueError(f"negative rank {rank}")
        if rank % 2 == 0:
            return Letter(rank // 2, True)
        return Letter((rank + 1) // 2, False)

    @classmethod
    def parse(cls, token: str) -> "Letter":
        """Parse ``"3"`` or ``"3b"``."""
        barred = token.endswith("b")
        digits = token[:-1] if barred else token
        if not digits.isdigit():
            raise ValueError(f"bad letter token {token!r}")
        return cls(int(digits), barred)

    def __lt__(self, other):
        if not isinstance(other, Letter):
            return NotImplemented
        return self.rank < other.rank

    def __str__(self) -> str:
        return f"{self.value}b" if self.barred else str(self.value)


class AreaWordError(ValueError):
    """A letter sequence is not the area word of any parallelogram polyomino.

    ``condition`` is 1 (first letter / unique ``0b``), 2 (letter counts) or
    3 (a letter exceeds the successor of its predecessor).
    """

    def __init__(self, condition: int, message: str):
        super().__init__(f"condition {condition}: {message}")
        self.condition = condition


def validate_area_word(letters: Sequence[Letter], expected: Optional[tuple[int, int]] = None) -> tuple[int, int]:
    """Check the three area-word conditions and return the box ``(m, n)``.

    ``m`` counts unbarred letters, ``n`` barred ones.
    """
    if not letters or letters[0].rank != 0:
        raise AreaWordError(1, "the word must start with 0b")
    m = n = 0
    prev = -1
    for pos, letter in enumerate(letters):
        r = letter.rank
        if r == 0 and pos > 0:
            raise AreaWordError(1, f"second 0b at position {pos + 1}")
        if r > prev + 1:
            raise AreaWordError(3, f"{letter} at position {pos + 1} jumps above the successor of {letters[pos - 1]}")
        if letter.barred:
            n += 1
        else:
            m += 1
        prev = r
    if m == 0:
        raise AreaWordError(2, "no unbarred letters, so the box would have width 0")
    if expected is not None and (m, n) != tuple(expected):
        raise AreaWordError(2, f"letter counts give box {(m, n)}, expected {tuple(expected)}")
    return m, n


@dataclass(frozen=True)
class AreaWord:
    letters: tuple[Letter, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        validate_area_word(letters)

    @classmethod
    def parse(cls, text: str) -> "AreaWord":
        return cls(tuple(Letter.parse(tok) for tok in text.split()))

    @classmethod
    def from_ranks(cls, ranks: Iterable[int]) -> "AreaWord":
        return cls(tuple(Letter.from_rank(r) for r in ranks))

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(a.rank for a in self.letters)

    @property
    def m(self) -> int:
        return sum(1 for a in self.letters if not a.barred)

    @property
    def n(self) -> int:
        return sum(1 for a in self.letters if a.barred)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.letters)


@dataclass(frozen=True)
class Polyomino:
    """Pair of N/E step strings; see :func:`from_paths` for validation."""

    upper: str
    lower: str

    def __post_init__(self):
        up, lo = _as_steps(self.upper), _as_steps(self.lower)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        if len(up) != len(lo):
            raise ValueError("upper and lower paths have different lengths")
        m, n = up.count("E"), up.count("N")
        if (lo.count("E"), lo.count("N")) != (m, n):
            raise ValueError("upper and lower paths end at different points")
        if m == 0 or n == 0:
            raise ValueError(f"empty bounding box {m}x{n}")
        if up[0] != "N" or lo[0] != "E":
            raise ValueError("upper path must start North and lower path East")
        ux = lx = 0
        for k in range(len(up) - 1):
            ux += up[k] == "E"
            lx += lo[k] == "E"
            # both points lie on the anti-diagonal k+1, so comparing x suffices
            if ux == lx:
                raise ValueError(f"paths touch after {k + 1} steps at {(ux, k + 1 - ux)}")

    @property
    def m(self) -> int:
        return self.upper.count("E")

    @property
    def n(self) -> int:
        return self.upper.count("N")

    def __str__(self) -> str:
        return f"Polyomino(upper={self.upper}, lower={self.lower})"


def _as_steps(path) -> str:
    s = path if isinstance(path, str) else "".join(path)
    if set(s) - {"N", "E"}:
        raise ValueError(f"path {s!r} has steps other than N and E")
    return s


def from_paths(upper, lower) -> Polyomino:
    return Polyomino(_as_steps(upper), _as_steps(lower))


# -- geometry helpers -------------------------------------------------------

def _column_heights(path: str) -> list[int]:
    """Height of the East step crossing each column."""
    heights, y = [], 0
    for step in path:
        if step == "E":
            heights.append(y)
        else:
            y += 1
    return heights


def _row_positions(path: str) -> list[int]:
    """x-coordinate of the North step crossing each row."""
    xs, x = [], 0
    for step in path:
        if step == "N":
            xs.append(x)
        else:
            x += 1
    return xs


def interior_cells(P: Polyomino) -> set[tuple[int, int]]:
    """Cells ``(x, y)`` (lower-left corners) strictly between the paths."""
    top, bottom = _column_heights(P.upper), _column_heights(P.lower)
    return {(x, y) for x in range(P.m) for y in range(bottom[x], top[x])}


# -- area word --------------------------------------------------------------

def area_word(P: Polyomino) -> AreaWord:
    """Label the boundary and read the labels along the anti-diagonal sweep.

    Each lower East step gets the number of cells its North-West diagonal
    crosses; each upper North step gets the number of cells of its row left
    uncrossed by those diagonals.  Steps with the same index along their
    paths meet the sweep line together, and the upper label goes first.
    """
    top = _column_heights(P.upper)
    bottom = _column_heights(P.lower)
    left = _row_positions(P.upper)
    right = _row_positions(P.lower)

    crossed: set[tuple[int, int]] = set()
    lower_labels = []
    for x, y in enumerate(bottom):
        k = 0
        while x - k >= 0 and y + k < top[x - k]:
            crossed.add((x - k, y + k))
            k += 1
        lower_labels.append(k)
    upper_labels = [
        sum(1 for x in range(left[y], right[y]) if (x, y) not in crossed)
        for y in range(P.n)
    ]

    labelled = []
    rows = iter(upper_labels)
    for idx, step in enumerate(P.upper):
        if step == "N":
            labelled.append((idx, 0, Letter(next(rows), True)))
    cols = iter(lower_labels)
    for idx, step in enumerate(P.lower):
        if step == "E":
            labelled.append((idx, 1, Letter(next(cols), False)))
    labelled.sort(key=lambda item: (item[0], item[1]))
    return AreaWord(tuple(letter for _, _, letter in labelled))


def area(w: AreaWord) -> int:
    return sum(a.value for a in w)


def dinv(w: AreaWord) -> int:
    """Pairs ``i < j`` where ``w[j]`` is the immediate successor of ``w[i]``."""
    seen: dict[int, int] = {}
    total = 0
    for r in w.ranks:
        total += seen.get(r - 1, 0)
        seen[r] = seen.get(r, 0) + 1
    return total


def one_counts(w: AreaWord) -> tuple[int, int]:
    """Number of letters ``1`` and ``1b``."""
    ranks = w.ranks
    return ranks.count(1), ranks.count(2)


# -- bounce path ------------------------------------------------------------

@dataclass(frozen=True)
class BouncePath:
    """Run lengths of the bounce path.

    ``horizontal_runs[i]`` is the length of the run labelled ``ib`` (starting
    with the single step labelled ``0b``), ``vertical_runs[i]`` the run
    labelled ``i + 1``.
    """

    horizontal_runs: tuple[int, ...]
    vertical_runs: tuple[int, ...]

    def bounce(self) -> int:
        return sum(i * s for i, s in enumerate(self.horizontal_runs)) + sum(
            i * r for i, r in enumerate(self.vertical_runs, start=1)
        )

    def one_counts(self) -> tuple[int, int]:
        r1 = self.vertical_runs[0]
        s1 = self.horizontal_runs[1] if len(self.horizontal_runs) > 1 else 0
        return r1, s1

    def row_labels(self) -> list[int]:
        """Vertical label of each row, bottom to top."""
        return [i for i, r in enumerate(self.vertical_runs, start=1) for _ in range(r)]

    def column_labels(self) -> list[int]:
        """Horizontal label (bar value) of each column, left to right."""
        return [i for i, s in enumerate(self.horizontal_runs) for _ in range(s)]


def bounce_path(P: Polyomino) -> BouncePath:
    top = _column_heights(P.upper)
    right = _row_positions(P.lower)
    m, n = P.m, P.n
    x, y = 1, 0
    horizontal, vertical = [1], []
    while (x, y) != (m, n):
        ny = top[x - 1]
        assert ny > y, f"bounce path stalled going North at {(x, y)}"
        vertical.append(ny - y)
        y = ny
        if (x, y) == (m, n):
            break
        nx = right[y - 1]
        assert nx > x, f"bounce path stalled going East at {(x, y)}"
        horizontal.append(nx - x)
        x = nx
    return BouncePath(tuple(horizontal), tuple(vertical))


def bounce(P: Polyomino) -> int:
    return bounce_path(P).bounce()


def bounce_one_counts(P: Polyomino) -> tuple[int, int]:
    return bounce_path(P).one_counts()


# -- counting and enumeration -----------------------------------------------

def narayana_count(a: int, b: int) -> int:
    """``N(a, b) = C(a, b) C(a, b - 1) / a``."""
    from math import comb

    if a < 1 or not 1 <= b <= a:
        raise ValueError(f"narayana_count needs 1 <= b <= a, got a={a}, b={b}")
    num = comb(a, b) * comb(a, b - 1)
    assert num % a == 0
    return num // a


def area_word_ranks(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """All area words of ``Polyo_{m,n}`` as rank tuples, in lexicographic order."""
    if m < 1 or n < 1:
        raise ValueError(f"box must be at least 1x1, got {m}x{n}")
    word = [0]

    def extend(prev: int, unbarred: int, barred: int):
        if unbarred == 0 and barred == 0:
            yield tuple(word)
            return
        for r in range(1, prev + 2):
            if r % 2:
                if not unbarred:
                    continue
                word.append(r)
                yield from extend(r, unbarred - 1, barred)
            else:
                if not barred:
                    continue
                word.append(r)
                yield from extend(r, unbarred, barred - 1)
            word.pop()

    yield from extend(0, m, n - 1)


def enumerate_area_words(m: int, n: int) -> Iterator[AreaWord]:
    for ranks in area_word_ranks(m, n):
        yield AreaWord.from_ranks(ranks)


def enumerate_polyominoes(m: int, n: int) -> Iterator[Polyomino]:
    from .dyck import word_to_polyomino

    for w in enumerate_area_words(m, n):
        yield word_to_polyomino(w)


def nara_enum(m: int, n: int, rs_filter: Optional[tuple[int, int]] = None) -> QTPolynomial:
    """Sum of ``q^dinv t^area`` over ``Polyo_{m,n}``, optionally restricted to
    area words with ``r`` letters ``1`` and ``s`` letters ``1b``."""
    acc: dict[tuple[int, int], int] = {}
    for w in enumerate_area_words(m, n):
        if rs_filter is not None and one_counts(w) != tuple(rs_filter):
            continue
        key = (dinv(w), area(w))
        acc[key] = acc.get(key, 0) + 1
    return QTPolynomial(acc)


def tilde_nara_enum(m: int, n: int, rs_filter: Optional[tuple[int, int]] = None) -> QTPolynomial:
    """Sum of ``q^area t^bounce`` over ``Polyo_{m,n}``, optionally restricted by
    the bounce path's first vertical and second horizontal run lengths."""
    from .dyck import word_to_polyomino

    acc: dict[tuple[int, int], int] = {}
    for w in enumerate_area_words(m, n):
        b = bounce_path(word_to_polyomino(w))
        if rs_filter is not None and b.one_counts() != tuple(rs_filter):
            continue
        key = (area(w), b.bounce())
        acc[key] = acc.get(key, 0) + 1
    return QTPolynomial(acc)


def _group(pairs) -> dict[tuple[int, int], QTPolynomial]:
    acc: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
    for rs, key in pairs:
        bucket = acc.setdefault(rs, {})
        bucket[key] = bucket.get(key, 0) + 1
    return {rs: QTPolynomial(terms) for rs, terms in sorted(acc.items())}


def nara_refined(m: int, n: int) -> dict[tuple[int, int], QTPolynomial]:
    """Every nonzero refinement of :func:`nara_enum` in one pass."""
    return _group((one_counts(w), (dinv(w), area(w))) for w in enumerate_area_words(m, n))


def tilde_nara_refined(m: int, n: int) -> dict[tuple[int, int], QTPolynomial]:
    """Every nonzero refinement of :func:`tilde_nara_enum` in one pass."""
    from .dyck import word_to_polyomino

    def items():
        for w in enumerate_area_words(m, n):
            b = bounce_path(word_to_polyomino(w))
            yield b.one_counts(), (area(w), b.bounce())

    return _group(items())
