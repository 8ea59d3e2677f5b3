"""The bijection between parallelogram polyominoes and Dyck paths.

Upper and lower path steps are interleaved (upper first).  Upper North and
lower East steps become rises ``R``, the others falls ``F``.  The image is
the set of Dyck paths of length ``2(m + n)`` with ``n`` rises in odd
positions, ``m`` in even positions, and no return to height 0 before the
end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .polyomino import AreaWord, AreaWordError, Letter, Polyomino, validate_area_word

__all__ = [
    "DyckPath",
    "PolyominoDyckPath",
    "ptd",
    "dtp",
    "dyck_to_area_word",
    "validate_area_word",
    "word_to_polyomino",
    "AreaWordError",
]


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        steps = self.steps if isinstance(self.steps, str) else "".join(self.steps)
        steps = steps.replace(" ", "")
        object.__setattr__(self, "steps", steps)
        if set(steps) - {"R", "F"}:
            raise ValueError(f"Dyck path steps must be R or F: {steps!r}")
        if not steps or steps[0] != "R":
            raise ValueError("a Dyck path starts with a rise")
        if len(steps) % 2:
            raise ValueError("a Dyck path has even length")
        h = 0
        for i, s in enumerate(steps):
            h += 1 if s == "R" else -1
            if h < 0:
                raise ValueError(f"Dyck path goes below the baseline at step {i + 1}")
        if h != 0:
            raise ValueError("Dyck path does not end on the baseline")

    def heights(self) -> list[int]:
        """Height after each step (``heights()[0]`` is after the first)."""
        out, h = [], 0
        for s in self.steps:
            h += 1 if s == "R" else -1
            out.append(h)
        return out

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return " ".join(self.steps)


@dataclass(frozen=True)
class PolyominoDyckPath(DyckPath):
    def __post_init__(self):
        super().__post_init__()
        steps = self.steps
        for i, h in enumerate(self.heights()[:-1]):
            if h == 0:
                raise ValueError(f"path returns to the baseline at step {i + 1}")
        if self.m < 1 or self.n < 1:
            raise ValueError("needs rises in both odd and even positions")

    @property
    def n(self) -> int:
        """Rises in odd (1-indexed) positions."""
        return self.steps[0::2].count("R")

    @property
    def m(self) -> int:
        """Rises in even (1-indexed) positions."""
        return self.steps[1::2].count("R")


_UPPER_TO_DYCK = {"N": "R", "E": "F"}
_LOWER_TO_DYCK = {"E": "R", "N": "F"}
_DYCK_TO_UPPER = {"R": "N", "F": "E"}
_DYCK_TO_LOWER = {"R": "E", "F": "N"}


def ptd(P: Polyomino) -> PolyominoDyckPath:
    steps = []
    for u, l in zip(P.upper, P.lower):
        steps.append(_UPPER_TO_DYCK[u])
        steps.append(_LOWER_TO_DYCK[l])
    return PolyominoDyckPath("".join(steps))


def dtp(D: Union[DyckPath, str]) -> Polyomino:
    if not isinstance(D, PolyominoDyckPath):
        D = PolyominoDyckPath(D.steps if isinstance(D, DyckPath) else D)
    upper = "".join(_DYCK_TO_UPPER[s] for s in D.steps[0::2])
    lower = "".join(_DYCK_TO_LOWER[s] for s in D.steps[1::2])
    return Polyomino(upper, lower)


def dyck_to_area_word(D: DyckPath) -> AreaWord:
    """Letters of the rows in which the rises sit, left to right.

    Row ``j`` lies between heights ``j`` and ``j + 1`` and carries the
    letter of rank ``j``.
    """
    letters, h = [], 0
    for s in D.steps:
        if s == "R":
            letters.append(Letter.from_rank(h))
            h += 1
        else:
            h -= 1
    return AreaWord(tuple(letters))


def word_to_dyck(w: AreaWord) -> PolyominoDyckPath:
    steps, h = [], 0
    for r in w.ranks:
        steps.append("F" * (h - r))
        steps.append("R")
        h = r + 1
    steps.append("F" * h)
    return PolyominoDyckPath("".join(steps))


def word_to_polyomino(w) -> Polyomino:
    """Accepts an :class:`AreaWord` or any sequence of letters."""
    if not isinstance(w, AreaWord):
        w = AreaWord(tuple(w))
    return dtp(word_to_dyck(w))
