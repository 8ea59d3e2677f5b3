"""The bijection ``Polyo_{m,n} -> Polyo_{n,m}`` taking (area, bounce) to
(dinv, area), its inverse, and the diagonal flip.

Boundary steps are labelled by the bounce path: a North step in a row of the
i-th vertical run gets ``i``, an East step in a column of the i-th
horizontal run gets ``ib``.  For each pair of consecutive letters, the
steps carrying them form one stretch of the upper path (pairs ``ib, i+1``)
or of the lower path (pairs ``i, ib``).  Read North-East to South-West,
that stretch prescribes how the two letters interleave in the image's
area word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .dyck import word_to_polyomino
from .polyomino import AreaWord, Letter, Polyomino, area_word, bounce_path


@dataclass(frozen=True)
class Prescription:
    """Relative order of two consecutive letter types, smaller one first."""

    pair: tuple[Letter, Letter]
    word: tuple[Letter, ...]

    def __post_init__(self):
        lo, hi = self.pair
        if hi.rank != lo.rank + 1:
            raise ValueError(f"{lo} and {hi} are not consecutive")
        if set(self.word) - {lo, hi}:
            raise ValueError("prescription uses foreign letters")
        if self.word and self.word[0] != lo:
            raise ValueError(f"prescription must begin with {lo}")

    def __str__(self):
        return " ".join(str(a) for a in self.word)


@dataclass(frozen=True)
class DigammaTrace:
    prescriptions: tuple[Prescription, ...]
    partial_words: tuple[tuple[Letter, ...], ...]

    @property
    def word(self) -> AreaWord:
        return AreaWord(self.partial_words[-1])


def _labelled_steps(P: Polyomino) -> tuple[list[Optional[int]], list[Optional[int]]]:
    """Rank of the label on every upper and lower step (``None`` = unlabelled)."""
    bp = bounce_path(P)
    rows, cols = bp.row_labels(), bp.column_labels()

    def label(path: str) -> list[Optional[int]]:
        out, x, y = [], 0, 0
        for step in path:
            if step == "N":
                out.append(2 * rows[y] - 1)
                y += 1
            else:
                out.append(2 * cols[x])
                x += 1
        return out

    upper, lower = label(P.upper), label(P.lower)
    # the first lower step sits under the initial 0b step of the bounce path
    lower[0] = None
    return upper, lower


def _restrict(labels: list[Optional[int]], lo: int) -> list[int]:
    """Labels in ``{lo, lo + 1}`` read North-East to South-West."""
    idx = [i for i, r in enumerate(labels) if r is not None and lo <= r <= lo + 1]
    if idx and idx[-1] - idx[0] + 1 != len(idx):
        raise AssertionError(f"steps labelled {Letter.from_rank(lo)}/{Letter.from_rank(lo + 1)} are not contiguous")
    return [labels[i] for i in reversed(idx)]


def _merge(word: list[int], prescription: list[int], lo: int) -> list[int]:
    """Insert the ``lo + 1`` letters of ``prescription`` into ``word``.

    The k-th ``lo`` of the prescription is matched with the k-th ``lo`` of
    the word, and the block of ``lo + 1`` letters that follows it is placed
    right after that letter.  No other spot is possible: a letter may only be
    followed by letters of rank at most one more than its own, and ``lo + 1``
    is the largest rank so far.
    """
    blocks: list[int] = []
    for r in prescription:
        if r == lo:
            blocks.append(0)
        else:
            blocks[-1] += 1
    if word.count(lo) != len(blocks):
        raise AssertionError(
            f"word has {word.count(lo)} letters {Letter.from_rank(lo)} but the prescription has {len(blocks)}"
        )
    out, k = [], 0
    for r in word:
        out.append(r)
        if r == lo:
            out.extend([lo + 1] * blocks[k])
            k += 1
    return out


def digamma_trace(P: Polyomino) -> DigammaTrace:
    """Run the construction and keep every prescription and partial word."""
    upper, lower = _labelled_steps(P)
    top = max(r for r in upper + lower if r is not None)
    prescriptions, partials = [], []
    word: list[int] = []
    for lo in range(top):
        source = upper if lo % 2 == 0 else lower
        pres = _restrict(source, lo)
        prescriptions.append(
            Prescription(
                (Letter.from_rank(lo), Letter.from_rank(lo + 1)),
                tuple(Letter.from_rank(r) for r in pres),
            )
        )
        word = list(pres) if lo == 0 else _merge(word, pres, lo)
        partials.append(tuple(Letter.from_rank(r) for r in word))
    return DigammaTrace(tuple(prescriptions), tuple(partials))


def digamma(P: Polyomino) -> Polyomino:
    Q = word_to_polyomino(digamma_trace(P).word)
    assert (Q.m, Q.n) == (P.n, P.m)
    return Q


def digamma_inverse(Q: Polyomino) -> Polyomino:
    ranks = area_word(Q).ranks
    top = max(ranks)

    def stretch(lo: int, north: int) -> str:
        sub = [r for r in ranks if r in (lo, lo + 1)]
        return "".join("N" if r == north else "E" for r in reversed(sub))

    # upper: pairs (ib, i+1); lower: pairs (i, ib) after one bare East step
    upper = "".join(stretch(lo, lo + 1) for lo in range(0, top + 1, 2))
    lower = "E" + "".join(stretch(lo, lo) for lo in range(1, top + 1, 2))
    return Polyomino(upper, lower)


def transpose_flip(P: Polyomino) -> Polyomino:
    """Reflect in the diagonal through the South-West corner."""
    swap = str.maketrans("NE", "EN")
    return Polyomino(P.lower.translate(swap), P.upper.translate(swap))
