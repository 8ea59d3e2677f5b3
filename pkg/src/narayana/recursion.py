"""Refined recursions for the Narayana-type polynomials.

Three families are evaluated here, each refined by a pair ``(r, s)``:

* ``TILDE_NARA`` -- ``q^area t^bounce`` over an ``m x n`` box, refined by the
  lengths of the bounce path's first vertical run and second horizontal run;
* ``NARA`` -- ``q^dinv t^area`` over a box of width ``w`` and height ``h``,
  refined by the number of letters ``1`` and ``1b`` in the area word;
* ``PARA`` -- ``q^dinv t^area`` over ``Park_{a,b}``, refined by how many
  small and large cars sit at level 0.

All three are memoised per :class:`RecursionSession`.  Out-of-range
q-binomials inside the double sums count as zero.
"""

from __future__ import annotations

import enum
import threading
from typing import NamedTuple, Optional

from .polyomino import AreaWord, Letter, nara_enum, tilde_nara_enum
from .qtpoly import ONE, ZERO, QTPolynomial, poly_monomial_shift, q_binomial
from .parking import para_poly


class Family(enum.Enum):
    TILDE_NARA = "tilde-nara"
    NARA = "nara"
    PARA = "para"


class RecursionKey(NamedTuple):
    family: Family
    box: tuple[int, int]
    refinement: tuple[int, int]


def _qbin(n: int, k: int) -> QTPolynomial:
    if n < 0 or k < 0 or k > n:
        return ZERO
    return q_binomial(n, k)


def _check_nara_range(width: int, height: int, r: int, s: int, r_max: int, s_max: int, name: str) -> None:
    if width < 1 or height < 1:
        raise ValueError(f"{name}: box must be at least 1x1, got {width}x{height}")
    if not (1 <= r <= r_max and 0 <= s <= s_max):
        raise ValueError(f"{name}: need 1 <= r <= {r_max} and 0 <= s <= {s_max}, got r={r}, s={s}")


class RecursionSession:
    """Evaluation context holding the memo table.

    With ``memoize=False`` every value is recomputed from scratch, which is
    only useful for cross-checking the cache.
    """

    def __init__(self, memoize: bool = True):
        self.memoize = memoize
        self._cache: dict[RecursionKey, QTPolynomial] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._cache)

    def _lookup(self, key: RecursionKey, compute) -> QTPolynomial:
        if not self.memoize:
            return compute()
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        value = compute()
        with self._lock:
            self._cache.setdefault(key, value)
        return value

    # -- tilde Nara: width m, height n, 1 <= r <= n, 0 <= s <= m-1 --------------

    def tilde_nara_rs(self, m: int, n: int, r: int, s: int) -> QTPolynomial:
        _check_nara_range(m, n, r, s, n, m - 1, "tilde_nara_rs")
        key = RecursionKey(Family.TILDE_NARA, (m, n), (r, s))
        return self._lookup(key, lambda: self._tilde_nara(m, n, r, s))

    def _tilde_nara(self, m: int, n: int, r: int, s: int) -> QTPolynomial:
        if r == n:
            if s != m - 1:
                return ZERO
            return poly_monomial_shift(q_binomial(m + n - 2, m - 1), m + n - 1, m + n - 1)
        if m == 1:
            return ZERO
        total = ZERO
        for h in range(1, n - r + 1):
            weight = _qbin(s + r - 1, s) * _qbin(s + h - 1, h)
            if not weight:
                continue
            inner = ZERO
            for k in range(0, m - s):
                inner = inner + self.tilde_nara_rs(m - s, n - r, h, k)
            total = total + weight * inner
        return poly_monomial_shift(total, r + s, m + n - 1)

    # -- Nara: width w, height h, 1 <= r <= w, 0 <= s <= h-1 -------------------

    def nara_rs(self, width: int, height: int, r: int, s: int) -> QTPolynomial:
        _check_nara_range(width, height, r, s, width, height - 1, "nara_rs")
        key = RecursionKey(Family.NARA, (width, height), (r, s))
        return self._lookup(key, lambda: self._nara(width, height, r, s))

    def _nara(self, n: int, m: int, r: int, s: int) -> QTPolynomial:
        # n is the width, m the height, matching the usual statement
        if r == n:
            if s != m - 1:
                return ZERO
            return poly_monomial_shift(q_binomial(m + n - 2, m - 1), m + n - 1, m + n - 1)
        if m == 1:
            return ZERO
        total = ZERO
        for h in range(1, n - r + 1):
            for k in range(0, m - s):
                weight = poly_monomial_shift(_qbin(s + r - 1, s) * _qbin(s + h - 1, h), s, 0)
                if weight:
                    total = total + weight * self.nara_rs(n - r, m - s, h, k)
        return poly_monomial_shift(total, r, m + n - 1)

    # -- Para: Park_{a,b}, 0 <= r <= a, 0 <= s <= b ----------------------------

    def para_rs(self, a: int, b: int, r: int, s: int) -> QTPolynomial:
        if a < 0 or b < 0 or not (0 <= r <= a and 0 <= s <= b):
            raise ValueError(f"para_rs: need 0 <= r <= a and 0 <= s <= b, got a={a}, b={b}, r={r}, s={s}")
        key = RecursionKey(Family.PARA, (a, b), (r, s))
        return self._lookup(key, lambda: self._para(a, b, r, s))

    def _para(self, a: int, b: int, r: int, s: int) -> QTPolynomial:
        # a = n-1 small cars, b = m-1 large cars
        if s == b:
            return q_binomial(a + b, a) if r == a else ZERO
        if a == 0 or (r, s) == (0, 0):
            return ZERO
        total = ZERO
        for h in range(0, a - r + 1):
            for k in range(1, b - s + 1):
                weight = _qbin(r + s, r) * _qbin(r + k - 1, k)
                if weight:
                    total = total + weight * self.para_rs(a - r, b - s - 1, h, k - 1)
        return poly_monomial_shift(total, 0, a + b - r - s)

    # -- totals -------------------------------------------------------------

    def nara_total(self, m: int, n: int) -> QTPolynomial:
        total = ZERO
        for r in range(1, m + 1):
            for s in range(n):
                total = total + self.nara_rs(m, n, r, s)
        return total

    def tilde_nara_total(self, m: int, n: int) -> QTPolynomial:
        total = ZERO
        for r in range(1, n + 1):
            for s in range(m):
                total = total + self.tilde_nara_rs(m, n, r, s)
        return total

    def para_total(self, a: int, b: int) -> QTPolynomial:
        total = ZERO
        for r in range(a + 1):
            for s in range(b + 1):
                total = total + self.para_rs(a, b, r, s)
        return total


_default = RecursionSession()


def tilde_nara_rs(m: int, n: int, r: int, s: int, session: Optional[RecursionSession] = None) -> QTPolynomial:
    return (session or _default).tilde_nara_rs(m, n, r, s)


def nara_rs(n: int, m: int, r: int, s: int, session: Optional[RecursionSession] = None) -> QTPolynomial:
    """Refined Nara polynomial of a box of width ``n`` and height ``m``."""
    return (session or _default).nara_rs(n, m, r, s)


def para_rs_rec(n_minus_1: int, m_minus_1: int, r: int, s: int, session: Optional[RecursionSession] = None) -> QTPolynomial:
    return (session or _default).para_rs(n_minus_1, m_minus_1, r, s)


def nara_total(m: int, n: int, method: str = "recursion", session: Optional[RecursionSession] = None) -> QTPolynomial:
    if m < 1 or n < 1:
        raise ValueError(f"box must be at least 1x1, got {m}x{n}")
    if method == "enumeration":
        return nara_enum(m, n)
    if method == "recursion":
        return (session or _default).nara_total(m, n)
    raise ValueError(f"unknown method {method!r}")


def nabla_pairing(m: int, n: int) -> QTPolynomial:
    """Combinatorial value ``Para_{n-1,m-1}`` of the nabla pairing for the box ``m x n``.

    No symmetric functions are computed; ``Para_{0,0}`` is 1.
    """
    if m < 1 or n < 1:
        raise ValueError(f"box must be at least 1x1, got {m}x{n}")
    if m == n == 1:
        return ONE
    return para_poly(n - 1, m - 1)


def word_peel(w: AreaWord) -> tuple[Optional[AreaWord], int, int]:
    """Lower every letter by one, drop the resulting ``0`` and ``0b``, and turn
    the old ``0b`` back into ``0b``.

    Returns the smaller word (``None`` if nothing but ``0b`` would remain)
    and the number of letters ``2`` and ``2b`` in ``w``.
    """
    ranks = w.ranks
    h, k = ranks.count(3), ranks.count(4)
    peeled = [0] + [r - 2 for r in ranks[1:] if r >= 3]
    if len(peeled) == 1:
        return None, h, k
    return AreaWord(tuple(Letter.from_rank(r) for r in peeled)), h, k


def refined_enumerations(family: Family, first: int, second: int, r: int, s: int) -> QTPolynomial:
    """Brute-force counterpart of each recursion, same argument convention."""
    if family is Family.TILDE_NARA:
        return tilde_nara_enum(first, second, (r, s))
    if family is Family.NARA:
        return nara_enum(first, second, (r, s))
    return para_poly(first, second, (r, s)) if first + second else (ONE if (r, s) == (0, 0) else ZERO)
