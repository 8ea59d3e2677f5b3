"""Exact polynomials in two variables ``q`` and ``t`` with integer coefficients.

Every generating function in the package is a :class:`QTPolynomial`.  Values
are immutable; the zero polynomial has no terms, and terms are always kept in
lexicographic ``(q_exp, t_exp)`` order so that printing is deterministic.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

Exponent = tuple[int, int]


class QTPolynomial:
    """Sparse polynomial in ``q`` and ``t``.

    ``terms`` maps ``(q_exp, t_exp)`` to a nonzero integer.  Repeated
    exponent pairs in an iterable of items are summed.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exponent, int], Iterable[tuple[Exponent, int]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for (i, j), c in items:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient must be an int, got {c!r}")
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent {(i, j)}")
            acc[(i, j)] = acc.get((i, j), 0) + c
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict[Exponent, int]) -> "QTPolynomial":
        # terms must already be free of zeros; only sorting is done here
        p = cls.__new__(cls)
        p._terms = {k: terms[k] for k in sorted(terms)}
        p._hash = None
        return p

    @classmethod
    def monomial(cls, q_exp: int = 0, t_exp: int = 0, coeff: int = 1) -> "QTPolynomial":
        return cls({(q_exp, t_exp): coeff})

    @classmethod
    def constant(cls, c: int) -> "QTPolynomial":
        return cls({(0, 0): c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(q_exp, t_exp, coeff)`` in canonical order."""
        for (i, j), c in self._terms.items():
            yield i, j, c

    def coefficient(self, q_exp: int, t_exp: int) -> int:
        return self._terms.get((q_exp, t_exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> tuple[int, int]:
        """Largest exponent of ``q`` and of ``t`` (``(-1, -1)`` for zero)."""
        if not self._terms:
            return (-1, -1)
        return (max(i for i, _ in self._terms), max(j for _, j in self._terms))

    def evaluate(self, q, t):
        return sum(c * q**i * t**j for (i, j), c in self._terms.items())

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = QTPolynomial.constant(other)
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = QTPolynomial.constant(other)
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return QTPolynomial._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QTPolynomial.constant(other)
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return QTPolynomial._from_clean({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative int")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for (i, j), c in self._terms.items():
            mono = "*".join(
                f for f in (_power("q", i), _power("t", j)) if f
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"QTPolynomial('{self}')"

    @classmethod
    def parse(cls, text: str) -> "QTPolynomial":
        """Inverse of ``str()``; also tolerates any whitespace and ``**``."""
        s = "".join(text.split()).replace("**", "^")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        pos, acc = 0, []
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
            sign, coeff, factors = m.group("sign"), m.group("coeff"), m.group("factors")
            if not coeff and not factors:
                raise ValueError(f"empty term in {text!r}")
            c = int(coeff) if coeff else 1
            if sign == "-":
                c = -c
            i = j = 0
            for var, exp in _FACTOR_RE.findall(factors or ""):
                e = int(exp) if exp else 1
                if var == "q":
                    i += e
                else:
                    j += e
            acc.append(((i, j), c))
            pos = m.end()
        return cls(acc)


_TERM_RE = re.compile(r"(?P<sign>[+-])(?P<coeff>\d+)?\*?(?P<factors>(?:[qt](?:\^\d+)?\*?)*)")
_FACTOR_RE = re.compile(r"([qt])(?:\^(\d+))?")


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def poly_add(p1: QTPolynomial, p2: QTPolynomial) -> QTPolynomial:
    acc = dict(p1._terms)
    for k, c in p2._terms.items():
        v = acc.get(k, 0) + c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    return QTPolynomial._from_clean(acc)


def poly_mul(p1: QTPolynomial, p2: QTPolynomial) -> QTPolynomial:
    acc: dict[Exponent, int] = {}
    for (i1, j1), c1 in p1._terms.items():
        for (i2, j2), c2 in p2._terms.items():
            k = (i1 + i2, j1 + j2)
            acc[k] = acc.get(k, 0) + c1 * c2
    return QTPolynomial._from_clean({k: c for k, c in acc.items() if c})


def poly_monomial_shift(p: QTPolynomial, a: int, b: int) -> QTPolynomial:
    """Multiply ``p`` by ``q^a t^b``."""
    if a < 0 or b < 0:
        raise ValueError("shift exponents must be non-negative")
    return QTPolynomial._from_clean({(i + a, j + b): c for (i, j), c in p._terms.items()})


def poly_eval_ones(p: QTPolynomial) -> int:
    """Value at ``q = t = 1``."""
    return sum(p._terms.values())


def poly_swap_qt(p: QTPolynomial) -> QTPolynomial:
    return QTPolynomial._from_clean({(j, i): c for (i, j), c in p._terms.items()})


ZERO = QTPolynomial()
ONE = QTPolynomial.constant(1)
Q = QTPolynomial.monomial(1, 0)
T = QTPolynomial.monomial(0, 1)


# -- q-analogues ------------------------------------------------------------

def q_integer(n: int) -> QTPolynomial:
    """``[n]_q = 1 + q + ... + q^(n-1)``, with ``[0]_q = 1``."""
    if n < 0:
        raise ValueError(f"q_integer needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return QTPolynomial._from_clean({(i, 0): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QTPolynomial:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QTPolynomial:
    """Gaussian binomial coefficient via ``[n,k] = [n-1,k-1] + q^k [n-1,k]``."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + poly_monomial_shift(q_binomial(n - 1, k), k, 0)
