"""Exhaustive checks run by ``narayana verify``.

Each check takes a box ``(m, n)`` and returns ``None`` on success or a short
description of the first discrepancy.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .bijections import digamma, digamma_inverse
from .dyck import dtp, dyck_to_area_word, ptd
from .polyomino import (
    area,
    area_word,
    bounce,
    dinv,
    enumerate_polyominoes,
    nara_enum,
    nara_refined,
    narayana_count,
    tilde_nara_enum,
    tilde_nara_refined,
)
from .parking import para_poly_or_empty, para_refined
from .qtpoly import ZERO, poly_eval_ones, poly_monomial_shift, poly_swap_qt
from .recursion import RecursionSession


def check_count(m: int, n: int) -> Optional[str]:
    expected = narayana_count(m + n - 1, m)
    got = sum(1 for _ in enumerate_polyominoes(m, n))
    if got != expected:
        return f"enumerated {got} polyominoes, expected {expected}"
    total = poly_eval_ones(RecursionSession().nara_total(m, n))
    if total != expected:
        return f"recursion total at q=t=1 is {total}, expected {expected}"
    return None


def check_adinba(m: int, n: int) -> Optional[str]:
    left, right = nara_refined(m, n), tilde_nara_refined(n, m)
    for rs in sorted(set(left) | set(right)):
        if left.get(rs) != right.get(rs):
            return f"refinement (r,s)={rs} differs"
    return None


def check_symmetry_qt(m: int, n: int) -> Optional[str]:
    p = nara_enum(m, n)
    return None if p == poly_swap_qt(p) else "not symmetric in q and t"


def check_symmetry_mn(m: int, n: int) -> Optional[str]:
    if nara_enum(m, n) != nara_enum(n, m):
        return "Nara_{m,n} != Nara_{n,m}"
    if nara_enum(m, n) != tilde_nara_enum(m, n):
        return "Nara_{m,n} != tildeNara_{m,n}"
    return None


def check_recursion(m: int, n: int) -> Optional[str]:
    session = RecursionSession()
    tilde = tilde_nara_refined(m, n)
    for r in range(1, n + 1):
        for s in range(m):
            if session.tilde_nara_rs(m, n, r, s) != tilde.get((r, s), ZERO):
                return f"tilde-nara ({r},{s}) disagrees with enumeration"
    nara = nara_refined(m, n)
    for r in range(1, m + 1):
        for s in range(n):
            if session.nara_rs(m, n, r, s) != nara.get((r, s), ZERO):
                return f"nara ({r},{s}) disagrees with enumeration"
            if session.nara_rs(m, n, r, s) != session.tilde_nara_rs(n, m, r, s):
                return f"nara ({r},{s}) differs from tilde-nara with swapped box"
    a, b = n - 1, m - 1
    if a + b:
        para = para_refined(a, b)
        for r in range(a + 1):
            for s in range(b + 1):
                if session.para_rs(a, b, r, s) != para.get((r, s), ZERO):
                    return f"para ({r},{s}) disagrees with enumeration"
    return None


def check_haglund(m: int, n: int) -> Optional[str]:
    lhs = RecursionSession().nara_total(m, n)
    rhs = poly_monomial_shift(para_poly_or_empty(n - 1, m - 1), m + n - 1, m + n - 1)
    return None if lhs == rhs else "Nara_{m,n} != (qt)^(m+n-1) Para_{n-1,m-1}"


def check_digamma(m: int, n: int) -> Optional[str]:
    images = set()
    for P in enumerate_polyominoes(m, n):
        Q = digamma(P)
        wp, wq = area_word(P), area_word(Q)
        if (Q.m, Q.n) != (n, m):
            return f"image of {P} lies in the wrong box"
        if area(wq) != bounce(P) or dinv(wq) != area(wp):
            return f"statistics not transported for {P}"
        if digamma_inverse(Q) != P:
            return f"inverse fails on {P}"
        if dinv(area_word(digamma(Q))) != bounce(P):
            return f"digamma twice does not send bounce to dinv for {P}"
        images.add(Q)
    if len(images) != narayana_count(m + n - 1, m):
        return "not injective"
    return None


def check_dyck(m: int, n: int) -> Optional[str]:
    for P in enumerate_polyominoes(m, n):
        D = ptd(P)
        if dyck_to_area_word(D) != area_word(P):
            return f"row reading differs from area word for {P}"
        if dtp(D) != P:
            return f"dtp(ptd(P)) != P for {P}"
    return None


CHECKS: dict[str, Callable[[int, int], Optional[str]]] = {
    "count": check_count,
    "adinba": check_adinba,
    "symmetry-qt": check_symmetry_qt,
    "symmetry-mn": check_symmetry_mn,
    "recursion": check_recursion,
    "haglund": check_haglund,
    "digamma": check_digamma,
    "dyck": check_dyck,
}


@dataclass(frozen=True)
class CheckResult:
    check: str
    m: int
    n: int
    error: Optional[str]

    @property
    def passed(self) -> bool:
        return self.error is None


def _run_one(job: tuple[str, int, int]) -> CheckResult:
    name, m, n = job
    try:
        error = CHECKS[name](m, n)
    except Exception as exc:  # a crash inside a check is a failure, not a usage error
        error = f"{type(exc).__name__}: {exc}"
    return CheckResult(name, m, n, error)


def cells(max_total: int) -> list[tuple[int, int]]:
    return sorted(
        ((m, t - m) for t in range(2, max_total + 1) for m in range(1, t)),
        key=lambda mn: (mn[0] + mn[1], mn[0]),
    )


def worker_count() -> int:
    raw = os.environ.get("NARAYANA_THREADS", "").strip()
    if not raw:
        return 0
    value = int(raw)
    if value < 0:
        raise ValueError("NARAYANA_THREADS must be >= 0")
    return value


def run_checks(max_total: int, names: list[str], workers: int = 0) -> list[CheckResult]:
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    jobs = [(name, m, n) for (m, n) in cells(max_total) for name in names]
    if workers > 0:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(job) for job in jobs]
