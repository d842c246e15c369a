"""The grids F_M, Lambda_M, their interiors, and exact point counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import _rtables
from .algebra import AlgebraData, build


@dataclass(frozen=True, order=True)
class GridPoint:
    """Point of F_M: ``s = (s_0, ..., s_n)`` with ``s_0 + sum m_i s_i = M``."""

    M: int
    s: tuple[int, ...]

    @property
    def coweight(self) -> tuple[int, ...]:
        return self.s[1:]

    @property
    def y(self) -> tuple[float, ...]:
        return tuple(v / self.M for v in self.s[1:])

    @property
    def interior(self) -> bool:
        return all(v > 0 for v in self.s)


@dataclass(frozen=True, order=True)
class WeightPoint:
    """Point of Lambda_M: ``t = (t_0, ..., t_n)`` with ``t_0 + sum m_i^vee t_i = M``."""

    M: int
    t: tuple[int, ...]

    @property
    def weight(self) -> tuple[int, ...]:
        return self.t[1:]

    @property
    def interior(self) -> bool:
        return all(v > 0 for v in self.t)


@dataclass(frozen=True)
class RMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])


def _check_M(M):
    if not isinstance(M, int) or isinstance(M, bool) or M < 1:
        raise ValueError(f"M must be a positive integer, got {M!r}")


def _solutions(weights, total, low):
    """Tuples ``(a_0, a_1..a_n)``, ``a_i >= low``, with ``a_0 + sum w_i a_i = total``."""
    n = len(weights)
    out = []
    rest = [0] * n

    def rec(i, remaining):
        if i == n:
            if remaining >= low:
                out.append((remaining, *rest))
            return
        w = weights[i]
        v = low
        while remaining - w * v >= low:
            rest[i] = v
            rec(i + 1, remaining - w * v)
            v += 1

    rec(0, total)
    out.sort(reverse=True)
    return out


def enumerate_F(data: AlgebraData, M: int, interior_only=False) -> list[GridPoint]:
    """All points of F_M (or its interior), lexicographically descending."""
    _check_M(M)
    return [GridPoint(M, s) for s in _solutions(data.marks, M, 1 if interior_only else 0)]


def enumerate_Lambda(data: AlgebraData, M: int, interior_only=False) -> list[WeightPoint]:
    """All dominant weights of Lambda_M (or its interior), lexicographically descending."""
    _check_M(M)
    return [WeightPoint(M, t) for t in _solutions(data.dual_marks, M, 1 if interior_only else 0)]


def count_solutions(weights, total) -> int:
    """Number of nonnegative ``(a_0, ..., a_n)`` with ``a_0 + sum w_i a_i = total``."""
    if total < 0:
        return 0
    ways = [1] * (total + 1)  # a_0 alone
    for w in weights:
        for v in range(w, total + 1):
            ways[v] += ways[v - w]
    return ways[total]


def count_F(data: AlgebraData, M: int) -> int:
    """|F_M| from the closed forms (classical series) or the stored R matrix."""
    _check_M(M)
    return _count_closed(data, M)


def _count_closed(data, M):
    if M < 0:
        return 0
    n = data.n
    series = data.lie_type.series
    b = math.comb
    k, odd = divmod(M, 2)
    if series == "A":
        return b(n + M, n)
    if series in "BC":
        return 2 * b(n + k, n) if odd else b(n + k, n) + b(n + k - 1, n)
    if series == "D":
        if odd:
            return 4 * b(n + k, n) + 4 * b(n + k - 1, n)
        return b(n + k, n) + 6 * b(n + k - 1, n) + (b(n + k - 2, n) if k >= 2 else 0)
    return count_from_R(stored_R(data), n, data.L, M)


def count_from_R(R: RMatrix, n: int, L: int, M: int) -> int:
    """Evaluate ``|F_{Lk+l}| = sum_i R[l][i] binom(n - i + k, n)``."""
    k, l = divmod(M, L)
    return sum(d * math.comb(n - i + k, n) for i, d in enumerate(R.rows[l]) if n - i + k >= n)


def count_F_interior(data: AlgebraData, M: int) -> int:
    _check_M(M)
    m = data.coxeter
    if M < m:
        return 0
    if M == m:
        return 1
    return count_F(data, M - m)


def count_Lambda(data: AlgebraData, M: int) -> int:
    """|Lambda_M| by direct counting over the dual marks."""
    _check_M(M)
    return count_solutions(data.dual_marks, M)


def count_Lambda_interior(data: AlgebraData, M: int) -> int:
    _check_M(M)
    return count_solutions(data.dual_marks, M - data.coxeter)


def stored_R(data: AlgebraData) -> RMatrix:
    """The tabulated R matrix for this algebra family."""
    lt = data.lie_type
    if lt.series in _rtables.CLASSICAL:
        return RMatrix(_rtables.CLASSICAL[lt.series])
    return RMatrix(_rtables.EXCEPTIONAL[lt.series, lt.rank])


def generate_R(data: AlgebraData) -> RMatrix:
    """Recompute R by counting bounded solutions of

        l_0 + m_1 l_1 + ... + m_n l_n = L i + l,
        0 <= l_0 < L,  0 <= l_j < L / m_j.

    The box is never enumerated: the count for every right-hand side comes
    from multiplying the truncated generating polynomials of the coordinates.
    """
    return _generate_R(data.lie_type)


@lru_cache(maxsize=None)
def _generate_R(lie_type):
    data = build(lie_type)
    L, N = data.L, data.N
    top = L * (N + 1)
    poly = [1] * min(L, top) + [0] * max(0, top - L)
    for m in data.marks:
        factor_terms = range(0, m * (L // m), m)
        new = [0] * top
        for deg, coef in enumerate(poly):
            if coef:
                for step in factor_terms:
                    if deg + step >= top:
                        break
                    new[deg + step] += coef
        poly = new
    return RMatrix(tuple(tuple(poly[L * i + l] for i in range(N + 1)) for l in range(L)))


def stratify_gcd(data: AlgebraData, M: int) -> dict[int, int]:
    """Counts |F_{M,K}| of points whose coordinates have gcd exactly K, for K | M."""
    _check_M(M)
    out = {K: 0 for K in divisors(M)}
    for p in enumerate_F(data, M):
        out[math.gcd(*p.s)] += 1
    return out


def count_primitive(data: AlgebraData, M: int) -> int:
    """|F_{M,1}| by Moebius inversion of ``|F_M| = sum_{K | M} |F_{K,1}|``."""
    _check_M(M)
    return sum(_mobius(M // K) * count_F(data, K) for K in divisors(M))


def nu(data: AlgebraData, M: int) -> int:
    """Number of conjugacy classes of elements whose order divides M.

    Needs the ratio between full order and Ad-order, which is known here
    only where it is trivial (G2, F4, E8) and for C_n via its closed form.
    """
    _check_M(M)
    lt = data.lie_type
    if M == 1:
        return 1
    if (lt.series, lt.rank) in {("G", 2), ("F", 4), ("E", 8)}:
        return sum(count_primitive(data, K) for K in divisors(M))
    if lt.series == "C":
        return math.comb(lt.rank + M // 2, lt.rank)
    raise NotImplementedError(
        f"nu({M}, {lt}) needs full-order data that is not available for this type"
    )


def divisors(M: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(M) + 1) if M % d == 0]
    return sorted(set(small + [M // d for d in small]))


def _mobius(k):
    result, p = 1, 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    return -result if k > 1 else result
