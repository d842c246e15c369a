"""Structural data of the compact simple Lie algebras.

Everything is kept in integer (or exact rational) coordinates: simple roots
are never embedded in an orthonormal basis. Node numbering of the extended
diagrams puts the extension node at 0 and the simple roots at 1..n, in the
order for which the mark sequences below are correct:

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n        (n short)
    C_n   1 - 2 - ... - (n-1) <= n        (1..n-1 short)
    D_n   1 - ... - (n-2) - (n-1), (n-2) - n
    E_6   1 - 2 - 3 - 4 - 5,  3 - 6
    E_7   1 - 2 - 3 - 4 - 5 - 6,  3 - 7
    E_8   1 - 2 - 3 - 4 - 5 - 6 - 7,  5 - 8
    F_4   1 - 2 => 3 - 4                  (3, 4 short)
    G_2   1 =>> 2                         (2 short)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from .errors import RankError

SERIES = "ABCDEFG"

_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_MARKS = {
    ("E", 6): (1, 2, 3, 2, 1, 2),
    ("E", 7): (2, 3, 4, 3, 2, 1, 2),
    ("E", 8): (2, 3, 4, 5, 6, 4, 2, 3),
    ("F", 4): (2, 3, 4, 2),
    ("G", 2): (2, 3),
}
_DUAL_MARKS = {
    ("E", 6): (1, 2, 3, 2, 1, 2),
    ("E", 7): (2, 3, 4, 3, 2, 1, 2),
    ("E", 8): (2, 3, 4, 5, 6, 4, 2, 3),
    ("F", 4): (2, 4, 3, 2),
    ("G", 2): (3, 2),
}


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise RankError(f"unknown series {self.series!r}; expected one of {', '.join(SERIES)}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise RankError(f"rank must be an integer, got {self.rank!r}")
        if self.series in _FIXED_RANKS:
            allowed = _FIXED_RANKS[self.series]
            if self.rank not in allowed:
                ranks = ", ".join(map(str, allowed))
                raise RankError(f"{self.series}_{self.rank}: rank must be one of {ranks}")
        elif self.rank < _MIN_RANK[self.series]:
            raise RankError(
                f"{self.series}_{self.rank}: rank must be >= {_MIN_RANK[self.series]}"
            )

    @classmethod
    def parse(cls, value) -> LieType:
        """Accept ``LieType``, ``("C", 2)`` or strings like ``"C2"``, ``"E_8"``."""
        if isinstance(value, LieType):
            return value
        if isinstance(value, str):
            m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", value)
            if not m:
                raise RankError(f"cannot parse algebra {value!r}")
            return cls(m.group(1).upper(), int(m.group(2)))
        series, rank = value
        return cls(str(series).upper(), int(rank))

    def __str__(self):
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class ExtendedDiagram:
    """Extended Coxeter-Dynkin diagram on nodes 0..n.

    ``bonds`` holds ``(i, j, multiplicity)`` with ``i < j``; ``long`` marks
    the nodes whose (co)root has maximal length.
    """

    size: int
    bonds: tuple[tuple[int, int, int], ...]
    long: tuple[bool, ...]

    def multiplicity(self, i, j):
        a, b = min(i, j), max(i, j)
        for u, v, k in self.bonds:
            if (u, v) == (a, b):
                return k
        return 0

    def neighbours(self, i):
        out = []
        for u, v, _ in self.bonds:
            if u == i:
                out.append(v)
            elif v == i:
                out.append(u)
        return sorted(out)

    def restrict(self, nodes):
        """Bonds of the induced subgraph on ``nodes``."""
        keep = set(nodes)
        return tuple(b for b in self.bonds if b[0] in keep and b[1] in keep)

    def components(self, nodes):
        """Connected components of the induced subgraph, each a sorted tuple."""
        remaining = set(nodes)
        bonds = self.restrict(remaining)
        adj = {i: set() for i in remaining}
        for u, v, _ in bonds:
            adj[u].add(v)
            adj[v].add(u)
        comps = []
        while remaining:
            start = min(remaining)
            stack, seen = [start], {start}
            while stack:
                for nb in adj[stack.pop()]:
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
            remaining -= seen
            comps.append(tuple(sorted(seen)))
        return comps


@dataclass(frozen=True)
class AlgebraData:
    lie_type: LieType
    n: int
    cartan: tuple[tuple[int, ...], ...]
    cartan_det: int
    marks: tuple[int, ...]
    dual_marks: tuple[int, ...]
    coxeter: int
    weyl_order: int
    root_norms: tuple[Fraction, ...]
    pairing_num: tuple[tuple[int, ...], ...]
    ext_dd: ExtendedDiagram
    ext_dd_dual: ExtendedDiagram
    L: int
    N: int

    @property
    def c(self):
        return self.cartan_det

    @cached_property
    def cartan_array(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64)

    @cached_property
    def pairing_array(self) -> np.ndarray:
        return np.array(self.pairing_num, dtype=np.int64)

    @cached_property
    def cartan_inverse(self) -> np.ndarray:
        """Float ``C^{-1}``: entry (i, j) is the pairing of omega_i with coweight j."""
        return self.pairing_array / self.cartan_det

    def __str__(self):
        return str(self.lie_type)


def _chain(n):
    return [(i, i + 1) for i in range(1, n)]


def _layout(series, n):
    """Edges (1-based) and squared root lengths of the simple roots."""
    two, one = Fraction(2), Fraction(1)
    if series == "A":
        return _chain(n), [two] * n
    if series == "B":
        return _chain(n), [two] * (n - 1) + [one]
    if series == "C":
        return _chain(n), [one] * (n - 1) + [two]
    if series == "D":
        return _chain(n - 1) + [(n - 2, n)], [two] * n
    if series == "E":
        branch = {6: (3, 6), 7: (3, 7), 8: (5, 8)}[n]
        return _chain(n - 1) + [branch], [two] * n
    if series == "F":
        return _chain(4), [two, two, one, one]
    if series == "G":
        return [(1, 2)], [two, Fraction(2, 3)]
    raise AssertionError(series)


def _marks(series, n):
    if series == "A":
        return (1,) * n, (1,) * n
    if series == "B":
        return (1,) + (2,) * (n - 1), (2,) * (n - 1) + (1,)
    if series == "C":
        return (2,) * (n - 1) + (1,), (1,) + (2,) * (n - 1)
    if series == "D":
        m = (1,) + (2,) * (n - 3) + (1, 1)
        return m, m
    return _MARKS[series, n], _DUAL_MARKS[series, n]


def _weyl_order(series, n):
    f = math.factorial
    return {
        "A": lambda: f(n + 1),
        "B": lambda: 2**n * f(n),
        "C": lambda: 2**n * f(n),
        "D": lambda: 2 ** (n - 1) * f(n),
        "E": lambda: {6: 2**7 * 3**4 * 5, 7: 2**10 * 3**4 * 5 * 7, 8: 2**14 * 3**5 * 5**2 * 7}[n],
        "F": lambda: 2**7 * 3**2,
        "G": lambda: 12,
    }[series]()


def _extended(gram, coeffs):
    """Gram matrix of (-sum coeffs_i v_i, v_1, ..., v_n) and its diagram."""
    n = len(coeffs)
    g0 = [-sum(coeffs[i] * gram[i][j] for i in range(n)) for j in range(n)]
    g00 = -sum(coeffs[j] * g0[j] for j in range(n))
    full = [[g00] + g0] + [[g0[i]] + list(gram[i]) for i in range(n)]
    norms = [full[i][i] for i in range(n + 1)]
    bonds = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            mult = 4 * full[i][j] ** 2 / (norms[i] * norms[j])
            if mult:
                assert mult.denominator == 1, (i, j, mult)
                bonds.append((i, j, int(mult)))
    top = max(norms)
    return full, ExtendedDiagram(n + 1, tuple(bonds), tuple(x == top for x in norms))


def _exact_det_and_adjugate(cartan):
    a = np.array(cartan, dtype=float)
    det = int(round(np.linalg.det(a)))
    adj = np.rint(det * np.linalg.inv(a)).astype(np.int64)
    if not np.array_equal(adj @ np.array(cartan, dtype=np.int64), det * np.eye(len(cartan), dtype=np.int64)):
        raise ArithmeticError("integer inversion of the Cartan matrix failed")
    return det, tuple(tuple(int(x) for x in row) for row in adj)


@lru_cache(maxsize=None)
def _build(lie_type: LieType) -> AlgebraData:
    series, n = lie_type.series, lie_type.rank
    edges, norms = _layout(series, n)
    linked = {(i - 1, j - 1) for i, j in edges} | {(j - 1, i - 1) for i, j in edges}
    # Linked simple roots pair to minus half the larger squared length.
    gram = [
        [
            norms[i] if i == j else (-max(norms[i], norms[j]) / 2 if (i, j) in linked else Fraction(0))
            for j in range(n)
        ]
        for i in range(n)
    ]
    cartan = tuple(tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(n)) for i in range(n))
    marks, dual_marks = _marks(series, n)

    _, ext = _extended(gram, marks)
    dual_gram = [[4 * gram[i][j] / (norms[i] * norms[j]) for j in range(n)] for i in range(n)]
    _, ext_dual = _extended(dual_gram, dual_marks)

    det, adj = _exact_det_and_adjugate(cartan)
    coxeter = 1 + sum(marks)
    L = math.lcm(*marks)
    N = ((n + 1) * L - coxeter) // L
    return AlgebraData(
        lie_type=lie_type,
        n=n,
        cartan=cartan,
        cartan_det=det,
        marks=marks,
        dual_marks=dual_marks,
        coxeter=coxeter,
        weyl_order=_weyl_order(series, n),
        root_norms=tuple(norms),
        pairing_num=adj,
        ext_dd=ext,
        ext_dd_dual=ext_dual,
        L=L,
        N=N,
    )


def build(lie_type) -> AlgebraData:
    """Return the (cached, immutable) structural record of a simple algebra.

    ``lie_type`` may be a :class:`LieType`, a ``(series, rank)`` pair or a
    string such as ``"E8"``.
    """
    return _build(LieType.parse(lie_type))


def pairing(data: AlgebraData, t, s) -> Fraction:
    """Exact value of <sum t_i omega_i, sum s_j omega_j^vee>."""
    n = data.n
    if len(t) != n or len(s) != n:
        raise ValueError(f"expected vectors of length {n}")
    num = sum(t[i] * data.pairing_num[i][j] * s[j] for i in range(n) for j in range(n))
    return Fraction(num, data.cartan_det)


def volume_of_F(data: AlgebraData) -> float:
    """Euclidean volume of the fundamental simplex F."""
    n = data.n
    norm_factor = math.prod(Fraction(2) / a for a in data.root_norms)
    return (
        1.0
        / math.factorial(n)
        / math.prod(data.marks)
        * math.sqrt(norm_factor)
        / math.sqrt(data.cartan_det)
    )


def highest_root_gram(data: AlgebraData):
    """Exact Gram matrices of the extended root and coroot systems (nodes 0..n)."""
    n = data.n
    norms = data.root_norms
    gram = [[Fraction(data.cartan[i][j]) * norms[j] / 2 for j in range(n)] for i in range(n)]
    dual_gram = [[4 * gram[i][j] / (norms[i] * norms[j]) for j in range(n)] for i in range(n)]
    return _extended(gram, data.marks)[0], _extended(dual_gram, data.dual_marks)[0]


def all_types(max_rank=8):
    """Every supported algebra with rank at most ``max_rank``, in table order."""
    out = []
    for series in SERIES:
        if series in _FIXED_RANKS:
            out.extend(LieType(series, r) for r in _FIXED_RANKS[series] if r <= max_rank)
        else:
            out.extend(LieType(series, r) for r in range(_MIN_RANK[series], max_rank + 1))
    return out
