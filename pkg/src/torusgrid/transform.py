"""Discrete C- and S-transforms on F_M and its interior, and their interpolants."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra import AlgebraData, build
from .errors import GridMismatch
from .grids import GridPoint, WeightPoint, enumerate_F, enumerate_Lambda
from .orbitfn import eval_C_real, eval_S_real, evaluation_matrix
from .weyl import DEFAULT_CAP, epsilon, stabilizer_order_lambda

GRID_KINDS = ("C", "S")


class EmptyGridWarning(UserWarning):
    """The interior grid is empty because M is below the Coxeter number."""

    code = "empty-grid"


@dataclass(frozen=True)
class SampleSet:
    """Function values on F_M (kind ``"C"``) or on its interior (kind ``"S"``)."""

    M: int
    kind: str
    values: dict[GridPoint, complex] = field(hash=False)

    @classmethod
    def from_function(cls, data: AlgebraData, M: int, kind: str, func) -> SampleSet:
        """Sample ``func(y)`` where ``y`` is the array of coweight coordinates ``s_i / M``."""
        points = enumerate_F(data, M, interior_only=kind == "S")
        return cls(M, kind, {p: complex(func(np.array(p.y))) for p in points})

    @classmethod
    def from_array(cls, data: AlgebraData, M: int, kind: str, values) -> SampleSet:
        points = enumerate_F(data, M, interior_only=kind == "S")
        values = np.asarray(values, dtype=complex)
        if values.shape != (len(points),):
            raise GridMismatch(f"expected {len(points)} values, got shape {values.shape}")
        return cls(M, kind, dict(zip(points, values.tolist())))

    def points(self, data):
        return enumerate_F(data, self.M, interior_only=self.kind == "S")

    def as_array(self, data: AlgebraData) -> np.ndarray:
        """Values in grid enumeration order, after checking the key set."""
        if self.kind not in GRID_KINDS:
            raise ValueError(f"kind must be 'C' or 'S', not {self.kind!r}")
        points = self.points(data)
        if len(points) != len(self.values) or any(p not in self.values for p in points):
            missing = [p.s for p in points if p not in self.values]
            extra = [p.s for p in self.values if p not in set(points)]
            raise GridMismatch(
                f"samples do not cover the {self.kind}-grid of M={self.M} exactly "
                f"(missing {missing[:3]}, extra {extra[:3]})"
            )
        return np.array([self.values[p] for p in points], dtype=complex)


@dataclass(frozen=True)
class CoefficientSet:
    M: int
    kind: str
    coeffs: dict[WeightPoint, complex] = field(hash=False)

    def weights(self, data):
        return enumerate_Lambda(data, self.M, interior_only=self.kind == "S")

    def as_array(self, data: AlgebraData) -> np.ndarray:
        weights = self.weights(data)
        if len(weights) != len(self.coeffs) or any(w not in self.coeffs for w in weights):
            raise GridMismatch(f"coefficients do not match the {self.kind}-labels of M={self.M}")
        return np.array([self.coeffs[w] for w in weights], dtype=complex)


@dataclass(frozen=True)
class OrthogonalityReport:
    M: int
    kind: str
    size: int
    max_offdiag: float
    max_diag_relerr: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_offdiag <= self.tolerance and self.max_diag_relerr <= self.tolerance


@lru_cache(maxsize=64)
def _decomposition(lie_type, M, kind, cap):
    """Cached ``(E, point_weights, norms)`` for one grid.

    ``E`` holds exact-phase values of the orthogonal family, ``point_weights``
    the inner-product weights of the grid points and ``norms`` the squared
    norms of the family members.
    """
    data = build(lie_type)
    weights, points, E = evaluation_matrix(data, M, kind, cap=cap)
    volume = data.cartan_det * data.weyl_order * M**data.n
    if kind == "C":
        pw = np.array([epsilon(data, p) for p in points], dtype=float)
        norms = np.array([volume * stabilizer_order_lambda(data, w).order for w in weights], dtype=float)
    else:
        pw = np.full(len(points), float(data.weyl_order))
        norms = np.full(len(weights), float(volume))
    for arr in (E, pw, norms):
        arr.flags.writeable = False
    return E, pw, norms


def decomposition_matrix(data: AlgebraData, M: int, kind: str, cap=DEFAULT_CAP) -> np.ndarray:
    """The matrix D with ``coeffs = D @ samples`` (rows: labels, columns: points)."""
    E, pw, norms = _decomposition(data.lie_type, M, kind, cap)
    return (E.conj() * pw) / norms[:, None]


def _check_pair(f, g, kind):
    for h in (f, g):
        if h.kind != kind:
            raise GridMismatch(f"expected a {kind}-grid sample set, got kind {h.kind!r}")
    if f.M != g.M:
        raise GridMismatch(f"sample sets have different M ({f.M} and {g.M})")


def inner_C(data: AlgebraData, f: SampleSet, g: SampleSet) -> complex:
    """``sum_x eps(x) f(x) conj(g(x))`` over F_M."""
    _check_pair(f, g, "C")
    eps = np.array([epsilon(data, p) for p in f.points(data)], dtype=float)
    return complex(np.sum(eps * f.as_array(data) * np.conj(g.as_array(data))))


def inner_S(data: AlgebraData, f: SampleSet, g: SampleSet) -> complex:
    """``|W| sum_x f(x) conj(g(x))`` over the interior of F_M."""
    _check_pair(f, g, "S")
    return complex(data.weyl_order * np.sum(f.as_array(data) * np.conj(g.as_array(data))))


def _transform(data, f, kind, cap):
    if f.kind != kind:
        raise GridMismatch(f"{kind}-transform needs a {kind}-grid sample set, got {f.kind!r}")
    values = f.as_array(data)
    weights = enumerate_Lambda(data, f.M, interior_only=kind == "S")
    coeffs = decomposition_matrix(data, f.M, kind, cap) @ values if weights else []
    return CoefficientSet(f.M, kind, dict(zip(weights, np.asarray(coeffs).tolist())))


def ctransform(data: AlgebraData, f: SampleSet, cap=DEFAULT_CAP) -> CoefficientSet:
    """Expansion coefficients of ``f`` in the C-functions labelled by Lambda_M."""
    return _transform(data, f, "C", cap)


def stransform(data: AlgebraData, f: SampleSet, cap=DEFAULT_CAP) -> CoefficientSet:
    """Expansion coefficients of ``f`` in the S-functions labelled by the interior of Lambda_M.

    Below the Coxeter number both grids are empty; an empty set is returned
    together with an :class:`EmptyGridWarning`.
    """
    if f.M < data.coxeter:
        warnings.warn(
            f"M={f.M} is below the Coxeter number {data.coxeter}; the S-grid is empty",
            EmptyGridWarning,
            stacklevel=2,
        )
    return _transform(data, f, "S", cap)


def _interpolate(data, coeffs, y, kind, evaluate, cap):
    if coeffs.kind != kind:
        raise GridMismatch(f"expected {kind}-coefficients, got kind {coeffs.kind!r}")
    y = np.asarray(y, dtype=float)
    total = 0j if y.ndim == 1 else np.zeros(len(y), dtype=complex)
    for lam, c in coeffs.coeffs.items():
        if c != 0:
            total = total + c * evaluate(data, lam, y, cap=cap)
    return total


def interpolate_C(data: AlgebraData, coeffs: CoefficientSet, y, cap=DEFAULT_CAP):
    """``sum_lambda c_lambda Phi_lambda(y)`` at one point ``(n,)`` or many ``(k, n)``."""
    return _interpolate(data, coeffs, y, "C", eval_C_real, cap)


def interpolate_S(data: AlgebraData, coeffs: CoefficientSet, y, cap=DEFAULT_CAP):
    """``sum_lambda c_lambda phi_lambda(y)`` at one point ``(n,)`` or many ``(k, n)``."""
    return _interpolate(data, coeffs, y, "S", eval_S_real, cap)


def gram_matrix(data: AlgebraData, M: int, kind: str, cap=DEFAULT_CAP) -> np.ndarray:
    """Pairwise discrete inner products of the orthogonal family on its grid."""
    E, pw, _ = _decomposition(data.lie_type, M, kind, cap)
    return (E * pw) @ E.conj().T


def verify_orthogonality(data: AlgebraData, M: int, kind: str, tolerance=1e-8, cap=DEFAULT_CAP):
    """Compare the Gram matrix against its predicted diagonal form.

    Off-diagonal magnitudes are reported relative to ``c |W| M^n``; the
    diagonal as the largest relative error against the predicted norms.
    """
    _, _, norms = _decomposition(data.lie_type, M, kind, cap)
    G = gram_matrix(data, M, kind, cap)
    size = len(G)
    if size == 0:
        return OrthogonalityReport(M, kind, 0, 0.0, 0.0, tolerance)
    scale = data.cartan_det * data.weyl_order * M**data.n
    off = G - np.diag(np.diag(G))
    diag_err = np.abs(np.diag(G) - norms) / norms
    return OrthogonalityReport(
        M, kind, size, float(np.abs(off).max() / scale), float(diag_err.max()), tolerance
    )
