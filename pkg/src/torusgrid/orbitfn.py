"""C- and S-functions: symmetric and antisymmetric Weyl-orbit exponential sums.

Two evaluation paths are provided. On the grid, ``<mu, x>`` is an integer
multiple of ``1/(c M)`` and the exponential is looked up in a table of
roots of unity, so phases carry no drift. At arbitrary real points the sum
is evaluated in double precision.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .algebra import AlgebraData
from .errors import GridMismatch
from .grids import GridPoint, WeightPoint, enumerate_F, enumerate_Lambda
from .weyl import DEFAULT_CAP, is_regular, orbit_arrays


@lru_cache(maxsize=256)
def roots_of_unity(order: int) -> np.ndarray:
    """``exp(2 pi i k / order)`` for ``k = 0..order-1``; read-only."""
    k = np.arange(order)
    table = np.exp(2j * np.pi * k / order)
    # snap the points that are exactly representable
    for q in (0, order / 4, order / 2, 3 * order / 4):
        if q == int(q) and int(q) < order:
            table[int(q)] = complex(round(table[int(q)].real), round(table[int(q)].imag))
    table.flags.writeable = False
    return table


def _weight(data, lam):
    if isinstance(lam, WeightPoint):
        if len(lam.t) != data.n + 1:
            raise ValueError(f"weight point has {len(lam.t)} coordinates, expected {data.n + 1}")
        return lam.weight
    t = tuple(int(v) for v in lam)
    if len(t) != data.n:
        raise ValueError(f"weight must have {data.n} coordinates")
    return t


def _check_pair(data, lam, x):
    if not isinstance(x, GridPoint):
        raise TypeError("grid evaluation needs a GridPoint")
    if len(x.s) != data.n + 1:
        raise ValueError(f"grid point has {len(x.s)} coordinates, expected {data.n + 1}")
    if isinstance(lam, WeightPoint) and lam.M != x.M:
        raise GridMismatch(f"weight is from Lambda_{lam.M} but point is from F_{x.M}")


def _grid_sum(data, coords, signs, x):
    cm = data.cartan_det * x.M
    s = np.asarray(x.coweight, dtype=np.int64)
    exps = (coords @ (data.pairing_array @ s)) % cm
    return roots_of_unity(cm)[exps] @ signs


def eval_C_grid(data: AlgebraData, lam, x: GridPoint, cap=DEFAULT_CAP) -> complex:
    """``Phi_lambda(x)`` with exact phases.

    The sum over W is folded onto the orbit of lambda, each orbit point
    weighted by the order of the stabilizer of lambda (as a vector).
    """
    _check_pair(data, lam, x)
    coords, _ = orbit_arrays(data, _weight(data, lam), cap=cap)
    mult = data.weyl_order // len(coords)
    return complex(mult * _grid_sum(data, coords, np.ones(len(coords)), x))


def eval_S_grid(data: AlgebraData, lam, x: GridPoint, cap=DEFAULT_CAP) -> complex:
    """``phi_lambda(x)`` with exact phases.

    Labels on the boundary of Lambda_M give identically zero functions on the
    grid; they are answered with an exact 0 without touching any orbit.
    """
    _check_pair(data, lam, x)
    if isinstance(lam, WeightPoint) and not lam.interior:
        return 0j
    t = _weight(data, lam)
    if not is_regular(data, t):
        return 0j
    coords, signs = orbit_arrays(data, t, cap=cap, signed=True)
    return complex(_grid_sum(data, coords, signs, x))


def _real_sum(data, coords, signs, y):
    y = np.asarray(y, dtype=float)
    phase = coords @ (data.cartan_inverse @ y.T)
    return signs @ np.exp(2j * np.pi * phase)


def eval_C_real(data: AlgebraData, lam, y, cap=DEFAULT_CAP):
    """``Phi_lambda`` at real coweight coordinates ``y`` (shape ``(n,)`` or ``(k, n)``)."""
    coords, _ = orbit_arrays(data, _weight(data, lam), cap=cap)
    mult = data.weyl_order // len(coords)
    out = mult * _real_sum(data, coords, np.ones(len(coords)), y)
    return complex(out) if np.ndim(out) == 0 else out


def eval_S_real(data: AlgebraData, lam, y, cap=DEFAULT_CAP):
    """``phi_lambda`` at real coweight coordinates; zero for singular lambda."""
    t = _weight(data, lam)
    y = np.asarray(y, dtype=float)
    if not is_regular(data, t):
        return 0j if y.ndim == 1 else np.zeros(len(y), dtype=complex)
    coords, signs = orbit_arrays(data, t, cap=cap, signed=True)
    out = _real_sum(data, coords, signs, y)
    return complex(out) if np.ndim(out) == 0 else out


def evaluation_matrix(data: AlgebraData, M: int, kind: str, cap=DEFAULT_CAP):
    """Exact-phase values of the orthogonal family on its grid.

    Returns ``(weights, points, E)`` with ``E[a, b]`` the value of the a-th
    function at the b-th point: C-functions on F_M labelled by Lambda_M, or
    S-functions on the interior grid labelled by the interior of Lambda_M.
    """
    if kind not in ("C", "S"):
        raise ValueError(f"kind must be 'C' or 'S', not {kind!r}")
    interior = kind == "S"
    weights = enumerate_Lambda(data, M, interior_only=interior)
    points = enumerate_F(data, M, interior_only=interior)
    E = np.zeros((len(weights), len(points)), dtype=complex)
    if not weights:
        return weights, points, E
    cm = data.cartan_det * M
    table = roots_of_unity(cm)
    S = np.array([p.coweight for p in points], dtype=np.int64).reshape(len(points), data.n)
    PS = data.pairing_array @ S.T
    for a, lam in enumerate(weights):
        coords, signs = orbit_arrays(data, lam.weight, cap=cap, signed=interior)
        exps = (coords @ PS) % cm
        if interior:
            E[a] = signs @ table[exps]
        else:
            E[a] = (data.weyl_order // len(coords)) * table[exps].sum(axis=0)
    return weights, points, E
