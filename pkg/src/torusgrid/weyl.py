"""Weyl group actions in weight/coweight coordinates, orbits and stabilizers.

Weights are integer vectors ``t`` in the fundamental-weight basis; torus
points of ``(1/M) P^vee / Q^vee`` are integer numerators ``s`` in the
fundamental-coweight basis. Simple reflections act by

    (r_i t)_j = t_j - t_i C_ij        (weights)
    (r_i s)_j = s_j - s_i C_ji        (coweights)
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .algebra import AlgebraData, ExtendedDiagram, build
from .errors import OrbitCapExceeded, SingularWeight

DEFAULT_CAP = 10**7


class OrbitElement(NamedTuple):
    coords: tuple[int, ...]
    sign: int


@dataclass(frozen=True)
class StabilizerReport:
    order: int
    component_weyl_orders: tuple[int, ...]
    zero_nodes: tuple[int, ...]


def reflect_weight(data: AlgebraData, i: int, t) -> tuple[int, ...]:
    """Apply the simple reflection ``r_i`` (1 <= i <= n) to a weight."""
    if not 1 <= i <= data.n:
        raise ValueError(f"reflection index {i} outside 1..{data.n}")
    row = data.cartan[i - 1]
    ti = t[i - 1]
    return tuple(t[j] - ti * row[j] for j in range(data.n))


def reflect_coweight(data: AlgebraData, i: int, s) -> tuple:
    """Apply ``r_i`` to a point given in fundamental-coweight coordinates.

    Works for integer numerators and for real coordinates alike.
    """
    if not 1 <= i <= data.n:
        raise ValueError(f"reflection index {i} outside 1..{data.n}")
    si = s[i - 1]
    return tuple(s[j] - si * data.cartan[j][i - 1] for j in range(data.n))


def highest_root_coweight(data: AlgebraData) -> tuple:
    """The highest root (which is its own coroot) in fundamental-coweight coordinates."""
    n = data.n
    coef = [data.marks[i] * data.root_norms[i] / 2 for i in range(n)]
    vec = [sum(coef[i] * data.cartan[j][i] for i in range(n)) for j in range(n)]
    assert all(v.denominator == 1 for v in vec)
    return tuple(int(v) for v in vec)


def highest_dual_coroot_weight(data: AlgebraData) -> tuple:
    """``2 eta / <eta, eta>`` for the highest dual root eta, in weight coordinates."""
    n = data.n
    norms = data.root_norms
    # eta = sum m_i^vee alpha_i^vee, alpha_i^vee = (2 / |alpha_i|^2) alpha_i
    eta_alpha = [data.dual_marks[i] * 2 / norms[i] for i in range(n)]
    gram = [[data.cartan[i][j] * norms[j] / 2 for j in range(n)] for i in range(n)]
    eta_sq = sum(eta_alpha[i] * gram[i][j] * eta_alpha[j] for i in range(n) for j in range(n))
    vec = [2 * sum(eta_alpha[i] * data.cartan[i][j] for i in range(n)) / eta_sq for j in range(n)]
    assert all(v.denominator == 1 for v in vec)
    return tuple(int(v) for v in vec)


def affine_reflect_coweight(data: AlgebraData, y, M=1) -> tuple:
    """Affine reflection ``r_0`` (scaled by ``M``) in fundamental-coweight coordinates.

    With ``M = 1`` this is the mirror ``<a, xi> = 1`` of the fundamental
    region; integer numerators ``s`` of ``(1/M) P^vee`` use the scaled mirror.
    """
    xi = highest_root_coweight(data)
    shift = sum(m * v for m, v in zip(data.marks, y)) - M
    return tuple(v - shift * x for v, x in zip(y, xi))


def affine_reflect_weight(data: AlgebraData, t, M: int) -> tuple[int, ...]:
    """The dual affine mirror ``r^vee_{0,M}`` acting on a weight."""
    eta = highest_dual_coroot_weight(data)
    shift = sum(m * v for m, v in zip(data.dual_marks, t)) - M
    return tuple(v - shift * e for v, e in zip(t, eta))


def _check_cap(data, cap):
    if data.weyl_order > cap:
        raise OrbitCapExceeded(data.weyl_order, cap)


def orbit(data: AlgebraData, seed, basis="weight", cap=DEFAULT_CAP, signed=False) -> list[OrbitElement]:
    """All distinct images of ``seed`` under W, sorted by coordinates.

    Each element carries the parity of a reflection word reaching it. With
    ``signed=True`` the parity must be well defined, which holds exactly when
    the seed has trivial stabilizer; otherwise :class:`SingularWeight` is
    raised.
    """
    if basis not in ("weight", "coweight"):
        raise ValueError(f"basis must be 'weight' or 'coweight', not {basis!r}")
    coords, signs = _orbit_arrays(data.lie_type, tuple(int(v) for v in seed), basis, cap, signed)
    return [OrbitElement(tuple(int(v) for v in row), int(sg)) for row, sg in zip(coords, signs)]


def orbit_arrays(data: AlgebraData, seed, basis="weight", cap=DEFAULT_CAP, signed=False):
    """Array form of :func:`orbit`: ``(coords[k, n], signs[k])``, read-only."""
    return _orbit_arrays(data.lie_type, tuple(int(v) for v in seed), basis, cap, signed)


@lru_cache(maxsize=4096)
def _orbit_arrays(lie_type, seed, basis, cap, signed):
    data = build(lie_type)
    _check_cap(data, cap)
    n = data.n
    if len(seed) != n:
        raise ValueError(f"seed must have length {n}")
    cart = data.cartan if basis == "weight" else tuple(zip(*data.cartan))
    parity = {seed: 0}
    queue = deque([seed])
    while queue:
        v = queue.popleft()
        p = parity[v]
        for i in range(n):
            vi = v[i]
            if vi == 0:
                # r_i fixes v: an odd stabilizer element
                if signed:
                    raise SingularWeight(f"{seed} is fixed by a reflection; signs are undefined")
                continue
            row = cart[i]
            w = tuple(v[j] - vi * row[j] for j in range(n))
            q = parity.get(w)
            if q is None:
                parity[w] = 1 - p
                queue.append(w)
            elif signed and q == p:
                raise SingularWeight(f"{seed} is fixed by an odd Weyl element; signs are undefined")
    keys = sorted(parity)
    coords = np.array(keys, dtype=np.int64).reshape(len(keys), n)
    signs = np.array([1 - 2 * parity[k] for k in keys], dtype=np.int64)
    coords.flags.writeable = False
    signs.flags.writeable = False
    return coords, signs


def is_regular(data: AlgebraData, t) -> bool:
    """True when the weight ``t`` has trivial stabilizer in W (as a vector)."""
    t = tuple(int(v) for v in t)
    if all(v > 0 for v in t) or all(v < 0 for v in t):
        return True
    if any(v == 0 for v in t):
        return False
    try:
        orbit_arrays(data, t, signed=True, cap=max(DEFAULT_CAP, data.weyl_order))
    except SingularWeight:
        return False
    return True


def torus_class(data: AlgebraData, s, M: int) -> tuple[int, ...]:
    """Canonical key of ``(1/M) sum s_j omega_j^vee`` modulo ``Q^vee``."""
    cm = data.cartan_det * M
    P = data.pairing_num
    n = data.n
    return tuple(sum(P[i][j] * s[j] for j in range(n)) % cm for i in range(n))


def weight_class(data: AlgebraData, t, M: int) -> tuple[int, ...]:
    """Canonical key of the weight ``sum t_i omega_i`` modulo ``M Q``."""
    cm = data.cartan_det * M
    P = data.pairing_num
    n = data.n
    return tuple(sum(P[j][i] * t[j] for j in range(n)) % cm for i in range(n))


def classify_component(nodes, bonds) -> int:
    """Weyl group order of the finite simple type drawn by a connected diagram.

    ``bonds`` is an iterable of ``(i, j, multiplicity)`` among ``nodes``.
    Only the order matters, so B_k and C_k are not told apart.
    """
    nodes = tuple(sorted(set(nodes)))
    k = len(nodes)
    bonds = [(u, v, m) for u, v, m in bonds if u in nodes and v in nodes]
    if k == 0:
        raise ValueError("empty diagram")
    if k == 1:
        return 2
    degree = {v: 0 for v in nodes}
    for u, v, _ in bonds:
        degree[u] += 1
        degree[v] += 1
    mults = sorted(m for _, _, m in bonds)
    if len(bonds) != k - 1 or any(m not in (1, 2, 3) for m in mults):
        raise ValueError(f"not a finite-type Dynkin diagram: {nodes} {bonds}")
    if mults[-1] == 3:
        if k == 2:
            return 12
        raise ValueError(f"triple bond in a diagram with {k} nodes")
    if mults.count(2) > 1:
        raise ValueError(f"more than one double bond: {bonds}")
    branch = [v for v in nodes if degree[v] >= 3]
    if mults[-1] == 2:
        if branch:
            raise ValueError(f"branched diagram with a double bond: {bonds}")
        if k == 4:
            ends = [v for v in nodes if degree[v] == 1]
            (u, v, _), = [b for b in bonds if b[2] == 2]
            if ends and u not in ends and v not in ends:
                return 1152
        return 2**k * math.factorial(k)
    if not branch:
        return math.factorial(k + 1)
    if len(branch) > 1 or degree[branch[0]] != 3:
        raise ValueError(f"unrecognised branching: {bonds}")
    arms = sorted(_arm_lengths(branch[0], bonds))
    if arms[0] == 1 and arms[1] == 1:
        return 2 ** (k - 1) * math.factorial(k)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return {2: 51840, 3: 2903040, 4: 696729600}[arms[2]]
    raise ValueError(f"unrecognised branched diagram with arms {arms}")


def _arm_lengths(centre, bonds):
    adj = {}
    for u, v, _ in bonds:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    lengths = []
    for first in adj[centre]:
        prev, cur, length = centre, first, 1
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur, length = cur, nxt[0], length + 1
        lengths.append(length)
    return lengths


def _stabilizer(diagram: ExtendedDiagram, coords) -> StabilizerReport:
    zero = tuple(i for i, v in enumerate(coords) if v == 0)
    if len(zero) == len(coords):
        raise ValueError("all barycentric coordinates vanish")
    orders = tuple(classify_component(c, diagram.restrict(c)) for c in diagram.components(zero))
    return StabilizerReport(math.prod(orders), orders, zero)


def stabilizer_order_x(data: AlgebraData, p) -> StabilizerReport:
    """Order of the stabilizer in W of the torus point with coordinates ``p.s``."""
    return _stabilizer(data.ext_dd, _barycentric(data, p, "s"))


def stabilizer_order_lambda(data: AlgebraData, w) -> StabilizerReport:
    """Order of the stabilizer in W of the class of ``w`` in ``P / M Q``."""
    return _stabilizer(data.ext_dd_dual, _barycentric(data, w, "t"))


def epsilon(data: AlgebraData, p) -> int:
    """Size of the W-orbit of a grid point on the torus."""
    h = stabilizer_order_x(data, p).order
    q, r = divmod(data.weyl_order, h)
    assert r == 0
    return q


def _barycentric(data, point, attr):
    coords = tuple(getattr(point, attr, point))
    if len(coords) != data.n + 1:
        raise ValueError(f"expected {data.n + 1} barycentric coordinates, got {len(coords)}")
    if any(v < 0 for v in coords):
        raise ValueError(f"negative barycentric coordinate in {coords}")
    return coords
