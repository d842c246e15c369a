import math
from fractions import Fraction

import numpy as np
import pytest

from torusgrid.algebra import LieType, all_types, build, highest_root_gram, pairing, volume_of_F
from torusgrid.errors import RankError

from oracles import explicit_A1_pairing, explicit_C2_pairing

TYPES = all_types(8)


@pytest.mark.parametrize("lt", TYPES, ids=str)
def test_cartan_shape(lt):
    d = build(lt)
    C = np.array(d.cartan)
    assert (np.diag(C) == 2).all()
    assert set(C.flatten()) <= {2, 0, -1, -2, -3}
    # symmetrizable: C_ij |a_j|^2 = C_ji |a_i|^2
    for i in range(d.n):
        for j in range(d.n):
            assert d.cartan[i][j] * d.root_norms[j] == d.cartan[j][i] * d.root_norms[i]


@pytest.mark.parametrize("lt", TYPES, ids=str)
def test_pairing_matrix_is_scaled_inverse(lt):
    d = build(lt)
    P = np.array(d.pairing_num)
    assert (P @ np.array(d.cartan) == d.cartan_det * np.eye(d.n, dtype=int)).all()
    # <omega_i, omega_j^vee> scaled by |a_j|^2 / 2 is symmetric
    S = [[Fraction(P[i][j]) * d.root_norms[j] / 2 for j in range(d.n)] for i in range(d.n)]
    assert all(S[i][j] == S[j][i] for i in range(d.n) for j in range(d.n))


@pytest.mark.parametrize("lt", TYPES, ids=str)
def test_marks_are_highest_root(lt):
    d = build(lt)
    gram, dual_gram = highest_root_gram(d)
    assert gram[0][0] == 2  # highest root is long
    assert dual_gram[0][0] == max(dual_gram[i][i] for i in range(d.n + 1))
    # <xi, alpha_j^vee> >= 0: node 0 attaches exactly where this is nonzero
    C = np.array(d.cartan)
    attach = np.array(d.marks) @ C
    assert (attach >= 0).all()
    assert {j + 1 for j in np.flatnonzero(attach)} == set(d.ext_dd.neighbours(0))
    dual_attach = np.array(d.dual_marks) @ C.T
    assert (dual_attach >= 0).all()
    assert {j + 1 for j in np.flatnonzero(dual_attach)} == set(d.ext_dd_dual.neighbours(0))


@pytest.mark.parametrize("lt", TYPES, ids=str)
def test_marks_dual_marks_and_coxeter(lt):
    d = build(lt)
    assert sorted(d.marks) == sorted(d.dual_marks)
    assert d.coxeter == 1 + sum(d.marks) == 1 + sum(d.dual_marks)
    assert d.L == math.lcm(*d.marks)


@pytest.mark.parametrize("lt", TYPES, ids=str)
def test_non_extended_diagram_connected(lt):
    d = build(lt)
    assert d.ext_dd.components(range(1, d.n + 1)) == [tuple(range(1, d.n + 1))]
    assert d.ext_dd.components(range(d.n + 1)) == [tuple(range(d.n + 1))]


def test_build_examples():
    c2 = build("C2")
    assert c2.marks == (2, 1) and c2.dual_marks == (1, 2)
    assert (c2.cartan_det, c2.coxeter, c2.weyl_order) == (2, 4, 8)
    a1 = build(("A", 1))
    assert a1.cartan == ((2,),) and a1.cartan_det == 2 and a1.marks == (1,)
    assert a1.coxeter == 2 and a1.weyl_order == 2
    assert a1.ext_dd.bonds == ((0, 1, 4),)
    e8 = build(LieType("E", 8))
    assert (e8.cartan_det, e8.coxeter, e8.L, e8.N) == (1, 30, 60, 8)
    assert e8.weyl_order == 2**14 * 3**5 * 5**2 * 7


def test_dual_diagram_special_cases():
    # B_n and C_n swap their extended diagrams
    for n in (3, 4, 5):
        b, c = build(("B", n)), build(("C", n))
        assert b.ext_dd_dual.bonds == c.ext_dd.bonds
        assert c.ext_dd_dual.bonds == b.ext_dd.bonds
    for name in ("A3", "D5", "E6", "E7", "E8"):
        d = build(name)
        assert d.ext_dd_dual == d.ext_dd
    assert build("C2").ext_dd_dual.bonds == ((0, 2, 2), (1, 2, 2))
    assert build("G2").ext_dd_dual.bonds == ((0, 2, 1), (1, 2, 3))
    assert build("F4").ext_dd_dual.bonds == ((0, 4, 1), (1, 2, 1), (2, 3, 2), (3, 4, 1))



@pytest.mark.parametrize("bad", [("B", 2), ("A", 0), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 3)])
def test_rank_out_of_range(bad):
    with pytest.raises(RankError, match="rank|series"):
        build(bad)


def test_parse_forms():
    assert LieType.parse("e_8") == LieType("E", 8)
    assert str(LieType.parse(" C 2 ")) == "C2"
    with pytest.raises(RankError):
        LieType.parse("X")


def test_pairing_examples():
    assert pairing(build("C2"), (0, 0), (1, 0)) == 0
    assert pairing(build("A1"), (1,), (1,)) == Fraction(1, 2) == explicit_A1_pairing(1, 1)
    # C2 with alpha_1 short: C^{-1} = [[1, 1/2], [1, 1]]
    c2 = build("C2")
    for t in ((1, 0), (0, 1), (3, -2)):
        for s in ((1, 0), (0, 1), (2, 5)):
            assert pairing(c2, t, s) == explicit_C2_pairing(t, s)
    assert pairing(c2, (1, 0), (0, 1)) == Fraction(1, 2)
    assert pairing(c2, (0, 1), (1, 0)) == 1
    with pytest.raises(ValueError):
        pairing(build("C2"), (1,), (0, 1))


@pytest.mark.parametrize(
    "name, expected",
    [
        ("G2", math.sqrt(3) / 12),
        ("A1", 1 / math.sqrt(2)),
        ("F4", 1 / (2**6 * 3**2)),
    ],
)
def test_volume_examples(name, expected):
    assert volume_of_F(build(name)) == pytest.approx(expected, rel=1e-12)


def test_build_is_deterministic():
    assert build("F4") is build(("F", 4))
    assert build("F4") == build(LieType("F", 4))
