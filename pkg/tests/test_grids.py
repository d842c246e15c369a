import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import box_R, box_solutions, c2_full_order_multiplier
from torusgrid import build
from torusgrid.algebra import all_types
from torusgrid.grids import (
    GridPoint,
    count_F,
    count_F_interior,
    count_from_R,
    count_Lambda,
    count_Lambda_interior,
    count_primitive,
    count_solutions,
    divisors,
    enumerate_F,
    enumerate_Lambda,
    generate_R,
    nu,
    stored_R,
    stratify_gcd,
)

FAMILIES = ["A1", "B3", "C2", "D4", "G2", "F4", "E6", "E7", "E8"]


def test_enumerate_examples():
    c2 = build("C2")
    assert [p.s for p in enumerate_F(c2, 1)] == [(1, 0, 0), (0, 0, 1)]
    assert [p.s for p in enumerate_F(c2, 4, interior_only=True)] == [(1, 1, 1)]
    assert len(enumerate_F(build("G2"), 6)) == 7
    assert len(enumerate_Lambda(c2, 4)) == 9
    assert len(enumerate_Lambda(c2, 4, interior_only=True)) == 1


def test_grid_point_fields():
    p = GridPoint(4, (1, 1, 1))
    assert p.coweight == (1, 1)
    assert p.y == (0.25, 0.25)
    assert p.interior
    assert not GridPoint(4, (0, 2, 0)).interior


def test_enumeration_order_descending():
    pts = [p.s for p in enumerate_F(build("B3"), 7)]
    assert pts == sorted(pts, reverse=True)
    assert len(set(pts)) == len(pts)


@pytest.mark.parametrize("M", [0, -3, 2.5, True])
def test_bad_M_rejected(M):
    with pytest.raises(ValueError):
        enumerate_F(build("A2"), M)
    with pytest.raises(ValueError):
        count_F(build("A2"), M)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "C2", "C3", "C4", "B3", "B4", "D4", "G2", "F4", "E6"])
def test_enumeration_matches_box(name):
    data = build(name)
    for M in range(1, 13):
        pts = {p.s for p in enumerate_F(data, M)}
        assert pts == set(box_solutions(data.marks, M))
        wts = {w.t for w in enumerate_Lambda(data, M)}
        assert wts == set(box_solutions(data.dual_marks, M))
        inner = {p.s for p in enumerate_F(data, M, interior_only=True)}
        assert inner == set(box_solutions(data.marks, M, low=1))


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "C2", "C3", "C4", "B3", "B4", "D4", "G2", "F4", "E6"])
def test_counts_match_enumeration(name):
    data = build(name)
    m = data.coxeter
    for M in range(1, 13):
        n_F = len(enumerate_F(data, M))
        assert count_F(data, M) == n_F == count_Lambda(data, M)
        n_int = len(enumerate_F(data, M, interior_only=True))
        assert count_F_interior(data, M) == n_int == count_Lambda_interior(data, M)
        if M > m:
            assert n_int == count_F(data, M - m)


def test_count_examples():
    assert count_F(build("C2"), 4) == math.comb(4, 2) + math.comb(3, 2) == 9
    assert count_F(build("E8"), 30) == 20956
    assert count_F(build("E8"), 61) == 1520922
    assert count_F(build("D4"), 2) == 11
    assert count_F_interior(build("E8"), 30) == 1
    assert count_F_interior(build("C2"), 3) == 0
    assert count_F_interior(build("C2"), 8) == 9


@pytest.mark.parametrize("n", range(1, 7))
def test_type_A_counts_are_binomials(n):
    data = build(("A", n))
    for M in range(1, 8):
        assert len(enumerate_F(data, M)) == len(enumerate_Lambda(data, M)) == math.comb(n + M, n)


def test_E8_polynomial_values():
    e8 = build("E8")
    expected = {
        1: 1, 61: 1520922, 121: 165441760, 181: 3103220120,
        30: 20956, 90: 20671771, 150: 780429571, 210: 9375443806,
    }
    for M, value in expected.items():
        assert count_F(e8, M) == value
        assert count_solutions(e8.marks, M) == value


@pytest.mark.parametrize("lie_type", all_types(8), ids=str)
def test_closed_forms_match_direct_count(lie_type):
    data = build(lie_type)
    for M in range(1, 25):
        assert count_F(data, M) == count_solutions(data.marks, M)


def test_stored_R_examples():
    g2 = stored_R(build("G2"))
    assert g2.rows == ((1, 4, 1), (1, 5, 0), (2, 4, 0), (3, 3, 0), (4, 2, 0), (5, 1, 0))
    assert stored_R(build("A5")).rows == ((1,),)
    e8 = stored_R(build("E8"))
    assert e8.shape == (60, 9)
    assert e8.rows[0][0] == 1
    assert e8.rows[30][0] == 20956


@pytest.mark.parametrize("name", FAMILIES)
def test_generated_R_matches_table(name):
    data = build(name)
    gen = generate_R(data)
    assert gen == stored_R(data)
    assert gen.shape == (data.L, data.N + 1)


@pytest.mark.parametrize("name", [f for f in FAMILIES if f != "E8"] + ["B5", "C5", "D6"])
def test_generated_R_matches_box_walk(name):
    data = build(name)
    assert generate_R(data).rows == box_R(data.marks)


@pytest.mark.parametrize("name", FAMILIES)
def test_R_evaluation_matches_direct_count(name):
    data = build(name)
    R = generate_R(data)
    for M in list(range(1, 40)) + [data.L * 3 + 7]:
        assert count_from_R(R, data.n, data.L, M) == count_solutions(data.marks, M)


@settings(max_examples=50, deadline=None)
@given(M=st.integers(1, 400), name=st.sampled_from(FAMILIES))
def test_R_counts_random(M, name):
    data = build(name)
    assert count_F(data, M) == count_solutions(data.marks, M)


def test_stratify_examples():
    c2 = build("C2")
    assert stratify_gcd(c2, 6) == {1: 8, 2: 4, 3: 2, 6: 2}
    assert stratify_gcd(c2, 2) == {1: 2, 2: 2}
    for name in ("A3", "G2", "F4"):
        data = build(name)
        assert stratify_gcd(data, 1) == {1: count_F(data, 1)}


@pytest.mark.parametrize("name", ["A2", "C2", "B3", "G2", "F4"])
def test_gcd_identities(name):
    data = build(name)
    for M in range(1, 16):
        strata = stratify_gcd(data, M)
        assert sum(strata.values()) == count_F(data, M)
        for K in divisors(M):
            assert strata[K] == count_primitive(data, M // K)


def test_nu_examples():
    assert nu(build("C2"), 6) == 10
    assert nu(build("G2"), 6) == 7
    for name in ("A4", "B3", "C2", "D5", "E6", "G2"):
        assert nu(build(name), 1) == 1
    with pytest.raises(NotImplementedError):
        nu(build("A3"), 4)


@pytest.mark.parametrize("name", ["G2", "F4", "E8"])
def test_nu_equals_grid_size(name):
    data = build(name)
    for M in range(1, 40):
        assert nu(data, M) == count_F(data, M)


def test_nu_C2_against_full_orders():
    # classes of order dividing M: primitive points of F_K with K * j | M
    c2 = build("C2")
    for M in range(1, 25):
        total = 0
        for K in divisors(M):
            for p in enumerate_F(c2, K):
                if math.gcd(*p.s) == 1 and M % (K * c2_full_order_multiplier(p.s)) == 0:
                    total += 1
        assert nu(c2, M) == total == math.comb(2 + M // 2, 2)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]
