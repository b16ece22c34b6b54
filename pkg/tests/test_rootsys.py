from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pbwdeg.errors import InvalidNode, InvalidRank, NotDominant
from pbwdeg.rootsys import LieType, all_types, build_root_system, cartan_matrix, is_dominant

from conftest import rs_of

ALL = all_types(8)


@pytest.mark.parametrize("lt", ALL, ids=str)
def test_positive_root_count(lt):
    rs = build_root_system(lt)
    assert len(rs.positive_roots) == lt.expected_positive_roots


@pytest.mark.parametrize("lt", ALL, ids=str)
def test_highest_root_is_dominant_and_unique_maximal(lt):
    rs = build_root_system(lt)
    theta = rs.highest_root
    assert is_dominant(rs.root_to_weight(theta))
    top = max(sum(a) for a in rs.positive_roots)
    assert [a for a in rs.positive_roots if sum(a) == top] == [theta]


@pytest.mark.parametrize("name,bad", [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 2)])
def test_invalid_rank(name, bad):
    with pytest.raises(InvalidRank):
        LieType(name, bad)


def test_c2_is_accepted():
    rs = build_root_system(LieType("C", 2))
    assert len(rs.positive_roots) == 4


def test_parse():
    assert LieType.parse("e_6") == LieType("E", 6)
    with pytest.raises(InvalidRank):
        LieType.parse("X")


def test_g2_convention_alpha1_short():
    rs = rs_of("G2")
    assert cartan_matrix(rs.lie_type) == ((2, -1), (-3, 2))
    assert rs.highest_root == (3, 2)
    assert rs.root_to_weight(rs.highest_root) == (0, 1)


def test_cartan_b_and_c_are_transposes():
    for n in range(2, 7):
        b = cartan_matrix(LieType("B", n))
        c = cartan_matrix(LieType("C", n))
        assert b == tuple(zip(*c))


@pytest.mark.parametrize("name,node,dim", [
    ("A4", 2, 10), ("B3", 3, 8), ("B4", 3, 84), ("C3", 2, 14), ("D4", 1, 8), ("D5", 5, 16),
    ("G2", 1, 7), ("G2", 2, 14), ("F4", 4, 26), ("F4", 1, 52), ("F4", 2, 1274),
    ("E6", 1, 27), ("E6", 2, 78), ("E6", 4, 2925), ("E7", 7, 56), ("E7", 4, 365750),
    ("E8", 8, 248), ("E8", 1, 3875),
])
def test_weyl_dim_fundamental(name, node, dim):
    rs = rs_of(name)
    assert rs.weyl_dim(rs.fundamental_weight(node)) == dim


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(NotDominant):
        rs_of("A2").weyl_dim((-1, 0))


def test_node_out_of_range():
    with pytest.raises(InvalidNode):
        rs_of("A2").fundamental_weight(3)


def test_w0_examples():
    assert rs_of("E6").w0_image((1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, -1)
    assert rs_of("A3").w0_image((1, 0, 0)) == (0, 0, -1)
    assert rs_of("D5").w0_image((0, 0, 0, 1, 0)) == (0, 0, 0, 0, -1)
    assert rs_of("D4").w0_image((0, 0, 1, 0)) == (0, 0, -1, 0)
    assert rs_of("E7").w0_image((0, 1, 0, 0, 0, 0, 0)) == (0, -1, 0, 0, 0, 0, 0)


def test_comarks():
    rs = rs_of("E8")
    assert tuple(rs.pairing(rs.fundamental_weight(i), rs.highest_root) for i in range(1, 9)) == \
        (2, 3, 4, 6, 5, 4, 3, 2)
    rs = rs_of("F4")
    assert tuple(rs.pairing(rs.fundamental_weight(i), rs.highest_root) for i in range(1, 5)) == (2, 3, 2, 1)


def test_sub_root_system_identification():
    lt, mapping = rs_of("F4").sub_root_system((2, 3, 4))
    assert lt == LieType("C", 3) and mapping == (4, 3, 2)
    lt, _ = rs_of("E8").sub_root_system(range(1, 8))
    assert lt == LieType("E", 7)
    lt, _ = rs_of("B4").sub_root_system((3, 4))
    assert lt == LieType("B", 2)
    lt, _ = rs_of("D6").sub_root_system((4, 5, 6))
    assert lt == LieType("A", 3)


def test_weight_root_conversions():
    rs = rs_of("B3")
    assert rs.weight_to_root((0, 0, 1)) == (Fraction(1, 2), Fraction(1), Fraction(3, 2))
    for alpha in rs.positive_roots:
        assert rs.weight_to_root_int(rs.root_to_weight(alpha)) == alpha


small_types = st.sampled_from(["A1", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"])


@settings(max_examples=60, deadline=None)
@given(small_types, st.data())
def test_w0_is_an_involution_onto_antidominant(name, data):
    rs = rs_of(name)
    lam = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank)))
    once = rs.w0_image(lam)
    assert rs.w0_image(once) == lam
    if is_dominant(lam):
        assert is_dominant(tuple(-c for c in once))
    assert rs.form(lam, lam) == rs.form(once, once)


@settings(max_examples=60, deadline=None)
@given(small_types, st.data())
def test_dominant_conjugate_is_in_orbit(name, data):
    rs = rs_of(name)
    lam = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank)))
    dom = rs.dominant_conjugate(lam)
    assert is_dominant(dom)
    assert rs.form(dom, dom) == rs.form(lam, lam)
    i = data.draw(st.integers(1, rs.rank))
    assert rs.dominant_conjugate(rs.reflect(lam, i)) == dom
