from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import forward_l_classes
from enriques_cones.chamber import (
    EQUAL_POINT,
    ChamberPoint,
    chamber_membership,
    chamber_vertices,
    compare_on_chamber,
    enumerate_vertices_oracle,
    reduce,
    vertices,
)
from enriques_cones.lattice import LatticeVector, l, l_class, pairing, psi, reflect, s1, s2

WITNESS = ChamberPoint((Fraction(1, 3),) * 8 + (Fraction(1, 4), Fraction(1, 12)))


def test_membership_examples():
    assert chamber_membership(WITNESS.b, "open")
    assert chamber_membership(EQUAL_POINT.b, "open")
    v9 = vertices()[8].b
    assert not chamber_membership(v9, "open") and chamber_membership(v9, "closed")
    assert not chamber_membership((Fraction(1, 2),) * 6 + (0,) * 4, "closed")
    assert not chamber_membership((Fraction(3, 10),) * 9 + (Fraction(4, 10),), "closed")


def test_cone_membership_returns_scale():
    ok, a = chamber_membership((2,) + tuple(2 * x for x in WITNESS.b), "cone")
    assert ok and a == 2
    ok, _ = chamber_membership((1,) + (Fraction(1, 2),) * 6 + (0,) * 4, "cone")
    assert not ok


def test_membership_rejects_bad_region():
    with pytest.raises(ValueError):
        chamber_membership(WITNESS.b, "ball")


def test_listed_vertices_lie_in_closed_chamber():
    assert len(vertices()) == 9
    for v in vertices():
        assert v.in_closed and sum(v.b) == 3


def test_vertex_oracle_finds_listed_vertices_and_the_equal_point():
    found = {p.b for p in enumerate_vertices_oracle()}
    listed = {p.b for p in vertices()}
    assert listed <= found
    assert found - listed == {EQUAL_POINT.b}
    assert found == {p.b for p in chamber_vertices()}


def test_oracle_output_is_sorted_descending():
    out = [p.b for p in enumerate_vertices_oracle()]
    assert out == sorted(out, reverse=True)


def test_witness_point_reduces_to_itself():
    red = reduce(WITNESS.class_vector())
    assert red.point == WITNESS and red.trace.word == ()


def test_reduction_of_a_moved_witness():
    v = WITNESS.class_vector() * 12
    v = reflect(v, l(0) - l(1) - l(2) - l(9))
    v = reflect(v, l(1) - l(5))
    red = reduce(v)
    assert red.point == WITNESS
    assert red.trace.apply(v) == red.vector
    assert red.trace.invert(red.vector) == v


def test_sign_flip():
    v = -(WITNESS.class_vector() * 6)
    red = reduce(v)
    assert red.trace.sign_flip and red.point == WITNESS
    assert red.trace.invert(red.vector) == v


def test_e_basis_input():
    red = reduce(s1() + s2())
    assert red.input == psi(s1() + s2())
    assert red.point.in_closed


def test_isotropic_class_reduces_to_s1_without_normalizing():
    F = LatticeVector("L", [6, -3, -2, -2, -2, -2, -2, -1, -1, -1, -2])
    assert F.square == 0
    assert reduce(F, normalize=False).vector == psi(s1())


def test_reduce_rejects_zero_and_negative_square():
    with pytest.raises(ValueError):
        reduce(LatticeVector.zero("L"))
    with pytest.raises(ValueError):
        reduce(l(1) - l(2))


@given(forward_l_classes())
def test_reduction_properties(v):
    raw = reduce(v, normalize=False)
    ok, _ = chamber_membership(raw.cone_coords, "cone")
    assert ok
    assert raw.vector.square == v.square
    assert raw.trace.apply(v) == raw.vector
    assert raw.trace.invert(raw.vector) == v
    assert reduce(raw.vector, normalize=False).trace.word == ()

    norm = reduce(v)
    assert norm.vector.coeffs[0] == 1
    assert norm.trace.apply(v) == norm.vector
    assert norm.point.in_closed
    assert reduce(norm.vector).trace.word == ()


@given(forward_l_classes(), st.integers(1, 10), st.integers(1, 10))
def test_reduction_is_weyl_invariant(v, i, j):
    if i != j:
        moved = reflect(v, l(i) - l(j))
        assert reduce(moved).point == reduce(v).point
    moved = reflect(v, l(0) - l(i) - l((i % 10) + 1) - l(((i + 1) % 10) + 1))
    assert reduce(moved).point == reduce(v).point


def test_compare_on_chamber():
    assert compare_on_chamber(s2(), s1()) == "F_dominates"
    assert compare_on_chamber(s1(), s2()) == "G_dominates"
    assert compare_on_chamber(s1(), s1()) == "equal"
    a = psi(s1()) - l(1) + l(10)
    assert compare_on_chamber(a, psi(s1())) in ("F_dominates", "incomparable", "G_dominates")


def test_compare_dominance_holds_on_samples():
    F, G = psi(s2()), psi(s1())
    for p in list(chamber_vertices()) + [WITNESS]:
        assert pairing(p.class_vector(), F) >= pairing(p.class_vector(), G)


def test_class_vector_square_and_pairing_with_k():
    v = WITNESS.class_vector()
    assert v == l_class(1, WITNESS.b)
    assert v.square == 1 - sum(x * x for x in WITNESS.b)
