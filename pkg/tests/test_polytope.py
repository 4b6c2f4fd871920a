from fractions import Fraction

import pytest

from crystal_fold.crystal import CrystalEngine
from crystal_fold.errors import ConfigurationError, ShapeError
from crystal_fold.polytope import (
    HRepSystem,
    LatticePointSet,
    RationalPolytope,
    golden_cone,
    golden_polytope,
    hrep_lattice_points,
    hull_contains,
    infinity_points,
    linear_image,
    polytopes_equal,
    string_box_points,
    string_polytope_points,
    verify_saturation,
)

TRI = RationalPolytope.of(2, [(0, 0), (1, 0), (0, 1)])


def test_hull_examples():
    assert hull_contains((Fraction(1, 2), Fraction(1, 2)), TRI)
    assert not hull_contains((2, 0), TRI)
    assert hull_contains((0, 1), TRI)


def test_polytope_equality_examples():
    bigger = RationalPolytope.of(2, [(0, 0), (1, 0), (0, 1), (Fraction(1, 2), Fraction(1, 4))])
    assert polytopes_equal(TRI, bigger)
    seg = RationalPolytope.of(1, [(0,), (1,)])
    assert not polytopes_equal(seg, RationalPolytope.of(1, [(0,), (2,)]))
    assert polytopes_equal(TRI, RationalPolytope.of(2, [(0, 1), (0, 0), (1, 0)]))


def test_linear_image_examples():
    omega = [[1, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 1]]
    pts = LatticePointSet.of(5, [(1, 2, 3, 4, 5)])
    assert linear_image(omega, pts).points == {(3, 3, 9)}
    eye = [[1, 0], [0, 1]]
    assert linear_image(eye, TRI) == TRI or polytopes_equal(linear_image(eye, TRI), TRI)
    with pytest.raises(ShapeError):
        linear_image(omega, TRI)


def test_hrep_examples():
    square = HRepSystem.of(2, [((1, 0), 1), ((0, 1), 1)]).with_nonnegativity()
    assert len(hrep_lattice_points(square, 1)) == 4
    simplex = HRepSystem.of(2, [((1, 1), 1)]).with_nonnegativity()
    assert len(hrep_lattice_points(simplex, 1)) == 3
    empty = HRepSystem.of(1, [((1,), 0), ((-1,), -1)])
    assert len(hrep_lattice_points(empty, 3)) == 0


def test_string_points_examples():
    assert string_polytope_points(CrystalEngine("A1"), "string", (1,), (1,)).points == {(0,), (1,)}
    assert len(string_polytope_points(CrystalEngine("A2"), "string", (1, 1), (1, 2, 1))) == 8


@pytest.mark.parametrize("lam", [(1, 1, 1), (2, 1, 2)])
def test_golden_a3_polytope(lam):
    pts = string_polytope_points(CrystalEngine("A3"), "string", lam, (1, 3, 2, 1, 3))
    assert pts.points == hrep_lattice_points(golden_polytope("A3", lam[0], lam[1]), 6).points


@pytest.mark.parametrize("lam", [(1, 1), (2, 1)])
def test_golden_c2_polytope(lam):
    pts = string_polytope_points(CrystalEngine("C2"), "string", (2 * lam[0], lam[1]), (1, 2, 1))
    assert pts.points == hrep_lattice_points(golden_polytope("C2", lam[0], lam[1]), 8).points


@pytest.mark.parametrize("tag,word", [("B2", (1, 2, 1)), ("C2", (1, 2, 1)), ("D3", (1, 2, 3, 1))])
def test_golden_cones(tag, word):
    eng = CrystalEngine(tag)
    truth = hrep_lattice_points(golden_cone(tag), 3).points
    assert string_box_points(eng, word, 3).points == truth
    assert infinity_points(eng, "string", word, 3).points == truth


def test_monotone_exhaustion():
    eng = CrystalEngine("B2")
    for kind in ("string", "nz"):
        p1 = string_polytope_points(eng, kind, (1, 1), (1, 2, 1), 1).polytope()
        p2 = string_polytope_points(eng, kind, (1, 1), (1, 2, 1), 2).polytope()
        assert all(p2.contains(v) for v in p1.vrep)


def test_saturation_small():
    assert verify_saturation(CrystalEngine("A2"), "nz", (1, 1), (1, 2, 1), samples=30).passed


def test_serialization():
    pts = LatticePointSet.of(2, [(1, 0), (0, 0)], 2)
    assert pts.to_json() == {"dim": 2, "k": 2, "points": [[0, 0], [1, 0]]}
    assert pts.to_csv().splitlines()[1:] == ["0,0", "1,0"]


def test_bad_kind():
    with pytest.raises(ConfigurationError):
        string_polytope_points(CrystalEngine("A2"), "other", (1, 1), (1, 2, 1))
    with pytest.raises(ConfigurationError):
        golden_polytope("G2", 1, 1)
