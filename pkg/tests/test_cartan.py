import pytest
from hypothesis import given, strategies as st

from crystal_fold.cartan import (
    build_cartan,
    cartan_from_matrix,
    determinant,
    fixed_cartan_direct,
    identify_type,
    is_invariant,
    omega_weight,
    parse_cycles,
    parse_type,
    project_weight,
    validate_automorphism,
)
from crystal_fold.errors import (
    AutomorphismError,
    ConfigurationError,
    InvarianceError,
    OrthogonalityError,
)

FINITE = ["A1", "A2", "A3", "A5", "B2", "B3", "C2", "C3", "D4", "D5", "G2", "F4", "E6", "E7",
          "E8"]


def test_rank_two_matrices():
    assert build_cartan("B2").matrix == ((2, -1), (-2, 2))
    assert build_cartan("C2").matrix == ((2, -2), (-1, 2))
    assert build_cartan("G2").matrix == ((2, -1), (-3, 2))


def test_exceptional_edges():
    f4 = build_cartan("F4")
    assert f4.entry(2, 3) == -1 and f4.entry(3, 2) == -2
    e6 = build_cartan("E6")
    assert e6.entry(1, 3) == -1 and e6.entry(2, 4) == -1 and e6.entry(1, 2) == 0


def test_d_branch():
    d5 = build_cartan("D5")
    assert d5.entry(3, 5) == -1 and d5.entry(4, 5) == 0 and d5.entry(3, 4) == -1


@pytest.mark.parametrize("tag", FINITE)
def test_finite_type_minors_positive(tag):
    c = build_cartan(tag)
    for k in range(1, c.rank + 1):
        assert determinant([row[:k] for row in c.matrix[:k]]) > 0


@pytest.mark.parametrize("tag", FINITE)
def test_identify_round_trip(tag):
    assert identify_type(build_cartan(tag).matrix) == tag


def test_identify_relabeled_and_transposed():
    assert identify_type(((2, -2), (-1, 2))) == "C2"
    assert identify_type(((2, 0, -1), (0, 2, -1), (-1, -1, 2))) == "A3"


def test_bad_types():
    for tag in ("X3", "A0", "E9", "B1", "G3"):
        with pytest.raises(ConfigurationError):
            build_cartan(tag)
    assert parse_type("D4") == ("D", 4)


def test_non_cartan_matrix_rejected():
    with pytest.raises(ConfigurationError):
        cartan_from_matrix(((2, -1), (0, 2)))
    with pytest.raises(ConfigurationError):
        cartan_from_matrix(((2, -3), (-3, 2)))


def test_symmetrizer_makes_symmetric():
    for tag in FINITE:
        c = build_cartan(tag)
        s = c.symmetrizer()
        for i in range(c.rank):
            for j in range(c.rank):
                assert s[i] * c.matrix[i][j] == s[j] * c.matrix[j][i]


def test_parse_cycles_forms():
    labels = (1, 2, 3)
    expected = {1: 3, 2: 2, 3: 1}
    assert parse_cycles("(1 3)", labels) == expected
    assert parse_cycles([[1, 3]], labels) == expected
    assert parse_cycles({1: 3, 3: 1}, labels) == expected
    assert parse_cycles(None, labels) == {1: 1, 2: 2, 3: 3}


def test_a3_fold():
    fold = validate_automorphism(build_cartan("A3"), "(1 3)")
    assert fold.orbits == ((1, 3), (2,))
    assert fold.reps == (1, 2) and fold.orbit_sizes == (2, 1)
    assert fold.orbit_cartan.matrix == ((2, -1), (-2, 2))
    assert fold.orbit_cartan.type_tag == "B2"
    assert fold.fixed_cartan.type_tag == "C2"
    assert fold.fixed_cartan.matrix == fixed_cartan_direct(fold)


def test_d4_triality():
    fold = validate_automorphism(build_cartan("D4"), "(1 3 4)")
    assert fold.order == 3
    assert fold.orbit_cartan.type_tag == "G2" and fold.fixed_cartan.type_tag == "G2"


def test_e6_fold_gives_f4():
    fold = validate_automorphism(build_cartan("E6"), "(1 6)(3 5)")
    assert fold.orbit_cartan.type_tag == "F4" and fold.fixed_cartan.type_tag == "F4"


def test_orthogonality_violation():
    with pytest.raises(OrthogonalityError):
        validate_automorphism(build_cartan("A2"), "(1 2)")


def test_not_an_automorphism():
    with pytest.raises(AutomorphismError):
        validate_automorphism(build_cartan("A3"), "(1 2)")
    with pytest.raises(AutomorphismError):
        validate_automorphism(build_cartan("A3"), "(1 4)")


def test_identity_fold():
    fold = validate_automorphism(build_cartan("B3"), None)
    assert fold.is_identity and fold.fixed_cartan.matrix == build_cartan("B3").matrix


def test_weight_projection():
    fold = validate_automorphism(build_cartan("A3"), "(1 3)")
    assert project_weight(fold, (2, 1, 2), "hat") == (4, 1)
    assert project_weight(fold, (2, 1, 2), "breve") == (2, 1)
    with pytest.raises(InvarianceError):
        project_weight(fold, (1, 1, 2))


@given(st.lists(st.integers(0, 5), min_size=6, max_size=6))
def test_omega_weight_fixes_invariant_weights(lam):
    fold = validate_automorphism(build_cartan("E6"), "(1 6)(3 5)")
    lam = tuple(lam)
    assert omega_weight(fold, omega_weight(fold, lam)) == lam
    sym = tuple(x + y for x, y in zip(lam, omega_weight(fold, lam)))
    assert is_invariant(fold, sym)
