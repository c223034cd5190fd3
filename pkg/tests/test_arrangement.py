import pytest

from conftest import rational_arrangement

from oscount.arrangement import (
    build_arrangement,
    characteristic_polynomial,
    cone,
    deletion_restriction,
    essential_rank,
    intersection_lattice,
    poincare_polynomial,
    region_count,
)
from oscount.counting import g4_arrangement, q8d8_arrangement
from oscount.errors import ComputationCapError, InvalidInputError
from oscount.fields import cyclotomic_field, rational_field
from oscount.polynomial import IntegerPolynomial

QQ = rational_field()
T = IntegerPolynomial.t()
ONE = IntegerPolynomial.one()


def test_build_canonicalizes_and_dedups():
    a = rational_arrangement(2, [[1, 1], [2, 2]])
    assert len(a.hyperplanes) == 1
    assert a.hyperplanes[0].normal == (QQ.one(), QQ.one())
    assert a.central


def test_build_rejects_zero_normal_and_mixed_fields():
    with pytest.raises(InvalidInputError):
        rational_arrangement(2, [[0, 0]])
    q3 = cyclotomic_field(3)
    with pytest.raises(InvalidInputError):
        build_arrangement(QQ, 1, [((q3.one(),), q3.zero())])


def test_q8d8_arrangement_shape():
    a = q8d8_arrangement()
    assert len(a.hyperplanes) == 21
    assert a.ambient_dim == 5 and a.central


def test_g4_arrangement_shape():
    a = g4_arrangement()
    assert len(a.hyperplanes) == 3
    assert a.ambient_dim == 2 and a.central
    assert a.field.conductor == 3


def test_empty_arrangement_lattice():
    a = rational_arrangement(3, [])
    lat = intersection_lattice(a)
    assert lat.flats_per_level() == [1]
    assert [mu for _, mu in lat.all_flats()] == [1]


def test_boolean_lattice(boolean3):
    lat = intersection_lattice(boolean3)
    assert lat.flats_per_level() == [1, 3, 3, 1]
    for flat, mu in lat.all_flats():
        assert mu == (-1) ** flat.codim
    chi = characteristic_polynomial(lat)
    assert chi == (T - ONE) * (T - ONE) * (T - ONE)


def test_g4_lattice_and_polynomials():
    lat = intersection_lattice(g4_arrangement())
    assert lat.flats_per_level() == [1, 3, 1]
    assert [mu for _, mu in lat.all_flats()] == [1, -1, -1, -1, 2]
    assert characteristic_polynomial(lat) == IntegerPolynomial((2, -3, 1))
    assert poincare_polynomial(lat) == IntegerPolynomial((1, 3, 2))


def test_braid_characteristic_with_finite_field_oracle(braid3):
    # chi = t(t-1)(t-2); at q=7 the point count 7*6*5 = 210 is the oracle
    lat = intersection_lattice(braid3)
    chi = characteristic_polynomial(lat)
    assert chi == T * (T - ONE) * (T - ONE - ONE)
    assert chi(7) == 210


def test_q8d8_poincare_polynomial_matches_published_value():
    lat = intersection_lattice(q8d8_arrangement())
    pi = poincare_polynomial(lat)
    assert pi.coefficients == (1, 21, 170, 650, 1125, 625)
    assert pi(1) == 2592


def test_single_hyperplane_poincare():
    a = rational_arrangement(2, [[1, 0]])
    assert poincare_polynomial(intersection_lattice(a)) == ONE + T


def test_region_counts():
    assert region_count(rational_arrangement(2, [[1, 0]])) == (2, 0)
    four = rational_arrangement(2, [[0, 1], [1, 0], [1, 1], [1, -1]])
    assert region_count(four) == (8, 0)
    assert region_count(q8d8_arrangement())[0] == 2592


def test_region_count_refuses_nonreal():
    with pytest.raises(InvalidInputError, match="hyperplane"):
        region_count(g4_arrangement())


def test_region_count_affine():
    a = rational_arrangement(1, [[1], [1], [1]], offsets=[0, -1, 1])
    assert characteristic_polynomial(intersection_lattice(a)) == T - IntegerPolynomial((3,))
    assert region_count(a) == (4, 2)


def test_cone_of_empty():
    a = rational_arrangement(1, [])
    c = cone(a)
    assert c.ambient_dim == 2
    assert len(c.hyperplanes) == 1
    assert c.hyperplanes[0].normal == (QQ.one(), QQ.zero())


def test_cone_matches_catalan_and_poincare_identity():
    from oscount.rootdata import CatalanSpec, affine_catalan, catalan_arrangement, weyl_data

    spec = CatalanSpec(weyl_data("A", 1), 2)
    aff = affine_catalan(spec)
    coned = cone(aff)
    cat = catalan_arrangement(spec)
    assert coned.same_hyperplanes(cat)
    pi_aff = poincare_polynomial(intersection_lattice(aff))
    pi_cone = poincare_polynomial(intersection_lattice(coned))
    assert pi_cone == (ONE + T) * pi_aff
    assert pi_cone == IntegerPolynomial((1, 1)) * IntegerPolynomial((1, 3))


def test_deletion_restriction_boolean():
    a = rational_arrangement(2, [[1, 0], [0, 1]])
    deleted, restricted = deletion_restriction(a, 0)
    assert len(deleted.hyperplanes) == 1
    assert deleted.hyperplanes[0].normal == (QQ.zero(), QQ.one())
    assert restricted.ambient_dim == 1
    assert len(restricted.hyperplanes) == 1


def test_deletion_restriction_braid_merges_images(braid3):
    # restricting to x1 = x2 identifies the other two hyperplanes
    _, restricted = deletion_restriction(braid3, 0)
    assert len(restricted.hyperplanes) == 1


def test_deletion_restriction_identity_on_g4():
    a = g4_arrangement()
    chi = characteristic_polynomial(intersection_lattice(a))
    deleted, restricted = deletion_restriction(a, 0)
    chi_d = characteristic_polynomial(intersection_lattice(deleted))
    chi_r = characteristic_polynomial(intersection_lattice(restricted))
    assert chi_d == IntegerPolynomial((1, -2, 1))
    assert chi_r == IntegerPolynomial((-1, 1))
    assert chi == chi_d - chi_r == IntegerPolynomial((2, -3, 1))


def test_deletion_restriction_identity_on_catalog_representatives():
    # q8d8: one sign hyperplane and one coordinate hyperplane (the symmetry
    # orbits of the 21); wreath:A2:2 exhaustively; wreath:A3:2 one of each kind
    from oscount.counting import catalog

    cases = [
        (q8d8_arrangement(), (0, 16)),
        (catalog("wreath:A2:2").arrangement, None),
        (catalog("wreath:A3:2").arrangement, (0, 18)),
    ]
    for arrangement, picks in cases:
        chi = characteristic_polynomial(intersection_lattice(arrangement))
        indices = range(len(arrangement.hyperplanes)) if picks is None else picks
        for h in indices:
            deleted, restricted = deletion_restriction(arrangement, h)
            chi_d = characteristic_polynomial(intersection_lattice(deleted))
            chi_r = characteristic_polynomial(intersection_lattice(restricted))
            assert chi == chi_d - chi_r, f"h={h}"


def test_moebius_row_sums_vanish():
    for arrangement in (q8d8_arrangement(), g4_arrangement()):
        lat = intersection_lattice(arrangement)
        flats = [(f, mu) for f, mu in lat.all_flats()]
        for f, _ in flats:
            if f.codim == 0:
                continue
            total = sum(mu for g, mu in flats if g.contains <= f.contains)
            assert total == 0


def test_poincare_sign_pattern():
    lat = intersection_lattice(q8d8_arrangement())
    pi = poincare_polynomial(lat)
    whitney = lat.whitney_numbers()
    for k, w in enumerate(whitney):
        assert pi.coefficients[k] == (-1) ** k * w
        assert pi.coefficients[k] >= 0


def test_flat_cap_errors():
    with pytest.raises(ComputationCapError):
        intersection_lattice(q8d8_arrangement(), flat_cap=10)


def test_lattice_determinism():
    a = q8d8_arrangement()
    l1 = intersection_lattice(a)
    l2 = intersection_lattice(a)
    assert [[f.key for f in level] for level in l1.levels] == [
        [f.key for f in level] for level in l2.levels
    ]
    for level in l1.levels:
        assert [f.key for f in level] == sorted(f.key for f in level)


def test_essential_rank():
    assert essential_rank(q8d8_arrangement()) == 5
    assert essential_rank(rational_arrangement(3, [[1, 0, 0], [2, 0, 0]])) == 1
