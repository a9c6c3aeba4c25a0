from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirac_kernels.rootsys import (
    ConfigurationError,
    Weight,
    build_root_system,
    coroot_pairing,
    dominant_representative,
    inner_product,
    is_dominant,
    orbit,
    orbit_and_stabilizer,
    orbit_size,
    parse_root_system,
    reflect,
    weyl_group,
    weyl_group_order,
)

CODES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "D2", "D3", "D4", "G2", "F4"]
SMALL = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"]


@pytest.mark.parametrize("code", CODES)
def test_root_system_axioms(code):
    rs = parse_root_system(code)
    roots = set(rs.roots)
    assert len(rs.positive_roots) * 2 == len(roots)
    assert len(rs.simple_roots) == rs.rank
    for a in rs.roots:
        assert -a in roots
        for b in rs.roots:
            assert reflect(b, a) in roots
            assert coroot_pairing(b, a).denominator == 1
    for a in rs.positive_roots:
        coeffs = rs.simple_coordinates(a)
        assert all(c >= 0 and c.denominator == 1 for c in coeffs)
    assert rs.rho == sum(rs.positive_roots, Weight.zero(rs.ambient_dim)) * Fraction(1, 2)
    for a in rs.simple_roots:
        assert coroot_pairing(rs.rho, a) == 1


def test_known_rho():
    assert build_root_system("B", 3).rho == Weight((Fraction(5, 2), Fraction(3, 2), Fraction(1, 2)))
    assert parse_root_system("F4").rho == Weight((Fraction(11, 2), Fraction(5, 2), Fraction(3, 2), Fraction(1, 2)))
    assert parse_root_system("A2").rho == Weight((1, 0, -1))


@pytest.mark.parametrize("code,order", [("A1", 2), ("A3", 24), ("B3", 48), ("C3", 48), ("D4", 192), ("G2", 12), ("F4", 1152)])
def test_weyl_group_order(code, order):
    assert weyl_group_order(parse_root_system(code)) == order


@pytest.mark.parametrize("code", ["A2", "A3", "B2", "B3", "C3", "G2"])
def test_enumerated_group_matches_closed_form(code):
    rs = parse_root_system(code)
    assert len(set(weyl_group(rs))) == weyl_group_order(rs)


def test_unknown_codes_rejected():
    for bad in ["Z3", "A0", "B1", "E9", ""]:
        with pytest.raises(ConfigurationError):
            parse_root_system(bad)


@st.composite
def weights(draw, codes=SMALL):
    rs = parse_root_system(draw(st.sampled_from(codes)))
    coeffs = [draw(st.integers(-3, 3)) for _ in range(rs.rank)]
    return rs, rs.from_fundamental(coeffs)


@given(weights())
def test_dominant_representative_is_dominant_and_conjugate(pair):
    rs, w = pair
    dom, g = dominant_representative(w, rs)
    assert is_dominant(dom, rs)
    assert g.apply(w) == dom
    assert dom in orbit(w, rs)


@given(weights())
def test_orbit_stabilizer(pair):
    rs, w = pair
    n_orbit, n_stab = orbit_and_stabilizer(w, rs)
    assert n_orbit * n_stab == weyl_group_order(rs)
    assert n_orbit == orbit_size(w, rs) == len(orbit(w, rs))


@given(weights())
def test_weyl_action_is_isometric(pair):
    rs, w = pair
    for g in weyl_group(rs)[:12]:
        assert inner_product(g.apply(w), g.apply(rs.rho)) == inner_product(w, rs.rho)


@given(weights(["A2", "B2", "G2", "A3"]))
def test_length_equals_inversions(pair):
    rs, _ = pair
    for g in weyl_group(rs):
        assert g.length() == len(g.inversion_set())
        assert (g * g.inverse()).apply(rs.rho) == rs.rho


def test_fundamental_roundtrip():
    rs = parse_root_system("B3")
    for coeffs in ([1, 0, 0], [0, 0, 1], [2, -1, 3]):
        assert rs.to_fundamental(rs.from_fundamental(coeffs)) == coeffs


def test_orbit_stabilizer_example():
    rs = parse_root_system("B3")
    assert orbit_and_stabilizer(Weight.parse("1/2,1/2,1/2"), rs) == (8, 6)
