from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirac_kernels.rootsys import Weight, orbit, orbit_size, parse_root_system, weyl_group
from dirac_kernels.spinweights import (
    BudgetExceededError,
    SubalgebraDatum,
    SubalgebraError,
    dominant_spin_weights,
    generating_function_value,
    realizing_subsets,
    spin_weight_conjugate,
    spin_weights,
    spin_weights_bruteforce,
)

H = Fraction(1, 2)


def _datums():
    out = []
    for code in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]:
        out.append(SubalgebraDatum.torus(parse_root_system(code)))
    a3 = parse_root_system("A3")
    out.append(SubalgebraDatum.generated_by(a3, [Weight((1, -1, 0, 0))]))
    out.append(SubalgebraDatum.generated_by(a3, [Weight((1, -1, 0, 0)), Weight((0, 1, -1, 0))]))
    a2 = parse_root_system("A2")
    out.append(SubalgebraDatum.generated_by(a2, [Weight((1, -1, 0))]))
    b3 = parse_root_system("B3")
    out.append(SubalgebraDatum.generated_by(b3, [Weight((0, 1, -1)), Weight((0, 0, 1))]))
    return out


DATUMS = _datums()
IDS = [f"{d.rs.code}-h{len(d.delta_h_plus)}" for d in DATUMS]


@pytest.mark.parametrize("datum", DATUMS, ids=IDS)
def test_dynamic_program_matches_bruteforce(datum):
    sw = spin_weights(datum)
    assert sw.entries == spin_weights_bruteforce(datum)
    assert sw.total == 2 ** len(datum.q_positive)


@pytest.mark.parametrize("datum", DATUMS, ids=IDS)
def test_generating_function(datum):
    for point in [(2, 3, 5, 7), (1, -1, 2, 3), (3, 1, 1, 2)]:
        lhs, rhs = generating_function_value(datum, point[: datum.rs.ambient_dim])
        assert lhs == rhs


@pytest.mark.parametrize("datum", DATUMS, ids=IDS)
def test_multiset_invariant_under_weyl_group_of_h(datum):
    entries = spin_weights(datum).entries
    for r in datum.delta_h_plus:
        for w, m in entries.items():
            two = 2 * sum(a * b for a, b in zip(w, r)) / sum(a * a for a in r)
            assert entries[w - r * two] == m


@pytest.mark.parametrize("code", ["A2", "B2", "B3", "G2", "C3"])
def test_dominant_weights_cover_the_whole_multiset(code):
    rs = parse_root_system(code)
    torus = SubalgebraDatum.torus(rs)
    entries = spin_weights(torus).entries
    dom = dominant_spin_weights(torus)
    assert sum(orbit_size(w, rs) * m for w, m in dom) == 2 ** len(rs.positive_roots)
    for w, m in dom:
        for x in orbit(w, rs):
            assert entries[x] == m


def test_b3_dominant_spin_weights():
    rs = parse_root_system("B3")
    dom = dominant_spin_weights(SubalgebraDatum.torus(rs))
    assert dom == [
        (Weight((5 * H, 3 * H, H)), 1),
        (Weight((5 * H, H, H)), 2),
        (Weight((3 * H, 3 * H, 3 * H)), 2),
        (Weight((3 * H, 3 * H, H)), 4),
        (Weight((3 * H, H, H)), 8),
        (Weight((H, H, H)), 14),
    ]


def test_a2_torus():
    rs = parse_root_system("A2")
    assert dominant_spin_weights(SubalgebraDatum.torus(rs)) == [(rs.rho, 1), (Weight.zero(3), 2)]


def test_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        spin_weights(SubalgebraDatum.torus(parse_root_system("B3")), budget=2 ** 8)


def test_subalgebra_must_be_closed():
    a3 = parse_root_system("A3")
    with pytest.raises(SubalgebraError):
        SubalgebraDatum(a3, (Weight((1, -1, 0, 0)), Weight((0, 0, 1, -1)), Weight((1, 0, 0, -1))))


@st.composite
def group_element_and_subset(draw):
    rs = parse_root_system(draw(st.sampled_from(["A2", "A3", "B2", "G2", "C3"])))
    group = weyl_group(rs)
    w = group[draw(st.integers(0, len(group) - 1))]
    subset = [a for a in rs.positive_roots if draw(st.booleans())]
    return rs, w, subset


@given(group_element_and_subset())
def test_conjugate_subset_is_a_realization(args):
    rs, w, subset = args
    target = w.apply(rs.rho - sum(subset, Weight.zero(rs.ambient_dim)))
    got = spin_weight_conjugate(w, subset)
    assert rs.rho - sum(got, Weight.zero(rs.ambient_dim)) == target
    assert tuple(sorted(got, key=rs.root_index.get)) in {
        tuple(sorted(s, key=rs.root_index.get)) for s in realizing_subsets(target, rs.rho, rs.positive_roots)
    }


def test_f4_dominant_spin_weights_total():
    rs = parse_root_system("F4")
    dom = dominant_spin_weights(SubalgebraDatum.torus(rs))
    assert sum(orbit_size(w, rs) * m for w, m in dom) == 2 ** 24
