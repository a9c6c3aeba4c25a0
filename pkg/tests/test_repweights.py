from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirac_kernels.repweights import (
    HighestWeightModule,
    WeightError,
    dominant_weights_up_to_dimension,
    standard_highest_weight,
    weyl_dimension,
)
from dirac_kernels.rootsys import Weight, orbit, parse_root_system, weyl_group


def kostant_multiplicity(rs, lam, nu):
    """Kostant's alternating sum over W of partition-function values."""
    pos = [tuple(int(c) for c in rs.simple_coordinates(a)) for a in rs.positive_roots]

    @lru_cache(maxsize=None)
    def partitions(target, k):
        if all(c == 0 for c in target):
            return 1
        if k == len(pos) or any(c < 0 for c in target):
            return 0
        a = pos[k]
        total, rest = 0, target
        while all(c >= 0 for c in rest):
            total += partitions(rest, k + 1)
            rest = tuple(x - y for x, y in zip(rest, a))
        return total

    total = 0
    for w in weyl_group(rs):
        diff = w.apply(lam + rs.rho) - (nu + rs.rho)
        coeffs = rs.simple_coordinates(diff)
        if any(c.denominator != 1 for c in coeffs):
            continue
        total += (-1) ** w.length() * partitions(tuple(int(c) for c in coeffs), 0)
    return total


@st.composite
def modules(draw, codes=("A1", "A2", "A3", "B2", "C3", "G2", "B3")):
    rs = parse_root_system(draw(st.sampled_from(codes)))
    coeffs = [draw(st.integers(0, 2)) for _ in range(rs.rank)]
    lam = rs.from_fundamental(coeffs)
    if weyl_dimension(rs, lam) > 50:
        lam = rs.from_fundamental([0] * rs.rank)
    return HighestWeightModule(rs, lam)


@given(modules(("A1", "A2", "B2", "G2", "A3")))
def test_freudenthal_matches_kostant_partition_function(module):
    rs = module.rs
    for nu, m in module.dominant_weights():
        assert m == kostant_multiplicity(rs, module.highest_weight, nu)


@given(modules())
def test_multiplicities_are_weyl_invariant_and_sum_to_dimension(module):
    rs = module.rs
    mults = dict(module.all_weights())
    assert sum(mults.values()) == module.dimension() == weyl_dimension(rs, module.highest_weight)
    for nu, m in module.dominant_weights():
        for x in orbit(nu, rs):
            assert mults[x] == m


@pytest.mark.parametrize("code", ["A3", "B3", "C3", "G2", "F4"])
def test_every_small_module_is_consistent(code):
    rs = parse_root_system(code)
    for lam in dominant_weights_up_to_dimension(rs, 50):
        module = HighestWeightModule(rs, lam)
        assert sum(m for _, m in module.all_weights()) == module.dimension()


@pytest.mark.parametrize("code,dim", [("A3", 4), ("B3", 7), ("C3", 6), ("D4", 8)])
def test_standard_module(code, dim):
    rs = parse_root_system(code)
    module = HighestWeightModule(rs, standard_highest_weight(rs))
    assert module.dimension() == dim
    assert all(m == 1 for _, m in module.all_weights())


def test_standard_weights_of_sl4():
    rs = parse_root_system("A3")
    lam = standard_highest_weight(rs)
    got = {w for w, _ in HighestWeightModule(rs, lam).all_weights()}
    want = {lam - Weight.unit(4, 0) + Weight.unit(4, i) for i in range(4)}
    assert got == want


def test_known_dimensions():
    g2 = parse_root_system("G2")
    assert weyl_dimension(g2, g2.highest_root) == 14
    f4 = parse_root_system("F4")
    assert weyl_dimension(f4, Weight((1, 0, 0, 0))) == 26
    assert weyl_dimension(f4, f4.highest_root) == 52


def test_zero_weight_of_so7_standard():
    rs = parse_root_system("B3")
    module = HighestWeightModule(rs, standard_highest_weight(rs))
    assert module.multiplicity(Weight.zero(3)) == 1
    assert module.is_extremal(Weight((0, 0, -1)))
    assert not module.is_extremal(Weight.zero(3))


def test_rejects_non_dominant():
    rs = parse_root_system("A2")
    with pytest.raises(WeightError):
        HighestWeightModule(rs, rs.from_fundamental([-1, 0]))
    with pytest.raises(WeightError):
        HighestWeightModule(rs, Weight.parse("1/2,0,-1/2"))
