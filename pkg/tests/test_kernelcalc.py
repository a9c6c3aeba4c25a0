from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirac_kernels.kernelcalc import (
    KernelBlock,
    KernelDecomposition,
    PreconditionError,
    check_related_inequality,
    compute_A_lambda,
    kostant_kernel,
    noncubic_kernel_torus,
    property_star_kernel,
    property_star_total,
    related_pairs,
    strict_kernel_equality_t,
    standard_kernel_closed_forms,
)
from dirac_kernels.repweights import HighestWeightModule, standard_highest_weight, weyl_dimension
from dirac_kernels.rootsys import Weight, coroot_pairing, is_dominant, orbit_size, parse_root_system, weyl_group_order
from dirac_kernels.spinweights import SubalgebraDatum, is_realizable


def standard(code):
    rs = parse_root_system(code)
    return HighestWeightModule(rs, standard_highest_weight(rs))


@st.composite
def modules(draw, codes=("A1", "A2", "A3", "B2", "C2", "G2", "B3")):
    rs = parse_root_system(draw(st.sampled_from(codes)))
    lam = rs.from_fundamental([draw(st.integers(0, 2)) for _ in range(rs.rank)])
    if weyl_dimension(rs, lam) > 50:
        lam = Weight.zero(rs.ambient_dim)
    return HighestWeightModule(rs, lam)


@given(modules())
def test_cubic_kernel_is_one_weyl_orbit(module):
    rs = module.rs
    dec = kostant_kernel(module)
    assert dec.total_dim == weyl_group_order(rs)
    assert [b.representative for b in dec.blocks] == [module.highest_weight + rs.rho]


@given(modules())
def test_noncubic_contains_cubic(module):
    cubic = kostant_kernel(module)
    noncubic = noncubic_kernel_torus(module)
    reps = {b.representative: b for b in noncubic.blocks}
    top = cubic.blocks[0].representative
    assert reps[top].block_dim >= 1
    assert noncubic.total_dim >= cubic.total_dim
    for b in noncubic.blocks:
        assert is_dominant(b.representative, module.rs)
        assert b.orbit_size == orbit_size(b.representative, module.rs)


@given(modules())
def test_noncubic_equals_cubic_for_regular_highest_weight(module):
    rs = module.rs
    lam = module.highest_weight
    if any(sum(a * b for a, b in zip(lam, r)) == 0 for r in rs.simple_roots):
        return
    assert noncubic_kernel_torus(module).total_dim == weyl_group_order(rs)


@given(modules(("A1", "A2", "A3", "B2", "C2", "B3")))
def test_a_lambda_representatives_are_realized_orthogonally(module):
    rs = module.rs
    lam = module.highest_weight
    perp = [a for a in rs.positive_roots if sum(x * y for x, y in zip(a, lam)) == 0]
    for rep, m in compute_A_lambda(module):
        assert m >= 1
        assert is_realizable(rep - lam, rs.rho, perp)


def test_trivial_module_noncubic_kernel_is_whole_spinor():
    for code in ["A2", "B2", "G2", "B3"]:
        rs = parse_root_system(code)
        dec = noncubic_kernel_torus(HighestWeightModule(rs, Weight.zero(rs.ambient_dim)))
        assert dec.total_dim == 2 ** len(rs.positive_roots)


@pytest.mark.parametrize("family", "ABCD")
def test_standard_module_three_routes_agree(family):
    ranks = range(2, 5) if family != "D" else range(3, 5)
    for rank in ranks:
        rs = parse_root_system(f"{family}{rank}")
        module = HighestWeightModule(rs, standard_highest_weight(rs))
        cubic, noncubic = standard_kernel_closed_forms(family, rank)
        assert kostant_kernel(module).total_dim == cubic
        assert noncubic_kernel_torus(module).total_dim == noncubic
        assert property_star_kernel(module).total_dim == noncubic
        assert property_star_total(module) == noncubic


def test_property_star_block_structure_matches_a_lambda():
    for code in ["A3", "B3", "C3", "D4"]:
        module = standard(code)
        assert property_star_kernel(module).blocks == noncubic_kernel_torus(module).blocks


def test_property_star_refuses_unverified_modules():
    rs = parse_root_system("A2")
    module = HighestWeightModule(rs, rs.from_fundamental([2, 0]))
    with pytest.raises(PreconditionError):
        property_star_kernel(module, oracle_check=lambda m: False)


def test_property_star_refuses_multiplicities():
    rs = parse_root_system("A2")
    with pytest.raises(PreconditionError):
        property_star_kernel(HighestWeightModule(rs, rs.highest_root))


def test_property_star_adjoint_uses_oracle():
    rs = parse_root_system("A1")
    adj = HighestWeightModule(rs, rs.highest_root)
    assert property_star_kernel(adj).total_dim == noncubic_kernel_torus(adj).total_dim


@pytest.mark.parametrize("t", [Fraction(1, 3), Fraction(1), Fraction(3, 2)])
def test_t_family_equals_cubic(t):
    module = standard("A3")
    dec = strict_kernel_equality_t(module, None, t)
    assert dec.blocks == kostant_kernel(module).blocks
    assert dec.total_dim == 24


@pytest.mark.parametrize("t", [Fraction(0), Fraction(2), Fraction(-1)])
def test_t_family_rejects_closed_endpoints(t):
    with pytest.raises(PreconditionError):
        strict_kernel_equality_t(standard("A2"), None, t)


def test_kostant_kernel_for_levi_in_sl4():
    rs = parse_root_system("A3")
    datum = SubalgebraDatum.generated_by(rs, [Weight((1, -1, 0, 0))])
    dec = kostant_kernel(standard("A3"), datum)
    assert len(dec.blocks) == weyl_group_order(rs) // 2
    alpha = datum.delta_h_plus[0]
    for b in dec.blocks:
        assert b.orbit_size == 1
        assert b.block_dim == coroot_pairing(b.representative + datum.rho_h, alpha)


@given(modules(("A1", "A2", "B2", "G2")))
def test_related_inequality_and_equality_criterion(module):
    datum = SubalgebraDatum.torus(module.rs)
    for mu, mu1 in related_pairs(module, datum):
        pair = check_related_inequality(module, datum, mu, mu1)
        assert pair.lhs >= pair.rhs
        assert pair.equality == (pair.lhs == pair.rhs)


def test_related_inequality_for_levi_subalgebra():
    rs = parse_root_system("A2")
    datum = SubalgebraDatum.generated_by(rs, [Weight((1, -1, 0))])
    module = HighestWeightModule(rs, rs.highest_root)
    for mu, mu1 in related_pairs(module, datum):
        pair = check_related_inequality(module, datum, mu, mu1)
        assert pair.lhs >= pair.rhs
        assert pair.equality == (pair.lhs == pair.rhs)


def test_unrelated_pair_rejected():
    module = standard("A2")
    datum = SubalgebraDatum.torus(module.rs)
    with pytest.raises(PreconditionError):
        check_related_inequality(module, datum, Weight((5, 0, -5)), module.rs.rho)


def test_decomposition_total_must_add_up():
    block = KernelBlock(Weight((1, -1)), 2, 1)
    with pytest.raises(ValueError):
        KernelDecomposition((block,), 3, "cubic")
    assert KernelDecomposition.from_blocks([], "noncubic").total_dim == 0
