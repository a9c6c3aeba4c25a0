"""Combinatorial kernel dimensions for cubic and noncubic Dirac operators on V (x) S."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, List, Sequence, Tuple

from .repweights import HighestWeightModule, standard_highest_weight
from .rootsys import (
    RootSystem,
    Weight,
    dominant_representative,
    inner_product,
    is_dominant,
    norm2,
    orbit,
    orbit_size,
    orthogonal_positive_roots,
    weight_sum,
)
from .spinweights import (
    SubalgebraDatum,
    _scale,
    _to_int,
    common_denominator,
    dominant_spin_weights,
    spin_support,
    subset_sum_counts,
)

Q = Fraction


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class KernelBlock:
    representative: Weight
    orbit_size: int
    block_dim: int


@dataclass(frozen=True)
class KernelDecomposition:
    blocks: Tuple[KernelBlock, ...]
    total_dim: int
    operator_tag: str

    def __post_init__(self):
        if self.total_dim != sum(b.orbit_size * b.block_dim for b in self.blocks):
            raise ValueError("total_dim does not match the blocks")

    @classmethod
    def from_blocks(cls, blocks, tag: str) -> "KernelDecomposition":
        blocks = tuple(blocks)
        return cls(blocks, sum(b.orbit_size * b.block_dim for b in blocks), tag)

    def with_tag(self, tag: str) -> "KernelDecomposition":
        return KernelDecomposition(self.blocks, self.total_dim, tag)


def t_tag(t) -> str:
    t = Q(t)
    if t == 1:
        return "cubic"
    if t == 0:
        return "noncubic"
    return f"t-noncubic({t})"


def subsystem_dimension(positive: Sequence[Weight], highest: Weight) -> int:
    """Weyl dimension formula for the root subsystem with the given positive roots."""
    positive = list(positive)
    if not positive:
        return 1
    rho = weight_sum(positive, len(highest)) * Q(1, 2)
    shifted = highest + rho
    num = Q(1)
    for a in positive:
        num *= inner_product(shifted, a) / inner_product(rho, a)
    assert num.denominator == 1 and num > 0
    return int(num)


def w1_orbit(module: HighestWeightModule, datum: SubalgebraDatum) -> List[Weight]:
    """The weights w(lambda + rho) for w in W^1, i.e. those dominant for the h-roots."""
    rs = module.rs
    top = module.highest_weight + rs.rho
    hpos = datum.delta_h_plus
    return [x for x in orbit(top, rs) if all(inner_product(x, a) > 0 for a in hpos)]


def kostant_kernel(module: HighestWeightModule, datum: SubalgebraDatum | None = None) -> KernelDecomposition:
    """Kernel of the cubic operator: one h-type w(lambda+rho) - rho_h for each w in W^1.

    For h = t this collapses to a single W-orbit of one-dimensional weight spaces.
    """
    rs = module.rs
    datum = datum or SubalgebraDatum.torus(rs)
    if datum.rs != rs:
        raise PreconditionError("module and subalgebra live on different root systems")
    top = module.highest_weight + rs.rho
    if datum.is_torus:
        return KernelDecomposition.from_blocks([KernelBlock(top, orbit_size(top, rs), 1)], "cubic")
    blocks = []
    for x in w1_orbit(module, datum):
        blocks.append(KernelBlock(x - datum.rho_h, 1, subsystem_dimension(datum.delta_h_plus, x - datum.rho_h)))
    blocks.sort(key=lambda b: tuple(-c for c in b.representative))
    return KernelDecomposition.from_blocks(blocks, "cubic")


def compute_A_lambda(module: HighestWeightModule) -> List[Tuple[Weight, int]]:
    """Representatives lambda + rho - sum(A) of the noncubic kernel blocks.

    A runs over subsets of the positive roots orthogonal to lambda with
    rho - sum(A) dominant; the count of such A is the spin multiplicity.
    """
    rs = module.rs
    lam = module.highest_weight
    perp = orthogonal_positive_roots(rs, lam)
    torus = SubalgebraDatum.torus(rs)
    dom = dominant_spin_weights(torus, roots=perp, start=rs.rho)
    return [(lam + k, m) for k, m in dom]


def noncubic_kernel_torus(module: HighestWeightModule) -> KernelDecomposition:
    rs = module.rs
    blocks = [KernelBlock(mu, orbit_size(mu, rs), m) for mu, m in compute_A_lambda(module)]
    return KernelDecomposition.from_blocks(blocks, "noncubic")


def is_classical_standard(module: HighestWeightModule) -> bool:
    rs = module.rs
    if rs.family not in ("A", "B", "C", "D"):
        return False
    return module.highest_weight == standard_highest_weight(rs)


def property_star_kernel(module: HighestWeightModule, assume_property_star: bool = False,
                         oracle_check=None) -> KernelDecomposition:
    """Noncubic kernel (h = t) by counting basis vectors v_nu (x) u_I annihilated term by term.

    The count is valid when every root vector acts injectively between adjacent
    weight spaces. That is accepted for standard modules of classical algebras;
    otherwise ``oracle_check(module)`` must confirm it, unless the caller asserts it.
    """
    rs = module.rs
    weights = module.all_weights()
    if any(m > 1 for _, m in weights):
        raise PreconditionError("property (*) count needs a multiplicity-free module")
    if not (assume_property_star or is_classical_standard(module)):
        if oracle_check is None:
            from .oracle.verify import property_star_holds as oracle_check
        if not oracle_check(module):
            raise PreconditionError("injectivity of root vectors between weight spaces not established")
    present = {w for w, _ in weights}
    pos = rs.positive_roots
    den = lcm(_scale(rs), common_denominator(*present))
    counts: Dict[Tuple[int, ...], int] = {}
    for nu in sorted(present, reverse=True):
        up = [a for a in pos if nu + a in present]
        down = [a for a in pos if nu - a in present]
        if set(up) & set(down):
            continue
        fixed = set(up) | set(down)
        free = [a for a in pos if a not in fixed]
        start = nu + rs.rho - weight_sum(up, rs.ambient_dim)
        for s, c in subset_sum_counts(free, start, den).items():
            counts[s] = counts.get(s, 0) + c
    _check_simple_reflection_invariance(counts, rs, den)
    blocks = []
    for s, c in counts.items():
        w = Weight(Q(x, den) for x in s)
        if is_dominant(w, rs):
            blocks.append(KernelBlock(w, orbit_size(w, rs), c))
    blocks.sort(key=lambda b: tuple(-c for c in b.representative))
    out = KernelDecomposition.from_blocks(blocks, "noncubic")
    if out.total_dim != sum(counts.values()):
        raise AssertionError("kernel weights do not form whole W-orbits")
    return out


def _check_simple_reflection_invariance(counts: Dict[Tuple[int, ...], int], rs: RootSystem, den: int):
    """Counts keyed by scaled weights must be invariant under every simple reflection."""
    for a in rs.simple_roots:
        ia = _to_int(a, den)
        a2 = sum(x * x for x in ia)
        for s, c in counts.items():
            k, r = divmod(2 * sum(x * y for x, y in zip(s, ia)), a2)
            if r:
                raise AssertionError(f"non-integral kernel weight {s}")
            if k and counts.get(tuple(x - k * y for x, y in zip(s, ia))) != c:
                raise AssertionError("kernel weight counts are not W-invariant")


def property_star_total(module: HighestWeightModule) -> int:
    """Closed count sum over nu of 2^|free roots|; needs no W-orbit bookkeeping."""
    rs = module.rs
    present = {w for w, _ in module.all_weights()}
    total = 0
    for nu in present:
        up = {a for a in rs.positive_roots if nu + a in present}
        down = {a for a in rs.positive_roots if nu - a in present}
        if not up & down:
            total += 2 ** (len(rs.positive_roots) - len(up | down))
    return total


@dataclass(frozen=True)
class RelatedPair:
    mu: Weight
    mu1: Weight
    lhs: Fraction
    rhs: Fraction
    equality: bool


def check_related_inequality(module: HighestWeightModule, datum: SubalgebraDatum, mu, mu1) -> RelatedPair:
    """Both sides of the norm inequality for a weight mu of V (x) S and a related spin weight mu1.

    ``equality`` is decided by the structural criterion (mu - mu1 extremal, and
    rho - w(mu1 + rho_h) orthogonal to lambda where w(mu - mu1) = lambda), not by
    comparing the two sides.
    """
    rs = module.rs
    mu, mu1 = Weight(mu), Weight(mu1)
    lam = module.highest_weight
    if module.multiplicity(mu - mu1) == 0:
        raise PreconditionError(f"{mu} - {mu1} is not a weight of V")
    if mu1 not in spin_support(datum):
        raise PreconditionError(f"{mu1} is not a weight of the spin module")
    lhs = norm2(lam + rs.rho) - norm2(mu + datum.rho_h)
    rhs = norm2(rs.rho) - norm2(mu1 + datum.rho_h)
    dom, w = dominant_representative(mu - mu1, rs)
    equality = dom == lam and inner_product(rs.rho - w.apply(mu1 + datum.rho_h), lam) == 0
    return RelatedPair(mu, mu1, lhs, rhs, equality)


def related_pairs(module: HighestWeightModule, datum: SubalgebraDatum | None = None):
    """All (mu, mu1): mu1 a spin weight, mu - mu1 a weight of V, mu = that sum."""
    from .spinweights import spin_weights

    datum = datum or SubalgebraDatum.torus(module.rs)
    spin = spin_weights(datum).entries
    for nu, _ in module.all_weights():
        for mu1 in spin:
            yield nu + mu1, mu1


def strict_kernel_equality_t(module: HighestWeightModule, datum: SubalgebraDatum | None, t) -> KernelDecomposition:
    """For 0 < t < 2 the t-family kernel equals the cubic kernel."""
    t = Q(t)
    if not 0 < t < 2:
        raise PreconditionError(f"t = {t} is outside the open interval (0, 2)")
    return kostant_kernel(module, datum).with_tag(t_tag(t))


# -------------------------------------------------------- closed forms

def standard_kernel_closed_forms(family: str, rank: int) -> Tuple[int, int]:
    """(cubic, noncubic) kernel dimensions for the standard module, h = t.

    For type A the count uses n = rank + 1 coordinates.
    """
    from math import factorial

    if family == "A":
        n = rank + 1
        return factorial(n), n * 2 ** ((n - 1) * (n - 2) // 2)
    n = rank
    if family in ("B", "C"):
        return 2 ** n * factorial(n), 2 * n * 2 ** ((n - 1) ** 2)
    if family == "D":
        return 2 ** (n - 1) * factorial(n), 2 * n * 2 ** ((n - 1) * (n - 2))
    raise ValueError(f"no closed form for family {family!r}")
