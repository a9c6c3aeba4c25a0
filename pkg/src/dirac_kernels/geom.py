"""Multiplicities of G-types in kernels of geometric Dirac operators on G/H.

Only the finite multiplicity formulas are computed. Integrality is the lattice
(simply connected) notion; whether S (x) E lifts to the group is not checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .kernelcalc import noncubic_kernel_torus
from .repweights import HighestWeightModule
from .rootsys import (
    RootSystem,
    Weight,
    dominant_representative,
    is_dominant,
    is_dominant_integral,
    orthogonal_positive_roots,
)
from .spinweights import SubalgebraDatum, dominant_spin_weights, is_realizable, spin_weights


@dataclass(frozen=True)
class Constituent:
    highest_weight: Weight
    multiplicity: int
    spin_weight: Optional[Weight] = None


@dataclass(frozen=True)
class GeometricKernelReport:
    mu: Weight
    constituents: Tuple[Constituent, ...]
    operator_tag: str

    def coefficient(self, lam) -> int:
        lam = Weight(lam)
        return sum(c.multiplicity for c in self.constituents if c.highest_weight == lam)


def geometric_cubic_kernel(datum: SubalgebraDatum, mu) -> GeometricKernelReport:
    """The G-type of highest weight w(mu + rho_h) - rho, when that is dominant integral."""
    rs = datum.rs
    mu = Weight(mu)
    if not all(sum(a * b for a, b in zip(mu, r)) >= 0 for r in datum.delta_h_plus):
        raise ValueError(f"{mu} is not dominant for the roots of h")
    x, _ = dominant_representative(mu + datum.rho_h, rs)
    lam = x - rs.rho
    out = (Constituent(lam, 1),) if is_dominant_integral(lam, rs) else ()
    return GeometricKernelReport(mu, out, "cubic")


def weight_space_dimension(module: HighestWeightModule, spin: Dict[Weight, int], mu: Weight) -> int:
    """dim (V (x) S)_mu as a convolution of the two weight multisets."""
    return sum(m * spin.get(mu - nu, 0) for nu, m in module.all_weights())


def geometric_noncubic_kernel_torus(rs: RootSystem, mu) -> GeometricKernelReport:
    """G-types V_lambda with mu = lambda + kappa, kappa = rho - sum(A), A inside lambda-perp.

    The coefficient of each V_lambda is dim (V_lambda (x) S)_mu.
    """
    mu = Weight(mu)
    if not is_dominant(mu, rs):
        raise ValueError(f"{mu} is not dominant")
    torus = SubalgebraDatum.torus(rs)
    spin = spin_weights(torus).entries
    out: List[Constituent] = []
    for kappa, _ in dominant_spin_weights(torus):
        lam = mu - kappa
        if not is_dominant_integral(lam, rs):
            continue
        if not is_realizable(kappa, rs.rho, orthogonal_positive_roots(rs, lam)):
            continue
        coeff = weight_space_dimension(HighestWeightModule(rs, lam), spin, mu)
        out.append(Constituent(lam, coeff, kappa))
    out.sort(key=lambda c: tuple(-x for x in c.highest_weight))
    return GeometricKernelReport(mu, tuple(out), "noncubic")


def cross_check_branching(rs: RootSystem, mu, lam) -> int:
    """Multiplicity of the weight mu in the noncubic kernel on V_lambda (h = t)."""
    mu = Weight(mu)
    dom, _ = dominant_representative(mu, rs)
    for block in noncubic_kernel_torus(HighestWeightModule(rs, lam)).blocks:
        if block.representative == dom:
            return block.block_dim
    return 0
