"""Exact kernels of cubic and noncubic Dirac operators on V (x) S."""
from .kernelcalc import (
    KernelBlock,
    KernelDecomposition,
    RelatedPair,
    check_related_inequality,
    compute_A_lambda,
    kostant_kernel,
    noncubic_kernel_torus,
    property_star_kernel,
    strict_kernel_equality_t,
)
from .repweights import HighestWeightModule, all_weights, is_extremal, weight_multiplicity, weyl_dimension
from .rootsys import (
    RootSystem,
    Weight,
    WeylElement,
    build_root_system,
    dominant_representative,
    inner_product,
    is_dominant,
    orbit_and_stabilizer,
    parse_root_system,
    weyl_group_order,
)
from .spinweights import SpinWeightMultiset, SubalgebraDatum, dominant_spin_weights, spin_weight_conjugate, spin_weights

__version__ = "0.1.0"
