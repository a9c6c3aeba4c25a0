"""Brute-force verification with explicit exact matrices for pi, gamma and D^t."""
from .chevalley import ChevalleyData, ModuleMatrices, UnsupportedAlgebraError, build_chevalley, representation_matrices
from .dirac import DiracMatrix, DiracSetup, nullspace_of, verify_square_identity
from .spinor import QSplitting, SpinorModule, SubalgebraSpec, UnsupportedConfigurationError
from .verify import CASES, run_case, weyl_inequality_probe

__all__ = [
    "CASES", "ChevalleyData", "DiracMatrix", "DiracSetup", "ModuleMatrices", "QSplitting", "SpinorModule",
    "SubalgebraSpec", "UnsupportedAlgebraError", "UnsupportedConfigurationError", "build_chevalley",
    "nullspace_of", "representation_matrices", "run_case", "verify_square_identity", "weyl_inequality_probe",
]
