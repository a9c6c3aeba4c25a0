"""Exact matrices of D^t / sqrt(2) on V (x) S and the identities they satisfy.

D^t / sqrt(2) = sum_a pi(x_a) (x) gamma(x^a) - t * 1 (x) gamma(c), where x_a is a
basis of q and x^a its Killing-dual basis. Dividing by sqrt(2) keeps every entry
rational and does not change kernels.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..linalg import SparseMatrix, SparseVector, accumulate, nullspace
from ..rootsys import Weight
from .chevalley import ChevalleyData, ModuleMatrices
from .spinor import QSplitting, SpinorModule, SubalgebraSpec, UnsupportedConfigurationError

Q = Fraction


@dataclass(eq=False)
class DiracMatrix:
    t_parameter: Fraction
    entries: SparseMatrix
    basis_labels: List[Tuple[int, Tuple[Weight, ...], int]]
    weights: List[Weight]
    module_dim: int
    spinor_dim: int

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def index(self, v: int, spin_index: int) -> int:
        return v * self.spinor_dim + spin_index


class DiracSetup:
    """Everything needed to assemble D^t for one (g, h, V); caches gamma(c)."""

    def __init__(self, chev: ChevalleyData, module: ModuleMatrices, spec: SubalgebraSpec):
        self.chev = chev
        self.module = module
        self.split = QSplitting(chev, spec)
        self.spinor = SpinorModule(self.split)
        self._cubic: SparseMatrix | None = None

    @property
    def dim(self) -> int:
        return self.module.dim * self.spinor.dim

    # ---------------------------------------------------------- gamma(c)
    def cubic_term(self, basis: List[List[Fraction]] | None = None) -> SparseMatrix:
        """gamma(c) = 1/6 sum_abc B(x^a, [x^b, x^c]) gamma(x_a) gamma(x_b) gamma(x_c)."""
        if basis is None and self._cubic is not None:
            return self._cubic
        default = basis is None
        split, chev, sp = self.split, self.chev, self.spinor
        basis = split.standard_q_basis() if default else basis
        dual = split.dual_basis(basis)
        gam = [sp.gamma(x) for x in basis]
        n = len(basis)
        terms = []
        for b in range(n):
            for c in range(n):
                if b == c:
                    continue
                z = chev.bracket(dual[b], dual[c])
                if not any(z):
                    continue
                for a in range(n):
                    coeff = chev.form(dual[a], z)
                    if coeff:
                        terms.append((coeff / 6, gam[a] @ gam[b] @ gam[c]))
        out = accumulate((sp.dim, sp.dim), terms)
        if default:
            self._cubic = out
        return out

    # ---------------------------------------------------------- operator
    def terms(self, basis: List[List[Fraction]] | None = None):
        """Pairs (pi(x_a), gamma(x^a)) whose Kronecker products sum to the noncubic part."""
        split = self.split
        basis = split.standard_q_basis() if basis is None else basis
        dual = split.dual_basis(basis)
        out = []
        for x, xd in zip(basis, dual):
            pi = self.module.act(x)
            if pi.is_zero():
                continue
            out.append((pi, self.spinor.gamma(xd)))
        return out

    def root_terms(self) -> List[Tuple[Weight, SparseMatrix]]:
        """pi(e_alpha) (x) gamma(e_-alpha) for each root alpha of q."""
        chev = self.chev
        out = []
        for b in self.split.q_roots:
            for a in (b, -b):
                pi = self.module.act(chev.unit(chev.index[a]))
                g = self.spinor.gamma(chev.unit(chev.index[-a]))
                out.append((a, pi.kron(g)))
        return out

    def build(self, t, basis: List[List[Fraction]] | None = None) -> DiracMatrix:
        t = Q(t)
        n = self.dim
        terms = [(1, pi.kron(g)) for pi, g in self.terms(basis)]
        if t:
            eye = SparseMatrix.identity(self.module.dim)
            terms.append((-t, eye.kron(self.cubic_term(basis))))
        mat = accumulate((n, n), terms)
        sp = self.spinor
        labels, weights = [], []
        for v in range(self.module.dim):
            for s in range(sp.dim):
                labels.append((v, sp.monomial_roots(s), s & ((1 << sp.m) - 1)))
                weights.append(self.module.weights[v] + sp.weight(s))
        return DiracMatrix(t, mat, labels, weights, self.module.dim, sp.dim)

    # ---------------------------------------------------------- h action
    def sigma(self, y: Sequence) -> SparseMatrix:
        """Spin action of y in h: 1/2 sum_a gamma([y, x_a]) gamma(x^a)."""
        split, chev, sp = self.split, self.chev, self.spinor
        basis = split.standard_q_basis()
        dual = split.dual_basis(basis)
        terms = []
        for x, xd in zip(basis, dual):
            z = chev.bracket(y, x)
            if any(z):
                terms.append((Q(1, 2), sp.gamma(z) @ sp.gamma(xd)))
        return accumulate((sp.dim, sp.dim), terms)

    def diagonal_action(self, y: Sequence) -> SparseMatrix:
        eye_v = SparseMatrix.identity(self.module.dim)
        eye_s = SparseMatrix.identity(self.spinor.dim)
        return self.module.act(y).kron(eye_s) + eye_v.kron(self.sigma(y))

    def h_casimir(self) -> SparseMatrix:
        """Sum over a basis y_b of h of diag(y_b) diag(y^b), y^b the Killing-dual basis in h."""
        split = self.split
        basis = split.h_basis
        dual = split.dual_basis(basis)
        acts = [self.diagonal_action(y) for y in basis]
        dacts = [self.diagonal_action(y) for y in dual]
        return accumulate((self.dim, self.dim), ((1, a @ b) for a, b in zip(acts, dacts)))


def nullspace_of(dm: DiracMatrix) -> List[SparseVector]:
    return nullspace(dm.entries)


def verify_square_identity(setup: DiracSetup) -> Tuple[bool, SparseMatrix]:
    """Residual of 2 (D/sqrt2)^2 + Casimir_h(diagonal) - (|lambda+rho|^2 - |rho_h|^2) Id.

    Norms use the form dual to the Killing form. Requires equal rank.
    """
    if not setup.split.equal_rank:
        raise UnsupportedConfigurationError("the square identity is checked for equal-rank h only")
    chev = setup.chev
    rs = chev.rs
    D = setup.build(1).entries
    lam = setup.module.highest_weight
    const = chev.killing_norm2(lam + rs.rho) - chev.killing_norm2(setup.split.rho_h)
    n = setup.dim
    residual = accumulate((n, n), [(2, D @ D), (1, setup.h_casimir()), (-const, SparseMatrix.identity(n))])
    return residual.is_zero(), residual


def weight_blocks(dm: DiracMatrix) -> Dict[Weight, List[int]]:
    out: Dict[Weight, List[int]] = {}
    for i, w in enumerate(dm.weights):
        out.setdefault(w, []).append(i)
    return out
