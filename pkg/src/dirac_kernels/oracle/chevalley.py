"""Explicit matrix realizations of the classical Lie algebras.

sl(n) uses matrix units; so(2n+1), sp(2n), so(2n) are the matrices X with
X^T J + J X = 0 for a split form J on the basis v_1..v_n, v_-1..v_-n (, v_0).
Root vectors are projections of matrix units onto the algebra; the negative root
vector is the transpose of the positive one. Structure constants and the
Killing form are computed from these matrices, not looked up.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from ..linalg import SparseMatrix, inverse
from ..rootsys import RootSystem, Weight, inner_product

Q = Fraction


class UnsupportedAlgebraError(ValueError):
    pass


def _basis_labels(rs: RootSystem) -> Tuple[List[Weight], List[int]]:
    """Weights of the defining basis vectors, and the form J as a signed involution."""
    n = rs.rank
    if rs.family == "A":
        d = rs.ambient_dim
        return [Weight.unit(d, i) for i in range(d)], []
    if rs.family in ("B", "C", "D"):
        vecs = [Weight.unit(n, i) for i in range(n)] + [-Weight.unit(n, i) for i in range(n)]
        if rs.family == "B":
            vecs.append(Weight.zero(n))
        return vecs, []
    raise UnsupportedAlgebraError(f"no matrix realization for {rs.code}")


def _form(rs: RootSystem) -> List[List[Fraction]]:
    n = rs.rank
    size = 2 * n + (1 if rs.family == "B" else 0)
    J = [[Q(0)] * size for _ in range(size)]
    for i in range(n):
        J[i][n + i] = Q(1)
        J[n + i][i] = Q(-1) if rs.family == "C" else Q(1)
    if rs.family == "B":
        J[2 * n][2 * n] = Q(1)
    return J


def _dense_mul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Q(0)) for col in bt] for row in a]


def _transpose(a):
    return [list(r) for r in zip(*a)]


@dataclass(eq=False)
class ChevalleyData:
    """Basis of g: Cartan elements first, then e_alpha for positive alpha, then e_-alpha.

    Normalized so that the Killing form pairs e_alpha with e_-alpha to 1.
    """

    rs: RootSystem
    size: int
    basis: List[SparseMatrix]
    labels: List[Tuple[str, object]]
    cartan_vectors: List[Weight]
    vector_weights: List[Weight]
    index: Dict[Weight, int] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.cartan_vectors)

    # -------------------------------------------------------- coordinates
    @cached_property
    def _coord_solver(self):
        flat = [self._flatten(b) for b in self.basis]
        gram = [[sum((x * y for x, y in zip(a, b)), Q(0)) for b in flat] for a in flat]
        return flat, inverse(gram)

    def _flatten(self, m: SparseMatrix) -> List[Fraction]:
        out = [Q(0)] * (self.size * self.size)
        for i, j, x in m.entries():
            out[i * self.size + j] = x
        return out

    def coordinates(self, m: SparseMatrix) -> List[Fraction]:
        """Coordinates of a matrix in the basis; raises if it is not in g."""
        flat, ginv = self._coord_solver
        y = self._flatten(m)
        rhs = [sum((a * b for a, b in zip(f, y)), Q(0)) for f in flat]
        c = [sum((g * r for g, r in zip(row, rhs)), Q(0)) for row in ginv]
        if self.element(c) != m:
            raise ValueError("matrix does not lie in the Lie algebra")
        return c

    def element(self, coords: Sequence) -> SparseMatrix:
        out = SparseMatrix((self.size, self.size))
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    def unit(self, a: int) -> List[Fraction]:
        v = [Q(0)] * self.dim
        v[a] = Q(1)
        return v

    # -------------------------------------------------------- brackets and forms
    @cached_property
    def structure_constants(self) -> Dict[Tuple[int, int], Dict[int, Fraction]]:
        """``(a, b) -> {c: coefficient}`` with [x_a, x_b] = sum_c coefficient x_c."""
        out = {}
        for a, xa in enumerate(self.basis):
            for b, xb in enumerate(self.basis):
                if b < a:
                    out[(a, b)] = {c: -v for c, v in out[(b, a)].items()}
                    continue
                br = xa @ xb - xb @ xa
                coords = self.coordinates(br) if not br.is_zero() else []
                out[(a, b)] = {c: v for c, v in enumerate(coords) if v}
        return out

    def bracket(self, x: Sequence, y: Sequence) -> List[Fraction]:
        out = [Q(0)] * self.dim
        sc = self.structure_constants
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, yb in enumerate(y):
                if not yb:
                    continue
                for c, v in sc[(a, b)].items():
                    out[c] += xa * yb * v
        return out

    @cached_property
    def ad_matrices(self) -> List[SparseMatrix]:
        """ad(x_a) in the basis: column b holds the coordinates of [x_a, x_b]."""
        sc = self.structure_constants
        mats = []
        for a in range(self.dim):
            mats.append(SparseMatrix.from_entries(
                (self.dim, self.dim), ((c, b, v) for b in range(self.dim) for c, v in sc[(a, b)].items())))
        return mats

    def ad(self, x: Sequence) -> SparseMatrix:
        out = SparseMatrix((self.dim, self.dim))
        for c, m in zip(x, self.ad_matrices):
            if c:
                out = out + m.scale(c)
        return out

    @cached_property
    def killing(self) -> List[List[Fraction]]:
        """tr(ad x_a ad x_b)."""
        ads = self.ad_matrices
        out = [[Q(0)] * self.dim for _ in range(self.dim)]
        for a in range(self.dim):
            for b in range(a, self.dim):
                p = ads[a] @ ads[b]
                tr = sum((p[i, i] for i in p.rows), Q(0))
                out[a][b] = out[b][a] = tr
        return out

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        K = self.killing
        s = Q(0)
        for a, xa in enumerate(x):
            if xa:
                row = K[a]
                for b, yb in enumerate(y):
                    if yb and row[b]:
                        s += xa * yb * row[b]
        return s

    # -------------------------------------------------------- Cartan and weights
    def root_vector(self, alpha) -> int:
        return self.index[Weight(alpha)]

    def cartan_element(self, v: Sequence) -> List[Fraction]:
        """Element H of t with mu(H) = <mu, v> for every weight mu."""
        v = Weight(v)
        rs = self.rs
        if rs.family == "A":
            v = rs.project(v)
            diag = list(v)
        else:
            diag = list(v) + [-c for c in v] + ([Q(0)] if rs.family == "B" else [])
        m = SparseMatrix((self.size, self.size), {i: {i: c} for i, c in enumerate(diag) if c})
        return self.coordinates(m)

    def evaluate(self, mu: Sequence, h: Sequence) -> Fraction:
        """mu(h) for h in t given by coordinates."""
        return sum((h[k] * inner_product(mu, cv) for k, cv in enumerate(self.cartan_vectors)), Q(0))

    @cached_property
    def cartan_gram_inverse(self) -> List[List[Fraction]]:
        r = self.rank
        return inverse([[self.killing[i][j] for j in range(r)] for i in range(r)])

    def killing_inner(self, mu: Sequence, nu: Sequence) -> Fraction:
        """Form on t* dual to the Killing form on t."""
        a = [inner_product(mu, cv) for cv in self.cartan_vectors]
        b = [inner_product(nu, cv) for cv in self.cartan_vectors]
        G = self.cartan_gram_inverse
        return sum((a[i] * G[i][j] * b[j] for i in range(self.rank) for j in range(self.rank)), Q(0))

    def killing_norm2(self, mu: Sequence) -> Fraction:
        return self.killing_inner(mu, mu)


def build_chevalley(rs: RootSystem) -> ChevalleyData:
    vecs, _ = _basis_labels(rs)
    size = len(vecs)
    by_weight = {}
    for i, w in enumerate(vecs):
        by_weight.setdefault(w, i)
    if rs.family == "A":
        def project(X):
            return X
        cartan_mats = []
        cartan_vectors = []
        for k in range(rs.rank):
            cartan_mats.append(SparseMatrix((size, size), {k: {k: Q(1)}, k + 1: {k + 1: Q(-1)}}))
            cartan_vectors.append(Weight.unit(size, k) - Weight.unit(size, k + 1))
    else:
        J = _form(rs)
        Jinv = inverse(J)

        def project(X):
            d = X.to_dense()
            other = _dense_mul(_dense_mul(Jinv, _transpose(d)), J)
            return SparseMatrix.from_dense([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(d, other)])
        n = rs.rank
        cartan_mats = [SparseMatrix((size, size), {k: {k: Q(1)}, n + k: {n + k: Q(-1)}}) for k in range(n)]
        cartan_vectors = [Weight.unit(n, k) for k in range(n)]

    pos_mats = []
    for alpha in rs.positive_roots:
        pair = next(((i, j) for i, wi in enumerate(vecs) for j, wj in enumerate(vecs) if wi - wj == alpha), None)
        if pair is None:
            raise UnsupportedAlgebraError(f"no matrix unit of weight {alpha}")
        X = project(SparseMatrix((size, size), {pair[0]: {pair[1]: Q(1)}}))
        if X.is_zero():
            raise UnsupportedAlgebraError(f"projection killed the root vector {alpha}")
        pos_mats.append(X)
    # Killing form pairing of E_alpha with its transpose, from the provisional basis
    provisional = ChevalleyData(rs, size, cartan_mats + pos_mats + [m.transpose() for m in pos_mats],
                                [], cartan_vectors, vecs)
    r, p = len(cartan_mats), len(pos_mats)
    basis = list(cartan_mats)
    for k, X in enumerate(pos_mats):
        kb = provisional.killing[r + k][r + p + k]
        basis.append(X.scale(1 / kb))
    basis.extend(m.transpose() for m in pos_mats)
    labels = [("h", k) for k in range(r)] + [("e", a) for a in rs.positive_roots] + [("e", -a) for a in rs.positive_roots]
    index = {a: r + k for k, a in enumerate(rs.positive_roots)}
    index.update({-a: r + p + k for k, a in enumerate(rs.positive_roots)})
    return ChevalleyData(rs, size, basis, labels, cartan_vectors, vecs, index)


# ------------------------------------------------------------ representations

@dataclass(eq=False)
class ModuleMatrices:
    """pi(x_a) for every basis element x_a of g, with t-weights of the module basis."""

    name: str
    highest_weight: Weight
    matrices: List[SparseMatrix]
    weights: List[Weight]

    @property
    def dim(self) -> int:
        return len(self.weights)

    def act(self, coords: Sequence) -> SparseMatrix:
        out = SparseMatrix((self.dim, self.dim))
        for c, m in zip(coords, self.matrices):
            if c:
                out = out + m.scale(c)
        return out


def representation_matrices(chev: ChevalleyData, which: str) -> ModuleMatrices:
    rs = chev.rs
    if which == "standard":
        from ..repweights import standard_highest_weight

        return ModuleMatrices("standard", standard_highest_weight(rs), list(chev.basis),
                              [rs.project(w) for w in chev.vector_weights])
    if which == "trivial":
        return ModuleMatrices("trivial", Weight.zero(rs.ambient_dim),
                              [SparseMatrix((1, 1)) for _ in chev.basis], [Weight.zero(rs.ambient_dim)])
    if which == "adjoint":
        weights = [Weight.zero(rs.ambient_dim)] * chev.rank + [Weight(lbl[1]) for lbl in chev.labels[chev.rank:]]
        return ModuleMatrices("adjoint", rs.highest_root, list(chev.ad_matrices), weights)
    raise UnsupportedAlgebraError(f"unsupported representation {which!r}")
