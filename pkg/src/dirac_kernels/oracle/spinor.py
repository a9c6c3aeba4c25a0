"""Subalgebras h of g, the complement q, and the Clifford module on which gamma acts.

The root part of q is split into isotropic halves by the positive and negative
root spaces; its spin module is the exterior algebra on the negative half, with
gamma(e_-beta) acting by wedging and gamma(e_beta) by contraction. When h does
not contain all of t, the leftover Cartan part t_q has no rational isotropic
splitting, so it is represented by the left-regular Clifford module on an
orthogonal basis of t_q. That module is a sum of 2^(dim t_q / 2) copies of the
spin module, which leaves kernel containments and equalities unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Sequence, Tuple

from ..linalg import SparseMatrix, accumulate, inverse
from ..rootsys import Weight, weight_sum
from ..spinweights import SubalgebraDatum
from .chevalley import ChevalleyData

Q = Fraction


class UnsupportedConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class SubalgebraSpec:
    """h = (span of ``cartan`` inside t) + root spaces of ``roots``.

    ``roots`` is closed under negation; ``cartan`` lists epsilon vectors v, each
    standing for the element H of t with mu(H) = <mu, v>.
    """

    roots: frozenset
    cartan: Tuple[Weight, ...]

    @classmethod
    def equal_rank(cls, rs, positive_roots: Sequence = ()) -> "SubalgebraSpec":
        roots = frozenset(Weight(a) for a in positive_roots) | frozenset(-Weight(a) for a in positive_roots)
        cartan = tuple(rs.simple_roots)
        return cls(roots, cartan)

    @classmethod
    def from_datum(cls, datum: SubalgebraDatum) -> "SubalgebraSpec":
        return cls.equal_rank(datum.rs, datum.delta_h_plus)

    @classmethod
    def make(cls, positive_roots: Sequence = (), cartan: Sequence = ()) -> "SubalgebraSpec":
        roots = frozenset(Weight(a) for a in positive_roots) | frozenset(-Weight(a) for a in positive_roots)
        return cls(roots, tuple(Weight(v) for v in cartan))


def _gram_schmidt(vectors: List[List[Fraction]], chev: ChevalleyData, against: List[List[Fraction]] = ()):
    """Killing-orthogonal basis of span(vectors) modulo span(against)."""
    out: List[List[Fraction]] = []
    basis = list(against)
    ortho = []
    for b in basis:
        v = list(b)
        for u in ortho:
            c = chev.form(v, u) / chev.form(u, u)
            v = [x - c * y for x, y in zip(v, u)]
        if any(v):
            ortho.append(v)
    for b in vectors:
        v = list(b)
        for u in ortho + out:
            c = chev.form(v, u) / chev.form(u, u)
            v = [x - c * y for x, y in zip(v, u)]
        if any(v):
            out.append(v)
    return out


class QSplitting:
    """Bases of h and q = h-perp, in coordinates of the Chevalley basis."""

    def __init__(self, chev: ChevalleyData, spec: SubalgebraSpec):
        self.chev = chev
        self.spec = spec
        rs = chev.rs
        r = chev.rank
        for a in spec.roots:
            if a not in chev.index:
                raise UnsupportedConfigurationError(f"{a} is not a root")
        self.h_roots = [a for a in rs.positive_roots if a in spec.roots]
        self.q_roots = [a for a in rs.positive_roots if a not in spec.roots]
        raw_h_cartan = [chev.cartan_element(v) for v in spec.cartan]
        self.h_cartan = _gram_schmidt(raw_h_cartan, chev)
        self.tq = _gram_schmidt([chev.unit(k) for k in range(r)], chev, against=self.h_cartan)
        if len(self.h_cartan) + len(self.tq) != r:
            raise UnsupportedConfigurationError("Killing form degenerate on the Cartan part of h")
        self.h_basis = self.h_cartan + [chev.unit(chev.index[a]) for a in self.h_roots] + \
            [chev.unit(chev.index[-a]) for a in self.h_roots]
        self._check_closed()
        if len(self.tq) % 2:
            raise UnsupportedConfigurationError("q is odd-dimensional; no spin module")

    def _check_closed(self):
        chev = self.chev
        r = chev.rank
        span = self.h_basis
        for i, x in enumerate(span):
            for y in span[i + 1:]:
                z = chev.bracket(x, y)
                # root components must be h-roots; Cartan part must lie in h_t
                for a, c in enumerate(z[r:], start=r):
                    if c and chev.labels[a][1] not in self.spec.roots:
                        raise UnsupportedConfigurationError("h is not closed under the bracket")
                zt = z[:r] + [Q(0)] * (chev.dim - r)
                if any(zt) and _gram_schmidt([zt], chev, against=self.h_cartan):
                    raise UnsupportedConfigurationError("h is not closed under the bracket")

    @property
    def equal_rank(self) -> bool:
        return not self.tq

    @property
    def rho_h(self) -> Weight:
        return weight_sum(self.h_roots, self.chev.rs.ambient_dim) * Q(1, 2)

    @property
    def rho_q(self) -> Weight:
        return weight_sum(self.q_roots, self.chev.rs.ambient_dim) * Q(1, 2)

    def standard_q_basis(self) -> List[List[Fraction]]:
        chev = self.chev
        out = []
        for b in self.q_roots:
            out.append(chev.unit(chev.index[b]))
            out.append(chev.unit(chev.index[-b]))
        return out + [list(u) for u in self.tq]

    @cached_property
    def dim_q(self) -> int:
        return 2 * len(self.q_roots) + len(self.tq)

    def dual_basis(self, basis: List[List[Fraction]]) -> List[List[Fraction]]:
        """Killing-dual basis inside the span of ``basis``."""
        chev = self.chev
        G = [[chev.form(x, y) for y in basis] for x in basis]
        Ginv = inverse(G)
        dim = chev.dim
        out = []
        for i in range(len(basis)):
            v = [Q(0)] * dim
            for j, x in enumerate(basis):
                c = Ginv[i][j]
                if c:
                    v = [a + c * b for a, b in zip(v, x)]
            out.append(v)
        return out


def _popcount_below(mask: int, j: int) -> int:
    return bin(mask & ((1 << j) - 1)).count("1")


class SpinorModule:
    """Clifford module for C(q): exterior algebra on q^- tensor the regular module of C(t_q).

    Basis index is ``(I << m) | J`` with I a subset mask of the q-roots and J a
    subset mask of the orthogonal t_q basis (m = dim t_q).
    """

    def __init__(self, split: QSplitting):
        self.split = split
        self.chev = split.chev
        self.p = len(split.q_roots)
        self.m = len(split.tq)
        self.dim = 2 ** (self.p + self.m)
        self.tq_norms = [self.chev.form(u, u) for u in split.tq]

    def monomial_roots(self, index: int) -> Tuple[Weight, ...]:
        I = index >> self.m
        return tuple(b for j, b in enumerate(self.split.q_roots) if I >> j & 1)

    def weight(self, index: int) -> Weight:
        """t-weight rho_q - sum(I) of a basis vector."""
        return self.split.rho_q - weight_sum(self.monomial_roots(index), self.chev.rs.ambient_dim)

    def wedge_index(self, roots: Sequence, clifford_mask: int = 0) -> Tuple[int, int]:
        """Basis index and sign of e_-b1 ^ e_-b2 ^ ... in the given order."""
        pos = {b: j for j, b in enumerate(self.split.q_roots)}
        js = [pos[Weight(b)] for b in roots]
        if len(set(js)) != len(js):
            raise ValueError("repeated factor in a wedge product")
        inversions = sum(1 for x in range(len(js)) for y in range(x + 1, len(js)) if js[x] > js[y])
        mask = sum(1 << j for j in js)
        return (mask << self.m) | clifford_mask, (-1) ** inversions

    @cached_property
    def _wedge(self) -> List[SparseMatrix]:
        out = []
        for j in range(self.p):
            rows = {}
            for idx in range(self.dim):
                I = idx >> self.m
                if not I >> j & 1:
                    rows[idx | (1 << (j + self.m))] = {idx: Q((-1) ** _popcount_below(I, j))}
            out.append(SparseMatrix((self.dim, self.dim), rows))
        return out

    @cached_property
    def _contract(self) -> List[SparseMatrix]:
        return [w.transpose() for w in self._wedge]

    @cached_property
    def _cliff(self) -> List[SparseMatrix]:
        out = []
        m = self.m
        for k in range(m):
            half = self.tq_norms[k] / 2
            entries = []
            for idx in range(self.dim):
                I, J = idx >> m, idx & ((1 << m) - 1)
                s = (-1) ** (bin(I).count("1") + _popcount_below(J, k))
                if J >> k & 1:
                    entries.append((idx ^ (1 << k), idx, s * half))
                else:
                    entries.append((idx | (1 << k), idx, Q(s)))
            out.append(SparseMatrix.from_entries((self.dim, self.dim), entries))
        return out

    def gamma(self, x: Sequence) -> SparseMatrix:
        """Clifford action of an element of q given in Chevalley coordinates."""
        chev = self.chev
        split = self.split
        terms = []
        rest = list(x)
        for j, b in enumerate(split.q_roots):
            ip, im = chev.index[b], chev.index[-b]
            if x[im]:
                terms.append((x[im], self._wedge[j]))
            if x[ip]:
                terms.append((x[ip], self._contract[j]))
            rest[ip] = rest[im] = Q(0)
        for k, u in enumerate(split.tq):
            c = chev.form(x, u) / self.tq_norms[k]
            if c:
                terms.append((c, self._cliff[k]))
                rest = [a - c * b for a, b in zip(rest, u)]
        if any(rest):
            raise ValueError("element does not lie in q")
        return accumulate((self.dim, self.dim), terms)
