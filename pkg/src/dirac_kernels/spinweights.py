"""Weights of the spin module of q = h-perp, for equal-rank subalgebra data.

The spin module is the exterior algebra on the negative root spaces of q, so its
weights are ``rho - rho_h - sum(I)`` over subsets I of the positive q-roots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Dict, Iterable, List, Sequence, Tuple

from .rootsys import (
    RootSystem,
    Weight,
    WeylElement,
    inner_product,
    is_dominant,
    reflect,
    weight_sum,
)

Q = Fraction
DEFAULT_BUDGET = 2 ** 24


class BudgetExceededError(RuntimeError):
    """Subset enumeration would exceed the configured budget."""


class SubalgebraError(ValueError):
    """Root set does not define a reductive equal-rank subalgebra."""


@dataclass(frozen=True)
class SubalgebraDatum:
    """Equal-rank subalgebra t + sum of root spaces over +-delta_h_plus."""

    rs: RootSystem
    delta_h_plus: Tuple[Weight, ...] = ()
    rho_h: Weight = field(init=False)

    def __post_init__(self):
        pos = set(self.rs.positive_roots)
        roots = tuple(sorted({Weight(r) for r in self.delta_h_plus}, key=self.rs.root_index.get))
        bad = [r for r in roots if r not in pos]
        if bad:
            raise SubalgebraError(f"not positive roots of {self.rs.code}: {bad}")
        full = set(roots) | {-r for r in roots}
        for a in roots:
            for b in full:
                if reflect(b, a) not in full:
                    raise SubalgebraError(f"roots not closed under reflection in {a}")
                s = a + b
                if s in self.rs.root_index or -s in self.rs.root_index:
                    if s not in full:
                        raise SubalgebraError(f"roots not closed under bracket: {a} + {b}")
        object.__setattr__(self, "delta_h_plus", roots)
        object.__setattr__(self, "rho_h", weight_sum(roots, self.rs.ambient_dim) * Q(1, 2))

    @classmethod
    def torus(cls, rs: RootSystem) -> "SubalgebraDatum":
        return cls(rs, ())

    @classmethod
    def generated_by(cls, rs: RootSystem, generators: Iterable) -> "SubalgebraDatum":
        """Smallest closed root subsystem containing the given roots (signs ignored)."""
        full = set()
        for g in generators:
            g = Weight(g)
            if g not in rs.root_index and -g not in rs.root_index:
                raise SubalgebraError(f"{g} is not a root of {rs.code}")
            full |= {g, -g}
        changed = True
        while changed:
            changed = False
            for a in list(full):
                for b in list(full):
                    for c in (reflect(b, a), a + b):
                        if (c in rs.root_index or -c in rs.root_index) and c not in full:
                            full.add(c)
                            changed = True
        return cls(rs, tuple(r for r in full if r in rs.root_index))

    @property
    def is_torus(self) -> bool:
        return not self.delta_h_plus

    @property
    def q_positive(self) -> Tuple[Weight, ...]:
        h = set(self.delta_h_plus)
        return tuple(r for r in self.rs.positive_roots if r not in h)

    @property
    def spin_base(self) -> Weight:
        """Highest spin weight, rho - rho_h."""
        return self.rs.rho - self.rho_h


@dataclass(frozen=True)
class SpinWeightMultiset:
    entries: Dict[Weight, int]
    total: int

    def __post_init__(self):
        if sum(self.entries.values()) != self.total:
            raise AssertionError("multiplicities do not add up to the total")

    def __getitem__(self, w) -> int:
        return self.entries.get(Weight(w), 0)

    def __len__(self):
        return len(self.entries)

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: tuple(-c for c in kv[0]))


# -------------------------------------------------------------- integer DP

def _scale(rs: RootSystem) -> int:
    den = 1
    for r in rs.positive_roots:
        for c in r:
            den = lcm(den, c.denominator)
    for c in rs.rho:
        den = lcm(den, c.denominator)
    return den


def _to_int(v: Sequence[Fraction], den: int) -> Tuple[int, ...]:
    out = []
    for c in v:
        x = c * den
        if x.denominator != 1:
            raise ValueError(f"scale {den} does not clear the denominator of {c}")
        out.append(int(x))
    return tuple(out)


def common_denominator(*vectors: Sequence[Fraction]) -> int:
    return lcm(1, *(c.denominator for v in vectors for c in v))


def _check_budget(n_roots: int, budget: int):
    if 2 ** n_roots > budget:
        raise BudgetExceededError(f"2^{n_roots} subsets exceeds budget {budget}")


def subset_sum_counts(roots: Sequence[Weight], start: Weight, den: int, prune=None) -> Dict[Tuple[int, ...], int]:
    """Aggregate ``start - sum(I)`` over subsets I of ``roots`` as scaled integer tuples.

    ``prune(state, k)`` may drop partial states after the first ``k`` roots are decided.
    """
    states = {_to_int(start, den): 1}
    iroots = [_to_int(r, den) for r in roots]
    for k, r in enumerate(iroots):
        nxt: Dict[Tuple[int, ...], int] = {}
        for s, c in states.items():
            nxt[s] = nxt.get(s, 0) + c
            t = tuple(a - b for a, b in zip(s, r))
            nxt[t] = nxt.get(t, 0) + c
        if prune is not None:
            nxt = {s: c for s, c in nxt.items() if not prune(s, k + 1)}
        states = nxt
    return states


def spin_weights(datum: SubalgebraDatum, budget: int = DEFAULT_BUDGET) -> SpinWeightMultiset:
    qpos = datum.q_positive
    _check_budget(len(qpos), budget)
    den = lcm(_scale(datum.rs), common_denominator(datum.spin_base))
    counts = subset_sum_counts(qpos, datum.spin_base, den)
    entries = {Weight(Q(c, den) for c in s): m for s, m in counts.items()}
    return SpinWeightMultiset(entries, 2 ** len(qpos))


def dominance_pruner(rs: RootSystem, roots: Sequence[Weight], den: int):
    """Pruning test: can a partial state still end up dominant after the remaining roots?"""
    simple = [_to_int(a, den) for a in rs.simple_roots]
    iroots = [_to_int(r, den) for r in roots]
    n = len(iroots)
    # slack[k][i]: largest possible increase of <state, alpha_i> from roots k..n-1
    slack = [[0] * len(simple) for _ in range(n + 1)]
    for k in range(n - 1, -1, -1):
        for i, a in enumerate(simple):
            p = sum(x * y for x, y in zip(iroots[k], a))
            slack[k][i] = slack[k + 1][i] + max(0, -p)

    def prune(state, k):
        sk = slack[k]
        for i, a in enumerate(simple):
            if sum(x * y for x, y in zip(state, a)) + sk[i] < 0:
                return True
        return False

    return prune


def dominant_spin_weights(datum: SubalgebraDatum, roots: Sequence[Weight] | None = None,
                          start: Weight | None = None) -> List[Tuple[Weight, int]]:
    """Dominant (for the full positive system) spin weights with multiplicities.

    ``roots``/``start`` override the q-roots and the top weight, which lets callers
    restrict to a subset of roots, e.g. those orthogonal to a highest weight.
    """
    rs = datum.rs
    roots = datum.q_positive if roots is None else tuple(roots)
    start = datum.spin_base if start is None else Weight(start)
    # deciding high roots first tightens the bound early
    order = sorted(roots, key=lambda r: -rs.height(r))
    den = lcm(_scale(rs), *(c.denominator for c in start))
    counts = subset_sum_counts(order, start, den, dominance_pruner(rs, order, den))
    out = []
    for s, m in counts.items():
        w = Weight(Q(c, den) for c in s)
        if is_dominant(w, rs):
            out.append((w, m))
    out.sort(key=lambda wm: tuple(-c for c in wm[0]))
    return out


@lru_cache(maxsize=64)
def spin_support(datum: SubalgebraDatum) -> frozenset:
    """The distinct spin weights, cached per subalgebra."""
    return frozenset(spin_weights(datum).entries)


def spin_weights_bruteforce(datum: SubalgebraDatum) -> Dict[Weight, int]:
    """Direct enumeration over all subsets; for cross-checking."""
    qpos = datum.q_positive
    out: Dict[Weight, int] = {}
    d = datum.rs.ambient_dim
    for k in range(len(qpos) + 1):
        for sub in combinations(qpos, k):
            w = datum.spin_base - weight_sum(sub, d)
            out[w] = out.get(w, 0) + 1
    return out


def generating_function_value(datum: SubalgebraDatum, point: Sequence[int]) -> Tuple[Fraction, Fraction]:
    """Evaluate the spin character at ``x_k = point[k]`` two ways.

    Returns (sum over the multiset, product form
    ``x^(rho - rho_h) * prod(1 + x^(-beta))``), with exponents scaled to integers.
    """
    den = lcm(_scale(datum.rs), common_denominator(datum.spin_base))

    def mono(v):
        out = Q(1)
        for x, e in zip(point, _to_int(v, den)):
            out *= Q(x) ** e
        return out

    lhs = sum((m * mono(w) for w, m in spin_weights(datum).entries.items()), Q(0))
    rhs = mono(datum.spin_base)
    for b in datum.q_positive:
        rhs *= 1 + mono(-b)
    return lhs, rhs


def spin_weight_conjugate(w: WeylElement, subset: Iterable[Weight]) -> List[Weight]:
    """Subset A of positive roots with w(rho - sum(B)) = rho - sum(A).

    A consists of the inversions of w^-1 not cancelled by B, together with the
    images of B that stay positive.
    """
    rs = w.rs
    B = [Weight(b) for b in subset]
    winv = w.inverse()
    inv = [a for a in rs.positive_roots if not rs.is_positive_root(winv.apply(a))]
    images = [w.apply(b) for b in B]
    P = {x for x in images if rs.is_positive_root(x)}
    Qn = {-x for x in images if not rs.is_positive_root(x)}
    A = sorted((set(inv) - Qn) | P, key=rs.root_index.get)
    d = rs.ambient_dim
    if w.apply(rs.rho - weight_sum(B, d)) != rs.rho - weight_sum(A, d):
        raise AssertionError("no subset realizes the conjugated spin weight")
    return A


def realizing_subsets(target: Weight, start: Weight, roots: Sequence[Weight]) -> List[Tuple[Weight, ...]]:
    """All subsets I of ``roots`` (by size, then lexicographic) with start - sum(I) = target."""
    need = start - target
    d = len(start)
    out = []
    for k in range(len(roots) + 1):
        for sub in combinations(roots, k):
            if weight_sum(sub, d) == need:
                out.append(sub)
    return out


def is_realizable(target: Weight, start: Weight, roots: Sequence[Weight]) -> bool:
    """Whether start - sum(I) = target for some subset I, via subset-sum DP."""
    den = 1
    for v in list(roots) + [start, target]:
        for c in v:
            den = lcm(den, c.denominator)
    goal = _to_int(target, den)
    return goal in subset_sum_counts(roots, start, den)


def dominant_in(w: Weight, rs: RootSystem, positive: Sequence[Weight]) -> bool:
    return all(inner_product(w, a) >= 0 for a in positive)
