"""Weights and multiplicities of finite-dimensional irreducible modules (Freudenthal)."""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Dict, List, Tuple

from .rootsys import (
    RootSystem,
    Weight,
    dominant_representative,
    inner_product,
    is_dominant,
    is_dominant_integral,
    norm2,
    orbit,
)

Q = Fraction


class WeightError(ValueError):
    """Highest weight is not dominant integral, or has the wrong length."""


def weyl_dimension(rs: RootSystem, lam) -> int:
    lam = Weight(lam)
    if len(lam) != rs.ambient_dim or not is_dominant_integral(lam, rs):
        raise WeightError(f"{lam} is not a dominant integral weight of {rs.code}")
    shifted = lam + rs.rho
    num = Q(1)
    for a in rs.positive_roots:
        num *= inner_product(shifted, a) / inner_product(rs.rho, a)
    assert num.denominator == 1
    return int(num)


class HighestWeightModule:
    """Irreducible module of a given highest weight, with lazily computed multiplicities.

    The memo table is guarded by a lock, so one module can be shared between threads.
    """

    def __init__(self, rs: RootSystem, highest_weight):
        lam = Weight(highest_weight)
        if len(lam) != rs.ambient_dim:
            raise WeightError(f"weight {lam} has length {len(lam)}, expected {rs.ambient_dim}")
        lam = rs.project(lam)
        if not is_dominant_integral(lam, rs):
            raise WeightError(f"{lam} is not a dominant integral weight of {rs.code}")
        self.rs = rs
        self.highest_weight = lam
        self._lam_rho2 = norm2(lam + rs.rho)
        self._memo: Dict[Weight, int] = {lam: 1}
        self._lock = threading.RLock()
        self._weights: List[Tuple[Weight, int]] | None = None

    def __repr__(self) -> str:
        return f"HighestWeightModule({self.rs.code}, {self.highest_weight})"

    @property
    def weight_multiplicities(self) -> Dict[Weight, int]:
        return dict(self.all_weights())

    def _below(self, nu: Weight) -> bool:
        """True iff lambda - nu is a nonnegative integer combination of simple roots."""
        return all(c >= 0 and c.denominator == 1 for c in self.rs.simple_coordinates(self.highest_weight - nu))

    def multiplicity(self, nu) -> int:
        nu = Weight(nu)
        dom, _ = dominant_representative(nu, self.rs)
        with self._lock:
            return self._dominant_mult(dom)

    def _dominant_mult(self, nu: Weight) -> int:
        m = self._memo.get(nu)
        if m is not None:
            return m
        if not self._below(nu):
            self._memo[nu] = 0
            return 0
        rs = self.rs
        total = Q(0)
        for a in rs.positive_roots:
            k = 1
            while True:
                x = nu + a * k
                if not self._below(x):
                    break
                mx = self._dominant_mult(dominant_representative(x, rs)[0])
                if mx:
                    total += mx * inner_product(x, a)
                k += 1
        denom = self._lam_rho2 - norm2(nu + rs.rho)
        if denom == 0:
            raise ArithmeticError(f"Freudenthal denominator vanished at {nu}")
        m = 2 * total / denom
        assert m.denominator == 1 and m >= 0, (nu, m)
        self._memo[nu] = int(m)
        return int(m)

    def dominant_weights(self) -> List[Tuple[Weight, int]]:
        """Dominant weights with multiplicities, highest first."""
        rs = self.rs
        lam = self.highest_weight
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for v in frontier:
                for a in rs.positive_roots:
                    x = v - a
                    if x not in seen and is_dominant(x, rs) and self._below(x):
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        out = []
        for v in sorted(seen, key=lambda v: (rs.height(lam - v), tuple(-c for c in v))):
            m = self.multiplicity(v)
            if m:
                out.append((v, m))
        return out

    def all_weights(self) -> List[Tuple[Weight, int]]:
        with self._lock:
            if self._weights is None:
                out = []
                for v, m in self.dominant_weights():
                    out.extend((x, m) for x in orbit(v, self.rs))
                self._weights = out
            return list(self._weights)

    def dimension(self) -> int:
        return weyl_dimension(self.rs, self.highest_weight)

    def is_extremal(self, nu) -> bool:
        return dominant_representative(Weight(nu), self.rs)[0] == self.highest_weight


def weight_multiplicity(module: HighestWeightModule, nu) -> int:
    return module.multiplicity(nu)


def all_weights(module: HighestWeightModule) -> List[Tuple[Weight, int]]:
    return module.all_weights()


def is_extremal(module: HighestWeightModule, nu) -> bool:
    return module.is_extremal(nu)


def standard_highest_weight(rs: RootSystem) -> Weight:
    """Highest weight of the defining representation of a classical algebra."""
    if rs.family == "A":
        return rs.fundamental_weights[0]
    if rs.family in ("B", "C", "D"):
        return Weight.unit(rs.ambient_dim, 0)
    raise WeightError(f"no standard representation fixed for {rs.code}")


def dominant_weights_up_to_dimension(rs: RootSystem, max_dim: int) -> List[Weight]:
    """All dominant integral weights whose module has dimension at most ``max_dim``.

    Weyl dimension is strictly increasing along each fundamental direction, so a
    breadth-first walk over fundamental-weight coordinates can stop at the bound.
    """
    zero = Weight.zero(rs.ambient_dim)
    found = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for w in rs.fundamental_weights:
                x = v + w
                if x not in found and weyl_dimension(rs, x) <= max_dim:
                    found.add(x)
                    nxt.append(x)
        frontier = nxt
    return sorted(found, key=lambda v: (weyl_dimension(rs, v), tuple(-c for c in v)))
