"""Root systems of types A-D, G2, F4 in exact epsilon coordinates, and their Weyl groups."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from itertools import combinations
from math import factorial
from typing import Dict, Iterable, List, Sequence, Tuple

from .linalg import inverse, matvec

Q = Fraction


class ConfigurationError(ValueError):
    """Unsupported family/rank or malformed root-system code."""


class Weight(tuple):
    """Exact rational vector in the epsilon basis.

    A tuple of Fractions; ``+``, ``-`` and scalar ``*`` act coordinate-wise.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (c if type(c) is Fraction else Q(c) for c in coords))

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "Weight":
        return cls(int(k == i) for k in range(n))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse ``"1/2,-1/2,0"``."""
        parts = [p.strip() for p in text.replace(" ", "").strip("()[]").split(",") if p.strip()]
        if not parts:
            raise ValueError(f"empty weight {text!r}")
        return cls(Q(p) for p in parts)

    def __add__(self, other):
        _check_len(self, other)
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _check_len(self, other)
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, c):
        c = Q(c)
        return Weight(a * c for a in self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(str(c) for c in self) + ")"

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self) + ")"

    def is_zero(self) -> bool:
        return not any(self)


def _check_len(x, y):
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")


def inner_product(x: Sequence, y: Sequence) -> Fraction:
    """Euclidean form on epsilon coordinates."""
    _check_len(x, y)
    return sum((a * b for a, b in zip(x, y)), Q(0))


def norm2(x: Sequence) -> Fraction:
    return inner_product(x, x)


def reflect(x: Weight, alpha: Weight) -> Weight:
    """Reflection of ``x`` in the hyperplane orthogonal to ``alpha``."""
    c = 2 * inner_product(x, alpha) / inner_product(alpha, alpha)
    if c == 0:
        return x
    return Weight(a - c * b for a, b in zip(x, alpha))


def coroot_pairing(x: Sequence, alpha: Sequence) -> Fraction:
    return 2 * inner_product(x, alpha) / inner_product(alpha, alpha)


# ------------------------------------------------------------------ root data

def _roots_A(n):
    d = n + 1
    pos = []
    for i in range(d):
        for j in range(i + 1, d):
            v = [0] * d
            v[i], v[j] = 1, -1
            pos.append(Weight(v))
    simple = [pos_root(d, (i, 1), (i + 1, -1)) for i in range(n)]
    return d, pos, simple


def pos_root(d, *terms):
    v = [Q(0)] * d
    for i, c in terms:
        v[i] += Q(c)
    return Weight(v)


def _pm_pairs(d):
    out = []
    for i in range(d):
        for j in range(i + 1, d):
            out.append(pos_root(d, (i, 1), (j, -1)))
            out.append(pos_root(d, (i, 1), (j, 1)))
    return out


def _roots_B(n):
    pos = _pm_pairs(n) + [Weight.unit(n, i) for i in range(n)]
    simple = [pos_root(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [Weight.unit(n, n - 1)]
    return n, pos, simple


def _roots_C(n):
    pos = _pm_pairs(n) + [Weight.unit(n, i) * 2 for i in range(n)]
    simple = [pos_root(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [Weight.unit(n, n - 1) * 2]
    return n, pos, simple


def _roots_D(n):
    pos = _pm_pairs(n)
    simple = [pos_root(n, (i, 1), (i + 1, -1)) for i in range(n - 1)] + [pos_root(n, (n - 2, 1), (n - 1, 1))]
    return n, pos, simple


def _roots_G2():
    # sum-zero plane in R^3
    simple = [pos_root(3, (0, 1), (1, -1)), pos_root(3, (0, -2), (1, 1), (2, 1))]
    return 3, None, simple


def _roots_F4():
    half = Q(1, 2)
    simple = [
        Weight((half, -half, -half, -half)),
        Weight.unit(4, 3),
        pos_root(4, (2, 1), (3, -1)),
        pos_root(4, (1, 1), (2, -1)),
    ]
    return 4, None, simple


def _close_positive(simple: List[Weight]) -> List[Weight]:
    """All positive roots generated from the simple roots by simple reflections."""
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for a in simple:
                s = reflect(r, a)
                if s not in roots:
                    roots.add(s)
                    nxt.append(s)
        frontier = nxt
    sc = _SimpleCoords(simple)
    return [r for r in roots if all(c >= 0 for c in sc(r))]


class _SimpleCoords:
    def __init__(self, simple):
        self.simple = simple
        self.ginv = inverse([[inner_product(a, b) for b in simple] for a in simple])

    def __call__(self, v):
        return matvec(self.ginv, [inner_product(v, a) for a in self.simple])


_BUILDERS = {"A": _roots_A, "B": _roots_B, "C": _roots_C, "D": _roots_D}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 2}


@dataclass(frozen=True, eq=False)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    roots: Tuple[Weight, ...]
    positive_roots: Tuple[Weight, ...]
    simple_roots: Tuple[Weight, ...]
    rho: Weight

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    @property
    def code(self) -> str:
        return self.family if self.family in ("G2", "F4") else f"{self.family}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.code})"

    @cached_property
    def _simple_coords(self) -> _SimpleCoords:
        return _SimpleCoords(list(self.simple_roots))

    def simple_coordinates(self, v: Sequence) -> List[Fraction]:
        """Coefficients of ``v`` (in the root span) on the simple roots."""
        return self._simple_coords(Weight(v))

    def height(self, v: Sequence) -> Fraction:
        return sum(self.simple_coordinates(v), Q(0))

    @cached_property
    def root_index(self) -> Dict[Weight, int]:
        return {r: i for i, r in enumerate(self.positive_roots)}

    def is_positive_root(self, v) -> bool:
        return Weight(v) in self.root_index

    def project(self, v: Sequence) -> Weight:
        """Orthogonal projection onto the span of the roots (sum-zero plane for A and G2)."""
        v = Weight(v)
        _check_len(v, self.rho)
        if self.family in ("A", "G2"):
            m = sum(v, Q(0)) / len(v)
            return Weight(c - m for c in v)
        return v

    @cached_property
    def fundamental_weights(self) -> Tuple[Weight, ...]:
        simple = self.simple_roots
        cartan = [[coroot_pairing(a, b) for b in simple] for a in simple]  # cartan[k][j] = <a_k, a_j^vee>
        coeffs = inverse(cartan)  # rows: fundamental weight i in simple-root coordinates
        out = []
        for row in coeffs:
            v = Weight.zero(self.ambient_dim)
            for c, a in zip(row, simple):
                v = v + a * c
            out.append(v)
        return tuple(out)

    def from_fundamental(self, coeffs: Sequence) -> Weight:
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} fundamental coordinates, got {len(coeffs)}")
        v = Weight.zero(self.ambient_dim)
        for c, w in zip(coeffs, self.fundamental_weights):
            v = v + w * Q(c)
        return v

    def to_fundamental(self, v: Sequence) -> List[Fraction]:
        return [coroot_pairing(v, a) for a in self.simple_roots]

    @cached_property
    def highest_root(self) -> Weight:
        return max(self.positive_roots, key=lambda r: (self.height(r), tuple(r)))


def build_root_system(family: str, rank: int | None = None) -> RootSystem:
    family = family.upper()
    if family in ("G2", "F4"):
        if rank is not None and rank != int(family[1]):
            raise ConfigurationError(f"{family} has rank {family[1]}, not {rank}")
        d, _, simple = _roots_G2() if family == "G2" else _roots_F4()
        rank = int(family[1])
        pos = _close_positive(simple)
    elif family in _BUILDERS:
        if rank is None or rank < _MIN_RANK[family]:
            raise ConfigurationError(f"unsupported root system {family}{rank}")
        d, pos, simple = _BUILDERS[family](rank)
    else:
        raise ConfigurationError(f"unsupported family {family!r}")
    pos = sorted(pos, key=lambda r: (sum(_SimpleCoords(simple)(r)), tuple(-c for c in r)))
    rho = reduce(lambda a, b: a + b, pos, Weight.zero(d)) * Q(1, 2)
    roots = tuple(pos) + tuple(-r for r in pos)
    return RootSystem(family, rank, d, roots, tuple(pos), tuple(simple), rho)


def parse_root_system(code: str) -> RootSystem:
    """``"A3"``, ``"B3"``, ``"G2"``, ``"F4"`` ..."""
    code = code.strip().upper()
    if code in ("G2", "F4"):
        return build_root_system(code)
    if len(code) < 2 or code[0] not in _BUILDERS or not code[1:].isdigit():
        raise ConfigurationError(f"unrecognised root system code {code!r}")
    return build_root_system(code[0], int(code[1:]))


# -------------------------------------------------------------- predicates

def is_dominant(w: Sequence, rs: RootSystem) -> bool:
    return all(inner_product(w, a) >= 0 for a in rs.simple_roots)


def is_integral(w: Sequence, rs: RootSystem) -> bool:
    return all(coroot_pairing(w, a).denominator == 1 for a in rs.simple_roots)


def is_dominant_integral(w: Sequence, rs: RootSystem) -> bool:
    return all((c := coroot_pairing(w, a)) >= 0 and c.denominator == 1 for a in rs.simple_roots)


def is_regular(w: Sequence, rs: RootSystem) -> bool:
    return all(inner_product(w, a) != 0 for a in rs.positive_roots)


# -------------------------------------------------------------- Weyl group

def _reflection_matrix(alpha: Weight):
    n = len(alpha)
    a2 = inner_product(alpha, alpha)
    return tuple(tuple(Q(int(i == j)) - 2 * alpha[i] * alpha[j] / a2 for j in range(n)) for i in range(n))


def _matmul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Q(0)) for col in bt) for row in a)


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Element of W as a word in simple reflections; ``word[0]`` acts last.

    Equality and hashing use the matrix, since words are not canonical.
    """

    rs: RootSystem = field(repr=False)
    word: Tuple[int, ...] = ()

    @cached_property
    def matrix(self):
        n = self.rs.ambient_dim
        m = tuple(tuple(Q(int(i == j)) for j in range(n)) for i in range(n))
        for i in self.word:
            m = _matmul(m, _reflection_matrix(self.rs.simple_roots[i]))
        return m

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __len__(self):
        return len(self.word)

    def apply(self, v: Sequence) -> Weight:
        v = Weight(v)
        for i in reversed(self.word):
            v = reflect(v, self.rs.simple_roots[i])
        return v

    __call__ = apply

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.rs, self.word + other.word)

    def inverse(self) -> "WeylElement":
        return WeylElement(self.rs, tuple(reversed(self.word)))

    def inversion_set(self) -> List[Weight]:
        """Positive roots sent to negative roots."""
        return [a for a in self.rs.positive_roots if not self.rs.is_positive_root(self.apply(a))]

    def length(self) -> int:
        return len(self.inversion_set())


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, ())


def dominant_representative(w: Sequence, rs: RootSystem) -> Tuple[Weight, WeylElement]:
    """Dominant element of the W-orbit of ``w`` and an element carrying ``w`` there.

    Repeatedly applies the lowest-index simple reflection that pairs negatively.
    """
    return _dominant_representative(Weight(w), rs)


@lru_cache(maxsize=1 << 16)
def _dominant_representative(v: Weight, rs: RootSystem) -> Tuple[Weight, WeylElement]:
    word: List[int] = []
    simple = rs.simple_roots
    while True:
        for i, a in enumerate(simple):
            if inner_product(v, a) < 0:
                v = reflect(v, a)
                word.append(i)
                break
        else:
            return v, WeylElement(rs, tuple(reversed(word)))


def orbit(w: Sequence, rs: RootSystem) -> List[Weight]:
    start = Weight(w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for a in rs.simple_roots:
                s = reflect(v, a)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen, reverse=True)


def _subsystem_weyl_order(pos: List[Weight]) -> int:
    """|W| of the root subsystem with positive roots ``pos`` (size of the orbit of its rho)."""
    if not pos:
        return 1
    rho = reduce(lambda a, b: a + b, pos) * Q(1, 2)
    seen = {rho}
    frontier = [rho]
    while frontier:
        nxt = []
        for v in frontier:
            for a in pos:
                s = reflect(v, a)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return len(seen)


def stabilizer_order(w: Sequence, rs: RootSystem) -> int:
    """Order of the stabilizer of ``w``; it is generated by reflections in roots orthogonal to ``w``."""
    return _subsystem_weyl_order([a for a in rs.positive_roots if inner_product(w, a) == 0])


def orbit_and_stabilizer(w: Sequence, rs: RootSystem) -> Tuple[int, int]:
    stab = stabilizer_order(w, rs)
    size = len(orbit(w, rs))
    return size, stab


def orbit_size(w: Sequence, rs: RootSystem) -> int:
    return weyl_group_order(rs) // stabilizer_order(w, rs)


def weyl_group_order(rs: RootSystem) -> int:
    n = rs.rank
    if rs.family == "A":
        return factorial(n + 1)
    if rs.family in ("B", "C"):
        return 2 ** n * factorial(n)
    if rs.family == "D":
        return 2 ** (n - 1) * factorial(n)
    return {"G2": 12, "F4": 1152}[rs.family]


def weyl_group(rs: RootSystem) -> List[WeylElement]:
    """All elements, as shortest words found by breadth-first search, ordered by length."""
    rho = rs.rho
    found = {rho: ()}
    frontier = [(rho, ())]
    while frontier:
        nxt = []
        for v, word in frontier:
            for i, a in enumerate(rs.simple_roots):
                s = reflect(v, a)
                if s not in found:
                    w = (i,) + word
                    found[s] = w
                    nxt.append((s, w))
        frontier = nxt
    return [WeylElement(rs, w) for w in found.values()]


def orthogonal_positive_roots(rs: RootSystem, w: Sequence) -> List[Weight]:
    return [a for a in rs.positive_roots if inner_product(w, a) == 0]


def weight_sum(vectors: Iterable[Weight], dim: int) -> Weight:
    out = [Q(0)] * dim
    for v in vectors:
        for k, c in enumerate(v):
            out[k] += c
    return Weight(out)


def subsets_by_size(items: Sequence):
    """All subsets, by cardinality then lexicographic on indices."""
    for k in range(len(items) + 1):
        yield from combinations(items, k)
