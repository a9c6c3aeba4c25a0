"""Exact rational linear algebra.

Dense helpers (inverse, solve) for the small matrices of root-system work, and a
dict-of-rows sparse matrix with a fraction-free (Bareiss) nullspace for the
Dirac operator matrices.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Sequence

Q = Fraction
SparseVector = Dict[int, Fraction]


class SingularMatrixError(ValueError):
    pass


# ---------------------------------------------------------------- dense helpers

def inverse(m: Sequence[Sequence]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(m)
    a = [[Q(x) for x in row] + [Q(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def matvec(m: Sequence[Sequence], v: Sequence) -> List[Fraction]:
    return [sum((Q(x) * y for x, y in zip(row, v)), Q(0)) for row in m]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List[Fraction]]:
    bt = list(zip(*b))
    return [[sum((Q(x) * y for x, y in zip(row, col)), Q(0)) for col in bt] for row in a]


def solve(m: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    return matvec(inverse(m), b)


# --------------------------------------------------------------- sparse matrix

class SparseMatrix:
    """Exact sparse matrix stored as ``{row: {col: Fraction}}`` with no stored zeros."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape, rows=None):
        self.shape = (int(shape[0]), int(shape[1]))
        self.rows: Dict[int, Dict[int, Fraction]] = {}
        if rows:
            for i, row in rows.items():
                clean = {j: Q(x) for j, x in row.items() if x != 0}
                if clean:
                    self.rows[i] = clean

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "SparseMatrix":
        return cls((n, n if m is None else m))

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls((n, n), {i: {i: Q(1)} for i in range(n)})

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]) -> "SparseMatrix":
        n = len(dense)
        m = len(dense[0]) if n else 0
        return cls((n, m), {i: {j: x for j, x in enumerate(row) if x != 0} for i, row in enumerate(dense)})

    @classmethod
    def from_entries(cls, shape, entries: Iterable) -> "SparseMatrix":
        """Build from ``(i, j, value)`` triples; duplicates are summed."""
        out = cls(shape)
        for i, j, x in entries:
            out._add_entry(i, j, Q(x))
        return out

    def _add_entry(self, i: int, j: int, x: Fraction) -> None:
        if x == 0:
            return
        row = self.rows.setdefault(i, {})
        y = row.get(j, 0) + x
        if y == 0:
            del row[j]
            if not row:
                del self.rows[i]
        else:
            row[j] = y

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows.get(i, {}).get(j, Q(0))

    def entries(self):
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def copy(self) -> "SparseMatrix":
        out = SparseMatrix(self.shape)
        out.rows = {i: dict(r) for i, r in self.rows.items()}
        return out

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Q(0)] * self.shape[1] for _ in range(self.shape[0])]
        for i, j, x in self.entries():
            out[i][j] = x
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix.from_entries((self.shape[1], self.shape[0]), ((j, i, x) for i, j, x in self.entries()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = self.copy()
        for i, row in other.rows.items():
            for j, x in row.items():
                out._add_entry(i, j, x)
        return out

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c) -> "SparseMatrix":
        c = Q(c)
        out = SparseMatrix(self.shape)
        if c != 0:
            out.rows = {i: {j: x * c for j, x in r.items()} for i, r in self.rows.items()}
        return out

    def __rmul__(self, c) -> "SparseMatrix":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, SparseMatrix):
            if self.shape[1] != other.shape[0]:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            out = SparseMatrix((self.shape[0], other.shape[1]))
            orows = other.rows
            for i, row in self.rows.items():
                acc: Dict[int, Fraction] = {}
                for k, x in row.items():
                    ork = orows.get(k)
                    if ork is None:
                        continue
                    for j, y in ork.items():
                        acc[j] = acc.get(j, 0) + x * y
                acc = {j: v for j, v in acc.items() if v != 0}
                if acc:
                    out.rows[i] = acc
            return out
        return self.apply(other)

    def apply(self, v: SparseVector) -> SparseVector:
        """Matrix times a sparse vector ``{index: value}``."""
        out: Dict[int, Fraction] = {}
        for i, row in self.rows.items():
            s = Q(0)
            for j, x in row.items():
                y = v.get(j)
                if y:
                    s += x * y
            if s != 0:
                out[i] = s
        return out

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        """Kronecker product; index (i, k) maps to ``i * other.rows + k``."""
        n2, m2 = other.shape
        out = SparseMatrix((self.shape[0] * n2, self.shape[1] * m2))
        for i, row in self.rows.items():
            for k, orow in other.rows.items():
                acc = {}
                for j, x in row.items():
                    for l, y in orow.items():
                        acc[j * m2 + l] = x * y
                out.rows[i * n2 + k] = acc
        return out

    def restrict(self, idx: Sequence[int]) -> "SparseMatrix":
        """Principal submatrix on the index list ``idx`` (re-indexed 0..len-1)."""
        pos = {g: k for k, g in enumerate(idx)}
        out = SparseMatrix((len(idx), len(idx)))
        for g in idx:
            row = self.rows.get(g)
            if not row:
                continue
            r = {pos[j]: x for j, x in row.items() if j in pos}
            if r:
                out.rows[pos[g]] = r
        return out

    def __repr__(self) -> str:
        return f"SparseMatrix(shape={self.shape}, nnz={self.nnz})"


# ---------------------------------------------------------- Bareiss nullspace

def _integer_rows(rows: List[Dict[int, Fraction]], cols: List[int]) -> List[List[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row.values():
            den = lcm(den, x.denominator)
        out.append([int(row.get(c, 0) * den) for c in cols])
    return out


def bareiss_echelon(a: List[List[int]]):
    """Fraction-free row echelon form, in place.

    Pivots are taken in the leftmost available column from the first row with a
    nonzero entry, so the result is reproducible. Returns the pivot columns.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        pr = a[r]
        pv = pr[c]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            if f == 0:
                if pv != prev:
                    for j in range(c + 1, n):
                        if ai[j]:
                            ai[j] = pv * ai[j] // prev
            else:
                for j in range(c + 1, n):
                    ai[j] = (pv * ai[j] - f * pr[j]) // prev
                ai[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return pivots


def _block_nullspace(rows: List[Dict[int, Fraction]], cols: List[int]) -> List[SparseVector]:
    a = _integer_rows(rows, cols)
    pivots = bareiss_echelon(a)
    pivot_set = set(pivots)
    free = [k for k in range(len(cols)) if k not in pivot_set]
    basis = []
    for f in free:
        x: Dict[int, Fraction] = {f: Q(1)}
        for t in range(len(pivots) - 1, -1, -1):
            p = pivots[t]
            row = a[t]
            s = Q(0)
            for j, y in x.items():
                if j > p and row[j]:
                    s += row[j] * y
            if s:
                x[p] = -s / row[p]
        basis.append({cols[k]: v for k, v in x.items() if v != 0})
    return basis


def _column_components(mat: SparseMatrix) -> List[List[int]]:
    parent = list(range(mat.shape[1]))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in mat.rows.values():
        it = iter(row)
        first = find(next(it))
        for j in it:
            rj = find(j)
            if rj != first:
                parent[rj] = first
    comps: Dict[int, List[int]] = {}
    for j in range(mat.shape[1]):
        comps.setdefault(find(j), []).append(j)
    return sorted(comps.values(), key=lambda c: c[0])


def nullspace(mat: SparseMatrix) -> List[SparseVector]:
    """Exact kernel basis of ``mat``.

    The matrix is split into independent blocks (connected components of the
    row/column incidence graph) and each block is eliminated with Bareiss. The
    basis is ordered by the leading free column, which makes it deterministic.
    """
    basis: List[SparseVector] = []
    col_rows: Dict[int, List[int]] = {}
    for i, row in mat.rows.items():
        for j in row:
            col_rows.setdefault(j, []).append(i)
    for comp in _column_components(mat):
        row_ids = sorted({i for j in comp for i in col_rows.get(j, ())})
        if not row_ids:
            basis.extend({j: Q(1)} for j in comp)
            continue
        basis.extend(_block_nullspace([mat.rows[i] for i in row_ids], comp))
    basis.sort(key=lambda v: min(v))
    return basis


def rank_of_vectors(vectors: Sequence[SparseVector]) -> int:
    """Rank of a family of sparse vectors."""
    vectors = [v for v in vectors if v]
    if not vectors:
        return 0
    cols = sorted({j for v in vectors for j in v})
    a = _integer_rows(list(vectors), cols)
    return len(bareiss_echelon(a))


def matrix_rank(mat: SparseMatrix) -> int:
    return mat.shape[1] - len(nullspace(mat))


def span_contains(big: Sequence[SparseVector], small: Sequence[SparseVector]) -> bool:
    """True iff every vector of ``small`` lies in the span of ``big``."""
    r = rank_of_vectors(big)
    return rank_of_vectors(list(big) + list(small)) == r


def spans_equal(a: Sequence[SparseVector], b: Sequence[SparseVector]) -> bool:
    return span_contains(a, b) and span_contains(b, a)


def add_vectors(*vs: SparseVector, coeffs: Sequence | None = None) -> SparseVector:
    out: Dict[int, Fraction] = {}
    coeffs = coeffs or [1] * len(vs)
    for c, v in zip(coeffs, vs):
        for j, x in v.items():
            out[j] = out.get(j, 0) + c * x
    return {j: x for j, x in out.items() if x != 0}


def accumulate(shape, terms: Iterable) -> SparseMatrix:
    """Sum of ``coefficient * matrix`` over ``(coefficient, matrix)`` pairs, built in place."""
    out = SparseMatrix(shape)
    rows = out.rows
    for c, m in terms:
        c = Q(c)
        if c == 0:
            continue
        if m.shape != out.shape:
            raise ValueError(f"shape mismatch {m.shape} vs {out.shape}")
        for i, row in m.rows.items():
            acc = rows.setdefault(i, {})
            for j, x in row.items():
                acc[j] = acc.get(j, 0) + c * x
    for i in list(rows):
        r = {j: x for j, x in rows[i].items() if x != 0}
        if r:
            rows[i] = r
        else:
            del rows[i]
    return out


def vstack(mats: Sequence[SparseMatrix]) -> SparseMatrix:
    if not mats:
        raise ValueError("nothing to stack")
    m = mats[0].shape[1]
    out = SparseMatrix((sum(a.shape[0] for a in mats), m))
    off = 0
    for a in mats:
        if a.shape[1] != m:
            raise ValueError("column counts differ")
        for i, row in a.rows.items():
            out.rows[off + i] = dict(row)
        off += a.shape[0]
    return out
