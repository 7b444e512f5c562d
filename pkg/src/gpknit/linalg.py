"""Exact rational linear algebra.

Matrices are numpy object arrays whose entries are exact rationals
(``gmpy2.mpq`` when available, otherwise ``fractions.Fraction``).  Numpy is
used for shapes, slicing and products; elimination runs on sparse rows
(dicts of column -> value) because the systems arising from Hom
computations are large and very sparse.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

try:  # pragma: no cover - depends on the environment
    import gmpy2

    Q = gmpy2.mpq
except ImportError:  # pragma: no cover
    Q = Fraction

ZERO = Q(0)
ONE = Q(1)

SparseRow = dict


def to_rational(x) -> object:
    """Convert ints, Fractions or strings like ``"3/4"`` to the rational type."""
    if isinstance(x, str):
        return Q(Fraction(x))
    if isinstance(x, Fraction):
        return Q(x.numerator, x.denominator)
    return Q(x)


def rational_str(x) -> str:
    f = Fraction(int(x.numerator), int(x.denominator))
    return str(f)


def matrix(rows: Sequence[Sequence] | np.ndarray, shape: tuple[int, int] | None = None) -> np.ndarray:
    if shape is not None and (shape[0] == 0 or shape[1] == 0):
        return zeros(*shape)
    out = np.array([[to_rational(x) for x in row] for row in rows], dtype=object)
    if out.ndim != 2:
        if shape is None:
            raise ValueError("cannot infer matrix shape")
        out = out.reshape(shape)
    if shape is not None and out.shape != tuple(shape):
        raise ValueError(f"expected shape {shape}, got {out.shape}")
    return out


def zeros(r: int, c: int) -> np.ndarray:
    out = np.empty((r, c), dtype=object)
    out.fill(ZERO)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product that also behaves for empty inner dimensions."""
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return a.dot(b)


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i : i + b.shape[0], j : j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def hstack(blocks: Sequence[np.ndarray], rows: int) -> np.ndarray:
    blocks = [b for b in blocks if b.shape[1]]
    if not blocks:
        return zeros(rows, 0)
    return np.hstack(blocks)


def vstack(blocks: Sequence[np.ndarray], cols: int) -> np.ndarray:
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return zeros(0, cols)
    return np.vstack(blocks)


# -- sparse elimination -------------------------------------------------


def sparse_rows(a: np.ndarray) -> list[SparseRow]:
    out = []
    for i in range(a.shape[0]):
        row = {j: x for j, x in enumerate(a[i]) if x != 0}
        if row:
            out.append(row)
    return out


class Echelon:
    """Incremental row echelon form over the rationals.

    Pivot rows are normalised (leading coefficient 1) but only reduced
    forwards; back substitution happens when a nullspace is requested.
    """

    __slots__ = ("ncols", "pivots")

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: SparseRow) -> SparseRow:
        pivots = self.pivots
        row = dict(row)
        heap = [c for c in row if c in pivots]
        if not heap:
            return row
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            coef = row.get(c)
            if coef is None:
                continue
            prow = pivots.get(c)
            if prow is None:
                continue
            del row[c]
            for k, v in prow.items():
                if k == c:
                    continue
                old = row.get(k)
                if old is None:
                    row[k] = -coef * v
                    if k in pivots:
                        heapq.heappush(heap, k)
                else:
                    nv = old - coef * v
                    if nv == 0:
                        del row[k]
                    else:
                        row[k] = nv
        return row

    def add(self, row: SparseRow) -> bool:
        """Add a row; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        lead = row[c]
        if lead != 1:
            inv = ONE / lead
            row = {k: v * inv for k, v in row.items()}
        self.pivots[c] = row
        return True

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def reduced_pivots(self) -> dict[int, SparseRow]:
        """Fully reduced pivot rows (each contains no other pivot column)."""
        done: dict[int, SparseRow] = {}
        for c in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[c])
            for k in [k for k in row if k != c and k in done]:
                coef = row.pop(k)
                for j, v in done[k].items():
                    if j == k:
                        continue
                    nv = row.get(j, ZERO) - coef * v
                    if nv == 0:
                        row.pop(j, None)
                    else:
                        row[j] = nv
            done[c] = row
        return done

    def nullspace(self) -> list[SparseRow]:
        """Sparse basis of the solution space of the homogeneous system."""
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis: list[SparseRow] = [{f: ONE} for f in free]
        index = {f: i for i, f in enumerate(free)}
        for p, row in self.reduced_pivots().items():
            for k, v in row.items():
                if k != p:
                    basis[index[k]][p] = -v
        return basis


def echelon(rows: Iterable[SparseRow], ncols: int) -> Echelon:
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
    return e


def rank(a: np.ndarray) -> int:
    return echelon(sparse_rows(a), a.shape[1]).rank


def nullspace(a: np.ndarray) -> np.ndarray:
    """Columns form a basis of ``{x : a x = 0}``."""
    basis = echelon(sparse_rows(a), a.shape[1]).nullspace()
    out = zeros(a.shape[1], len(basis))
    for j, vec in enumerate(basis):
        for i, v in vec.items():
            out[i, j] = v
    return out


def column_basis(a: np.ndarray) -> np.ndarray:
    """Columns of ``a`` forming a basis of its column space."""
    e = Echelon(a.shape[0])
    keep = []
    for j in range(a.shape[1]):
        col = {i: x for i, x in enumerate(a[:, j]) if x != 0}
        if col and e.add(col):
            keep.append(j)
    return a[:, keep] if keep else zeros(a.shape[0], 0)


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Some ``x`` with ``a x = b``, or None when the system is inconsistent."""
    n = a.shape[1]
    rows = []
    for i in range(a.shape[0]):
        row = {k: v for k, v in enumerate(a[i]) if v != 0}
        for j, v in enumerate(b[i]):
            if v != 0:
                row[n + j] = v
        if row:
            rows.append(row)
    e = echelon(rows, n + b.shape[1])
    if any(p >= n for p in e.pivots):
        return None
    x = zeros(n, b.shape[1])
    for p, row in e.reduced_pivots().items():
        for k, v in row.items():
            if k >= n:
                x[p, k - n] = v
    return x


def coordinates(span: np.ndarray) -> tuple[list[int], np.ndarray | None]:
    """Rows r and a matrix C with ``y = span @ (C @ y[r])`` for every y in the span.

    ``span`` must have independent columns.  C is None when ``span[r]`` is
    the identity (as for nullspace bases), so coordinates are just ``y[r]``.
    """
    k = span.shape[1]
    e = Echelon(k)
    rows = []
    for i in range(span.shape[0]):
        if len(rows) == k:
            break
        if e.add({j: x for j, x in enumerate(span[i]) if x != 0}):
            rows.append(i)
    sub = span[rows]
    if equal(sub, identity(k)):
        return rows, None
    return rows, inverse(sub)


def inverse(a: np.ndarray) -> np.ndarray | None:
    if a.shape[0] != a.shape[1]:
        return None
    return solve(a, identity(a.shape[0])) if rank(a) == a.shape[0] else None


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b) if a.size and b.size else zeros(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
