"""Exact linear algebra over the rationals.

Two layers live here.

``SparseMatrix`` is a small, dependency-free sparse matrix over ``Fraction``
with fraction-free Gaussian elimination.  It is what the combinatorial code
uses for the many small systems (osp defining equations, multiplicity spaces,
membership tests).

The bulk routines (``IntMatrix``-style helpers taking lists of integer rows)
hand the work to FLINT through ``python-flint``.  They are exact as well; the
only modular step is ``ModularSubspace``, whose dimensions are lower bounds for
the rational ones and are always certified against an exact count by the
caller.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

import flint
import numpy as np

Vector = List[Fraction]
SparseRow = Dict[int, int]


# ---------------------------------------------------------------------------
# small exact sparse matrices


def _content(row: SparseRow) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _integer_row(row: Mapping[int, Fraction]) -> SparseRow:
    den = 1
    for v in row.values():
        den = lcm(den, Fraction(v).denominator)
    out = {c: int(Fraction(v) * den) for c, v in row.items() if v}
    g = _content(out)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


def _eliminate(rows: List[SparseRow]) -> Tuple[List[SparseRow], List[int]]:
    """Fraction-free forward elimination.

    Columns are visited left to right; within a column the pivot is the row
    with the fewest non-zeros (ties go to the lowest row index).  Returns the
    pivot rows, in pivot-column order, and the pivot columns.
    """
    active = [dict(r) for r in rows if r]
    pivots: List[SparseRow] = []
    pivot_cols: List[int] = []
    while active:
        col = min(min(r) for r in active)
        candidates = [i for i, r in enumerate(active) if col in r]
        best = min(candidates, key=lambda i: (len(active[i]), i))
        prow = active.pop(best)
        a = prow[col]
        remaining = []
        for r in active:
            b = r.get(col)
            if b is None:
                remaining.append(r)
                continue
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {c: fa * v for c, v in r.items()}
            for c, v in prow.items():
                nv = new.get(c, 0) - fb * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            if new:
                g2 = _content(new)
                if g2 > 1:
                    new = {c: v // g2 for c, v in new.items()}
                remaining.append(new)
        active = remaining
        pivots.append(prow)
        pivot_cols.append(col)
    return pivots, pivot_cols


def _back_substitute(pivots: List[SparseRow], pivot_cols: List[int]) -> List[Dict[int, Fraction]]:
    """Turn echelon rows into the reduced echelon form with unit pivots."""
    reduced: List[Dict[int, Fraction]] = []
    for row, col in zip(reversed(pivots), reversed(pivot_cols)):
        a = row[col]
        out = {c: Fraction(v, a) for c, v in row.items()}
        for other in reduced:
            ocol = min(other)
            f = out.get(ocol)
            if f:
                for c, v in other.items():
                    nv = out.get(c, 0) - f * v
                    if nv:
                        out[c] = nv
                    else:
                        out.pop(c, None)
        reduced.append(out)
    reduced.reverse()
    return reduced


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable sparse matrix with exact rational entries."""

    nrows: int
    ncols: int
    entries: Mapping[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.nrows and 0 <= j < self.ncols):
                raise IndexError(f"entry ({i}, {j}) outside a {self.nrows}x{self.ncols} matrix")
            v = Fraction(v)
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "SparseMatrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
        return cls(len(rows), ncols, entries)

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[Mapping[int, Fraction]], ncols: int) -> "SparseMatrix":
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in row.items()}
        return cls(len(rows), ncols, entries)

    def row_dicts(self) -> List[Dict[int, Fraction]]:
        rows: List[Dict[int, Fraction]] = [{} for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()})

    def matvec(self, v: Sequence) -> List[Fraction]:
        out = [Fraction(0)] * self.nrows
        for (i, j), a in self.entries.items():
            out[i] += a * v[j]
        return out

    def rref(self) -> Tuple[List[Dict[int, Fraction]], List[int]]:
        """Reduced row echelon form: non-zero rows and their pivot columns."""
        pivots, cols = _eliminate([_integer_row(r) for r in self.row_dicts()])
        return _back_substitute(pivots, cols), cols

    def rank(self) -> int:
        return len(_eliminate([_integer_row(r) for r in self.row_dicts()])[1])

    def nullspace(self) -> List[Vector]:
        """Basis of the right kernel, one vector per non-pivot column."""
        reduced, cols = self.rref()
        pivot_set = set(cols)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self.ncols
            v[free] = Fraction(1)
            for row, col in zip(reduced, cols):
                coeff = row.get(free)
                if coeff:
                    v[col] = -coeff
            basis.append(v)
        return basis


def rank(M: SparseMatrix) -> int:
    return M.rank()


def nullspace(M: SparseMatrix) -> List[Vector]:
    return M.nullspace()


def rref_of_vectors(vectors: Iterable[Sequence], length: int) -> List[Tuple[Fraction, ...]]:
    """Canonical reduced echelon basis of the span, as dense tuples."""
    rows = [{j: Fraction(v) for j, v in enumerate(vec) if v} for vec in vectors]
    reduced, _ = SparseMatrix.from_sparse_rows(rows, length).rref()
    return [tuple(row.get(j, Fraction(0)) for j in range(length)) for row in reduced]


# ---------------------------------------------------------------------------
# incremental exact echelon form and saturation


class Echelon:
    """A subspace kept in reduced echelon form, grown one vector at a time."""

    def __init__(self, length: int):
        self.length = length
        self.rows: Dict[int, Dict[int, Fraction]] = {}  # pivot column -> row

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping[int, Fraction]) -> Dict[int, Fraction]:
        out = {c: Fraction(v) for c, v in vec.items() if v}
        for col in sorted(set(out) & set(self.rows)):
            f = out.get(col)
            if not f:
                continue
            for c, v in self.rows[col].items():
                nv = out.get(c, 0) - f * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
        return out

    def contains(self, vec: Mapping[int, Fraction]) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: Mapping[int, Fraction]) -> bool:
        """Add ``vec``; return whether the dimension grew."""
        rem = self.reduce(vec)
        if not rem:
            return False
        col = min(rem)
        a = rem[col]
        rem = {c: v / a for c, v in rem.items()}
        for other in self.rows.values():
            f = other.get(col)
            if f:
                for c, v in rem.items():
                    nv = other.get(c, 0) - f * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self.rows[col] = rem
        return True

    def basis(self) -> List[Tuple[Fraction, ...]]:
        return [
            tuple(self.rows[col].get(j, Fraction(0)) for j in range(self.length))
            for col in sorted(self.rows)
        ]


def span_saturate(
    seed: Iterable[Sequence],
    step: Callable[[Tuple[Fraction, ...]], Iterable[Sequence]],
) -> List[Tuple[Fraction, ...]]:
    """Smallest subspace containing ``seed`` and closed under ``step``.

    ``step`` maps a vector to a list of vectors that must also lie in the
    subspace.  It is applied to every vector that enlarged the span; linearity
    of the intended closure makes that sufficient.  Returns the reduced
    echelon basis.
    """
    seed = [tuple(Fraction(x) for x in v) for v in seed]
    if not seed:
        return []
    length = len(seed[0])
    ech = Echelon(length)
    queue: List[Tuple[Fraction, ...]] = []
    for v in seed:
        if len(v) != length:
            raise ValueError("all vectors must have the same length")
        if ech.insert({j: x for j, x in enumerate(v) if x}):
            queue.append(v)
    while queue:
        v = queue.pop(0)
        for w in step(v):
            w = tuple(Fraction(x) for x in w)
            if ech.insert({j: x for j, x in enumerate(w) if x}):
                queue.append(w)
    return ech.basis()


# ---------------------------------------------------------------------------
# bulk exact routines (FLINT)


def _fmpz_mat(rows: Sequence[Sequence[int]] | np.ndarray, ncols: int | None = None) -> "flint.fmpz_mat":
    if isinstance(rows, flint.fmpz_mat):
        return rows
    if isinstance(rows, np.ndarray):
        r, c = rows.shape
        return flint.fmpz_mat(r, c, [int(x) for x in rows.ravel()])
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return flint.fmpz_mat(len(rows), ncols, [int(x) for row in rows for x in row])


def int_rank(rows: Sequence[Sequence[int]] | np.ndarray) -> int:
    """Exact rank of an integer matrix."""
    M = _fmpz_mat(rows)
    if M.nrows() == 0 or M.ncols() == 0:
        return 0
    return M.rank()


def int_rref(rows: Sequence[Sequence[int]] | np.ndarray) -> List[Tuple[Fraction, ...]]:
    """Reduced echelon basis (non-zero rows) of the row space, as Fractions."""
    M = _fmpz_mat(rows)
    if M.nrows() == 0:
        return []
    R, den, rk = M.rref()
    den = int(den)
    out = []
    for i in range(rk):
        out.append(tuple(Fraction(int(R[i, j]), den) for j in range(M.ncols())))
    return out


def int_nullspace(rows: Sequence[Sequence[int]] | np.ndarray, ncols: int | None = None) -> List[Tuple[int, ...]]:
    """Integer basis of the right kernel (primitive vectors)."""
    M = _fmpz_mat(rows, ncols)
    if M.ncols() == 0:
        return []
    if M.nrows() == 0:
        return [tuple(int(i == j) for j in range(M.ncols())) for i in range(M.ncols())]
    X, nullity = M.nullspace()
    out = []
    for j in range(nullity):
        col = [int(X[i, j]) for i in range(M.ncols())]
        g = 0
        for v in col:
            g = gcd(g, v)
        if g > 1:
            col = [v // g for v in col]
        out.append(tuple(col))
    return out


def same_row_space(a: Sequence[Sequence], b: Sequence[Sequence], length: int) -> bool:
    """Exact equality of two spans, compared through reduced echelon forms."""
    return _rref_fractions(a, length) == _rref_fractions(b, length)


def _rref_fractions(vectors: Sequence[Sequence], length: int) -> List[Tuple[Fraction, ...]]:
    ints = []
    for v in vectors:
        den = 1
        for x in v:
            den = lcm(den, Fraction(x).denominator)
        ints.append([int(Fraction(x) * den) for x in v])
    if not ints:
        return []
    return int_rref(ints)


# ---------------------------------------------------------------------------
# modular subspaces for large saturations

DEFAULT_PRIME = 16777213  # largest prime below 2**24; keeps int64 dot products exact


class ModularSubspace:
    """Reduced echelon form over ``GF(p)`` of a growing set of integer vectors.

    Rows are dense ``int64`` arrays.  Alongside every accepted vector the
    caller's exact witness is stored; witnesses independent modulo ``p`` are
    independent over the rationals, so ``len(self)`` is a certified lower
    bound for the rational dimension of the span.
    """

    def __init__(self, length: int, prime: int = DEFAULT_PRIME):
        self.length = length
        self.p = prime
        self.basis = np.zeros((0, length), dtype=np.int64)
        self.pivots: List[int] = []
        self.witnesses: List[object] = []

    def __len__(self) -> int:
        return len(self.pivots)

    def _reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.mod(v, self.p)
        if self.pivots:
            coeff = v[self.pivots]
            if coeff.any():
                v = np.mod(v - np.mod(coeff @ self.basis, self.p), self.p)
        return v

    def contains(self, v: np.ndarray) -> bool:
        return not self._reduce(v).any()

    def insert(self, v: np.ndarray, witness: object = None) -> bool:
        v = self._reduce(np.asarray(v, dtype=np.int64))
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        col = int(nz[0])
        inv = pow(int(v[col]), -1, self.p)
        v = np.mod(v * inv, self.p)
        if self.pivots:
            f = self.basis[:, col].copy()
            if f.any():
                self.basis = np.mod(self.basis - np.mod(np.outer(f, v), self.p), self.p)
        self.basis = np.vstack([self.basis, v])
        self.pivots.append(col)
        self.witnesses.append(witness)
        return True


def modular_rank(rows: np.ndarray, prime: int = DEFAULT_PRIME) -> int:
    """Rank modulo ``prime``; a lower bound for the rational rank of integer rows."""
    rows = np.asarray(rows)
    if rows.size == 0:
        return 0
    r, c = rows.shape
    M = flint.nmod_mat(r, c, [int(x) % prime for x in rows.ravel()], prime)
    return M.rank()

