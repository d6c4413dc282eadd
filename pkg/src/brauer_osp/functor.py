"""The functor from Brauer diagrams to linear maps on tensor powers of a superspace.

A diagram ``k -> l`` becomes a ``dim^l x dim^k`` integer matrix in the
tensor-product basis (row-major multi-index, leftmost factor most
significant).  Diagrams are factored into a permutation, a row of caps, a row
of cups and a permutation; permutations are in turn words in adjacent
transpositions, each of which is the signed swap ``tau``.  So every matrix is
assembled from the four elementary morphisms only.

The module also provides an independent oracle: the dimension of the
centralizer of ``osp(V)`` (optionally with the reflection that generates the
component group) in ``End(V^{(x)r})``, computed without reference to
diagrams beyond the symmetric group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, List, NamedTuple, Sequence, Tuple

import flint
import numpy as np
import scipy.sparse as sps

from . import algebra as al
from . import combinatorics as cb
from . import diagram as dg
from .algebra import Element
from .combinatorics import Partition, Permutation
from .diagram import BrauerDiagram
from .linalg import SparseMatrix, int_nullspace

DEFAULT_BUDGET = 10 ** 7


class BudgetExceeded(ValueError):
    """A requested computation would exceed the configured size budget."""


# ---------------------------------------------------------------------------
# the superspace


@dataclass(frozen=True)
class SuperSpace:
    """``V = C^{m|2n}`` with an orthonormal even part and a standard symplectic odd part."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")

    @property
    def dim(self) -> int:
        return self.m + 2 * self.n

    @property
    def delta(self) -> Fraction:
        return Fraction(self.m - 2 * self.n)

    @property
    def parity(self) -> Tuple[int, ...]:
        return (0,) * self.m + (1,) * (2 * self.n)

    @property
    def gram(self) -> Tuple[Tuple[int, ...], ...]:
        d, m, n = self.dim, self.m, self.n
        g = [[0] * d for _ in range(d)]
        for i in range(m):
            g[i][i] = 1
        for i in range(n):
            g[m + i][m + n + i] = 1
            g[m + n + i][m + i] = -1
        return tuple(tuple(row) for row in g)

    @property
    def dual(self) -> Tuple[Tuple[int, ...], ...]:
        """Columns are the dual basis: ``(dual[:, a], e_b) = delta_ab``.

        The matrix is ``(G^T)^-1``; for this form it equals ``G`` itself and
        is integral.
        """
        G = flint.fmpq_mat([list(row) for row in self.gram]) if self.dim else None
        if G is None:
            return ()
        D = G.transpose().inv()
        out = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                q = D[i, j]
                assert q.q == 1
                row.append(int(q.p))
            out.append(tuple(row))
        return tuple(out)


def make_superspace(m: int, n: int) -> SuperSpace:
    return SuperSpace(m, n)


# ---------------------------------------------------------------------------
# matrices of morphisms


@dataclass(frozen=True)
class EndoMatrix:
    """The matrix of a map ``V^{(x)k} -> V^{(x)l}``, scaled to integers.

    ``matrix / denominator`` is the actual map.
    """

    k: int
    l: int
    dim: int
    matrix: sps.csr_matrix
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.dim ** self.l, self.dim ** self.k):
            raise ValueError("matrix shape does not match (k, l)")

    def is_zero(self) -> bool:
        return self.matrix.count_nonzero() == 0

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        if (self.k, self.l, self.dim) != (other.k, other.l, other.dim):
            return False
        diff = self.matrix * other.denominator - other.matrix * self.denominator
        return diff.count_nonzero() == 0

    __hash__ = None  # type: ignore[assignment]


def _kron_all(mats: Sequence[sps.spmatrix]) -> sps.csr_matrix:
    out = sps.identity(1, dtype=np.int64, format="csr")
    for mat in mats:
        out = sps.kron(out, mat, format="csr")
    return out


def _identity(sp: SuperSpace, k: int) -> sps.csr_matrix:
    return sps.identity(sp.dim ** k, dtype=np.int64, format="csr")


def _tau(sp: SuperSpace) -> sps.csr_matrix:
    d, par = sp.dim, sp.parity
    rows, cols, vals = [], [], []
    for a in range(d):
        for b in range(d):
            rows.append(b * d + a)
            cols.append(a * d + b)
            vals.append(-1 if par[a] and par[b] else 1)
    return sps.csr_matrix((vals, (rows, cols)), shape=(d * d, d * d), dtype=np.int64)


def _cap(sp: SuperSpace) -> sps.csr_matrix:
    d, g = sp.dim, sp.gram
    vals = [g[a][b] for a in range(d) for b in range(d)]
    return sps.csr_matrix(np.array([vals], dtype=np.int64))


def _cup(sp: SuperSpace) -> sps.csr_matrix:
    d, D = sp.dim, sp.dual
    col = np.zeros((d * d, 1), dtype=np.int64)
    for a in range(d):
        for c in range(d):
            col[a * d + c, 0] += D[c][a]
    return sps.csr_matrix(col)


def eval_elementary(sp: SuperSpace, which: str) -> EndoMatrix:
    """``I`` (identity of V), ``X`` (signed swap), ``A0`` (the form), ``U0`` (the canonical element)."""
    d = sp.dim
    if which == "I":
        return EndoMatrix(1, 1, d, _identity(sp, 1))
    if which == "X":
        return EndoMatrix(2, 2, d, _tau(sp))
    if which == "A0":
        return EndoMatrix(2, 0, d, _cap(sp))
    if which == "U0":
        return EndoMatrix(0, 2, d, _cup(sp))
    raise ValueError(f"unknown elementary morphism {which!r}; expected I, X, A0 or U0")


# ---------------------------------------------------------------------------
# factorising diagrams


class NormalForm(NamedTuple):
    sigma_top: Permutation
    cups: int
    through: int
    caps: int
    sigma_bot: Permutation


def normal_form_factorize(d: BrauerDiagram) -> NormalForm:
    """``d = sigma_top o (I_t (x) U0^u) o (I_t (x) A0^a) o sigma_bot``.

    Through strands are ordered by their bottom endpoint; caps and cups by
    their smaller endpoint.
    """
    k, l = d.k, d.l
    through: List[Tuple[int, int]] = []  # (bottom, top), 1-based
    caps: List[Tuple[int, int]] = []
    cups: List[Tuple[int, int]] = []
    for v, w in enumerate(d.match):
        if v > w:
            continue
        v_top, w_top = v < l, w < l
        if v_top and w_top:
            cups.append((v + 1, w + 1))
        elif not v_top and not w_top:
            caps.append((v - l + 1, w - l + 1))
        else:
            through.append((w - l + 1, v + 1))
    through.sort()
    caps.sort()
    cups.sort()
    t = len(through)
    bot = [0] * k
    for pos, (b, _) in enumerate(through):
        bot[b - 1] = pos + 1
    for j, (a, b) in enumerate(caps):
        bot[a - 1], bot[b - 1] = t + 2 * j + 1, t + 2 * j + 2
    top = [0] * l
    for pos, (_, c) in enumerate(through):
        top[pos] = c
    for j, (a, b) in enumerate(cups):
        top[t + 2 * j], top[t + 2 * j + 1] = a, b
    return NormalForm(tuple(top), len(cups), t, len(caps), tuple(bot))


def recompose(nf: NormalForm) -> BrauerDiagram:
    t = nf.through
    cap_row = dg.tensor(dg.identity(t), dg.tensor_all([dg.cap()] * nf.caps))
    cup_row = dg.tensor(dg.identity(t), dg.tensor_all([dg.cup()] * nf.cups))
    out = dg.compose(cup_row, cap_row)
    assert out.loop_count == 0
    out = dg.compose(dg.perm_to_diagram(nf.sigma_top), out.diagram)
    out = dg.compose(out.diagram, dg.perm_to_diagram(nf.sigma_bot))
    assert out.loop_count == 0
    return out.diagram


# ---------------------------------------------------------------------------
# evaluation


class _SignedPerm(NamedTuple):
    target: np.ndarray
    sign: np.ndarray


@lru_cache(maxsize=None)
def _adjacent_swap(sp: SuperSpace, k: int, i: int) -> _SignedPerm:
    """``I^{i-1} (x) tau (x) I^{k-i-1}`` as a signed permutation of basis indices."""
    d, par = sp.dim, np.array(sp.parity, dtype=np.int64)
    idx = np.arange(d ** k, dtype=np.int64)
    digits = [(idx // d ** (k - 1 - p)) % d for p in range(k)]
    a, b = digits[i - 1], digits[i]
    target = idx + (b - a) * d ** (k - i) + (a - b) * d ** (k - 1 - i)
    sign = np.where(par[a] & par[b], -1, 1).astype(np.int64)
    return _SignedPerm(target, sign)


@lru_cache(maxsize=4096)
def _perm_matrix(sp: SuperSpace, p: Permutation) -> sps.csr_matrix:
    k = len(p)
    size = sp.dim ** k
    target = np.arange(size, dtype=np.int64)
    sign = np.ones(size, dtype=np.int64)
    # p = s_{w1} o s_{w2} o ...; the rightmost factor acts first.
    for i in reversed(cb.adjacent_word(p)):
        sw = _adjacent_swap(sp, k, i)
        sign = sign * sw.sign[target]
        target = sw.target[target]
    return sps.csr_matrix((sign, (target, np.arange(size))), shape=(size, size), dtype=np.int64)


@lru_cache(maxsize=None)
def _cap_row(sp: SuperSpace, t: int, a: int) -> sps.csr_matrix:
    return sps.kron(_identity(sp, t), _kron_all([_cap(sp)] * a), format="csr")


@lru_cache(maxsize=None)
def _cup_row(sp: SuperSpace, t: int, u: int) -> sps.csr_matrix:
    return sps.kron(_identity(sp, t), _kron_all([_cup(sp)] * u), format="csr")


def _diagram_matrix(sp: SuperSpace, d: BrauerDiagram) -> sps.csr_matrix:
    nf = normal_form_factorize(d)
    return (
        _perm_matrix(sp, nf.sigma_top)
        @ _cup_row(sp, nf.through, nf.cups)
        @ _cap_row(sp, nf.through, nf.caps)
        @ _perm_matrix(sp, nf.sigma_bot)
    ).tocsr()


def eval_diagram(sp: SuperSpace, d: BrauerDiagram) -> EndoMatrix:
    return EndoMatrix(d.k, d.l, sp.dim, _diagram_matrix(sp, d))


def eval_element(sp: SuperSpace, x: Element) -> EndoMatrix:
    if x.delta != sp.delta:
        raise ValueError(f"element has loop value {x.delta}, the space needs {sp.delta}")
    shape = (sp.dim ** x.l, sp.dim ** x.k)
    den = lcm(1, *(c.denominator for c in x.terms.values()))
    coeffs = {d: int(c * den) for d, c in x.terms.items()}
    bound = max((abs(c) for c in coeffs.values()), default=0) * max(1, len(coeffs))
    dtype = np.int64 if bound < 2 ** 62 else object
    total = sps.csr_matrix(shape, dtype=dtype)
    for d, c in coeffs.items():
        total = total + _diagram_matrix(sp, d).astype(dtype) * c
    total.eliminate_zeros()
    return EndoMatrix(x.k, x.l, sp.dim, total.tocsr(), den)


# ---------------------------------------------------------------------------
# the matrix of F_r^r and its kernel


def _check_budget(sp: SuperSpace, r: int, budget: int) -> None:
    entries = sp.dim ** (2 * r)
    if entries > budget:
        raise BudgetExceeded(
            f"End(V^(x){r}) has {entries} entries for dim V = {sp.dim}, above the budget {budget}"
        )


def f_matrix(sp: SuperSpace, r: int, budget: int = DEFAULT_BUDGET) -> sps.csr_matrix:
    """Rows are the flattened matrices of the diagrams of ``B_r``, in enumeration order."""
    _check_budget(sp, r, budget)
    cols = sp.dim ** (2 * r)
    rows = []
    for d in al.diagram_space(r, r).diagrams:
        mat = _diagram_matrix(sp, d).tocoo()
        flat = mat.row.astype(np.int64) * sp.dim ** r + mat.col
        rows.append(sps.csr_matrix((mat.data, (np.zeros_like(flat), flat)), shape=(1, cols), dtype=np.int64))
    return sps.vstack(rows, format="csr")


def to_sparse_matrix(M: sps.spmatrix) -> SparseMatrix:
    """Convert to the exact ``SparseMatrix`` of :mod:`linalg`."""
    M = M.tocsr()
    rows = []
    for i in range(M.shape[0]):
        lo, hi = M.indptr[i], M.indptr[i + 1]
        rows.append({int(j): Fraction(int(v)) for j, v in zip(M.indices[lo:hi], M.data[lo:hi]) if v})
    return SparseMatrix.from_sparse_rows(rows, M.shape[1])


def _gram(sp: SuperSpace, r: int, budget: int) -> flint.fmpz_mat:
    """``M M^T``: same rank and the same left kernel as ``M`` over the rationals."""
    M = f_matrix(sp, r, budget)
    G = (M @ M.T).toarray()
    return flint.fmpz_mat(G.tolist())


@lru_cache(maxsize=None)
def _rank_cached(m: int, n: int, r: int, budget: int) -> int:
    sp = SuperSpace(m, n)
    if sp.dim == 0:
        return 0
    return _gram(sp, r, budget).rank()


def rank_f(sp: SuperSpace, r: int, budget: int = DEFAULT_BUDGET) -> int:
    return _rank_cached(sp.m, sp.n, r, budget)


@lru_cache(maxsize=None)
def _kernel_cached(m: int, n: int, r: int, budget: int) -> Tuple[Tuple[int, ...], ...]:
    sp = SuperSpace(m, n)
    size = len(al.diagram_space(r, r))
    if sp.dim == 0:
        return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    return tuple(int_nullspace(_gram(sp, r, budget)))


def ker_f_vectors(sp: SuperSpace, r: int, budget: int = DEFAULT_BUDGET) -> List[Tuple[int, ...]]:
    """Integer coordinate vectors (over the diagram basis) spanning the kernel."""
    return list(_kernel_cached(sp.m, sp.n, r, budget))


def ker_f_basis(sp: SuperSpace, r: int, budget: int = DEFAULT_BUDGET) -> List[Element]:
    return [Element.from_vector(r, r, sp.delta, v) for v in ker_f_vectors(sp, r, budget)]


def in_kernel(sp: SuperSpace, x: Element) -> bool:
    return eval_element(sp, x).is_zero()


# ---------------------------------------------------------------------------
# the Lie superalgebra and its action


def _parity_of_entry(par: Sequence[int], a: int, b: int) -> int:
    return (par[a] + par[b]) % 2


def _osp_basis_for(gram: Sequence[Sequence[int]], par: Sequence[int]) -> List[Tuple[int, np.ndarray]]:
    """Homogeneous basis of the Lie superalgebra preserving ``gram``, as integer matrices."""
    d = len(par)
    out: List[Tuple[int, np.ndarray]] = []
    for p in (0, 1):
        unknowns = [(a, b) for a in range(d) for b in range(d) if _parity_of_entry(par, a, b) == p]
        if not unknowns:
            continue
        index = {ab: i for i, ab in enumerate(unknowns)}
        rows = []
        for u in range(d):
            for v in range(d):
                row: Dict[int, Fraction] = {}
                sign = -1 if p and par[u] else 1
                for a in range(d):
                    if (a, u) in index and gram[a][v]:
                        row[index[(a, u)]] = row.get(index[(a, u)], Fraction(0)) + gram[a][v]
                    if (a, v) in index and gram[u][a]:
                        row[index[(a, v)]] = row.get(index[(a, v)], Fraction(0)) + sign * gram[u][a]
                rows.append(row)
        for vec in SparseMatrix.from_sparse_rows(rows, len(unknowns)).nullspace():
            den = lcm(1, *(c.denominator for c in vec))
            mat = np.zeros((d, d), dtype=np.int64)
            for (a, b), c in zip(unknowns, vec):
                mat[a, b] = int(c * den)
            out.append((p, mat))
    return out


def osp_basis(sp: SuperSpace) -> List[Tuple[int, EndoMatrix]]:
    """Homogeneous basis of ``osp(V)`` as ``(parity, matrix)`` pairs.

    ``X`` of parity ``p`` lies in ``osp(V)`` when
    ``(X u, v) + (-1)^{p [u]} (u, X v) = 0`` for all basis vectors.
    """
    d = sp.dim
    return [(p, EndoMatrix(1, 1, d, sps.csr_matrix(X))) for p, X in _osp_basis_for(sp.gram, sp.parity)]


def osp_dim_formula(m: int, n: int) -> int:
    return m * (m - 1) // 2 + n * (2 * n + 1) + 2 * m * n


def _leibniz(par: Sequence[int], X: sps.spmatrix, parity: int, r: int) -> sps.csr_matrix:
    d = len(par)
    if r == 0:
        return sps.csr_matrix((1, 1), dtype=np.int64)
    one = sps.identity(d, dtype=np.int64, format="csr")
    left = sps.diags([(-1) ** q for q in par], dtype=np.int64, format="csr") if parity else one
    total = sps.csr_matrix((d ** r, d ** r), dtype=np.int64)
    for i in range(r):
        total = total + _kron_all([left] * i + [sps.csr_matrix(X)] + [one] * (r - i - 1))
    return total.tocsr()


def lie_action(sp: SuperSpace, X: EndoMatrix, parity: int, r: int) -> sps.csr_matrix:
    """``X`` acting on ``V^{(x)r}`` by the super Leibniz rule."""
    return _leibniz(sp.parity, X.matrix, parity, r)


def reflection(sp: SuperSpace, r: int) -> sps.csr_matrix:
    """``rho^{(x)r}`` for ``rho = diag(-1, 1, ..., 1)`` on ``V``."""
    diag = [1] * sp.dim
    diag[0] = -1
    return _kron_all([sps.diags(diag, dtype=np.int64, format="csr")] * r)


def supercommutator_vanishes(sp: SuperSpace, X: EndoMatrix, parity: int, g: EndoMatrix) -> bool:
    """``X.g = X g - g X = 0`` for an even morphism ``g``."""
    out = lie_action(sp, X, parity, g.l) @ g.matrix - g.matrix @ lie_action(sp, X, parity, g.k)
    return out.count_nonzero() == 0


# ---------------------------------------------------------------------------
# the centralizer oracle
#
# The oracle works in a second basis of V in which the even form is split:
# e_i pairs with e_{m+1-i} (and the middle vector of odd m with itself).  The
# diagonal torus of osp(V) is then diagonal, every S_r-isotypic pivot vector is
# a weight vector, and an invariant map between multiplicity spaces can only
# connect vectors of equal weight.  That restriction shrinks the linear
# systems by orders of magnitude.  The dimension does not depend on the basis.


class _SplitForm(NamedTuple):
    parity: Tuple[int, ...]
    gram: Tuple[Tuple[int, ...], ...]
    rho: Tuple[Tuple[int, ...], ...]  # a reflection of determinant -1 in O(m)
    torus: Tuple[Tuple[int, ...], ...]  # diagonals of a maximal torus


def _split_form(sp: SuperSpace) -> _SplitForm:
    d, m, n = sp.dim, sp.m, sp.n
    g = [[0] * d for _ in range(d)]
    for i in range(m):
        g[i][m - 1 - i] = 1
    for i in range(n):
        g[m + i][m + n + i] = 1
        g[m + n + i][m + i] = -1
    rho = [[int(i == j) for j in range(d)] for i in range(d)]
    if m % 2:
        rho[m // 2][m // 2] = -1
    elif m:
        # swap the hyperbolic pair e_1, e_m
        rho[0][0] = rho[m - 1][m - 1] = 0
        rho[0][m - 1] = rho[m - 1][0] = 1
    torus = []
    for i in range(m // 2):
        t = [0] * d
        t[i], t[m - 1 - i] = 1, -1
        torus.append(tuple(t))
    for i in range(n):
        t = [0] * d
        t[m + i], t[m + n + i] = 1, -1
        torus.append(tuple(t))
    return _SplitForm(sp.parity, tuple(map(tuple, g)), tuple(map(tuple, rho)), tuple(torus))


def _exact_solve(B: flint.fmpz_mat, rhs: flint.fmpz_mat) -> flint.fmpq_mat:
    """``Y`` with ``B Y = rhs`` for ``B`` of full column rank; checked exactly."""
    d = B.ncols()
    R, _den, rank = B.transpose().rref()
    assert rank == d
    rows = _pivots(R, rank)
    sub = flint.fmpq_mat([[B[i, j] for j in range(d)] for i in rows])
    sub_rhs = flint.fmpq_mat([[rhs[i, j] for j in range(rhs.ncols())] for i in rows])
    Y = sub.solve(sub_rhs)
    if flint.fmpq_mat(B) * Y != flint.fmpq_mat(rhs):
        raise ArithmeticError("subspace is not invariant")
    return Y


def _pivots(R: flint.fmpz_mat, rank: int) -> List[int]:
    cols = []
    col = 0
    for i in range(rank):
        while R[i, col] == 0:
            col += 1
        cols.append(col)
    return cols


def _to_fmpz(M: sps.spmatrix) -> flint.fmpz_mat:
    return flint.fmpz_mat(M.toarray().tolist())


def _scaled(M: flint.fmpq_mat) -> Tuple[np.ndarray, int]:
    """Integer array ``A`` and denominator ``q`` with ``M = A / q``."""
    entries = [[M[i, j] for j in range(M.ncols())] for i in range(M.nrows())]
    q = lcm(1, *(int(x.q) for row in entries for x in row))
    A = np.array([[int(x.p) * (q // int(x.q)) for x in row] for row in entries], dtype=object)
    return A.reshape(M.nrows(), M.ncols()), q


class _Isotypic(NamedTuple):
    shape: Partition
    parities: Tuple[int, ...]
    weights: Tuple[int, ...]  # an integer key per pivot vector
    actions: Tuple[Tuple[np.ndarray, int], ...]  # restricted osp basis, scaled
    action_parities: Tuple[int, ...]
    rho: Tuple[np.ndarray, int] | None


def _isotypic_pieces(sp: SuperSpace, r: int) -> List[_Isotypic]:
    form = _split_form(sp)
    d, size = sp.dim, sp.dim ** r
    lie = _osp_basis_for(form.gram, form.parity)
    for t in form.torus:
        T = np.diag(t)
        G = np.array(form.gram)
        assert not (T.T @ G + G @ T).any(), "torus does not preserve the form"
    lie_mats = [(p, _leibniz(form.parity, X, p, r)) for p, X in lie]
    rho_mat = _kron_all([sps.csr_matrix(np.array(form.rho, dtype=np.int64))] * r) if sp.m else None
    digits = np.array([[(x // d ** (r - 1 - i)) % d for i in range(r)] for x in range(size)], dtype=np.int64)
    vec_par = (np.array(form.parity, dtype=np.int64)[digits].sum(axis=1) % 2).tolist()
    if form.torus:
        tor = np.array(form.torus, dtype=np.int64).T  # d x rank
        wt = tor[digits].sum(axis=1)  # size x rank
        keys: Dict[Tuple[int, ...], int] = {}
        vec_wt = [keys.setdefault(tuple(w), len(keys)) for w in wt.tolist()]
    else:
        vec_wt = [0] * size
    pieces = []
    for lam in cb.partitions(r):
        t = cb.row_reading_tableau(lam)
        P = sps.csr_matrix((size, size), dtype=np.int64)
        for p, coeff in al.young_symmetrizer_group(t).terms.items():
            P = P + _perm_matrix(sp, p) * int(coeff)
        Pz = _to_fmpz(P)
        R, _den, rank = Pz.rref()
        if rank == 0:
            continue
        cols = _pivots(R, rank)
        Bnp = P[:, cols].toarray()
        B = flint.fmpz_mat(Bnp.tolist())
        Bs = sps.csr_matrix(Bnp)
        actions = tuple(_scaled(_exact_solve(B, _to_fmpz(XW @ Bs))) for _p, XW in lie_mats)
        rho = _scaled(_exact_solve(B, _to_fmpz(rho_mat @ Bs))) if rho_mat is not None else None
        pieces.append(
            _Isotypic(
                lam,
                tuple(vec_par[j] for j in cols),
                tuple(vec_wt[j] for j in cols),
                actions,
                tuple(p for p, _ in lie_mats),
                rho,
            )
        )
    return pieces


def _hom_dim(src: _Isotypic, dst: _Isotypic, group: bool) -> int:
    """Dimension of the invariant maps from the ``src`` multiplicity space to ``dst``'s."""
    nd, ns = len(dst.parities), len(src.parities)
    total = 0
    for zp in (0, 1):
        unknowns = [
            (i, j)
            for i in range(nd)
            for j in range(ns)
            if (dst.parities[i] + src.parities[j]) % 2 == zp and dst.weights[i] == src.weights[j]
        ]
        if not unknowns:
            continue
        ops = [
            (Ld, Rs, -1 if (xp and zp) else 1)
            for Ld, Rs, xp in zip(dst.actions, src.actions, dst.action_parities)
        ]
        if group and dst.rho is not None:
            ops.append((dst.rho, src.rho, 1))
        blocks = []
        for (L, ql), (R, qr), sign in ops:
            # equations (L Z - sign Z R)[i', j'] = 0, scaled by ql * qr
            E = np.zeros((nd * ns, len(unknowns)), dtype=object)
            for c, (i, j) in enumerate(unknowns):
                E[np.arange(nd) * ns + j, c] += L[:, i] * qr
                E[i * ns + np.arange(ns), c] -= sign * ql * R[j, :]
            blocks.append(E[np.any(E != 0, axis=1)])
        eqs = np.vstack(blocks) if blocks else np.zeros((0, len(unknowns)), dtype=object)
        rank = flint.fmpz_mat(eqs.tolist()).rank() if eqs.shape[0] else 0
        total += len(unknowns) - rank
    return total


def _centralizer_dim(sp: SuperSpace, r: int, group: bool, budget: int) -> int:
    _check_budget(sp, r, budget)
    if sp.dim == 0 or r == 0:
        return 1
    pieces = _isotypic_pieces(sp, r)
    total = 0
    for src in pieces:
        for dst in pieces:
            h = _hom_dim(src, dst, group)
            if h:
                total += cb.specht_dim(src.shape) * cb.specht_dim(dst.shape) * h
    return total


def centralizer_dim_group(sp: SuperSpace, r: int, budget: int = DEFAULT_BUDGET) -> int:
    """``dim End_{OSp(V)}(V^{(x)r})`` from the ``osp`` action plus a reflection."""
    return _centralizer_dim(sp, r, group=True, budget=budget)


def centralizer_dim_liealg(sp: SuperSpace, r: int, budget: int = DEFAULT_BUDGET) -> int:
    """``dim End_{osp(V)}(V^{(x)r})``."""
    return _centralizer_dim(sp, r, group=False, budget=budget)


def centralizer_dim_direct(sp: SuperSpace, r: int, group: bool) -> int:
    """Same dimension from the full linear system on ``End(V^{(x)r})``; small cases only."""
    size = sp.dim ** r
    if size > 30:
        raise BudgetExceeded("the direct centralizer system is meant for dim V^r <= 30")
    par = sp.parity
    vec_par = [sum(par[(x // sp.dim ** (r - 1 - i)) % sp.dim] for i in range(r)) % 2 for x in range(size)]
    mats = [(p, lie_action(sp, X, p, r).toarray()) for p, X in osp_basis(sp)]
    rho = reflection(sp, r).toarray() if group and sp.m >= 1 else None
    total = 0
    for zp in (0, 1):
        unknowns = [(i, j) for i in range(size) for j in range(size) if (vec_par[i] + vec_par[j]) % 2 == zp]
        if not unknowns:
            continue
        index = {ij: k for k, ij in enumerate(unknowns)}
        eqs = []
        ops = [(X, -1 if (p and zp) else 1) for p, X in mats]
        if rho is not None:
            ops.append((rho, 1))
        for X, sign in ops:
            for i in range(size):
                for j in range(size):
                    row = [0] * len(unknowns)
                    for a in range(size):
                        if X[i, a] and (a, j) in index:
                            row[index[(a, j)]] += int(X[i, a])
                        if X[a, j] and (i, a) in index:
                            row[index[(i, a)]] -= sign * int(X[a, j])
                    if any(row):
                        eqs.append(row)
        rank = flint.fmpz_mat(eqs).rank() if eqs else 0
        total += len(unknowns) - rank
    return total


def pfaffian_degree_condition(m: int, n: int, r: int) -> bool:
    """Whether ``r - m(2n+1)/2`` is a non-negative integer."""
    twice = 2 * r - m * (2 * n + 1)
    return twice >= 0 and twice % 2 == 0


def osp_end_isomorphism_expected(m: int, n: int, r: int) -> bool:
    """When ``B_r(m-2n) -> End_osp(V^r)`` is an isomorphism.

    ``m`` odd: exactly when ``r < (m+1)(n+1)``.  ``m > 0`` even: when
    ``r < mn + m/2``.  ``m = 0``: the Lie algebra is ``sp(2n)``, whose group
    is connected, so the criterion is the group one, ``r < n + 1``.
    """
    if m % 2 == 0 and m > 0:
        return 2 * r < 2 * m * n + m
    return r < (m + 1) * (n + 1)
