"""Named elements of the kernel of the orthosymplectic functor and its generators.

Everything here is built from Young symmetrizers acting on the identity
diagram and from ``Phi_LZ(r)``, the sum of all ``(r, r)``-diagrams.  Where
two constructions of the same element exist, both are exposed
(``*_via_bending`` and ``*_via_sandwich``) so the tests can compare them
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import itertools
from math import factorial, lcm, prod
from typing import List, Sequence, Tuple

from . import algebra as al
from . import combinatorics as cb
from . import diagram as dg
from .algebra import Element
from .combinatorics import Partition, Permutation
from .linalg import int_rank


@dataclass(frozen=True)
class OspParams:
    """Superdimension ``(m | 2n)`` together with the quantities derived from it."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")

    @property
    def r_c(self) -> int:
        return (self.m + 1) * (self.n + 1)

    @property
    def lambda_c(self) -> Partition:
        return (2 * self.n + 2,) * (self.m + 1)

    @property
    def mu_c(self) -> Partition:
        return (self.n + 1,) * (self.m + 1)

    @property
    def delta(self) -> Fraction:
        return Fraction(self.m - 2 * self.n)

    @property
    def a_mn(self) -> int:
        return (2 ** (self.n + 1) * factorial(self.n + 1)) ** (self.m + 1)

    @property
    def c_mn(self) -> int:
        return factorial(self.m + 1) ** (self.n + 1) * cb.hook_product(self.mu_c)


# ---------------------------------------------------------------------------
# helpers


def _sym_blocks(k: int) -> List[Tuple[int, ...]]:
    return [tuple(range(1, k + 1))]


def antisymmetrizer(k: int, delta) -> Element:
    """``A(k)``: the signed sum of all permutations of ``k`` strands."""
    return Element.from_group(cb.subgroup_sum(k, _sym_blocks(k), signed=True), delta)


def symmetrizer(k: int, delta) -> Element:
    """``S(k)``: the sum of all permutations of ``k`` strands."""
    return Element.from_group(cb.subgroup_sum(k, _sym_blocks(k), signed=False), delta)


def annihilated_by_cups(x: Element) -> bool:
    """Whether ``e_i x = x e_i = 0`` for every ``i``."""
    r = x.k
    for i in range(1, r):
        ei = al.e(i, r, x.delta)
        if not (ei * x).is_zero() or not (x * ei).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# the all-diagrams element


def xi(r: int, i: int, delta=0) -> Element:
    """``x_(r) E(i) x_(r)`` with ``E(i) = e_1 e_3 ... e_{2i-1}``."""
    if not 0 <= i <= r // 2:
        raise ValueError(f"i must lie in 0..{r // 2}")
    e_part = dg.tensor_all([dg.generator_e(1, 2)] * i + [dg.identity(r - 2 * i)])
    x = Element.from_diagram(e_part, delta)
    x = al.left_mul_subgroup_sum(x, _sym_blocks(r), signed=False)
    return al.right_mul_subgroup_sum(x, _sym_blocks(r), signed=False)


def phi_lz(r: int, delta=0) -> Element:
    """``sum_i c_i Xi_r(i)`` with ``c_i = ((2^i i!)^2 (r-2i)!)^-1``."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return Element.identity(0, delta)
    total = Element.zero(r, r, delta)
    for i in range(r // 2 + 1):
        c = Fraction(1, (2 ** i * factorial(i)) ** 2 * factorial(r - 2 * i))
        total = total + xi(r, i, delta).scale(c)
    return total


def phi_lz_direct(r: int, delta=0) -> Element:
    """The sum of all ``(r, r)``-diagrams."""
    return Element(r, r, delta, {d: 1 for d in al.diagram_space(r, r).diagrams})


def x_star_identity(r: int, delta=0) -> Element:
    """``x_(2r) * I_r``, the full symmetrizer of ``S_{2r}`` acting on the identity."""
    return al.star_subgroup_sum(Element.identity(r, delta), _sym_blocks(2 * r), signed=False)


# ---------------------------------------------------------------------------
# Phi and its normalisations


def w_mu(params: OspParams) -> Permutation:
    """``d`` of the column-reading tableau of ``mu_c``, as a permutation of ``1..r_c``."""
    return cb.d_of(cb.column_reading_tableau(params.mu_c))


def _bent_symmetrizer(lam: Partition, r: int, delta) -> Element:
    """``U_r(A_hat^r o c_lam)`` for the row-reading tableau of ``lam``."""
    t = cb.row_reading_tableau(lam)
    a = Element.from_diagram(dg.a_hat(r), delta)
    a = al.right_mul_subgroup_sum(a, t.rows, signed=False)
    a = al.right_mul_subgroup_sum(a, t.columns, signed=True)
    return al.U_fast(a)


def _column_sandwich(core: Element, half: Partition) -> Element:
    t = cb.row_reading_tableau(half)
    x = al.left_mul_subgroup_sum(core, t.columns, signed=True)
    return al.right_mul_subgroup_sum(x, t.columns, signed=True)


def phi_via_bending(params: OspParams) -> Element:
    return _bent_symmetrizer(params.lambda_c, params.r_c, params.delta)


def phi_via_sandwich(params: OspParams) -> Element:
    """``y_mu o X_lam o y_mu`` where ``X_lam = x_lam * I`` is computed by the star action."""
    t = cb.row_reading_tableau(params.lambda_c)
    X = al.star_subgroup_sum(Element.identity(params.r_c, params.delta), t.rows, signed=False)
    return _column_sandwich(X, params.mu_c)


@lru_cache(maxsize=None)
def _phi_cached(m: int, n: int) -> Element:
    return phi_via_bending(OspParams(m, n))


def phi(params: OspParams) -> Element:
    return _phi_cached(params.m, params.n)


def phi_hat(params: OspParams) -> Element:
    out = phi(params).scale(Fraction(1, params.a_mn))
    if not out.is_integral():
        raise ArithmeticError("normalised Phi has a non-integral coefficient")
    return out


def phi_hat_via_lz(params: OspParams) -> Element:
    """``y_mu o Phi_LZ(n+1)^{(x)(m+1)} o y_mu``."""
    core = al.tensor_power(phi_lz(params.n + 1, params.delta), params.m + 1)
    return _column_sandwich(core, params.mu_c)


def phi_tilde(params: OspParams) -> Element:
    """``w o Phi_hat o w^-1``."""
    w = w_mu(params)
    delta = params.delta
    return Element.from_perm(w, delta) * phi_hat(params) * Element.from_perm(cb.perm_inverse(w), delta)


def phi_tilde_via_sandwich(params: OspParams) -> Element:
    """``A(m+1)^(n+1) o w o B(n+1)^(m+1) o w^-1 o A(m+1)^(n+1)``."""
    m, n, delta = params.m, params.n, params.delta
    w = w_mu(params)
    a_part = al.tensor_power(antisymmetrizer(m + 1, delta), n + 1)
    b_part = al.tensor_power(phi_lz(n + 1, delta), m + 1)
    return (
        a_part
        * Element.from_perm(w, delta)
        * b_part
        * Element.from_perm(cb.perm_inverse(w), delta)
        * a_part
    )


def phi_tilde_ij(params: OspParams, i_seq: Sequence[int], j_seq: Sequence[int]) -> Element:
    if len(i_seq) != len(j_seq):
        raise ValueError("i and j must have equal length")
    return al.psi_ij(phi_tilde(params), i_seq, j_seq)


# ---------------------------------------------------------------------------
# Phi_lambda and the bases


def _check_lambda(params: OspParams, r: int, lam: Partition) -> Partition:
    lam = cb.check_partition(lam)
    if sum(lam) != 2 * r or any(p % 2 for p in lam) or not cb.contains(lam, params.lambda_c):
        raise ValueError(f"{lam} is not an even partition of {2 * r} containing {params.lambda_c}")
    return lam


def a_lambda(lam: Partition) -> int:
    return prod(2 ** (p // 2) * factorial(p // 2) for p in lam)


def phi_lambda(params: OspParams, r: int, lam: Partition) -> Element:
    lam = _check_lambda(params, r, lam)
    return _bent_symmetrizer(lam, r, params.delta)


def phi_lambda_via_lz(params: OspParams, r: int, lam: Partition) -> Element:
    lam = _check_lambda(params, r, lam)
    half = tuple(p // 2 for p in lam)
    core = Element.identity(0, params.delta)
    for p in half:
        core = al.tensor(core, phi_lz(p, params.delta))
    return _column_sandwich(core, half).scale(a_lambda(lam))


def _translates(x: Element, lam: Partition) -> List[Element]:
    # Tableaux are acted on by substituting entries, t.act(p) replaces a by
    # p(a), which composes as a right action.  The translate by d(t)^-1 in
    # right-action terms is the star action of d_of(t) itself.
    return [al.star_fast(cb.d_of(t), x) for t in cb.standard_tableaux(lam)]


def basis_min(params: OspParams) -> List[Element]:
    """Translates of ``Phi`` indexed by the standard tableaux of ``lambda_c``."""
    return _translates(phi(params), params.lambda_c)


def basis_general(params: OspParams, r: int) -> List[Element]:
    if r < params.r_c:
        return []
    out: List[Element] = []
    for lam in cb.even_partitions_containing(r, params.m, params.n):
        out.extend(_translates(phi_lambda(params, r, lam), lam))
    return out


# ---------------------------------------------------------------------------
# generating sets


def generators_min(params: OspParams) -> List[Element]:
    return [phi_tilde_ij(params, i, j) for i, j in cb.generator_index_set(params.m, params.n)]


def generators_general(params: OspParams, r: int) -> List[Element]:
    if r < params.r_c:
        raise ValueError(f"r must be at least r_c = {params.r_c}")
    return [al.embed(g, r) for g in generators_min(params)]


def osp12n_generator(n: int) -> Element:
    """The single generator for ``OSp(1|2n)``: both sequences of type ``(1, ..., 1)``."""
    params = OspParams(1, n)
    seq = cb.standard_sequence((1,) * (n + 1), 1, n)
    return phi_tilde_ij(params, seq, seq)


def symplectic_idempotent(n: int) -> Element:
    """``Phi_LZ(n+1) / (n+1)!`` in ``B_{n+1}(-2n)``."""
    return phi_lz(n + 1, -2 * n).scale(Fraction(1, factorial(n + 1)))


def classical_Ek(m: int, k: int) -> Element:
    """``(k!(m+1-k)!)^-1`` times ``A(m+1)`` with its first ``k`` top and bottom ends swung."""
    if not 0 <= k <= m + 1:
        raise ValueError(f"k must lie in 0..{m + 1}")
    seq = tuple(range(1, k + 1))
    swung = al.psi_ij(antisymmetrizer(m + 1, m), seq, seq)
    return swung.scale(Fraction(1, factorial(k) * factorial(m + 1 - k)))


def classical_Fk(m: int, k: int) -> Element:
    if not 0 <= k <= m + 1:
        raise ValueError(f"k must lie in 0..{m + 1}")
    return al.tensor(antisymmetrizer(m + 1 - k, m), antisymmetrizer(k, m))


# ---------------------------------------------------------------------------
# Garnir relations


def _pieces(seq: Sequence[int], params: OspParams) -> List[Tuple[int, ...]]:
    block = params.m + 1
    pieces: List[List[int]] = [[] for _ in range(params.n + 1)]
    for v in seq:
        pieces[(v - 1) // block].append(v)
    return [tuple(p) for p in pieces]


def garnir_sets(
    params: OspParams, p: int, q: int, i_seq: Sequence[int], j_seq: Sequence[int]
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """``X_p`` and ``Y_q`` as label sets: ``w^-1`` applied to the ``p``-th (``q``-th) piece.

    ``i_seq`` lists top vertices (labels ``2v-1``), ``j_seq`` bottom vertices
    (labels ``2v``).
    """
    w_inv = cb.perm_inverse(w_mu(params))
    X = tuple(sorted(2 * w_inv[v - 1] - 1 for v in _pieces(i_seq, params)[p - 1]))
    Y = tuple(sorted(2 * w_inv[v - 1] for v in _pieces(j_seq, params)[q - 1]))
    return X, Y


def garnir_relation_check(
    params: OspParams, p: int, q: int, i_seq: Sequence[int], j_seq: Sequence[int]
) -> bool:
    """Whether ``(G_{X_p, Y_q})^sharp * Phi_hat`` vanishes.

    Raises ``ValueError`` unless the pieces overfill a column, i.e.
    ``a_p + b_q > m + 1``.
    """
    m, n = params.m, params.n
    for seq in (i_seq, j_seq):
        cb.type_of_sequence(seq, m, n)
        if tuple(seq) != cb.standard_sequence(cb.type_of_sequence(seq, m, n), m, n):
            raise ValueError(f"{tuple(seq)} is not a standard sequence")
    if not (1 <= p <= n + 1 and 1 <= q <= n + 1):
        raise ValueError("piece index out of range")
    a = cb.type_of_sequence(i_seq, m, n)
    b = cb.type_of_sequence(j_seq, m, n)
    if a[p - 1] + b[q - 1] <= m + 1:
        raise ValueError(
            f"a_p + b_q = {a[p - 1] + b[q - 1]} does not exceed m + 1 = {m + 1}; no Garnir relation applies"
        )
    X, Y = garnir_sets(params, p, q, i_seq, j_seq)
    t = cb.row_reading_tableau(params.lambda_c)
    first, second = (X, Y) if 2 * p - 1 < 2 * q else (Y, X)
    G = cb.garnir_element(t, first, second)
    return al.star_fast(G.sharp(), phi_hat(params)).is_zero()


# ---------------------------------------------------------------------------
# group-algebra identities used by the generation arguments


def _group_rank(vectors: List[cb.GroupAlgebraElement]) -> int:
    perms = sorted({p for v in vectors for p in v.terms})
    index = {p: i for i, p in enumerate(perms)}
    rows = []
    for v in vectors:
        den = lcm(1, *(c.denominator for c in v.terms.values()))
        row = [0] * len(perms)
        for p, c in v.terms.items():
            row[index[p]] = int(c * den)
        rows.append(row)
    return int_rank(rows)


def corner_symmetrizer_check(params: OspParams, r: int, lam: Partition) -> bool:
    """``c_lam`` lies in the right ideal ``c_{lambda_c}(s) A_{2r}``.

    ``s`` is the subtableau of shape ``lambda_c`` in the top-left corner of
    the row-reading tableau of ``lam``.
    """
    lam = _check_lambda(params, r, lam)
    k = 2 * r
    t = cb.row_reading_tableau(lam)
    s_rows = tuple(row[: params.lambda_c[0]] for row in t.rows[: params.m + 1])
    s_x = cb.subgroup_sum(k, s_rows, signed=False)
    s_cols = [tuple(row[j] for row in s_rows) for j in range(params.lambda_c[0])]
    c_s = s_x * cb.subgroup_sum(k, s_cols, signed=True)
    c_lam = al.young_symmetrizer_group(t)
    ideal = [c_s * cb.GroupAlgebraElement.of(p) for p in itertools.permutations(range(1, k + 1))]
    base = _group_rank(ideal)
    return _group_rank(ideal + [c_lam]) == base


def column_identity_check(m: int) -> bool:
    """``c_lam (1 2) alpha^-(C_1) = (m-1)! c_lam`` for ``lam = (2^m)``."""
    lam = (2,) * m
    k = 2 * m
    t = cb.row_reading_tableau(lam)
    c = al.young_symmetrizer_group(t)
    swap = cb.GroupAlgebraElement.of(cb.perm_from_cycles(k, (1, 2)))
    alt = cb.subgroup_sum(k, [t.columns[0]], signed=True)
    return c * swap * alt == c.scale(factorial(m - 1))
