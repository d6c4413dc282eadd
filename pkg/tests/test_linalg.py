from __future__ import annotations

from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from brauer_osp import linalg as la

small_ints = st.integers(-4, 4)


def matrices(max_rows: int = 5, max_cols: int = 6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rank_examples():
    assert la.rank(la.SparseMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert la.rank(la.SparseMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3
    assert la.rank(la.SparseMatrix.from_rows([[0, 0]])) == 0


def test_nullspace_example():
    M = la.SparseMatrix.from_rows([[1, 1, 1]])
    null = la.nullspace(M)
    assert len(null) == 2
    for v in null:
        assert M.matvec(v) == [0]


def test_rational_entries():
    M = la.SparseMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])
    assert la.rank(M) == 1


@given(matrices())
def test_rank_nullity(rows):
    M = la.SparseMatrix.from_rows(rows)
    ncols = len(rows[0])
    null = la.nullspace(M)
    assert la.rank(M) + len(null) == ncols
    for v in null:
        assert all(x == 0 for x in M.matvec(v))


@given(matrices())
def test_agrees_with_flint(rows):
    M = la.SparseMatrix.from_rows(rows)
    assert la.rank(M) == la.int_rank(rows)
    assert la.rank(M) == la.rank(M.transpose())
    assert la.rref_of_vectors(rows, len(rows[0])) == la.int_rref(rows)


@given(matrices())
def test_int_nullspace(rows):
    null = la.int_nullspace(rows)
    assert len(null) == len(rows[0]) - la.int_rank(rows)
    if null:
        assert not (np.array(rows, dtype=object) @ np.array(null, dtype=object).T).any()


@given(matrices(), st.randoms(use_true_random=False))
def test_same_row_space_ignores_basis_choice(rows, rnd):
    n = len(rows[0])
    combos = []
    for _ in rows:
        coeffs = [rnd.randint(-2, 2) for _ in rows]
        combos.append([sum(c * r[j] for c, r in zip(coeffs, rows)) for j in range(n)])
    combos += rows
    assert la.same_row_space(rows, combos, n)


def test_same_row_space_distinguishes():
    assert not la.same_row_space([[1, 0]], [[0, 1]], 2)


def test_echelon():
    ech = la.Echelon(3)
    assert ech.insert({0: Fraction(1), 1: Fraction(1)})
    assert not ech.insert({0: Fraction(2), 1: Fraction(2)})
    assert ech.contains({0: Fraction(-1), 1: Fraction(-1)})
    assert ech.insert({1: Fraction(1)})
    assert ech.basis() == [(1, 0, 0), (0, 1, 0)]


def test_span_saturate_cyclic_shift():
    def shift(v):
        return [v[-1:] + v[:-1]]

    assert len(la.span_saturate([(1, 0, 0, 0)], shift)) == 4
    assert la.span_saturate([(1, 1, 1, 1)], shift) == [(1, 1, 1, 1)]
    assert len(la.span_saturate([(1, -1, 1, -1)], shift)) == 1
    assert la.span_saturate([], shift) == []


@given(st.lists(st.lists(small_ints, min_size=4, max_size=4), min_size=1, max_size=3))
def test_span_saturate_is_closed(seed):
    def step(v):
        return [(v[1], v[0], v[2], v[3]), (v[0], v[1], v[3], v[2])]

    basis = la.span_saturate(seed, step)
    ech = la.Echelon(4)
    for b in basis:
        ech.insert({j: x for j, x in enumerate(b) if x})
    for b in basis + [tuple(map(Fraction, s)) for s in seed]:
        for w in step(b):
            assert ech.contains({j: Fraction(x) for j, x in enumerate(w) if x})


@given(matrices(6, 5))
def test_modular_subspace_matches_rank(rows):
    sub = la.ModularSubspace(len(rows[0]))
    for i, r in enumerate(rows):
        grew = sub.insert(np.array(r), witness=i)
        assert sub.contains(np.array(r))
        assert grew == (i in sub.witnesses)
    assert len(sub) == la.int_rank(rows) == la.modular_rank(np.array(rows))


def test_small_contract_examples():
    assert la.rank(la.SparseMatrix.from_rows([[0, 0, 0]] * 3)) == 0
    assert la.rank(la.SparseMatrix.from_rows([[1, 1, 1]] * 3)) == 3 - 2
    assert la.nullspace(la.SparseMatrix.from_rows([[1, 0], [0, 1]])) == []
    (v,) = la.nullspace(la.SparseMatrix.from_rows([[1, -1]]))
    assert v[0] == v[1] != 0


sparse_entries = st.one_of(
    st.just(0), st.just(0), st.just(0), st.fractions(min_value=-5, max_value=5, max_denominator=4)
)


@settings(max_examples=10)
@given(st.lists(st.lists(sparse_entries, min_size=50, max_size=50), min_size=30, max_size=30))
def test_transpose_rank_on_sparse_rationals(rows):
    M = la.SparseMatrix.from_rows(rows)
    assert la.rank(M) == la.rank(M.transpose())


@given(matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_scaling_and_permutation(rows, rnd):
    scaled = []
    for row in rows:
        factor = Fraction(rnd.choice([-3, -1, 2, 5]), rnd.choice([1, 2, 7]))
        scaled.append([factor * x for x in row])
    rnd.shuffle(scaled)
    assert la.rank(la.SparseMatrix.from_rows(scaled)) == la.rank(la.SparseMatrix.from_rows(rows))


def test_span_saturate_identity_step():
    assert la.span_saturate([(1, 0, 0)], lambda v: [v]) == [(1, 0, 0)]


@given(st.lists(st.lists(small_ints, min_size=4, max_size=4), min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_span_saturate_ignores_seed_order(seed, rnd):
    def step(v):
        return [v[1:] + v[:1]]

    shuffled = list(seed)
    rnd.shuffle(shuffled)
    assert la.span_saturate(seed, step) == la.span_saturate(shuffled, step)
