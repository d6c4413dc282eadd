from __future__ import annotations

from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer_osp import combinatorics as cb

from .strategies import partitions, permutations


class TestPermutations:
    @given(permutations(5), permutations(5), permutations(5))
    def test_multiplication_is_associative(self, p, q, s):
        assert cb.perm_mul(cb.perm_mul(p, q), s) == cb.perm_mul(p, cb.perm_mul(q, s))

    @given(permutations(6))
    def test_inverse(self, p):
        assert cb.perm_mul(p, cb.perm_inverse(p)) == cb.perm_identity(6)

    def test_product_applies_right_factor_first(self):
        p = cb.perm_from_cycles(3, (1, 2))
        q = cb.perm_from_cycles(3, (2, 3))
        # q sends 3 to 2, then p sends 2 to 1
        assert cb.perm_mul(p, q)[2] == 1

    @given(permutations(6))
    def test_adjacent_word_reproduces_the_permutation(self, p):
        out = cb.perm_identity(6)
        for i in cb.adjacent_word(p):
            out = cb.perm_mul(out, cb.perm_from_cycles(6, (i, i + 1)))
        assert out == p

    @given(permutations(5), permutations(5))
    def test_sign_is_multiplicative(self, p, q):
        assert cb.perm_sign(cb.perm_mul(p, q)) == cb.perm_sign(p) * cb.perm_sign(q)


class TestPartitions:
    def test_even_partitions_containing(self):
        assert cb.even_partitions_containing(4, 1, 1) == [(4, 4)]
        assert cb.even_partitions_containing(3, 1, 1) == []
        assert cb.even_partitions_containing(5, 1, 1) == [(6, 4), (4, 4, 2)]

    def test_hook_product(self):
        assert cb.hook_product((4, 4)) == 2880
        assert cb.hook_product((5,)) == 120
        assert cb.hook_product((2, 2)) == 12

    def test_specht_dim(self):
        assert cb.specht_dim((4, 4)) == 14
        assert cb.specht_dim((6,)) == 1
        assert cb.specht_dim((4, 4, 2)) == 252

    def test_ker_dim_formula(self):
        assert cb.ker_dim_formula(1, 1, 4) == 14
        assert cb.ker_dim_formula(0, 1, 1) == 0
        assert cb.ker_dim_formula(1, 1, 5) == 342

    @given(partitions(10))
    def test_hook_formula_is_exact(self, lam):
        assert cb.specht_dim(lam) * cb.hook_product(lam) == factorial(sum(lam))

    @pytest.mark.parametrize("k", range(1, 9))
    def test_sum_of_squares(self, k):
        assert sum(cb.specht_dim(lam) ** 2 for lam in cb.partitions(k)) == factorial(k)

    @given(partitions(8))
    def test_standard_tableaux_count(self, lam):
        tabs = cb.standard_tableaux(lam)
        assert len(tabs) == cb.specht_dim(lam)
        assert all(t.is_standard() for t in tabs)

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
    def test_kernel_threshold(self, m, n):
        for r in range(9):
            assert (cb.ker_dim_formula(m, n, r) == 0) == (r < (m + 1) * (n + 1))

    def test_rejects_non_partition(self):
        with pytest.raises(ValueError):
            cb.check_partition((1, 2))


class TestTableaux:
    def test_d_of_row_reading_is_identity(self):
        t = cb.row_reading_tableau((3, 2))
        assert cb.d_of(t) == cb.perm_identity(5)

    def test_d_of_column_reading_of_square(self):
        assert cb.d_of(cb.column_reading_tableau((2, 2))) == cb.perm_from_cycles(4, (2, 3))

    @given(partitions(7), st.data())
    def test_d_of_carries_the_row_reading_tableau(self, lam, data):
        t = data.draw(st.sampled_from(cb.standard_tableaux(lam)))
        assert cb.row_reading_tableau(lam).act(cb.d_of(t)) == t

    def test_act_is_a_right_action(self):
        t = cb.row_reading_tableau((2, 1))
        p, q = (2, 3, 1), (2, 1, 3)
        assert t.act(p).act(q) == t.act(cb.perm_mul(q, p))


class TestGarnir:
    def test_example(self):
        t = cb.Tableau(((1, 3, 4), (2, 5)))
        G = cb.garnir_element(t, (1, 2), (3, 5))
        assert len(G.terms) == 6
        assert G.terms[cb.perm_from_cycles(5, (1, 3), (2, 5))] == 1

    def test_empty_side_gives_identity(self):
        t = cb.Tableau(((1, 3, 4), (2, 5)))
        assert cb.garnir_element(t, (), (3,)) == cb.GroupAlgebraElement.one(5)

    def test_single_pair(self):
        t = cb.Tableau(((1, 3, 4), (2, 5)))
        G = cb.garnir_element(t, (1,), (3,))
        assert G == cb.GroupAlgebraElement.one(5) - cb.GroupAlgebraElement.of(cb.perm_from_cycles(5, (1, 3)))

    def test_rejects_overlap(self):
        t = cb.Tableau(((1, 3, 4), (2, 5)))
        with pytest.raises(ValueError):
            cb.garnir_element(t, (1,), (1,))


class TestSequences:
    def test_type_of_sequence(self):
        assert cb.type_of_sequence((1, 3, 4), 1, 2) == (1, 2, 0)
        assert cb.type_of_sequence((), 1, 2) == (0, 0, 0)
        assert cb.type_of_sequence(tuple(range(1, 7)), 1, 2) == (2, 2, 2)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            cb.type_of_sequence((7,), 1, 2)

    def test_standard_sequence(self):
        assert cb.standard_sequence((1, 2, 0), 1, 2) == (1, 3, 4)
        assert cb.standard_sequence((0, 0, 0), 1, 2) == ()
        assert cb.standard_sequence((1, 1), 1, 1) == (1, 3)

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
    def test_round_trip(self, m, n):
        for tv in cb.increasing_types(m, n):
            assert cb.type_of_sequence(cb.standard_sequence(tv, m, n), m, n) == tv

    def test_generator_index_set(self):
        assert cb.generator_index_set(1, 1) == [((), ()), ((3,), (3,)), ((1, 3), (1, 3))]
        for m, n in [(0, 1), (0, 2), (2, 1), (1, 2)]:
            pairs = cb.generator_index_set(m, n)
            assert ((), ()) in pairs
            assert all(len(i) == len(j) for i, j in pairs)
