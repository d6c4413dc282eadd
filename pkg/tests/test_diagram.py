from __future__ import annotations

import json
from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer_osp import combinatorics as cb
from brauer_osp import diagram as dg

from .strategies import diagrams, permutations


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def example_d() -> dg.BrauerDiagram:
    return dg.BrauerDiagram.from_edges(3, 3, [("T1", "T3"), ("T2", "B1"), ("B2", "B3")])


class TestComposition:
    def test_e_squared(self):
        e = dg.generator_e(1, 2)
        assert dg.compose(e, e) == (e, 1)

    def test_s_squared(self):
        s = dg.generator_s(1, 2)
        assert dg.compose(s, s) == (dg.identity(2), 0)

    def test_cap_after_cup(self):
        assert dg.compose(dg.cap(), dg.cup()) == (dg.identity(0), 1)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            dg.compose(dg.identity(2), dg.identity(3))

    @given(st.data())
    def test_associative_with_loops(self, data):
        a, b, c, d = (data.draw(st.integers(0, 4)) for _ in range(4))
        b += (a + b) % 2
        c += (b + c) % 2
        d += (c + d) % 2
        x = data.draw(diagrams(c, d))
        y = data.draw(diagrams(b, c))
        z = data.draw(diagrams(a, b))
        xy = dg.compose(x, y)
        left = dg.compose(xy.diagram, z)
        yz = dg.compose(y, z)
        right = dg.compose(x, yz.diagram)
        assert left.diagram == right.diagram
        assert left.loop_count + xy.loop_count == right.loop_count + yz.loop_count

    @given(permutations(5), permutations(5))
    def test_permutations_compose_like_the_group(self, p, q):
        res = dg.compose(dg.perm_to_diagram(p), dg.perm_to_diagram(q))
        assert res == (dg.perm_to_diagram(cb.perm_mul(p, q)), 0)


class TestTensor:
    def test_identities(self):
        assert dg.tensor(dg.identity(1), dg.identity(1)) == dg.identity(2)

    def test_identity_with_cap(self):
        d = dg.tensor(dg.identity(1), dg.cap())
        assert (d.k, d.l) == (3, 1)
        assert set(d.named_edges()) == {("T1", "B1"), ("B2", "B3")}

    @given(diagrams(2, 0), diagrams(1, 3), diagrams(2, 2))
    def test_associative(self, a, b, c):
        assert dg.tensor(dg.tensor(a, b), c) == dg.tensor(a, dg.tensor(b, c))


class TestNamed:
    def test_generators(self):
        assert dg.identity(1).named_edges() == [("T1", "B1")]
        assert dg.generator_s(1, 2) == dg.crossing()
        e = dg.generator_e(1, 2)
        assert dg.compose(dg.cup(), dg.cap()).diagram == e

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            dg.generator_s(2, 2)
        with pytest.raises(ValueError):
            dg.generator_e(0, 3)

    def test_adjacent_transposition(self):
        assert dg.perm_to_diagram(cb.perm_from_cycles(4, (2, 3))) == dg.generator_s(2, 4)

    def test_a_hat_and_omega(self):
        assert dg.a_hat(1) == dg.cap()
        assert dg.omega(1) == dg.identity(2)
        assert dg.omega_perm(3) == (1, 3, 5, 2, 4, 6)

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_a_hat_stabilizer(self, r):
        gens = [cb.perm_from_cycles(2 * r, (2 * s - 1, 2 * s)) for s in range(1, r + 1)]
        gens += [cb.perm_from_cycles(2 * r, (2 * s - 1, 2 * s + 1), (2 * s, 2 * s + 2)) for s in range(1, r)]
        for xi in gens:
            assert dg.compose(dg.a_hat(r), dg.perm_to_diagram(xi)) == (dg.a_hat(r), 0)


class TestEnumeration:
    def test_counts(self):
        assert len(dg.enumerate_diagrams(2, 2)) == 3
        assert len(dg.enumerate_diagrams(4, 4)) == 105
        assert dg.enumerate_diagrams(0, 0) == [dg.identity(0)]
        assert dg.enumerate_diagrams(1, 2) == []

    @pytest.mark.parametrize("size", range(0, 13, 2))
    def test_double_factorial(self, size):
        for k in range(size + 1):
            assert len(dg.enumerate_diagrams(k, size - k)) == double_factorial(size - 1)


class TestSerialization:
    @given(diagrams(3, 5))
    def test_round_trip(self, d):
        text = json.dumps(d.to_json())
        assert dg.BrauerDiagram.from_json(json.loads(text)) == d

    def test_format(self):
        assert dg.cap().to_json() == {"k": 2, "l": 0, "edges": [["B1", "B2"]]}

    def test_edge_order_is_irrelevant(self):
        a = dg.BrauerDiagram.from_edges(2, 2, [("T1", "B2"), ("T2", "B1")])
        b = dg.BrauerDiagram.from_edges(2, 2, [("B1", "T2"), ("B2", "T1")])
        assert a == b and hash(a) == hash(b)


class TestRelabelling:
    def test_example_star_actions(self):
        d = example_d()
        one_two = dg.BrauerDiagram.from_edges(3, 3, [("T1", "T2"), ("T3", "B1"), ("B2", "B3")])
        four_five = dg.BrauerDiagram.from_edges(3, 3, [("T1", "B2"), ("T2", "B1"), ("T3", "B3")])
        assert dg.relabel(d, cb.perm_from_cycles(6, (1, 2))) == one_two
        assert dg.relabel(d, cb.perm_from_cycles(6, (4, 5))) == four_five

    def test_swing_example(self):
        swung = dg.swing(example_d(), (2, 3), (3,))
        expected = dg.BrauerDiagram.from_edges(4, 2, [("T1", "B3"), ("T2", "B2"), ("B1", "B4")])
        assert swung == expected

    def test_swing_nothing(self):
        assert dg.swing(example_d(), (), ()) == example_d()

    def test_labels_are_inverse(self):
        for r in range(1, 5):
            for a in range(1, 2 * r + 1):
                assert dg.label_of_vertex(r, dg.vertex_of_label(r, a)) == a

    def test_tag_views(self):
        assert dg.label_of_name(3, "T3") == 5 and dg.label_of_name(3, "B1") == 2
        for a in range(1, 7):
            assert dg.label_of_name(3, dg.name_of_label(3, a)) == a
        with pytest.raises(ValueError):
            dg.name_of_label(3, 7)
