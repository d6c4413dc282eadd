"""Compose, tensor and relabel Brauer diagrams."""
from __future__ import annotations

from brauer_osp import combinatorics as cb
from brauer_osp import diagram as dg


def main() -> None:
    e = dg.generator_e(1, 3)
    s = dg.generator_s(2, 3)
    res = dg.compose(e, e)
    print("e1 o e1 =", res.diagram.named_edges(), "with", res.loop_count, "closed loop")
    print("e1 o s2 o e1 =", dg.compose(dg.compose(e, s).diagram, e).diagram.named_edges())
    print("I_1 (x) cap =", dg.tensor(dg.identity(1), dg.cap()).named_edges())

    for r in range(1, 6):
        print(f"|B_{r}| = {len(dg.enumerate_diagrams(r, r))}")

    d = dg.BrauerDiagram.from_edges(3, 3, [("T1", "T3"), ("T2", "B1"), ("B2", "B3")])
    moved = dg.relabel(d, cb.perm_from_cycles(6, (1, 2)))
    print("relabel by (1 2):", d.named_edges(), "->", moved.named_edges())


if __name__ == "__main__":
    main()
