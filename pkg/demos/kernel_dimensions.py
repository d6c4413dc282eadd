"""Rank of F on B_r against the hook-length prediction for its kernel."""
from __future__ import annotations

from brauer_osp import algebra as al
from brauer_osp import combinatorics as cb
from brauer_osp import functor as fn


def main() -> None:
    print(f"{'(m,n,r)':>10} {'dim B_r':>8} {'rank':>6} {'kernel':>7} {'predicted':>9}")
    for m, n in [(1, 0), (2, 0), (0, 1), (1, 1)]:
        sp = fn.make_superspace(m, n)
        for r in range(1, (m + 1) * (n + 1) + 2):
            size = len(al.diagram_space(r, r))
            rank = fn.rank_f(sp, r)
            print(f"{str((m, n, r)):>10} {size:>8} {rank:>6} {size - rank:>7} {cb.ker_dim_formula(m, n, r):>9}")


if __name__ == "__main__":
    main()
