"""Commutant of the orthosymplectic group and Lie superalgebra on V^r."""
from __future__ import annotations

from brauer_osp import functor as fn


def main() -> None:
    for m, n, r in [(1, 1, 3), (0, 2, 3), (2, 1, 3), (2, 0, 3), (3, 0, 4)]:
        sp = fn.make_superspace(m, n)
        group = fn.centralizer_dim_group(sp, r)
        lie = fn.centralizer_dim_liealg(sp, r)
        print(f"(m,n,r)=({m},{n},{r}): group {group}, Lie superalgebra {lie}, rank of F {fn.rank_f(sp, r)}")


if __name__ == "__main__":
    main()
