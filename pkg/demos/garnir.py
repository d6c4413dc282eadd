"""Garnir relations satisfied by the normalised kernel element."""
from __future__ import annotations

from brauer_osp import combinatorics as cb
from brauer_osp import kernel as kn


def main() -> None:
    p = kn.OspParams(1, 1)
    i_seq, j_seq = (3, 4), (1, 3)
    X, Y = kn.garnir_sets(p, 2, 2, i_seq, j_seq)
    print("label sets:", X, Y)
    t = cb.row_reading_tableau(p.lambda_c)
    print("Garnir element:", cb.garnir_element(t, X, Y))
    print("relation holds:", kn.garnir_relation_check(p, 2, 2, i_seq, j_seq))
    try:
        kn.garnir_relation_check(p, 1, 1, (1,), (1,))
    except ValueError as err:
        print("refused:", err)


if __name__ == "__main__":
    main()
