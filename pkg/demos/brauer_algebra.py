"""Multiply in B_r(delta) with a symbolic loop value and act by S_{2r}."""
from __future__ import annotations

from brauer_osp import algebra as al
from brauer_osp import combinatorics as cb


def main() -> None:
    delta = al.symbolic_delta()
    r = 4
    e1, e2, s1 = al.e(1, r, delta), al.e(2, r, delta), al.s(1, r, delta)
    print("e1^2 =", e1 * e1)
    print("e1 e2 e1 == e1:", e1 * e2 * e1 == e1)
    print("s1 e1 == e1:", s1 * e1 == e1)

    x = al.Element.identity(2, 3) + al.e(1, 2, 3)
    p = cb.perm_from_cycles(4, (2, 3))
    print("(2 3) * (I + e1) =", al.star_fast(p, x))
    print("matches the definition through bending:", al.star_fast(p, x) == al.star_action_rr(p, x))


if __name__ == "__main__":
    main()
