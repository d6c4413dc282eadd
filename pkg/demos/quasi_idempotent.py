"""The normalised kernel element squares to a fixed multiple of itself."""
from __future__ import annotations

from brauer_osp import kernel as kn


def main() -> None:
    for m, n in [(0, 1), (0, 2), (1, 0), (2, 0), (1, 1)]:
        p = kn.OspParams(m, n)
        tilde = kn.phi_tilde(p)
        square = tilde * tilde
        print(
            f"(m,n)=({m},{n}) r_c={p.r_c} terms={len(tilde)} "
            f"c={p.c_mn} square==c*element: {square == tilde.scale(p.c_mn)}"
        )


if __name__ == "__main__":
    main()
