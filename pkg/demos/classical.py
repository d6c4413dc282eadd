"""Idempotents recovering the classical symplectic and orthogonal kernels."""
from __future__ import annotations

from brauer_osp import algebra as al
from brauer_osp import combinatorics as cb
from brauer_osp import kernel as kn


def main() -> None:
    for n in (1, 2):
        E = kn.symplectic_idempotent(n)
        ideal = al.ideal_saturate([E])
        print(f"Sp({2 * n}): E idempotent {E * E == E}, ideal dim {ideal.dim} = kernel dim {cb.ker_dim_formula(0, n, n + 1)}")
    for m in (1, 2, 3):
        flags = [kn.classical_Ek(m, k) * kn.classical_Ek(m, k) == kn.classical_Ek(m, k) for k in range(m + 2)]
        E = kn.classical_Ek(m, (m + 1) // 2)
        print(f"O({m}): E_k idempotent for all k {all(flags)}, ideal dim {al.ideal_saturate([E]).dim} = kernel dim {cb.ker_dim_formula(m, 0, m + 1)}")


if __name__ == "__main__":
    main()
