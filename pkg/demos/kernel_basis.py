"""Explicit bases of the kernel of F, compared with its computed nullspace."""
from __future__ import annotations

from brauer_osp import functor as fn
from brauer_osp import kernel as kn
from brauer_osp import linalg as la


def spans_kernel(m: int, n: int, r: int, basis) -> bool:
    sp = fn.make_superspace(m, n)
    size = len(basis[0].to_vector())
    vectors = [x.to_vector() for x in basis]
    return la.int_rank([[int(c) for c in v] for v in vectors]) == len(vectors) and la.same_row_space(
        vectors, fn.ker_f_vectors(sp, r), size
    )


def main() -> None:
    for m, n in [(0, 1), (1, 1)]:
        p = kn.OspParams(m, n)
        basis = kn.basis_min(p)
        print(f"(m,n)=({m},{n}) r={p.r_c}: {len(basis)} elements, spans the kernel: {spans_kernel(m, n, p.r_c, basis)}")
    basis = kn.basis_general(kn.OspParams(0, 1), 3)
    print(f"(m,n)=(0,1) r=3: {len(basis)} elements, spans the kernel: {spans_kernel(0, 1, 3, basis)}")


if __name__ == "__main__":
    main()
