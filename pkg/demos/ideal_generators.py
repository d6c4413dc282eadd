"""Generate the kernel of F as a two-sided ideal from a few elements."""
from __future__ import annotations

from brauer_osp import algebra as al
from brauer_osp import combinatorics as cb
from brauer_osp import kernel as kn


def main() -> None:
    p = kn.OspParams(1, 1)
    for r in (4, 5):
        gens = kn.generators_general(p, r)
        ideal = al.ideal_saturate(gens)
        print(f"OSp(1|2), r={r}: {len(gens)} generators span an ideal of dim {ideal.dim}; kernel dim {cb.ker_dim_formula(1, 1, r)}")
    E = kn.osp12n_generator(1)
    print("single generator E: ideal dim", al.ideal_saturate([E]).dim)
    print("E^2 proportional to E:", (E * E).is_proportional_to(E))


if __name__ == "__main__":
    main()
