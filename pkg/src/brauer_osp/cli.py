"""Command-line batch verification.

Three subcommands:

``dims``
    the table ``(r, dim B_r, r_c, predicted kernel dimension)``;
``kernel-rank``
    the exact rank and nullity of ``F_r^r`` against the predicted nullity;
``verify SUITE``
    one of the named invariant suites (``all`` runs every suite).

Exit status: 0 when every check passes, 1 when a check fails, 2 when nothing
failed but a check was skipped because of the size budget, 3 on a usage
error.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, lcm
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import algebra as al
from . import combinatorics as cb
from . import diagram as dg
from . import functor as fn
from . import kernel as kn
from .algebra import Element
from .linalg import int_rank, same_row_space

SCHEMA_VERSION = "1"
DEFAULT_SEED = 20240229
EXIT_PASS, EXIT_FAIL, EXIT_SKIPPED, EXIT_USAGE = 0, 1, 2, 3

ACCEPTANCE_PAIRS: Tuple[Tuple[int, int], ...] = ((1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (1, 1))
SUITES = (
    "relations",
    "actions",
    "lz",
    "phi",
    "basis",
    "garnir",
    "generators",
    "sft",
    "osp12n",
    "classical",
    "osp-end",
)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    passed: Optional[bool]  # None marks a check skipped for the budget
    seconds: float
    note: str = ""

    @property
    def status(self) -> str:
        return "skip" if self.passed is None else ("pass" if self.passed else "FAIL")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "seconds": round(self.seconds, 4),
            "note": self.note,
        }


@dataclass
class Report:
    suite: str
    params: Dict[str, Any]
    seed: int
    checks: List[Check] = field(default_factory=list)
    table: List[Dict[str, Any]] = field(default_factory=list)

    def check(self, name: str, expected: Any, compute: Callable[[], Any], note: str = "") -> Check:
        """Run ``compute`` and record whether it returned ``expected``."""
        start = time.perf_counter()
        try:
            computed = compute()
            passed: Optional[bool] = computed == expected
        except fn.BudgetExceeded as exc:
            computed, passed, note = None, None, str(exc)
        entry = Check(name, expected, computed, passed, time.perf_counter() - start, note)
        self.checks.append(entry)
        return entry

    @property
    def failed(self) -> bool:
        return any(c.passed is False for c in self.checks)

    @property
    def skipped(self) -> bool:
        return any(c.passed is None for c in self.checks)

    @property
    def exit_code(self) -> int:
        if self.failed:
            return EXIT_FAIL
        return EXIT_SKIPPED if self.skipped else EXIT_PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "params": _jsonable(self.params),
            "seed": self.seed,
            "status": {EXIT_PASS: "pass", EXIT_FAIL: "fail", EXIT_SKIPPED: "skipped"}[self.exit_code],
            "checks": [c.to_dict() for c in self.checks],
            "table": _jsonable(self.table),
        }

    def render(self) -> str:
        shown = " ".join(f"{k}={_short(v)}" for k, v in self.params.items() if v not in (None, False))
        lines = [f"suite {self.suite}  {shown}  seed {self.seed}"]
        if self.table:
            keys = list(self.table[0])
            lines.append("  ".join(f"{k:>10}" for k in keys))
            for row in self.table:
                lines.append("  ".join(f"{_short(row[k]):>10}" for k in keys))
        for c in self.checks:
            line = f"{c.status:>4}  {c.name}: expected {_short(c.expected)}, computed {_short(c.computed)} ({c.seconds:.2f}s)"
            if c.note:
                line += f"  [{c.note}]"
            lines.append(line)
        passed = sum(c.passed is True for c in self.checks)
        lines.append(f"{passed}/{len(self.checks)} checks passed")
        return "\n".join(lines)


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _short(x: Any) -> str:
    text = str(x)
    return text if len(text) <= 60 else text[:57] + "..."


# ---------------------------------------------------------------------------
# options shared by the suites


@dataclass
class Options:
    m: Optional[int] = None
    n: Optional[int] = None
    r: Optional[int] = None
    r_max: Optional[int] = None
    delta: Optional[Fraction] = None
    budget: int = fn.DEFAULT_BUDGET
    slow: bool = False
    seed: int = DEFAULT_SEED

    def pairs(self, default: Sequence[Tuple[int, int]] = ACCEPTANCE_PAIRS) -> List[Tuple[int, int]]:
        if self.m is not None or self.n is not None:
            return [(self.m or 0, self.n or 0)]
        return list(default)

    def params(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "r_max": self.r_max,
            "delta": self.delta,
            "budget_entries": self.budget,
            "slow": self.slow,
        }


def double_factorial_odd(r: int) -> int:
    """``(2r-1)!!``, the dimension of ``B_r``."""
    return factorial(2 * r) // (2 ** r * factorial(r)) if r >= 0 else 0


def _vectors(elements: Sequence[Element]) -> List[Tuple[Fraction, ...]]:
    return [tuple(x.to_vector()) for x in elements]


def _spans_kernel(elements: Sequence[Element], sp: fn.SuperSpace, r: int, budget: int) -> bool:
    ker = fn.ker_f_vectors(sp, r, budget)
    return same_row_space(_vectors(elements), ker, len(al.diagram_space(r, r)))


def _subspace_is_kernel(sub: al.Subspace, sp: fn.SuperSpace, r: int, budget: int) -> bool:
    ker = fn.ker_f_vectors(sp, r, budget)
    return same_row_space(sub.witnesses, ker, len(al.diagram_space(r, r)))


def _random_diagram(rng: random.Random, k: int, l: int) -> dg.BrauerDiagram:
    return rng.choice(al.diagram_space(k, l).diagrams)


def _random_perm(rng: random.Random, k: int) -> cb.Permutation:
    p = list(range(1, k + 1))
    rng.shuffle(p)
    return tuple(p)


# ---------------------------------------------------------------------------
# suites


def suite_relations(rep: Report, opt: Options) -> None:
    """The defining relations of ``B_r(delta)`` for ``r <= r_max``."""
    delta = opt.delta if opt.delta is not None else al.symbolic_delta()
    r_max = opt.r_max if opt.r_max is not None else 5
    for r in range(1, r_max + 1):
        s = {i: al.s(i, r, delta) for i in range(1, r)}
        e = {i: al.e(i, r, delta) for i in range(1, r)}
        one = Element.identity(r, delta)
        near = [(i, j) for i in range(1, r) for j in range(1, r) if i < j - 1]
        chain = list(range(1, r - 1))
        families: Dict[str, Callable[[], bool]] = {
            "s_i^2 = 1": lambda: all(s[i] * s[i] == one for i in s),
            "e_i^2 = delta e_i": lambda: all(e[i] * e[i] == e[i].scale(delta) for i in e),
            "e_i s_i = e_i = s_i e_i": lambda: all(e[i] * s[i] == e[i] == s[i] * e[i] for i in e),
            "s_i s_j = s_j s_i": lambda: all(s[i] * s[j] == s[j] * s[i] for i, j in near),
            "s_i e_j = e_j s_i": lambda: all(
                s[i] * e[j] == e[j] * s[i] and s[j] * e[i] == e[i] * s[j] for i, j in near
            ),
            "e_i e_j = e_j e_i": lambda: all(e[i] * e[j] == e[j] * e[i] for i, j in near),
            "braid": lambda: all(s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1] for i in chain),
            "e_i e_{i+1} e_i = e_i": lambda: all(e[i] * e[i + 1] * e[i] == e[i] for i in chain),
            "e_{i+1} e_i e_{i+1} = e_{i+1}": lambda: all(
                e[i + 1] * e[i] * e[i + 1] == e[i + 1] for i in chain
            ),
            "s_i e_{i+1} e_i = s_{i+1} e_i": lambda: all(
                s[i] * e[i + 1] * e[i] == s[i + 1] * e[i] for i in chain
            ),
            "e_{i+1} e_i s_{i+1} = e_{i+1} s_i": lambda: all(
                e[i + 1] * e[i] * s[i + 1] == e[i + 1] * s[i] for i in chain
            ),
        }
        for name, test in families.items():
            rep.check(f"r={r} {name}", True, test)


def suite_actions(rep: Report, opt: Options) -> None:
    """Bending maps, the star action and the functor on the elementary morphisms."""
    rng = random.Random(opt.seed)
    delta = Fraction(-1)
    rep.check(
        "A(U(a)) = a on B_6^0",
        True,
        lambda: all(
            al.A_map(al.U_map(Element.from_diagram(d, delta))) == Element.from_diagram(d, delta)
            for d in al.diagram_space(6, 0).diagrams
        ),
    )
    rep.check(
        "U(A_hat^r) = I_r, r <= 4",
        True,
        lambda: all(
            al.U_map(Element.from_diagram(dg.a_hat(r), delta)) == Element.identity(r, delta)
            for r in range(1, 5)
        ),
    )

    def relabel_agrees() -> bool:
        for _ in range(30):
            r = rng.randint(1, 3)
            x = Element.from_diagram(_random_diagram(rng, r, r), delta)
            p = _random_perm(rng, 2 * r)
            if al.star_fast(p, x) != al.star_action_rr(p, x):
                return False
        return True

    def module_axiom() -> bool:
        for _ in range(30):
            x = Element.from_diagram(_random_diagram(rng, 3, 3), delta)
            a = cb.GroupAlgebraElement.of(_random_perm(rng, 6))
            b = cb.GroupAlgebraElement.of(_random_perm(rng, 6))
            if al.star_action_rr(a * b, x) != al.star_action_rr(a, al.star_action_rr(b, x)):
                return False
        return True

    def equivariance() -> bool:
        for _ in range(20):
            r = rng.randint(1, 3)
            a = Element.from_diagram(_random_diagram(rng, 2 * r, 0), delta)
            p = _random_perm(rng, 2 * r)
            if al.U_map(al.star_action_20(p, a)) != al.star_action_rr(p, al.U_map(a)):
                return False
        return True

    def two_sided() -> bool:
        for _ in range(30):
            r = rng.randint(1, 4)
            x = Element.from_diagram(_random_diagram(rng, r, r), delta)
            s1, s2 = _random_perm(rng, r), _random_perm(rng, r)
            lhs = al.star_fast(al.two_row_perm(r, s1, s2), x)
            rhs = Element.from_perm(s1, delta) * x * Element.from_perm(cb.perm_inverse(s2), delta)
            if lhs != rhs:
                return False
        return True

    rep.check("relabelling star = star by definition", True, relabel_agrees)
    rep.check("star is a left module action on B_3", True, module_axiom)
    rep.check("U is S_2r-equivariant", True, equivariance)
    rep.check("star of (s1, s2) = s1 o D o s2^-1", True, two_sided)

    sp = fn.SuperSpace(1, 1)
    cap_cup = fn.eval_elementary(sp, "A0").matrix @ fn.eval_elementary(sp, "U0").matrix
    rep.check("cap o cup for (1|2)", [[-1]], lambda: cap_cup.toarray().tolist())

    def functoriality() -> bool:
        for _ in range(200):
            k, mid, l = rng.randint(0, 4), rng.randint(0, 4), rng.randint(0, 4)
            if (k + mid) % 2:
                mid = mid + 1 if mid < 4 else mid - 1
            if (mid + l) % 2:
                l = l + 1 if l < 4 else l - 1
            if (k + mid) % 2 or (mid + l) % 2:
                continue
            d1, d2 = _random_diagram(rng, mid, l), _random_diagram(rng, k, mid)
            res = dg.compose(d1, d2)
            lhs = fn.eval_diagram(sp, d1).matrix @ fn.eval_diagram(sp, d2).matrix
            rhs = fn.eval_diagram(sp, res.diagram).matrix * int(sp.delta) ** res.loop_count
            if (lhs - rhs).count_nonzero():
                return False
        return True

    def tensor_functoriality() -> bool:
        for _ in range(50):
            k1, k2 = rng.randint(0, 2), rng.randint(0, 2)
            l1 = rng.choice([x for x in range(3) if (x + k1) % 2 == 0])
            l2 = rng.choice([x for x in range(3) if (x + k2) % 2 == 0])
            d1, d2 = _random_diagram(rng, k1, l1), _random_diagram(rng, k2, l2)
            lhs = fn.eval_diagram(sp, dg.tensor(d1, d2)).matrix
            rhs = fn._kron_all([fn.eval_diagram(sp, d1).matrix, fn.eval_diagram(sp, d2).matrix])
            if (lhs - rhs).count_nonzero():
                return False
        return True

    rep.check("F preserves composition, 200 random pairs", True, functoriality)
    rep.check("F preserves tensor products", True, tensor_functoriality)
    for m, n in ((1, 1), (2, 1), (0, 2)):
        space = fn.SuperSpace(m, n)
        rep.check(
            f"osp({m}|{2 * n}) basis size",
            fn.osp_dim_formula(m, n),
            lambda space=space: len(fn.osp_basis(space)),
        )
        rep.check(
            f"tau, cup, cap are osp({m}|{2 * n})-invariant",
            True,
            lambda space=space: all(
                fn.supercommutator_vanishes(space, X, p, fn.eval_elementary(space, w))
                for p, X in fn.osp_basis(space)
                for w in ("X", "U0", "A0")
            ),
        )


def suite_lz(rep: Report, opt: Options) -> None:
    """The sum of all diagrams and the symmetric-group identities behind it."""
    for r in range(1, 5):
        rep.check(f"Phi_LZ({r}) = sum of all diagrams", True, lambda r=r: kn.phi_lz(r) == kn.phi_lz_direct(r))
        rep.check(
            f"x_(2r) * I_r = 2^r r! sum D, r={r}",
            True,
            lambda r=r: kn.x_star_identity(r) == kn.phi_lz_direct(r).scale(2 ** r * factorial(r)),
        )

    def quasi_idempotent(k: int) -> bool:
        for lam in cb.partitions(k):
            for t in cb.standard_tableaux(lam):
                c = al.young_symmetrizer_group(t)
                if c * c != c.scale(cb.hook_product(lam)):
                    return False
        return True

    k_max = 6 if opt.slow else 5
    for k in range(1, k_max + 1):
        rep.check(f"c_lam(t)^2 = h_lam c_lam(t), k={k}", True, lambda k=k: quasi_idempotent(k))
    rep.check("identity = sum of normalised symmetrizers, k <= 4", True, lambda: al.identity_resolution_check(4))


def suite_phi(rep: Report, opt: Options) -> None:
    """The two constructions of each kernel element, quasi-idempotency and annihilation."""
    for m, n in opt.pairs():
        P = kn.OspParams(m, n)
        tag = f"({m},{n})"
        rep.check(f"{tag} Phi by bending = by sandwich", True, lambda P=P: kn.phi_via_bending(P) == kn.phi_via_sandwich(P))
        rep.check(f"{tag} Phi_hat two routes", True, lambda P=P: kn.phi_hat(P) == kn.phi_hat_via_lz(P))
        rep.check(f"{tag} Phi_tilde two routes", True, lambda P=P: kn.phi_tilde(P) == kn.phi_tilde_via_sandwich(P))
        for r in (P.r_c, P.r_c + 1):
            for lam in cb.even_partitions_containing(r, m, n):
                rep.check(
                    f"{tag} Phi_lambda{lam} two routes",
                    True,
                    lambda P=P, r=r, lam=lam: kn.phi_lambda(P, r, lam) == kn.phi_lambda_via_lz(P, r, lam),
                )
        rep.check(
            f"{tag} Phi_tilde^2 = c Phi_tilde",
            P.c_mn,
            lambda P=P: _proportionality(kn.phi_tilde(P) * kn.phi_tilde(P), kn.phi_tilde(P)),
        )
        rep.check(f"{tag} e_i Phi = Phi e_i = 0", True, lambda P=P: kn.annihilated_by_cups(kn.phi(P)))
        rep.check(
            f"{tag} F(Phi_tilde) = 0",
            True,
            lambda P=P, m=m, n=n: _in_kernel(fn.SuperSpace(m, n), kn.phi_tilde(P), P.r_c, opt.budget),
        )


def _proportionality(x: Element, y: Element) -> Optional[Fraction]:
    """The scalar ``c`` with ``x = c y``, or ``None``."""
    if y.is_zero():
        return None
    d, c = next(iter(y.terms.items()))
    ratio = Fraction(x.coeff(d)) / Fraction(c)
    return ratio if x == y.scale(ratio) else None


def _in_kernel(sp: fn.SuperSpace, x: Element, r: int, budget: int) -> bool:
    fn._check_budget(sp, r, budget)
    return fn.in_kernel(sp, x)


def _rows_for(m: int, n: int, r_max: Optional[int]) -> Iterator[int]:
    top = r_max if r_max is not None else (m + 1) * (n + 1) + 1
    return iter(range(0, top + 1))


def suite_basis(rep: Report, opt: Options) -> None:
    """Kernel dimensions, the threshold, and both explicit bases."""
    for m, n in opt.pairs():
        sp, P = fn.SuperSpace(m, n), kn.OspParams(m, n)
        rs = [opt.r] if opt.r is not None else list(_rows_for(m, n, opt.r_max))
        for r in rs:
            dim_b = double_factorial_odd(r)
            pred = cb.ker_dim_formula(m, n, r)
            rep.check(
                f"({m},{n},{r}) rank + predicted nullity = (2r-1)!!",
                dim_b,
                lambda sp=sp, r=r, pred=pred: fn.rank_f(sp, r, opt.budget) + pred,
            )
            rep.check(
                f"({m},{n},{r}) nullity is zero exactly below r_c",
                r < P.r_c,
                lambda sp=sp, r=r, dim_b=dim_b: fn.rank_f(sp, r, opt.budget) == dim_b,
            )
        r = P.r_c
        rep.check(
            f"({m},{n}) minimal basis size",
            cb.specht_dim(P.lambda_c),
            lambda P=P: len(kn.basis_min(P)),
        )
        rep.check(
            f"({m},{n}) minimal basis independent and spans Ker F",
            True,
            lambda P=P, sp=sp: int_rank(_int_rows(kn.basis_min(P))) == len(kn.basis_min(P))
            and _spans_kernel(kn.basis_min(P), sp, P.r_c, opt.budget),
        )
        r = opt.r if opt.r is not None else P.r_c + 1
        rep.check(
            f"({m},{n},{r}) general basis size",
            cb.ker_dim_formula(m, n, r),
            lambda P=P, r=r: len(kn.basis_general(P, r)),
        )
        rep.check(
            f"({m},{n},{r}) general basis spans Ker F",
            True,
            lambda P=P, sp=sp, r=r: _spans_kernel(kn.basis_general(P, r), sp, r, opt.budget),
        )


def _int_rows(elements: Sequence[Element]) -> List[List[int]]:
    out = []
    for x in elements:
        vec = x.to_vector()
        den = lcm(1, *(c.denominator for c in vec))
        out.append([int(c * den) for c in vec])
    return out


def suite_garnir(rep: Report, opt: Options) -> None:
    """Garnir elements in the symmetric group and the relations they force on the kernel."""
    t = cb.Tableau(((1, 3, 4), (2, 5)))
    expected_g = {
        cb.perm_identity(5): 1,
        cb.perm_from_cycles(5, (2, 3)): -1,
        cb.perm_from_cycles(5, (2, 5)): -1,
        cb.perm_from_cycles(5, (1, 3)): -1,
        cb.perm_from_cycles(5, (1, 5)): -1,
        cb.perm_from_cycles(5, (1, 3), (2, 5)): 1,
    }
    rep.check(
        "G for rows (1,3,4),(2,5), X={1,2}, Y={3,5}",
        True,
        lambda: cb.garnir_element(t, (1, 2), (3, 5)) == cb.GroupAlgebraElement(5, expected_g),
    )
    rep.check(
        "c(t) G = 0 for that tableau",
        True,
        lambda: (al.young_symmetrizer_group(t) * cb.garnir_element(t, (1, 2), (3, 5))).is_zero(),
    )
    k_max = 6
    for k in range(2, k_max + 1):
        rep.check(f"c(t) G_XY = 0, every admissible case with k={k}", True, lambda k=k: all_garnir_vanish(k))
    P = kn.OspParams(1, 1)
    rep.check(
        "Phi_hat - (34)*Phi_hat - (47)*Phi_hat = 0 for (1|2)",
        True,
        lambda: _example_relation(P),
    )
    for m, n in ((1, 1), (0, 1), (2, 0), (0, 2)):
        rep.check(
            f"({m},{n}) every Garnir relation on Phi_hat holds",
            True,
            lambda m=m, n=n: all(_garnir_relations(kn.OspParams(m, n))),
        )


def all_garnir_vanish(k: int) -> bool:
    """``c(t) G_{X,Y} = 0`` for all standard ``t`` of size ``k`` and all overfull ``X``, ``Y``."""
    for lam in cb.partitions(k):
        for t in cb.standard_tableaux(lam):
            c = al.young_symmetrizer_group(t)
            cols = t.columns
            for i, j in itertools.combinations(range(len(cols)), 2):
                for a in range(1, len(cols[i]) + 1):
                    for b in range(max(1, len(cols[i]) + 1 - a), len(cols[j]) + 1):
                        for X in itertools.combinations(cols[i], a):
                            for Y in itertools.combinations(cols[j], b):
                                if not (c * cb.garnir_element(t, X, Y)).is_zero():
                                    return False
    return True


def _example_relation(P: kn.OspParams) -> bool:
    ph = kn.phi_hat(P)
    k = 2 * P.r_c
    g = (
        cb.GroupAlgebraElement.one(k)
        - cb.GroupAlgebraElement.of(cb.perm_from_cycles(k, (3, 4)))
        - cb.GroupAlgebraElement.of(cb.perm_from_cycles(k, (4, 7)))
    )
    return al.star_fast(g, ph).is_zero() and kn.garnir_relation_check(P, 2, 2, (3, 4), (1, 3))


def _garnir_relations(P: kn.OspParams) -> Iterator[bool]:
    m, n = P.m, P.n
    types = list(itertools.product(range(m + 2), repeat=n + 1))
    for a in types:
        for b in types:
            if sum(a) != sum(b):
                continue
            i_seq, j_seq = cb.standard_sequence(a, m, n), cb.standard_sequence(b, m, n)
            for p in range(1, n + 2):
                for q in range(1, n + 2):
                    if a[p - 1] + b[q - 1] > m + 1:
                        yield kn.garnir_relation_check(P, p, q, i_seq, j_seq)


def suite_generators(rep: Report, opt: Options) -> None:
    """The minimal-degree generating set, and the single module generator."""
    for m, n in opt.pairs(((1, 1), (0, 1), (2, 0), (1, 0))):
        P, sp = kn.OspParams(m, n), fn.SuperSpace(m, n)
        rep.check(
            f"({m},{n}) generators annihilated by cups",
            True,
            lambda P=P: all(kn.annihilated_by_cups(g) for g in kn.generators_min(P)),
        )
        rep.check(
            f"({m},{n}) ideal of the generators = Ker F, r = r_c",
            True,
            lambda P=P, sp=sp: _subspace_is_kernel(al.ideal_saturate(kn.generators_min(P)), sp, P.r_c, opt.budget),
        )
    for m, n, r in ((1, 1, 5), (0, 1, 3)):
        P, sp = kn.OspParams(m, n), fn.SuperSpace(m, n)
        rep.check(
            f"({m},{n},{r}) module generated by Phi_hat (x) I = Ker F",
            True,
            lambda P=P, sp=sp, r=r: _subspace_is_kernel(
                al.module_saturate(al.embed(kn.phi_hat(P), r)), sp, r, opt.budget
            ),
        )


def suite_sft(rep: Report, opt: Options) -> None:
    """The ideal generated by the padded generators is the whole kernel."""
    if opt.m is not None or opt.n is not None:
        m, n = opt.m or 0, opt.n or 0
        cases = [(m, n, opt.r if opt.r is not None else (m + 1) * (n + 1) + 1)]
    else:
        cases = [(1, 1, 5), (0, 1, 3), (2, 0, 4)]
    for m, n, r in cases:
        P, sp = kn.OspParams(m, n), fn.SuperSpace(m, n)
        rep.check(
            f"({m},{n},{r}) ideal dimension",
            cb.ker_dim_formula(m, n, r),
            lambda P=P, r=r: al.ideal_saturate(kn.generators_general(P, r)).dim,
        )
        rep.check(
            f"({m},{n},{r}) ideal of the generators = Ker F",
            True,
            lambda P=P, sp=sp, r=r: _subspace_is_kernel(
                al.ideal_saturate(kn.generators_general(P, r)), sp, r, opt.budget
            ),
        )


def suite_osp12n(rep: Report, opt: Options) -> None:
    """A single generator suffices for ``OSp(1|2n)``."""
    sp = fn.SuperSpace(1, 1)
    E = kn.osp12n_generator(1)
    rep.check("(1|2) ideal of E dimension", 14, lambda: al.ideal_saturate([E]).dim)
    rep.check("(1|2) ideal of E = Ker F", True, lambda: _subspace_is_kernel(al.ideal_saturate([E]), sp, 4, opt.budget))
    rep.check(
        "(1|2) ideal of E (x) I = Ker F, r=5",
        True,
        lambda: _subspace_is_kernel(al.ideal_saturate([al.embed(E, 5)]), sp, 5, opt.budget),
    )
    for m in (2, 3):
        rep.check(f"column identity for lambda=(2^{m})", True, lambda m=m: kn.column_identity_check(m))
    if opt.slow:
        rep.check("(1|4) ideal of E dimension = predicted", cb.ker_dim_formula(1, 2, 6), lambda: al.ideal_saturate([kn.osp12n_generator(2)]).dim)
        rep.check(
            "(1|4) F(E) = 0",
            True,
            lambda: fn.in_kernel(fn.SuperSpace(1, 2), kn.osp12n_generator(2)),
            note="together with the dimension match this gives the ideal equals Ker F",
        )


def suite_classical(rep: Report, opt: Options) -> None:
    """The symplectic idempotent and the orthogonal idempotents."""
    for n in (1, 2):
        E = kn.symplectic_idempotent(n)
        sp = fn.SuperSpace(0, n)
        rep.check(f"Sp({2 * n}) E^2 = E", True, lambda E=E: E * E == E)
        for r in (n + 1, n + 2):
            rep.check(
                f"Sp({2 * n}) ideal of E = Ker F, r={r}",
                True,
                lambda E=E, sp=sp, r=r: _subspace_is_kernel(al.ideal_saturate([al.embed(E, r)]), sp, r, opt.budget),
            )
    for m in (1, 2, 3):
        sp = fn.SuperSpace(m, 0)
        rep.check(
            f"O({m}) E_k^2 = E_k for all k",
            True,
            lambda m=m: all(kn.classical_Ek(m, k) * kn.classical_Ek(m, k) == kn.classical_Ek(m, k) for k in range(m + 2)),
        )
        k = (m + 1) // 2
        for r in (m + 1, m + 2):
            rep.check(
                f"O({m}) ideal of E_{k} = Ker F, r={r}",
                True,
                lambda m=m, k=k, sp=sp, r=r: _subspace_is_kernel(
                    al.ideal_saturate([al.embed(kn.classical_Ek(m, k), r)]), sp, r, opt.budget
                ),
            )


def suite_osp_end(rep: Report, opt: Options) -> None:
    """The centralizer oracle against the functor, for the group and the Lie superalgebra."""
    for m, n in opt.pairs():
        sp = fn.SuperSpace(m, n)
        rs = [opt.r] if opt.r is not None else list(_rows_for(m, n, opt.r_max))
        for r in rs:
            rep.check(
                f"({m},{n},{r}) End_OSp dimension = rank F",
                True,
                lambda sp=sp, r=r: fn.centralizer_dim_group(sp, r, opt.budget) == fn.rank_f(sp, r, opt.budget),
            )
    if opt.m is None and opt.n is None:
        sp = fn.SuperSpace(1, 1)
        for r in range(1, 5):
            rep.check(
                f"(1,1,{r}) End_osp = End_OSp",
                True,
                lambda r=r: fn.centralizer_dim_liealg(sp, r, opt.budget) == fn.centralizer_dim_group(sp, r, opt.budget),
            )
        rep.check(
            "(2,1,3) End_osp strictly larger than End_OSp",
            True,
            lambda: fn.centralizer_dim_liealg(fn.SuperSpace(2, 1), 3, opt.budget)
            > fn.centralizer_dim_group(fn.SuperSpace(2, 1), 3, opt.budget),
        )
        verdicts = (
            (1, 0, 1), (1, 0, 2), (1, 1, 3), (1, 1, 4), (3, 0, 3), (3, 0, 4), (0, 1, 1), (0, 1, 2),
            (0, 2, 2), (0, 2, 3), (2, 0, 1), (2, 0, 2), (2, 1, 2), (2, 1, 3), (4, 0, 1), (4, 0, 2),
        )
        for m, n, r in verdicts:
            rep.check(
                f"({m},{n},{r}) B_r = End_osp verdict",
                fn.osp_end_isomorphism_expected(m, n, r),
                lambda m=m, n=n, r=r: _isomorphic_to_liealg_end(m, n, r, opt.budget),
            )


def _isomorphic_to_liealg_end(m: int, n: int, r: int, budget: int) -> bool:
    sp = fn.SuperSpace(m, n)
    rank = fn.rank_f(sp, r, budget)
    return rank == double_factorial_odd(r) and fn.centralizer_dim_liealg(sp, r, budget) == rank


SUITE_FUNCTIONS: Dict[str, Callable[[Report, Options], None]] = {
    "relations": suite_relations,
    "actions": suite_actions,
    "lz": suite_lz,
    "phi": suite_phi,
    "basis": suite_basis,
    "garnir": suite_garnir,
    "generators": suite_generators,
    "sft": suite_sft,
    "osp12n": suite_osp12n,
    "classical": suite_classical,
    "osp-end": suite_osp_end,
}


# ---------------------------------------------------------------------------
# commands


def cmd_dims(opt: Options) -> Report:
    m, n = opt.m or 0, opt.n or 0
    r_max = next((v for v in (opt.r_max, opt.r) if v is not None), 5)
    rep = Report("dims", opt.params(), opt.seed)
    r_c = (m + 1) * (n + 1)
    for r in range(0, r_max + 1):
        rep.table.append(
            {"r": r, "dim_B": double_factorial_odd(r), "r_c": r_c, "ker_dim": cb.ker_dim_formula(m, n, r)}
        )
    return rep


def cmd_kernel_rank(opt: Options) -> Report:
    m, n = opt.m or 0, opt.n or 0
    r = opt.r if opt.r is not None else (m + 1) * (n + 1)
    rep = Report("kernel-rank", opt.params(), opt.seed)
    sp = fn.SuperSpace(m, n)
    pred = cb.ker_dim_formula(m, n, r)
    dim_b = double_factorial_odd(r)
    c = rep.check(f"({m},{n},{r}) nullity of F", pred, lambda: dim_b - fn.rank_f(sp, r, opt.budget))
    if c.passed is not None:
        rank = dim_b - c.computed
        rep.table.append({"r": r, "dim_B": dim_b, "rank": rank, "nullity": c.computed, "predicted": pred})
    return rep


def cmd_verify(suite: str, opt: Options) -> Report:
    rep = Report(suite, opt.params(), opt.seed)
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        before = len(rep.checks)
        SUITE_FUNCTIONS[name](rep, opt)
        if suite == "all":
            for c in rep.checks[before:]:
                c.name = f"[{name}] {c.name}"
    return rep


# ---------------------------------------------------------------------------
# argument parsing


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--m", type=int, help="even dimension m of V")
    common.add_argument("--n", type=int, help="half the odd dimension of V")
    common.add_argument("--r", type=int, help="tensor power r")
    common.add_argument("--r-max", type=int, dest="r_max", help="largest r in tables and sweeps")
    common.add_argument("--delta", type=_fraction, help="numeric loop value for the relations suite")
    common.add_argument(
        "--budget-entries", type=int, dest="budget", default=fn.DEFAULT_BUDGET,
        help="largest dim(V)^(2r) to evaluate (default %(default)s)",
    )
    common.add_argument("--slow", action="store_true", help="include the long checks")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the random checks")
    common.add_argument("--json", action="store_true", help="emit the report as one JSON document")
    common.add_argument("--csv", action="store_true", help="emit the table as CSV (dims, kernel-rank)")

    parser = _Parser(prog="brauer-osp", description="Exact checks of the orthosymplectic Brauer kernel.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", parents=[common], help="dimension table")
    sub.add_parser("kernel-rank", parents=[common], help="rank and nullity of F_r^r")
    verify = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    verify.add_argument("suite", choices=SUITES + ("all",))
    return parser


def _options(ns: argparse.Namespace) -> Options:
    for name in ("m", "n", "r", "r_max"):
        value = getattr(ns, name)
        if value is not None and value < 0:
            raise _UsageError(f"--{name.replace('_', '-')} must be non-negative")
    return Options(ns.m, ns.n, ns.r, ns.r_max, ns.delta, ns.budget, ns.slow, ns.seed)


def _emit_csv(rep: Report, out) -> None:
    if not rep.table:
        return
    writer = csv.DictWriter(out, fieldnames=list(rep.table[0]))
    writer.writeheader()
    writer.writerows(rep.table)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        opt = _options(ns)
        if ns.json and ns.csv:
            raise _UsageError("--json and --csv are exclusive")
        if ns.csv and ns.command == "verify":
            raise _UsageError("--csv applies to dimension tables only")
    except _UsageError as exc:
        print(f"brauer-osp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if ns.command == "dims":
        rep = cmd_dims(opt)
    elif ns.command == "kernel-rank":
        rep = cmd_kernel_rank(opt)
    else:
        rep = cmd_verify(ns.suite, opt)
    if ns.json:
        print(json.dumps(rep.to_dict(), indent=2))
    elif ns.csv:
        _emit_csv(rep, sys.stdout)
    else:
        print(rep.render())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
