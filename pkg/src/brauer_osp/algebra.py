"""Linear combinations of Brauer diagrams and the symmetric-group actions on them.

An :class:`Element` is a finite combination of ``(k, l)``-diagrams with a fixed
loop value ``delta``.  Products are composition (``e1 * e2`` puts ``e1`` on
top) with every removed loop contributing a factor ``delta``.

Coefficients are ``Fraction`` by default.  Passing a ``sympy.Poly`` as
``delta`` switches an element to polynomial coefficients in that generator,
which is how the presentation relations are checked for a generic loop value.

Permutations of ``1..2r`` act on ``(r, r)``-diagrams through the bending maps
``U_map``/``A_map``; in the labelling where top vertex ``i`` carries ``2i-1``
and bottom vertex ``i`` carries ``2i`` this is plain relabelling of endpoints,
which is what the fast paths use.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np
import sympy

from . import combinatorics as cb
from . import diagram as dg
from .combinatorics import GroupAlgebraElement, Permutation, Tableau
from .diagram import BrauerDiagram
from .linalg import DEFAULT_PRIME, ModularSubspace, int_rank, int_rref

Scalar = Union[int, Fraction, sympy.Poly]


def symbolic_delta(name: str = "delta") -> sympy.Poly:
    """The generator of the integer polynomial ring used for a generic loop value."""
    sym = sympy.Symbol(name)
    return sympy.Poly(sym, sym, domain="ZZ")


def _coerce(c: Scalar, delta: Scalar) -> Scalar:
    if isinstance(delta, sympy.Poly):
        if isinstance(c, sympy.Poly):
            return c
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError("symbolic mode uses integer polynomial coefficients")
        return sympy.Poly(int(c), *delta.gens, domain="ZZ")
    if isinstance(c, sympy.Poly):
        raise TypeError("polynomial coefficient in a numeric element")
    return Fraction(c)


def _format_coeff(c: Scalar) -> str:
    if isinstance(c, sympy.Poly):
        return str(c.as_expr())
    return f"{c.numerator}/{c.denominator}"


class Element:
    """A combination of same-signature Brauer diagrams."""

    __slots__ = ("k", "l", "delta", "terms")

    def __init__(self, k: int, l: int, delta: Scalar, terms: Dict[BrauerDiagram, Scalar] | None = None):
        self.k, self.l = k, l
        self.delta = delta if isinstance(delta, sympy.Poly) else Fraction(delta)
        self.terms: Dict[BrauerDiagram, Scalar] = {}
        for d, c in (terms or {}).items():
            if (d.k, d.l) != (k, l):
                raise ValueError(f"diagram {d!r} does not have signature ({k},{l})")
            c = _coerce(c, self.delta)
            if c:
                self.terms[d] = c

    # -- construction ----------------------------------------------------

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, delta: Scalar, coeff: Scalar = 1) -> "Element":
        return cls(d.k, d.l, delta, {d: coeff})

    @classmethod
    def zero(cls, k: int, l: int, delta: Scalar) -> "Element":
        return cls(k, l, delta)

    @classmethod
    def identity(cls, r: int, delta: Scalar) -> "Element":
        return cls.from_diagram(dg.identity(r), delta)

    @classmethod
    def from_group(cls, ga: GroupAlgebraElement, delta: Scalar) -> "Element":
        k = ga.degree
        return cls(k, k, delta, {dg.perm_to_diagram(p): c for p, c in ga.terms.items()})

    @classmethod
    def from_perm(cls, p: Permutation, delta: Scalar, coeff: Scalar = 1) -> "Element":
        return cls.from_diagram(dg.perm_to_diagram(p), delta, coeff)

    def _same_space(self, terms: Dict[BrauerDiagram, Scalar]) -> "Element":
        return Element(self.k, self.l, self.delta, terms)

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "Element") -> None:
        if (self.k, self.l) != (other.k, other.l):
            raise ValueError("signature mismatch")
        if self.delta != other.delta:
            raise ValueError("elements use different loop values")

    def __add__(self, other: "Element") -> "Element":
        self._check_compatible(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return self._same_space(out)

    def __neg__(self) -> "Element":
        return self._same_space({d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c: Scalar) -> "Element":
        c = _coerce(c, self.delta)
        return self._same_space({d: v * c for d, v in self.terms.items()})

    def __rmul__(self, c: Scalar) -> "Element":
        return self.scale(c)

    def __mul__(self, other: Union["Element", Scalar]) -> "Element":
        if not isinstance(other, Element):
            return self.scale(other)
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (self.k, self.l) == (other.k, other.l) and self.delta == other.delta and self.terms == other.terms

    def __hash__(self) -> int:  # elements are used as values, not keys
        raise TypeError("Element is not hashable")

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(isinstance(c, Fraction) and c.denominator == 1 for c in self.terms.values())

    def is_proportional_to(self, other: "Element") -> bool:
        """Whether ``self == c * other`` for some scalar ``c`` (``other`` non-zero)."""
        if other.is_zero():
            return self.is_zero()
        if set(self.terms) != set(other.terms):
            return self.is_zero()
        d0 = next(iter(other.terms))
        c = self.terms[d0] / other.terms[d0]
        return self == other.scale(c)

    def coeff(self, d: BrauerDiagram) -> Scalar:
        return self.terms.get(d, _coerce(0, self.delta))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"Element({self.k},{self.l}: 0)"
        body = " + ".join(f"({_format_coeff(c)}){d!r}" for d, c in sorted(self.terms.items(), key=lambda t: t[0].match))
        return f"Element({self.k},{self.l}: {body})"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        if isinstance(self.delta, sympy.Poly):
            raise ValueError("symbolic elements are not serialized")
        return {
            "k": self.k,
            "l": self.l,
            "delta": _format_coeff(self.delta),
            "terms": [
                {"diagram": d.to_json(), "coeff": _format_coeff(c)}
                for d, c in sorted(self.terms.items(), key=lambda t: t[0].match)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Element":
        terms = {BrauerDiagram.from_json(t["diagram"]): Fraction(t["coeff"]) for t in data["terms"]}
        return cls(data["k"], data["l"], Fraction(data["delta"]), terms)

    # -- coordinates ---------------------------------------------------------

    def to_vector(self) -> List[Fraction]:
        space = diagram_space(self.k, self.l)
        vec = [Fraction(0)] * len(space)
        for d, c in self.terms.items():
            vec[space.index[d]] = c
        return vec

    @classmethod
    def from_vector(cls, k: int, l: int, delta: Scalar, vec: Sequence) -> "Element":
        space = diagram_space(k, l)
        return cls(k, l, delta, {space.diagrams[i]: c for i, c in enumerate(vec) if c})


def multiply(e1: Element, e2: Element) -> Element:
    """Bilinear extension of ``compose``: ``e1`` on top of ``e2``."""
    if e1.k != e2.l:
        raise ValueError(f"cannot compose ({e1.k},{e1.l}) after ({e2.k},{e2.l})")
    if e1.delta != e2.delta:
        raise ValueError("elements use different loop values")
    delta = e1.delta
    out: Dict[BrauerDiagram, Scalar] = {}
    powers: Dict[int, Scalar] = {}
    for d1, c1 in e1.terms.items():
        for d2, c2 in e2.terms.items():
            d, loops = dg.compose(d1, d2)
            if loops not in powers:
                powers[loops] = delta ** loops
            c = c1 * c2 * powers[loops]
            out[d] = out[d] + c if d in out else c
    return Element(e2.k, e1.l, delta, out)


def tensor(e1: Element, e2: Element) -> Element:
    if e1.delta != e2.delta:
        raise ValueError("elements use different loop values")
    out: Dict[BrauerDiagram, Scalar] = {}
    for d1, c1 in e1.terms.items():
        for d2, c2 in e2.terms.items():
            d = dg.tensor(d1, d2)
            c = c1 * c2
            out[d] = out[d] + c if d in out else c
    return Element(e1.k + e2.k, e1.l + e2.l, e1.delta, out)


def tensor_power(e: Element, times: int) -> Element:
    out = Element.identity(0, e.delta)
    for _ in range(times):
        out = tensor(out, e)
    return out


def s(i: int, r: int, delta: Scalar) -> Element:
    return Element.from_diagram(dg.generator_s(i, r), delta)


def e(i: int, r: int, delta: Scalar) -> Element:
    return Element.from_diagram(dg.generator_e(i, r), delta)


# ---------------------------------------------------------------------------
# diagram bases


@dataclass(frozen=True)
class DiagramSpace:
    k: int
    l: int
    diagrams: Tuple[BrauerDiagram, ...]
    index: Dict[BrauerDiagram, int]

    def __len__(self) -> int:
        return len(self.diagrams)


@lru_cache(maxsize=None)
def diagram_space(k: int, l: int) -> DiagramSpace:
    ds = tuple(dg.enumerate_diagrams(k, l))
    return DiagramSpace(k, l, ds, {d: i for i, d in enumerate(ds)})


# ---------------------------------------------------------------------------
# symmetric group algebra inside the Brauer algebra


def _transposition_factors(block: Sequence[int], k: int, signed: bool) -> List[GroupAlgebraElement]:
    """Factors ``C_2, ..., C_s`` with ``sum over Sym(block) = C_2 C_3 ... C_s``.

    ``C_j = 1 + sum_{i<j} (b_i b_j)``, with minus signs in the signed case.
    """
    factors = []
    block = tuple(block)
    sign = -1 if signed else 1
    for j in range(1, len(block)):
        terms = {cb.perm_identity(k): Fraction(1)}
        for i in range(j):
            terms[cb.perm_from_cycles(k, (block[i], block[j]))] = Fraction(sign)
        factors.append(GroupAlgebraElement(k, terms))
    return factors


def right_mul_subgroup_sum(x: Element, blocks: Iterable[Sequence[int]], signed: bool) -> Element:
    """``x`` times the (signed) sum over the Young subgroup of ``blocks``.

    The sum is never expanded: it is applied as a product of small factors.
    """
    for block in blocks:
        for factor in _transposition_factors(block, x.k, signed):
            x = multiply(x, Element.from_group(factor, x.delta))
    return x


def left_mul_subgroup_sum(x: Element, blocks: Iterable[Sequence[int]], signed: bool) -> Element:
    for block in blocks:
        for factor in _transposition_factors(block, x.l, signed):
            x = multiply(Element.from_group(factor, x.delta), x)
    return x


def young_x_group(t: Tableau) -> GroupAlgebraElement:
    return cb.subgroup_sum(t.size, t.rows, signed=False)


def young_y_group(t: Tableau) -> GroupAlgebraElement:
    return cb.subgroup_sum(t.size, t.columns, signed=True)


def young_symmetrizer_group(t: Tableau) -> GroupAlgebraElement:
    return young_x_group(t) * young_y_group(t)


def young_x(t: Tableau, delta: Scalar = 0) -> Element:
    return Element.from_group(young_x_group(t), delta)


def young_y(t: Tableau, delta: Scalar = 0) -> Element:
    return Element.from_group(young_y_group(t), delta)


def young_symmetrizer(t: Tableau, delta: Scalar = 0) -> Element:
    return Element.from_group(young_symmetrizer_group(t), delta)


IDENTITY_RESOLUTION_BOUND = 4


def identity_resolution_check(k: int, bound: int = IDENTITY_RESOLUTION_BOUND) -> bool:
    """Check ``1 = sum_lam sum_{all fillings t} h_lam^-2 c_lam(t)`` in the group algebra of S_k."""
    if k > bound:
        raise ValueError(
            f"k={k} exceeds the bound {bound}: the check sums k! symmetrizers per shape"
        )
    total = GroupAlgebraElement(k)
    for lam in cb.partitions(k):
        weight = Fraction(1, cb.hook_product(lam) ** 2)
        for t in cb.all_tableaux(lam):
            total = total + young_symmetrizer_group(t).scale(weight)
    return total == GroupAlgebraElement.one(k)


def sharp(x: Element) -> Element:
    """Invert every permutation in a combination of permutation diagrams."""
    out = {}
    for d, c in x.terms.items():
        if not d.is_permutation():
            raise ValueError("sharp is defined on the group algebra only")
        out[dg.perm_to_diagram(cb.perm_inverse(d.to_permutation()))] = c
    return Element(x.k, x.l, x.delta, out)


# ---------------------------------------------------------------------------
# bending between B_{2r}^0 and B_r^r


def U_map(a: Element) -> Element:
    """``(I_r (x) a) o (I_r (x) omega) o (U_r (x) I_r)`` for ``a`` in ``B_{2r}^0``."""
    if a.l != 0 or a.k % 2:
        raise ValueError("U_map takes an element of B_{2r}^0")
    r = a.k // 2
    below = dg.compose(
        dg.tensor(dg.identity(r), dg.omega(r)), dg.tensor(dg.u_r(r), dg.identity(r))
    ).diagram
    out = {}
    for d, c in a.terms.items():
        res = dg.compose(dg.tensor(dg.identity(r), d), below)
        assert res.loop_count == 0
        out[res.diagram] = c
    return Element(r, r, a.delta, out)


def A_map(x: Element) -> Element:
    """``A_r o (I_r (x) x) o omega^{-1}`` for ``x`` in ``B_r^r``."""
    if x.k != x.l:
        raise ValueError("A_map takes an element of B_r^r")
    r = x.k
    omega_inv = dg.perm_to_diagram(cb.perm_inverse(dg.omega_perm(r)))
    out = {}
    for d, c in x.terms.items():
        res = dg.compose(dg.compose(dg.a_r(r), dg.tensor(dg.identity(r), d)).diagram, omega_inv)
        out[res.diagram] = c
    return Element(2 * r, 0, x.delta, out)


def U_fast(a: Element) -> Element:
    """Same as :func:`U_map`: bottom label ``2i-1`` becomes top vertex ``i``, ``2i`` bottom vertex ``i``."""
    r = a.k // 2
    out = {}
    for d, c in a.terms.items():
        match = [0] * (2 * r)
        for v, w in enumerate(d.match):
            match[dg.vertex_of_label(r, v + 1)] = dg.vertex_of_label(r, w + 1)
        out[BrauerDiagram(r, r, tuple(match))] = c
    return Element(r, r, a.delta, out)


def A_fast(x: Element) -> Element:
    r = x.k
    out = {}
    for d, c in x.terms.items():
        match = [0] * (2 * r)
        for v, w in enumerate(d.match):
            match[dg.label_of_vertex(r, v) - 1] = dg.label_of_vertex(r, w) - 1
        out[BrauerDiagram(2 * r, 0, tuple(match))] = c
    return Element(2 * r, 0, x.delta, out)


# ---------------------------------------------------------------------------
# the two actions of the symmetric group on 2r letters

Acting = Union[GroupAlgebraElement, Permutation]


def _as_group(alpha: Acting) -> GroupAlgebraElement:
    if isinstance(alpha, GroupAlgebraElement):
        return alpha
    return GroupAlgebraElement.of(tuple(alpha))


def star_action_20(alpha: Acting, a: Element) -> Element:
    """``alpha * a := a o alpha^sharp`` on ``B_{2r}^0``."""
    alpha = _as_group(alpha)
    if alpha.degree != a.k or a.l != 0:
        raise ValueError("signature mismatch")
    return multiply(a, Element.from_group(alpha.sharp(), a.delta))


def star_action_rr(alpha: Acting, x: Element) -> Element:
    """``alpha * x := U(A(x) o alpha^sharp)`` on ``B_r^r``, computed by definition."""
    return U_map(star_action_20(alpha, A_map(x)))


def star_fast(alpha: Acting, x: Element) -> Element:
    """Relabelling form of :func:`star_action_rr`."""
    alpha = _as_group(alpha)
    if alpha.degree != 2 * x.k or x.k != x.l:
        raise ValueError("signature mismatch")
    out: Dict[BrauerDiagram, Scalar] = {}
    for p, a in alpha.terms.items():
        for d, c in x.terms.items():
            nd = dg.relabel(d, p)
            v = a * c
            out[nd] = out[nd] + v if nd in out else v
    return Element(x.k, x.l, x.delta, out)


def star_subgroup_sum(x: Element, blocks: Iterable[Sequence[int]], signed: bool) -> Element:
    """``alpha * x`` for ``alpha`` the (signed) sum over a Young subgroup of S_{2r}."""
    return U_fast(right_mul_subgroup_sum(A_fast(x), blocks, signed))


def two_row_perm(r: int, top: Permutation, bottom: Permutation) -> Permutation:
    """The permutation of labels acting as ``top`` on odd and ``bottom`` on even labels."""
    images = [0] * (2 * r)
    for i in range(1, r + 1):
        images[2 * i - 2] = 2 * top[i - 1] - 1
        images[2 * i - 1] = 2 * bottom[i - 1]
    return tuple(images)


def label_of_top(i: int) -> int:
    return 2 * i - 1


def label_of_bottom(i: int) -> int:
    return 2 * i


def pair_perm(r: int, i_seq: Sequence[int], j_seq: Sequence[int]) -> Permutation:
    """``(i, j) = prod_s (label(i_s), label(bar j_s))`` as a permutation of ``1..2r``."""
    if len(i_seq) != len(j_seq):
        raise ValueError("sequences must have equal length")
    return cb.perm_from_cycles(
        2 * r, *[(label_of_top(a), label_of_bottom(b)) for a, b in zip(i_seq, j_seq)]
    )


# ---------------------------------------------------------------------------
# swinging endpoints and padding


def psi_ij(x: Element, i_seq: Sequence[int], j_seq: Sequence[int]) -> Element:
    """Linear extension of :func:`diagram.swing`."""
    k, l = len(i_seq), len(j_seq)
    out = {dg.swing(d, i_seq, j_seq): c for d, c in x.terms.items()}
    return Element(x.k - l + k, x.l - k + l, x.delta, out)


def pad_ij(x: Element, i_seq: Sequence[int], j_seq: Sequence[int], r: int) -> Element:
    """Swing, then close the surplus with caps (or cups) and add identity strands up to ``B_r``."""
    rc = x.k
    k, l = len(i_seq), len(j_seq)
    swung = psi_ij(x, i_seq, j_seq)
    width = rc + abs(k - l)
    if r < width:
        raise ValueError(f"r={r} is too small; need at least {width}")
    pad = dg.tensor_all([dg.cap()] * (l - k) if k <= l else [dg.cup()] * (k - l))
    rest = dg.identity(r - width)
    out = {dg.tensor(dg.tensor(d, pad), rest): c for d, c in swung.terms.items()}
    return Element(r, r, x.delta, out)


def embed(x: Element, r: int) -> Element:
    """``x (x) I_{r - rc}``."""
    return tensor(x, Element.identity(r - x.k, x.delta))


# ---------------------------------------------------------------------------
# saturation


def _int_vector(x: Element) -> List[int]:
    vec = x.to_vector()
    den = 1
    for c in vec:
        den = lcm(den, c.denominator)
    return [int(c * den) for c in vec]


def _mod_scalar(c: Fraction, p: int) -> int:
    return c.numerator * pow(c.denominator, -1, p) % p


class _Action:
    """A linear operator on ``B_k^l`` that maps diagrams to scalar multiples of diagrams."""

    __slots__ = ("target", "power")

    def __init__(self, target: np.ndarray, power: np.ndarray):
        self.target = target  # index of the image diagram
        self.power = power  # exponent of delta

    def apply_mod(self, v: np.ndarray, delta_powers: np.ndarray, p: int) -> np.ndarray:
        out = np.zeros_like(v)
        np.add.at(out, self.target, np.mod(v * delta_powers[self.power], p))
        return np.mod(out, p)

    def apply_exact(self, v: List[int], delta: Fraction) -> List[Fraction]:
        out: List[Fraction] = [Fraction(0)] * len(v)
        for i, c in enumerate(v):
            if c:
                out[self.target[i]] += c * delta ** int(self.power[i])
        return out


@lru_cache(maxsize=None)
def _multiplication_actions(r: int) -> Tuple[_Action, ...]:
    """Left and right multiplication by every ``s_i`` and ``e_i`` on ``B_r``."""
    space = diagram_space(r, r)
    gens = [dg.generator_s(i, r) for i in range(1, r)] + [dg.generator_e(i, r) for i in range(1, r)]
    actions = []
    for g in gens:
        for side in ("left", "right"):
            target = np.empty(len(space), dtype=np.int64)
            power = np.empty(len(space), dtype=np.int64)
            for idx, d in enumerate(space.diagrams):
                res = dg.compose(g, d) if side == "left" else dg.compose(d, g)
                target[idx] = space.index[res.diagram]
                power[idx] = res.loop_count
            actions.append(_Action(target, power))
    return tuple(actions)


@lru_cache(maxsize=None)
def _relabel_actions(r: int) -> Tuple[_Action, ...]:
    """The star action of every adjacent transposition of S_{2r} on ``B_r``."""
    space = diagram_space(r, r)
    actions = []
    for i in range(1, 2 * r):
        p = cb.perm_from_cycles(2 * r, (i, i + 1))
        target = np.array([space.index[dg.relabel(d, p)] for d in space.diagrams], dtype=np.int64)
        actions.append(_Action(target, np.zeros(len(space), dtype=np.int64)))
    return tuple(actions)


class Subspace:
    """A subspace of ``B_r^r`` spanned by exact witness vectors.

    The witnesses were accepted because they are independent modulo a prime,
    so they are independent over the rationals and ``dim`` is exact for their
    span.
    """

    def __init__(self, r: int, delta: Fraction, witnesses: List[List[int]]):
        self.r = r
        self.delta = delta
        self.witnesses = witnesses

    @property
    def dim(self) -> int:
        return len(self.witnesses)

    def __len__(self) -> int:
        return self.dim

    def elements(self) -> List[Element]:
        return [Element.from_vector(self.r, self.r, self.delta, w) for w in self.witnesses]

    def rref(self) -> List[Tuple[Fraction, ...]]:
        return int_rref(self.witnesses) if self.witnesses else []

    def contains(self, x: Element) -> bool:
        if x.is_zero():
            return True
        return int_rank(self.witnesses + [_int_vector(x)]) == self.dim


def _saturate(
    seeds: Sequence[Element], actions: Sequence[_Action], r: int, prime: int
) -> Subspace:
    if not seeds:
        return Subspace(r, Fraction(0), [])
    delta = seeds[0].delta
    if isinstance(delta, sympy.Poly):
        raise ValueError("saturation needs a numeric loop value")
    space = diagram_space(r, r)
    max_power = r + 1
    delta_powers = np.array([_mod_scalar(delta ** j, prime) if delta or j == 0 else 0 for j in range(max_power + 1)], dtype=np.int64)
    sub = ModularSubspace(len(space), prime)
    queue: deque = deque()

    def offer(exact: List[int]) -> None:
        v = np.array([c % prime for c in exact], dtype=np.int64)
        if sub.insert(v, exact):
            queue.append((exact, v))

    for x in seeds:
        if (x.k, x.l) != (r, r) or x.delta != delta:
            raise ValueError("generators must share the signature (r,r) and the loop value")
        offer(_int_vector(x))
    while queue:
        exact, v = queue.popleft()
        for act in actions:
            cand = act.apply_mod(v, delta_powers, prime)
            if sub.insert(cand, None):
                image = act.apply_exact(exact, delta)
                den = 1
                for c in image:
                    den = lcm(den, c.denominator)
                image_int = [int(c * den) for c in image]
                sub.witnesses[-1] = image_int
                queue.append((image_int, cand))
    return Subspace(r, delta, list(sub.witnesses))


def ideal_saturate(gens: Sequence[Element], prime: int = DEFAULT_PRIME) -> Subspace:
    """Two-sided ideal of ``B_r(delta)`` generated by ``gens``."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return Subspace(0, Fraction(0), [])
    r = gens[0].k
    return _saturate(gens, _multiplication_actions(r), r, prime)


def module_saturate(seed: Element, prime: int = DEFAULT_PRIME) -> Subspace:
    """Submodule generated by ``seed`` under the star action of S_{2r}."""
    if seed.is_zero():
        return Subspace(seed.k, Fraction(0), [])
    return _saturate([seed], _relabel_actions(seed.k), seed.k, prime)
