"""Brauer diagrams as immutable perfect matchings.

A ``(k, l)``-diagram has ``k`` bottom and ``l`` top vertices.  Internally the
vertices are numbered in the canonical order ``T1 < ... < Tl < B1 < ... < Bk``
(indices ``0 .. l+k-1``) and the diagram is the involution ``match`` sending
each vertex to its partner.  Two diagrams are equal exactly when their
matchings are, so hashing is structural.

``compose(d1, d2)`` stacks ``d1`` on top of ``d2`` and reports how many closed
loops were removed in the middle row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

from .combinatorics import Permutation


@dataclass(frozen=True, slots=True)
class BrauerDiagram:
    k: int  # bottom vertices
    l: int  # top vertices
    match: Tuple[int, ...]

    def __post_init__(self) -> None:
        size = self.k + self.l
        if len(self.match) != size:
            raise ValueError("matching has the wrong number of vertices")
        for v, w in enumerate(self.match):
            if not 0 <= w < size or w == v or self.match[w] != v:
                raise ValueError("not a perfect matching")

    # -- vertex naming -----------------------------------------------------

    def vertex_name(self, v: int) -> str:
        return f"T{v + 1}" if v < self.l else f"B{v - self.l + 1}"

    def vertex_index(self, name: str) -> int:
        return _vertex_index(self.k, self.l, name)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as index pairs ``(v, w)`` with ``v < w``, sorted."""
        return [(v, w) for v, w in enumerate(self.match) if v < w]

    def named_edges(self) -> List[Tuple[str, str]]:
        return [(self.vertex_name(v), self.vertex_name(w)) for v, w in self.edges()]

    @classmethod
    def from_edges(cls, k: int, l: int, edges: Sequence[Tuple[str, str]]) -> "BrauerDiagram":
        match = [-1] * (k + l)
        for a, b in edges:
            v, w = _vertex_index(k, l, a), _vertex_index(k, l, b)
            if match[v] != -1 or match[w] != -1:
                raise ValueError("vertex used twice")
            match[v], match[w] = w, v
        return cls(k, l, tuple(match))

    # -- structure -----------------------------------------------------------

    def is_permutation(self) -> bool:
        return self.k == self.l and all(
            (v < self.l) != (w < self.l) for v, w in enumerate(self.match)
        )

    def to_permutation(self) -> Permutation:
        """The permutation ``p`` with edges ``B_i -- T_p(i)``."""
        if not self.is_permutation():
            raise ValueError("diagram has horizontal edges")
        return tuple(self.match[self.l + i] + 1 for i in range(self.k))

    def has_horizontal_edge(self) -> bool:
        return not self.is_permutation()

    def through_count(self) -> int:
        return sum(1 for v, w in self.edges() if v < self.l <= w)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "edges": [list(e) for e in self.named_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "BrauerDiagram":
        return cls.from_edges(data["k"], data["l"], [tuple(e) for e in data["edges"]])

    def ascii(self) -> str:
        """Small debug rendering: one line per edge plus a header."""
        lines = [f"({self.k},{self.l})-diagram"]
        lines += [f"  {a} -- {b}" for a, b in self.named_edges()]
        return "\n".join(lines)

    def __repr__(self) -> str:
        body = " ".join(f"{a}-{b}" for a, b in self.named_edges())
        return f"D{self.k}->{self.l}[{body}]"


def _vertex_index(k: int, l: int, name: str) -> int:
    side, num = name[0], int(name[1:])
    if side == "T" and 1 <= num <= l:
        return num - 1
    if side == "B" and 1 <= num <= k:
        return l + num - 1
    raise ValueError(f"no vertex {name!r} in a ({k},{l})-diagram")


class CompositionResult(NamedTuple):
    diagram: BrauerDiagram
    loop_count: int


def compose(d1: BrauerDiagram, d2: BrauerDiagram) -> CompositionResult:
    """Place ``d1`` above ``d2``, trace the middle row out and count loops."""
    if d1.k != d2.l:
        raise ValueError(
            f"cannot compose a ({d1.k},{d1.l})-diagram after a ({d2.k},{d2.l})-diagram"
        )
    return _compose(d1.match, d1.l, d2.match, d2.l, d2.k)


@lru_cache(maxsize=1 << 20)
def _compose(m1: Tuple[int, ...], p: int, m2: Tuple[int, ...], mid: int, k: int) -> CompositionResult:
    # d1 indices: top 0..p-1, bottom p..p+mid-1
    # d2 indices: top 0..mid-1, bottom mid..mid+k-1
    # result:     top 0..p-1 from d1, bottom p..p+k-1 from d2
    res = [-1] * (p + k)
    seen = [False] * mid
    for start in range(p + k):
        if res[start] != -1:
            continue
        if start < p:
            upper, v = True, start
        else:
            upper, v = False, mid + start - p
        while True:
            if upper:
                w = m1[v]
                if w < p:
                    end = w
                    break
                j = w - p
                seen[j] = True
                upper, v = False, j
            else:
                w = m2[v]
                if w >= mid:
                    end = p + w - mid
                    break
                seen[w] = True
                upper, v = True, p + w
        res[start], res[end] = end, start
    loops = 0
    for j in range(mid):
        if seen[j]:
            continue
        loops += 1
        v = j
        while not seen[v]:
            seen[v] = True
            # leave the middle vertex v downwards through d2, come back up through d1
            u = m2[v]
            seen[u] = True
            v = m1[p + u] - p
    return CompositionResult(BrauerDiagram(k, p, tuple(res)), loops)


def tensor(d1: BrauerDiagram, d2: BrauerDiagram) -> BrauerDiagram:
    """Place ``d2`` to the right of ``d1``."""
    l1, l2, k1 = d1.l, d2.l, d1.k
    l = l1 + l2

    def map1(v: int) -> int:
        return v if v < l1 else l + (v - l1)

    def map2(v: int) -> int:
        return l1 + v if v < l2 else l + k1 + (v - l2)

    match = [0] * (d1.k + d2.k + l)
    for v, w in enumerate(d1.match):
        match[map1(v)] = map1(w)
    for v, w in enumerate(d2.match):
        match[map2(v)] = map2(w)
    return BrauerDiagram(d1.k + d2.k, l, tuple(match))


def tensor_all(diagrams: Sequence[BrauerDiagram]) -> BrauerDiagram:
    out = identity(0)
    for d in diagrams:
        out = tensor(out, d)
    return out


# ---------------------------------------------------------------------------
# named diagrams


def perm_to_diagram(p: Permutation) -> BrauerDiagram:
    """Edges ``B_i -- T_p(i)``."""
    k = len(p)
    match = [0] * (2 * k)
    for i, image in enumerate(p):
        top, bottom = image - 1, k + i
        match[top], match[bottom] = bottom, top
    return BrauerDiagram(k, k, tuple(match))


def identity(r: int) -> BrauerDiagram:
    return perm_to_diagram(tuple(range(1, r + 1)))


def generator_s(i: int, r: int) -> BrauerDiagram:
    """Crossing of strands ``i`` and ``i+1``."""
    if not 1 <= i < r:
        raise ValueError(f"s_{i} does not exist in B_{r}")
    p = list(range(1, r + 1))
    p[i - 1], p[i] = i + 1, i
    return perm_to_diagram(tuple(p))


def generator_e(i: int, r: int) -> BrauerDiagram:
    """Cap on bottom vertices ``i, i+1`` and cup on the same top vertices."""
    if not 1 <= i < r:
        raise ValueError(f"e_{i} does not exist in B_{r}")
    match = list(identity(r).match)
    t1, t2, b1, b2 = i - 1, i, r + i - 1, r + i
    match[t1], match[t2], match[b1], match[b2] = t2, t1, b2, b1
    return BrauerDiagram(r, r, tuple(match))


def cap() -> BrauerDiagram:
    """A_0: two bottom vertices joined, nothing on top."""
    return BrauerDiagram(2, 0, (1, 0))


def cup() -> BrauerDiagram:
    """U_0: two top vertices joined, nothing below."""
    return BrauerDiagram(0, 2, (1, 0))


def crossing() -> BrauerDiagram:
    return generator_s(1, 2)


def a_hat(r: int) -> BrauerDiagram:
    """The ``2r -> 0`` diagram pairing bottom vertices ``2s-1`` and ``2s``."""
    return tensor_all([cap()] * r)


def u_r(r: int) -> BrauerDiagram:
    """The ``0 -> 2r`` nested cups pairing top vertices ``s`` and ``r+s``."""
    match = [0] * (2 * r)
    for s in range(r):
        match[s], match[r + s] = r + s, s
    return BrauerDiagram(0, 2 * r, tuple(match))


def a_r(r: int) -> BrauerDiagram:
    """The ``2r -> 0`` nested caps pairing bottom vertices ``s`` and ``r+s``."""
    return BrauerDiagram(2 * r, 0, u_r(r).match)


def omega_perm(r: int) -> Permutation:
    """``omega(i) = 2i-1`` and ``omega(r+i) = 2i``."""
    return tuple(2 * i - 1 for i in range(1, r + 1)) + tuple(2 * i for i in range(1, r + 1))


def omega(r: int) -> BrauerDiagram:
    return perm_to_diagram(omega_perm(r))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_diagrams(k: int, l: int) -> List[BrauerDiagram]:
    """All perfect matchings on ``k`` bottom and ``l`` top vertices.

    Ordered by the lexicographic order of the matching tuples.
    """
    if (k + l) % 2:
        return []
    return [BrauerDiagram(k, l, m) for m in _matchings(k + l)]


@lru_cache(maxsize=None)
def _matchings(size: int) -> Tuple[Tuple[int, ...], ...]:
    out: List[Tuple[int, ...]] = []
    match = [-1] * size

    def rec() -> Iterator[None]:
        try:
            v = match.index(-1)
        except ValueError:
            out.append(tuple(match))
            return
        for w in range(v + 1, size):
            if match[w] == -1:
                match[v], match[w] = w, v
                rec()
                match[v] = match[w] = -1

    rec()
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# labellings of (r, r)-diagrams by 1..2r


def vertex_of_label(r: int, a: int) -> int:
    """Internal vertex index carrying label ``a``: odd labels on top, even below."""
    return (a - 1) // 2 if a % 2 else r + a // 2 - 1


def label_of_vertex(r: int, v: int) -> int:
    return 2 * v + 1 if v < r else 2 * (v - r + 1)


def label_of_name(r: int, name: str) -> int:
    """``"T3"`` (top 3) is label 5 and ``"B3"`` (bottom 3, the barred 3) is label 6."""
    return label_of_vertex(r, _vertex_index(r, r, name))


def name_of_label(r: int, a: int) -> str:
    if not 1 <= a <= 2 * r:
        raise ValueError(f"label {a} outside 1..{2 * r}")
    return f"T{(a + 1) // 2}" if a % 2 else f"B{a // 2}"


def relabel(d: BrauerDiagram, p: Permutation) -> BrauerDiagram:
    """Move the endpoint labelled ``a`` to the position labelled ``p(a)``."""
    r = d.k
    if d.k != d.l or len(p) != 2 * r:
        raise ValueError("relabelling needs an (r,r)-diagram and a permutation of 1..2r")
    match = [0] * (2 * r)
    for v, w in enumerate(d.match):
        nv = vertex_of_label(r, p[label_of_vertex(r, v) - 1])
        nw = vertex_of_label(r, p[label_of_vertex(r, w) - 1])
        match[nv] = nw
    return BrauerDiagram(r, r, tuple(match))


def relabel_bottom_row(d: BrauerDiagram, p: Permutation) -> BrauerDiagram:
    """For a ``(2r, 0)``-diagram: bottom vertex ``a`` moves to ``p(a)``."""
    match = [0] * d.k
    for v, w in enumerate(d.match):
        match[p[v] - 1] = p[w] - 1
    return BrauerDiagram(d.k, 0, tuple(match))


def swing(d: BrauerDiagram, i_seq: Sequence[int], j_seq: Sequence[int]) -> BrauerDiagram:
    """Swing listed top endpoints to the bottom right and listed bottom ones to the top right.

    The moved endpoints are nested around the right edge: ``i_seq[0]`` lands
    rightmost in the new bottom row, ``j_seq[0]`` rightmost in the new top row.
    """
    i_seq, j_seq = tuple(i_seq), tuple(j_seq)
    for seq, bound in ((i_seq, d.l), (j_seq, d.k)):
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise ValueError("sequences must be strictly increasing")
        if any(not 1 <= x <= bound for x in seq):
            raise ValueError("label out of range")
    top_stay = [t for t in range(1, d.l + 1) if t not in i_seq]
    bot_stay = [b for b in range(1, d.k + 1) if b not in j_seq]
    new_top = [("T", t) for t in top_stay] + [("B", b) for b in reversed(j_seq)]
    new_bot = [("B", b) for b in bot_stay] + [("T", t) for t in reversed(i_seq)]
    new_l, new_k = len(new_top), len(new_bot)
    position: Dict[int, int] = {}
    for idx, (side, num) in enumerate(new_top):
        position[d.vertex_index(f"{side}{num}")] = idx
    for idx, (side, num) in enumerate(new_bot):
        position[d.vertex_index(f"{side}{num}")] = new_l + idx
    match = [0] * (new_k + new_l)
    for v, w in enumerate(d.match):
        match[position[v]] = position[w]
    return BrauerDiagram(new_k, new_l, tuple(match))
