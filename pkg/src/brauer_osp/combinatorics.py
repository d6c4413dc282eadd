"""Partitions, tableaux, permutations and the small pieces of symmetric-group
combinatorics needed elsewhere in the package.

Permutations are tuples of images on ``1..k``: ``p[i - 1] == p(i)``.  Products
are composition of maps, ``mul(p, q)(i) == p(q(i))``, which is also the order
in which the corresponding permutation diagrams compose (``q`` drawn below
``p``).

Partitions are plain tuples of positive integers in weakly decreasing order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

Partition = Tuple[int, ...]
Permutation = Tuple[int, ...]


# ---------------------------------------------------------------------------
# permutations


def perm_identity(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def perm_mul(p: Permutation, q: Permutation) -> Permutation:
    """Return the composite map ``p o q`` (apply ``q`` first)."""
    if len(p) != len(q):
        raise ValueError("permutations act on different sets")
    return tuple(p[i - 1] for i in q)


def perm_inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, image in enumerate(p, start=1):
        inv[image - 1] = i
    return tuple(inv)


def perm_sign(p: Permutation) -> int:
    seen = [False] * len(p)
    sign = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perm_from_cycles(k: int, *cycles: Sequence[int]) -> Permutation:
    """Build a permutation of ``1..k`` from disjoint cycles, e.g. ``(2, 3, 5, 4)``."""
    images = list(range(1, k + 1))
    for cycle in cycles:
        for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
            images[a - 1] = b
    perm = tuple(images)
    if sorted(perm) != list(range(1, k + 1)):
        raise ValueError(f"cycles {cycles} do not define a permutation of 1..{k}")
    return perm


def perm_cycles(p: Permutation) -> List[Tuple[int, ...]]:
    """Non-trivial cycles of ``p``, each starting at its smallest entry."""
    seen: set[int] = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen or p[start - 1] == start:
            continue
        cycle = [start]
        seen.add(start)
        j = p[start - 1]
        while j != start:
            cycle.append(j)
            seen.add(j)
            j = p[j - 1]
        out.append(tuple(cycle))
    return out


def format_perm(p: Permutation) -> str:
    cycles = perm_cycles(p)
    if not cycles:
        return "(1)"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def adjacent_word(p: Permutation) -> List[int]:
    """Indices ``i`` with ``p == s_{i_1} o s_{i_2} o ...`` where ``s_i = (i, i+1)``.

    Bubble sort on the one-line notation; the word is reduced.
    """
    arr = list(p)
    word: List[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i + 1)
                changed = True
    # arr == p o s_{w_1} o s_{w_2} ... is now the identity, so p is the reverse.
    return word[::-1]


# ---------------------------------------------------------------------------
# group algebra of S_k


class GroupAlgebraElement:
    """Finite rational combination of permutations of a fixed degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Dict[Permutation, Fraction] | None = None):
        self.degree = degree
        self.terms: Dict[Permutation, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            if coeff:
                self.terms[perm] = Fraction(coeff)

    @classmethod
    def of(cls, perm: Permutation, coeff: int | Fraction = 1) -> "GroupAlgebraElement":
        return cls(len(perm), {perm: Fraction(coeff)})

    @classmethod
    def one(cls, degree: int) -> "GroupAlgebraElement":
        return cls.of(perm_identity(degree))

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        out = dict(self.terms)
        for perm, coeff in other.terms.items():
            out[perm] = out.get(perm, 0) + coeff
        return GroupAlgebraElement(self.degree, out)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.degree, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def scale(self, c: int | Fraction) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.degree, {p: v * c for p, v in self.terms.items()})

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        out: Dict[Permutation, Fraction] = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                key = perm_mul(p, q)
                out[key] = out.get(key, 0) + a * b
        return GroupAlgebraElement(self.degree, out)

    def sharp(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            self.degree, {perm_inverse(p): c for p, c in self.terms.items()}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for perm in sorted(self.terms):
            coeff = self.terms[perm]
            parts.append(f"{coeff}*{format_perm(perm)}")
        return " + ".join(parts)


def subgroup_sum(degree: int, blocks: Iterable[Sequence[int]], signed: bool) -> GroupAlgebraElement:
    """Sum (optionally sign-weighted) over the Young subgroup permuting each block."""
    terms: Dict[Permutation, Fraction] = {perm_identity(degree): Fraction(1)}
    for block in blocks:
        block = tuple(block)
        if len(block) < 2:
            continue
        new_terms: Dict[Permutation, Fraction] = {}
        for arrangement in itertools.permutations(block):
            images = list(range(1, degree + 1))
            for src, dst in zip(block, arrangement):
                images[src - 1] = dst
            g = tuple(images)
            s = perm_sign(g) if signed else 1
            for p, c in terms.items():
                key = perm_mul(p, g)
                new_terms[key] = new_terms.get(key, 0) + c * s
        terms = new_terms
    return GroupAlgebraElement(degree, terms)


# ---------------------------------------------------------------------------
# partitions


def check_partition(parts: Sequence[int]) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{parts!r} is not a partition")
    return lam


def partitions(k: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``k`` in lexicographically descending order."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions(k - first, first):
            yield (first,) + rest


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """Young-diagram containment ``mu`` inside ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(a >= b for a, b in zip(lam, mu))


def even_partitions_containing(r: int, m: int, n: int) -> List[Partition]:
    """Even partitions of ``2r`` containing the ``(m+1) x (2n+2)`` rectangle."""
    if r < 0:
        raise ValueError("r must be non-negative")
    rect = (2 * n + 2,) * (m + 1)
    out = []
    for half in partitions(r):
        lam = tuple(2 * p for p in half)
        if contains(lam, rect):
            out.append(lam)
    return out


@cache
def hook_product(lam: Partition) -> int:
    """Product of the hook lengths of ``lam``."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    return prod(
        (lam[i] - j - 1) + (conj[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    )


def specht_dim(lam: Partition) -> int:
    """Dimension of the Specht module, ``k!/h_lam``."""
    k = sum(lam)
    q, rem = divmod(factorial(k), hook_product(tuple(lam)))
    assert rem == 0
    return q


def ker_dim_formula(m: int, n: int, r: int) -> int:
    return sum(specht_dim(lam) for lam in even_partitions_containing(r, m, n))


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram with ``1..k``, stored row by row."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        check_partition(tuple(len(r) for r in self.rows))
        entries = sorted(e for row in self.rows for e in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau filling must be a bijection onto 1..k")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    @property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        shape = self.shape
        width = shape[0] if shape else 0
        return tuple(
            tuple(self.rows[i][j] for i in range(len(shape)) if shape[i] > j)
            for j in range(width)
        )

    def is_standard(self) -> bool:
        rows_ok = all(a < b for row in self.rows for a, b in zip(row, row[1:]))
        cols_ok = all(a < b for col in self.columns for a, b in zip(col, col[1:]))
        return rows_ok and cols_ok

    def act(self, p: Permutation) -> "Tableau":
        """Replace every entry ``a`` by ``p(a)``."""
        return Tableau(tuple(tuple(p[e - 1] for e in row) for row in self.rows))

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, row)) for row in self.rows)


def row_reading_tableau(lam: Sequence[int]) -> Tableau:
    """The tableau filled with ``1..k`` along the rows."""
    lam = check_partition(lam)
    rows, nxt = [], 1
    for length in lam:
        rows.append(tuple(range(nxt, nxt + length)))
        nxt += length
    return Tableau(tuple(rows))


def column_reading_tableau(lam: Sequence[int]) -> Tableau:
    """The tableau filled with ``1..k`` down the columns."""
    lam = check_partition(lam)
    rows = [[0] * length for length in lam]
    nxt = 1
    for j, height in enumerate(conjugate(lam)):
        for i in range(height):
            rows[i][j] = nxt
            nxt += 1
    return Tableau(tuple(tuple(r) for r in rows))


def standard_tableaux(lam: Sequence[int]) -> List[Tableau]:
    """All standard tableaux of shape ``lam``, ordered by their row reading."""
    lam = check_partition(lam)
    k = sum(lam)
    found: List[Tableau] = []
    rows: List[List[int]] = [[] for _ in lam]

    def place(value: int) -> None:
        if value > k:
            found.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for i, length in enumerate(lam):
            j = len(rows[i])
            if j < length and (i == 0 or len(rows[i - 1]) > j):
                rows[i].append(value)
                place(value + 1)
                rows[i].pop()

    place(1)
    return sorted(found, key=lambda t: t.rows)


def all_tableaux(lam: Sequence[int]) -> Iterator[Tableau]:
    """Every bijective filling of ``lam`` (``k!`` of them)."""
    base = row_reading_tableau(lam)
    for p in itertools.permutations(range(1, base.size + 1)):
        yield base.act(p)


def d_of(t: Tableau) -> Permutation:
    """The permutation ``d`` with ``row_reading_tableau(shape).act(d) == t``."""
    base = row_reading_tableau(t.shape)
    images = [0] * t.size
    for brow, trow in zip(base.rows, t.rows):
        for a, b in zip(brow, trow):
            images[a - 1] = b
    return tuple(images)


def garnir_element(t: Tableau, X: Iterable[int], Y: Iterable[int]) -> GroupAlgebraElement:
    """Signed sum of the transposition products pairing equal-size subsets of X and Y.

    ``X`` must come from one column of ``t`` and ``Y`` from a later column.
    """
    X, Y = tuple(sorted(X)), tuple(sorted(Y))
    if set(X) & set(Y):
        raise ValueError("X and Y must be disjoint")
    if X and Y:
        col_of = {e: j for j, col in enumerate(t.columns) for e in col}
        cx = {col_of.get(x) for x in X}
        cy = {col_of.get(y) for y in Y}
        if len(cx) != 1 or len(cy) != 1 or None in cx | cy or cx.pop() >= cy.pop():
            raise ValueError("X and Y must lie in two columns i < j of the tableau")
    k = t.size
    out = GroupAlgebraElement.one(k)
    for size in range(1, min(len(X), len(Y)) + 1):
        sign = -1 if size % 2 else 1
        for xs in itertools.combinations(X, size):
            for ys in itertools.combinations(Y, size):
                out = out + GroupAlgebraElement.of(
                    perm_from_cycles(k, *zip(xs, ys)), sign
                )
    return out


# ---------------------------------------------------------------------------
# sequences and types for the generator index set


def type_of_sequence(s: Sequence[int], m: int, n: int) -> Tuple[int, ...]:
    """Count the entries of ``s`` falling in each block of ``m+1`` consecutive labels."""
    r_c = (m + 1) * (n + 1)
    s = tuple(s)
    if any(a >= b for a, b in zip(s, s[1:])):
        raise ValueError("sequence must be strictly increasing")
    if any(not 1 <= x <= r_c for x in s):
        raise ValueError(f"sequence entries must lie in 1..{r_c}")
    counts = [0] * (n + 1)
    for x in s:
        counts[(x - 1) // (m + 1)] += 1
    return tuple(counts)


def standard_sequence(tv: Sequence[int], m: int, n: int) -> Tuple[int, ...]:
    """The first ``tv[p]`` labels of every block, concatenated."""
    tv = tuple(tv)
    if len(tv) != n + 1 or any(not 0 <= a <= m + 1 for a in tv):
        raise ValueError(f"type vector {tv} invalid for (m, n) = ({m}, {n})")
    seq: List[int] = []
    for p, a in enumerate(tv):
        start = p * (m + 1) + 1
        seq.extend(range(start, start + a))
    return tuple(seq)


def increasing_types(m: int, n: int) -> List[Tuple[int, ...]]:
    return [
        tv
        for tv in itertools.combinations_with_replacement(range(m + 2), n + 1)
    ]


def generator_index_set(m: int, n: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Ordered pairs ``(i, j)`` of standard sequences of increasing types.

    Both sequences have the same length and their last-block counts add up to
    at most ``m + 1``.
    """
    types = increasing_types(m, n)
    out = []
    for a in types:
        for b in types:
            if sum(a) == sum(b) and a[-1] + b[-1] <= m + 1:
                out.append((standard_sequence(a, m, n), standard_sequence(b, m, n)))
    out.sort(key=lambda pair: (len(pair[0]), pair))
    return out
