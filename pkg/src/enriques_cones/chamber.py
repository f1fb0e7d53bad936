"""The normalized fundamental chamber and Weyl reduction into it.

A chamber point (b1, ..., b10) stands for the class l0 - sum bi li of
H^2(S; R) written in the L basis. The closed chamber is cut out by

    sum bi = 3,  b1 + b2 + b3 <= 1,  b1 >= b2 >= ... >= b10 >= 0,

with the open chamber additionally requiring b10 > 0. The cone over it
uses (a, b1, ..., b10) with sum bi = 3a and b1 + b2 + b3 <= a.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import lcm
from typing import Sequence

from . import linalg
from .lattice import (
    LatticeVector,
    ReflectionDescriptor,
    as_l_class,
    l_class,
    pairing,
    reflect,
)

REGIONS = ("open", "closed", "cone")


@dataclass(frozen=True)
class ChamberPoint:
    b: tuple

    def __post_init__(self):
        b = tuple(Fraction(x) for x in self.b)
        if len(b) != 10:
            raise ValueError(f"a chamber point has 10 coordinates, got {len(b)}")
        object.__setattr__(self, "b", b)

    def class_vector(self) -> LatticeVector:
        """The class l0 - sum bi li."""
        return l_class(1, self.b)

    @property
    def in_open(self) -> bool:
        return chamber_membership(self.b, "open")

    @property
    def in_closed(self) -> bool:
        return chamber_membership(self.b, "closed")

    def __str__(self):
        return "(" + ", ".join(map(str, self.b)) + ")"


def chamber_membership(p: Sequence, region: str = "open"):
    """Exact membership test.

    ``region`` is ``"open"`` (the chamber itself), ``"closed"`` (its
    closure) or ``"cone"``. For ``"cone"`` the input is (a, b1, ..., b10)
    and the return value is ``(member, a)``.
    """
    p = [Fraction(x) for x in p]
    if region == "cone":
        if len(p) != 11:
            raise ValueError("cone membership takes (a, b1, ..., b10)")
        a, b = p[0], p[1:]
        ok = sum(b) == 3 * a and b[0] + b[1] + b[2] <= a and _nonincreasing(b)
        return ok, a
    if region not in ("open", "closed"):
        raise ValueError(f"unknown region {region!r}")
    if len(p) != 10:
        raise ValueError("chamber membership takes 10 coordinates")
    if sum(p) != 3 or p[0] + p[1] + p[2] > 1 or not _nonincreasing(p):
        return False
    return p[9] > 0 if region == "open" else p[9] >= 0


def _nonincreasing(b) -> bool:
    return all(x >= y for x, y in zip(b, b[1:]))


_VERTEX_ROWS = (
    (7, (3, 2, 2, 2, 2, 2, 2, 2, 2, 2)),
    (14, (5, 5, 4, 4, 4, 4, 4, 4, 4, 4)),
    (21, (7, 7, 7, 6, 6, 6, 6, 6, 6, 6)),
    (18, (6, 6, 6, 6, 5, 5, 5, 5, 5, 5)),
    (15, (5, 5, 5, 5, 5, 4, 4, 4, 4, 4)),
    (12, (4, 4, 4, 4, 4, 4, 3, 3, 3, 3)),
    (9, (3, 3, 3, 3, 3, 3, 3, 2, 2, 2)),
    (6, (2, 2, 2, 2, 2, 2, 2, 2, 1, 1)),
    (3, (1, 1, 1, 1, 1, 1, 1, 1, 1, 0)),
)


@cache
def vertices() -> tuple[ChamberPoint, ...]:
    """V1, ..., V9 of the closed chamber, in their conventional order."""
    return tuple(ChamberPoint(tuple(Fraction(x, d) for x in row)) for d, row in _VERTEX_ROWS)


EQUAL_POINT = ChamberPoint((Fraction(3, 10),) * 10)


@cache
def chamber_vertices() -> tuple[ChamberPoint, ...]:
    """Every vertex of the closed chamber: V1, ..., V9 and the equal point.

    The equal point (3/10, ..., 3/10) is where all nine ordering
    inequalities are tight; it is a vertex but is absent from the
    conventional V1..V9 list. Convexity arguments need all ten.
    """
    return vertices() + (EQUAL_POINT,)


@cache
def vertex_classes() -> tuple[LatticeVector, ...]:
    return tuple(v.class_vector() for v in chamber_vertices())


def _facet_rows():
    """The 11 inequalities as (row, rhs) meaning row . b >= rhs."""
    rows = [([-1, -1, -1] + [0] * 7, -1)]
    for i in range(9):
        row = [0] * 10
        row[i], row[i + 1] = 1, -1
        rows.append((row, 0))
    rows.append(([0] * 9 + [1], 0))
    return rows


def enumerate_vertices_oracle() -> list[ChamberPoint]:
    """Vertices of the closed chamber found by brute force.

    Every choice of 9 of the 11 facet inequalities is made tight together
    with sum bi = 3; a nonsingular system whose solution satisfies all
    inequalities is a vertex. Output is sorted lexicographically, largest
    first.
    """
    facets = _facet_rows()
    found = set()
    for tight in itertools.combinations(range(len(facets)), 9):
        rows = [[1] * 10] + [facets[t][0] for t in tight]
        rhs = [3] + [facets[t][1] for t in tight]
        x = linalg.solve(rows, rhs)
        if x is None:
            continue
        if all(sum(c * v for c, v in zip(row, x)) >= h for row, h in facets):
            found.add(tuple(x))
    return [ChamberPoint(b) for b in sorted(found, reverse=True)]


# --- reduction --------------------------------------------------------------

@cache
def transposition_root(i: int, j: int) -> ReflectionDescriptor:
    """li - lj, swapping the coefficients of li and lj (1 <= i, j <= 10)."""
    c = [0] * 11
    c[i], c[j] = 1, -1
    return ReflectionDescriptor(LatticeVector("L", c))


@cache
def cremona_root(i: int, j: int, k: int) -> ReflectionDescriptor:
    """l0 - li - lj - lk."""
    c = [0] * 11
    c[0] = 1
    c[i] = c[j] = c[k] = -1
    return ReflectionDescriptor(LatticeVector("L", c))


@dataclass(frozen=True)
class ReductionTrace:
    """How a class was moved into the chamber cone.

    Replaying means: negate if ``sign_flip``, apply the reflections of
    ``word`` in order, then divide by ``scale``.
    """

    word: tuple = ()
    sign_flip: bool = False
    scale: Fraction = Fraction(1)

    def apply(self, v: LatticeVector) -> LatticeVector:
        w = -v if self.sign_flip else v
        for d in self.word:
            w = reflect(w, d)
        return w / self.scale

    def invert(self, out: LatticeVector) -> LatticeVector:
        w = out * self.scale
        for d in reversed(self.word):
            w = reflect(w, d)
        return -w if self.sign_flip else w


@dataclass(frozen=True)
class Reduction:
    input: LatticeVector
    vector: LatticeVector
    trace: ReductionTrace = field(default_factory=ReductionTrace)

    @property
    def cone_coords(self) -> tuple:
        """(a, b1, ..., b10) with vector = a l0 - sum bi li."""
        c = self.vector.coeffs
        return (c[0],) + tuple(-x for x in c[1:])

    @property
    def point(self) -> ChamberPoint:
        a, *b = self.cone_coords
        return ChamberPoint(tuple(x / a for x in b))


def _sort_descending(a_b: list, word: list):
    # selection sort; swaps only on strict improvement so the word is deterministic
    b = a_b
    for p in range(1, 10):
        q = max(range(p, 11), key=lambda i: (b[i], -i))
        if b[q] > b[p]:
            b[p], b[q] = b[q], b[p]
            word.append(transposition_root(p, q))


def reduce(v: LatticeVector, normalize: bool = True) -> Reduction:
    """Move a forward (or isotropic) class of S into the chamber cone.

    The class is first scaled to an integer vector. If its l0-coefficient
    is negative, -id is applied. Then the coefficients are repeatedly
    sorted with transposition reflections and, while a < b1 + b2 + b3, the
    reflection along l0 - l1 - l2 - l3 is applied. Each such step lowers
    the integer a by at least one, so the loop terminates. With
    ``normalize`` the result is rescaled to a = 1.
    """
    v = as_l_class(v)
    if v.is_zero():
        raise ValueError("cannot reduce the zero class")
    if v.square < 0:
        raise ValueError(f"class has negative square {v.square}; it is not in the positive cone")

    den = lcm(*(c.denominator for c in v.coeffs))
    sign_flip = v.coeffs[0] < 0
    sgn = -1 if sign_flip else 1
    # working copy: [a, b1, ..., b10] with vector = a l0 - sum bi li
    x = [sgn * int(v.coeffs[0] * den)] + [-sgn * int(c * den) for c in v.coeffs[1:]]
    word: list = []
    while True:
        _sort_descending(x, word)
        a = x[0]
        s = x[1] + x[2] + x[3]
        if a >= s:
            break
        t = a - s
        word.append(cremona_root(1, 2, 3))
        x = [a + t, x[1] + t, x[2] + t, x[3] + t] + x[4:]

    out = l_class(Fraction(x[0], den), [Fraction(y, den) for y in x[1:]])
    scale = Fraction(1)
    if normalize:
        scale = out.coeffs[0]
        out = out / scale
    out = LatticeVector("L", out.coeffs, v.torsion)
    return Reduction(v, out, ReductionTrace(tuple(word), sign_flip, scale))


def compare_on_chamber(F: LatticeVector, G: LatticeVector) -> str:
    """Compare two linear functionals on the closed chamber.

    Returns ``"F_dominates"`` if (v, F) >= (v, G) at every vertex class v
    (all ten vertices, see :func:`chamber_vertices`),
    ``"G_dominates"`` for the reverse, ``"equal"`` if they agree at all
    vertices and ``"incomparable"`` otherwise. Convexity extends the vertex
    comparison to the whole chamber.
    """
    F, G = as_l_class(F), as_l_class(G)
    diffs = [pairing(v, F) - pairing(v, G) for v in vertex_classes()]
    if all(d == 0 for d in diffs):
        return "equal"
    if all(d >= 0 for d in diffs):
        return "F_dominates"
    if all(d <= 0 for d in diffs):
        return "G_dominates"
    return "incomparable"
