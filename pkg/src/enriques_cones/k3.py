"""The covering K3 lattice 2(-E8) + 3U and the covering involution.

K3 vectors are :class:`LatticeVector` objects with basis ``"K3"``; the 22
coordinates are the blocks x (8), y (8), z1 (2), z2 (2), z3 (2). Each -E8
block uses the r0..r7 Gram of the Enriques lattice and each U block has
Gram [[0, 1], [1, 0]] on (u1, u2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import lcm
from typing import Sequence

import numpy as np

from . import linalg
from .lattice import LatticeVector, gram_E8_negative, gram_K3, pairing

X, Y, Z1, Z2, Z3 = slice(0, 8), slice(8, 16), slice(16, 18), slice(18, 20), slice(20, 22)


def k3_vector(x=(0,) * 8, y=(0,) * 8, z1=(0, 0), z2=(0, 0), z3=(0, 0)) -> LatticeVector:
    parts = [tuple(x), tuple(y), tuple(z1), tuple(z2), tuple(z3)]
    if [len(p) for p in parts] != [8, 8, 2, 2, 2]:
        raise ValueError("K3 blocks must have sizes 8, 8, 2, 2, 2")
    return LatticeVector("K3", sum(parts, ()))


def k3_blocks(v: LatticeVector) -> dict:
    if v.basis != "K3":
        raise ValueError("expected a K3 vector")
    c = v.coeffs
    return {"x": c[X], "y": c[Y], "z1": c[Z1], "z2": c[Z2], "z3": c[Z3]}


def iota_star(v: LatticeVector) -> LatticeVector:
    """x + y + z1 + z2 + z3  ->  y + x + (-z1) + z3 + z2."""
    b = k3_blocks(v)
    return k3_vector(b["y"], b["x"], tuple(-t for t in b["z1"]), b["z3"], b["z2"])


def pullback(v: LatticeVector) -> LatticeVector:
    """pi^*: x + z in -E8 + U goes to x + x + 0 + z + z."""
    if v.basis != "E":
        raise ValueError("pullback expects an E-basis vector")
    x, z = v.coeffs[:8], v.coeffs[8:]
    return k3_vector(x, x, (0, 0), z, z)


@dataclass(frozen=True)
class Sublattice:
    name: str
    basis: tuple
    rank: int
    gram: tuple


def _unit(block: slice, i: int) -> list[int]:
    c = [0] * 22
    c[block.start + i] = 1
    return c


def _sublattice(name: str, rows: list[list[int]]) -> Sublattice:
    basis = tuple(LatticeVector("K3", r) for r in rows)
    g = tuple(tuple(int(pairing(a, b)) for b in basis) for a in basis)
    return Sublattice(name, basis, linalg.rank(rows), g)


@cache
def invariant_sublattice() -> Sublattice:
    """Q_T^+ = {x + x + 0 + z + z}: rank 10."""
    rows = [[a + b for a, b in zip(_unit(X, i), _unit(Y, i))] for i in range(8)]
    rows += [[a + b for a, b in zip(_unit(Z2, i), _unit(Z3, i))] for i in range(2)]
    return _sublattice("Q_T+", rows)


@cache
def anti_invariant_sublattice() -> Sublattice:
    """Q_T^- = {x + (-x) + z1 + z2 + (-z2)}: rank 12."""
    rows = [[a - b for a, b in zip(_unit(X, i), _unit(Y, i))] for i in range(8)]
    rows += [_unit(Z1, i) for i in range(2)]
    rows += [[a - b for a, b in zip(_unit(Z2, i), _unit(Z3, i))] for i in range(2)]
    return _sublattice("Q_T-", rows)


def eigenspaces_meet_trivially() -> bool:
    rows = [list(v.coeffs) for v in invariant_sublattice().basis + anti_invariant_sublattice().basis]
    return linalg.rank(rows) == invariant_sublattice().rank + anti_invariant_sublattice().rank


def in_anti_invariant(v: LatticeVector) -> bool:
    b = k3_blocks(v)
    return (all(x == -y for x, y in zip(b["x"], b["y"]))
            and all(a == -c for a, c in zip(b["z2"], b["z3"])))


# --- period points ----------------------------------------------------------

@dataclass(frozen=True)
class PeriodCandidate:
    """Real and imaginary parts of a class [Omega] = p + i q in Q_T^- (x) C."""

    p: LatticeVector
    q: LatticeVector

    def __post_init__(self):
        for name, v in (("p", self.p), ("q", self.q)):
            if not in_anti_invariant(v):
                raise ValueError(f"{name} is not of the form x + (-x) + z1 + z2 + (-z2)")
            assert iota_star(v) == -v


@dataclass(frozen=True)
class PeriodReport:
    isotropic: bool
    positive: bool
    d0_up_to_bound: bool
    violating_root: LatticeVector | None
    bound: int


def _u(a, b) -> int:
    return a[0] * b[1] + a[1] * b[0]


@cache
def _x_table(bound: int, min_norm: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectors x in the box [-bound, bound]^8 with -E8 norm >= min_norm."""
    g = np.array(gram_E8_negative(), dtype=np.int64)
    rng = range(-bound, bound + 1)
    tail = np.array(list(itertools.product(rng, repeat=7)), dtype=np.int64)
    xs, norms = [], []
    for first in rng:
        block = np.hstack([np.full((len(tail), 1), first, dtype=np.int64), tail])
        n = np.einsum("ij,jk,ik->i", block, g, block)
        keep = n >= min_norm
        xs.append(block[keep])
        norms.append(n[keep])
    return np.vstack(xs), np.concatenate(norms)


def _integral(v: LatticeVector) -> list[int]:
    den = lcm(*(c.denominator for c in v.coeffs))
    return [int(c * den) for c in v.coeffs]


def find_roots(p: LatticeVector, q: LatticeVector, bound: int) -> list[tuple[int, ...]]:
    """All (-2)-vectors l of Q_T^- with (l, p) = (l, q) = 0 and height <= bound.

    l is parametrised as x + (-x) + z1 + z2 + (-z2); the returned tuples are
    the 12 parameters (x, z1, z2), so the height is their max absolute value.
    Since l^2 = 2 x.x + 2 z1a z1b + 4 z2a z2b, the search runs over (z1, z2)
    and looks up the matching x by norm and by the two linear conditions.
    """
    if bound < 0:
        return []
    pi, qi = _integral(p), _integral(q)
    g = np.array(gram_E8_negative(), dtype=np.int64)
    dp = g @ (np.array(pi[X]) - np.array(pi[Y]))
    dq = g @ (np.array(qi[X]) - np.array(qi[Y]))
    pz2 = [a - b for a, b in zip(pi[Z2], pi[Z3])]
    qz2 = [a - b for a, b in zip(qi[Z2], qi[Z3])]

    min_norm = -1 - 3 * bound * bound
    xs, norms = _x_table(bound, min_norm)
    lookup: dict = {}
    for idx, key in enumerate(zip(norms.tolist(), (xs @ dp).tolist(), (xs @ dq).tolist())):
        lookup.setdefault(key, []).append(idx)

    roots = []
    box = range(-bound, bound + 1)
    for z1 in itertools.product(box, repeat=2):
        for z2 in itertools.product(box, repeat=2):
            target = -1 - z1[0] * z1[1] - 2 * z2[0] * z2[1]
            tp = -_u(z1, pi[Z1]) - _u(z2, pz2)
            tq = -_u(z1, qi[Z1]) - _u(z2, qz2)
            for idx in lookup.get((target, tp, tq), ()):
                roots.append(tuple(xs[idx].tolist()) + z1 + z2)
    return roots


def root_vector(params: Sequence[int]) -> LatticeVector:
    x, z1, z2 = tuple(params[:8]), tuple(params[8:10]), tuple(params[10:12])
    return k3_vector(x, tuple(-t for t in x), z1, z2, tuple(-t for t in z2))


def _canonical_root(roots):
    def positive_lead(r):
        lead = next(t for t in r if t)
        return r if lead > 0 else tuple(-t for t in r)

    reps = {positive_lead(r) for r in roots}
    return min(reps, key=lambda r: (max(map(abs, r)), r))


def period_point_check(pc: PeriodCandidate, bound: int) -> PeriodReport:
    """Bounded test of the period-domain conditions.

    ``d0_up_to_bound`` only says that no (-2)-root of Q_T^- with height at
    most ``bound`` is orthogonal to both p and q.
    """
    p, q = pc.p, pc.q
    pp, qq, pq = pairing(p, p), pairing(q, q), pairing(p, q)
    isotropic = pp == qq and pq == 0
    positive = pp + qq > 0
    roots = find_roots(p, q, bound)
    root = None
    if roots:
        root = root_vector(_canonical_root(roots))
        assert pairing(root, root) == -2 and pairing(root, p) == 0 and pairing(root, q) == 0
    return PeriodReport(isotropic, positive, not roots, root, bound)


def k3_signature() -> tuple[int, int]:
    return linalg.signature(gram_K3())


def is_even(gram: Sequence[Sequence]) -> bool:
    return all(Fraction(gram[i][i]) % 2 == 0 for i in range(len(gram)))
