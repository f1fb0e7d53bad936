"""Numerical invariants of chamber points.

Classes of S are written F = c l0 - sum di li with sum di = 3c, so that
F^2 = c^2 - sum di^2 and, for a chamber point b, b.F = c - sum bi di.
Searches run over 1 <= c <= c_max; results carry a ``certified`` flag when a
Cauchy-Schwarz tail bound shows no class with larger c can do better.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import isqrt, lcm
from typing import Iterator, Sequence

import numpy as np

from .chamber import ChamberPoint, chamber_membership, chamber_vertices, vertex_classes
from .lattice import LatticeVector, as_l_class

NEF_MODELS = ("forward_cone", "chamber_dual")


class InfeasibleBoundError(ValueError):
    """No admissible class exists within the enumeration bound."""


def _check_bound(c_max: int):
    if int(c_max) != c_max or c_max < 1:
        raise ValueError(f"enumeration bound must be a positive integer, got {c_max}")


# --- enumeration ------------------------------------------------------------

def _compositions(total: int, budget: int, n: int, exact: bool):
    """Integer n-tuples d, lexicographically decreasing, with sum d = total
    and sum d^2 <= budget (== budget when ``exact``)."""
    out = []
    d = [0] * n

    def rec(pos, rem, bud):
        left = n - pos
        if left == 1:
            if rem * rem <= bud and (not exact or rem * rem == bud):
                d[pos] = rem
                out.append(tuple(d))
            return
        m = isqrt(bud)
        for x in range(m, -m - 1, -1):
            r, q = rem - x, bud - x * x
            # Cauchy-Schwarz: the remaining entries need sum^2 <= count * squares
            if r * r > (left - 1) * q:
                continue
            d[pos] = x
            rec(pos + 1, r, q)

    rec(0, total, budget)
    return out


@cache
def _class_table(c_max: int, min_square: int, isotropic: bool) -> np.ndarray:
    """Rows (c, d1, ..., d10) in canonical order: c ascending, d descending."""
    rows = []
    for c in range(1, c_max + 1):
        budget = c * c - min_square
        if budget < 0:
            continue
        for d in _compositions(3 * c, budget, 10, isotropic):
            rows.append((c,) + d)
    table = np.array(rows, dtype=np.int64).reshape(-1, 11)
    table.setflags(write=False)
    return table


def _row_to_class(row) -> LatticeVector:
    return LatticeVector("L", [int(row[0])] + [-int(x) for x in row[1:]])


def isotropic_enumerate(c_max: int) -> list[LatticeVector]:
    """All square-zero classes of S with l0-coefficient 1..c_max."""
    _check_bound(c_max)
    return [_row_to_class(r) for r in _class_table(c_max, 0, True)]


def _pair_with_table(v: LatticeVector, table: np.ndarray) -> tuple[np.ndarray, int]:
    """Integer numerators of (v, F) for every row F, and their common denominator."""
    den = lcm(*(c.denominator for c in v.coeffs))
    w = [int(c * den) for c in v.coeffs]
    # rows are (c, d) meaning c l0 - sum d li; (v, F) = v0 c + sum vi di
    bound = max(map(abs, w)) * (int(np.abs(table).max()) if table.size else 0) * 11
    if bound < 2**62:
        vals = table @ np.array(w, dtype=np.int64)
    else:
        vals = np.array([sum(int(x) * y for x, y in zip(row, w)) for row in table], dtype=object)
    return vals, den


def _tail_certificate(p: ChamberPoint, value: Fraction, c_max: int) -> bool:
    """True when every class with F^2 >= 0 and c > c_max pairs to >= value.

    Splitting b and d into means and mean-free parts gives
    b.F >= (c/10) (1 - sqrt(10 sum bi^2 - 9)), which increases with c.
    """
    t = 10 * sum(x * x for x in p.b) - 9
    if t > 1:
        return False
    rhs = 1 - 10 * value / (c_max + 1)
    return rhs >= 0 and t <= rhs * rhs


# --- Phi --------------------------------------------------------------------

@dataclass(frozen=True)
class PhiResult:
    value: Fraction
    argmin: LatticeVector
    bound: int
    certified: bool


def phi_closed_form(p: ChamberPoint) -> Fraction:
    """Phi(b) = b10 on the closed chamber."""
    if not chamber_membership(p.b, "closed"):
        raise ValueError(f"point {p} is not in the closed chamber")
    return p.b[9]


def phi_of_class(v: LatticeVector, c_max: int) -> tuple[Fraction, LatticeVector]:
    """min |(v, F)| over enumerated square-zero classes F, with a minimizer."""
    _check_bound(c_max)
    v = as_l_class(v)
    table = _class_table(c_max, 0, True)
    if not len(table):
        raise InfeasibleBoundError(f"no square-zero classes with l0-coefficient <= {c_max}")
    vals, den = _pair_with_table(v, table)
    vals = np.abs(vals)
    i = int(np.argmin(vals))
    return Fraction(int(vals[i]), den), _row_to_class(table[i])


def phi_bruteforce(p: ChamberPoint, c_max: int) -> PhiResult:
    """Phi by exhaustive search up to ``c_max``; global minimality is only
    claimed through the ``certified`` flag."""
    if not chamber_membership(p.b, "closed"):
        raise ValueError(f"point {p} is not in the closed chamber")
    value, arg = phi_of_class(p.class_vector(), c_max)
    return PhiResult(value, arg, c_max, _tail_certificate(p, value, c_max))


# --- algebraic capacities ---------------------------------------------------

@dataclass(frozen=True)
class CapacityResult:
    value: Fraction
    argmin: LatticeVector
    certified: bool


@cache
def _chamber_dual_mask(c_max: int, min_square: int) -> np.ndarray:
    table = _class_table(c_max, min_square, False)
    ok = np.ones(len(table), dtype=bool)
    for v in vertex_classes():
        vals, _ = _pair_with_table(v, table)
        ok &= vals >= 0
    return ok


def _feasible(k: int, c_max: int, nef_model: str) -> np.ndarray:
    table = _class_table(c_max, 2 * k, False)
    if nef_model == "forward_cone":
        # c >= 1 and F^2 >= 0 already place F in the closed forward cone
        return table
    if nef_model == "chamber_dual":
        return table[_chamber_dual_mask(c_max, 2 * k)]
    raise ValueError(f"unknown nef model {nef_model!r}; choose from {NEF_MODELS}")


def alg_capacity(p: ChamberPoint, k: int, c_max: int, nef_model: str = "forward_cone") -> CapacityResult:
    """The k-th algebraic capacity: min b.F over nef F with F^2 >= 2k."""
    if not chamber_membership(p.b, "closed"):
        raise ValueError(f"point {p} is not in the closed chamber")
    if int(k) != k or k < 0:
        raise ValueError("capacity index k must be a nonnegative integer")
    _check_bound(c_max)
    table = _feasible(int(k), c_max, nef_model)
    if not len(table):
        raise InfeasibleBoundError(
            f"no {nef_model} class with F^2 >= {2 * k} and l0-coefficient <= {c_max}"
        )
    vals, den = _pair_with_table(p.class_vector(), table)
    i = int(np.argmin(vals))
    value = Fraction(int(vals[i]), den)
    return CapacityResult(value, _row_to_class(table[i]), _tail_certificate(p, value, c_max))


# --- radius, bounds, witness ------------------------------------------------

def symp_radius_squared(p: ChamberPoint) -> Fraction:
    """S(b)^2 = 1 - sum bi^2."""
    if not chamber_membership(p.b, "closed"):
        raise ValueError(f"point {p} is not in the closed chamber")
    return 1 - sum(x * x for x in p.b)


def kahler_bounds(p: ChamberPoint) -> tuple[Fraction, Fraction]:
    """(b10, 2 b10): the sandwich for the Kahler function."""
    phi = phi_closed_form(p)
    return phi, 2 * phi


@dataclass(frozen=True)
class WitnessReport:
    s_squared: Fraction
    upper_squared: Fraction
    verdict: bool
    margin: Fraction


def non_kahler_witness(p: ChamberPoint) -> WitnessReport:
    """Decide S(b) > 2 b10 by comparing squares exactly."""
    s2 = symp_radius_squared(p)
    _, upper = kahler_bounds(p)
    u2 = upper * upper
    return WitnessReport(s2, u2, s2 > u2, s2 - u2)


@dataclass(frozen=True)
class InvariantReport:
    point: ChamberPoint
    phi: Fraction
    c_alg: dict
    s_squared: Fraction
    kahler_lower: Fraction
    kahler_upper: Fraction
    non_kahler: bool


def invariant_report(p: ChamberPoint, c_max: int = 6, ks: Sequence[int] = (0,),
                     nef_model: str = "forward_cone") -> InvariantReport:
    lower, upper = kahler_bounds(p)
    w = non_kahler_witness(p)
    caps = {k: alg_capacity(p, k, c_max, nef_model) for k in ks}
    return InvariantReport(p, phi_closed_form(p), caps, w.s_squared, lower, upper, w.verdict)


# --- region sampling --------------------------------------------------------

class SamplingError(ValueError):
    pass


def _round_to_grid(x: np.ndarray, denom: int) -> list[int]:
    """Integers m with sum m = 3*denom, close to denom*x (largest remainder)."""
    scaled = x * denom
    m = np.floor(scaled).astype(np.int64)
    short = 3 * denom - int(m.sum())
    order = sorted(range(10), key=lambda i: (-(scaled[i] - m[i]), i))
    for i in order[:short]:
        m[i] += 1
    return [int(v) for v in m]


def sample_region(n: int, seed: int, denom: int, alpha: float = 0.3,
                  max_attempts: int | None = None) -> Iterator[tuple[ChamberPoint, WitnessReport]]:
    """Seeded rational points of the open chamber with their witness verdicts.

    Proposals are random convex combinations of the chamber vertices rounded
    to the grid (1/denom) Z^10 with sum 3; they are sorted and kept only if
    they pass the exact membership test. The measure is not uniform.
    """
    if n < 1:
        raise ValueError("sample count must be at least 1")
    if denom < 1:
        raise ValueError("denominator must be positive")
    rng = np.random.default_rng(seed)
    verts = np.array([[float(x) for x in v.b] for v in chamber_vertices()])
    limit = max_attempts if max_attempts is not None else 100 * n + 10_000
    emitted = attempts = 0
    while emitted < n:
        if attempts >= limit:
            raise SamplingError(
                f"denominator {denom} produced only {emitted} of {n} chamber points in {attempts} attempts"
            )
        attempts += 1
        w = rng.dirichlet([alpha] * len(verts))
        m = sorted(_round_to_grid(w @ verts, denom), reverse=True)
        if m[9] <= 0 or m[0] + m[1] + m[2] > denom:
            continue
        p = ChamberPoint(tuple(Fraction(x, denom) for x in m))
        emitted += 1
        yield p, non_kahler_witness(p)


@dataclass(frozen=True)
class RegionSummary:
    n: int
    witness_count: int

    @property
    def witness_fraction(self) -> Fraction:
        return Fraction(self.witness_count, self.n)


def summarize(samples) -> RegionSummary:
    n = hits = 0
    for _, rep in samples:
        n += 1
        hits += rep.verdict
    return RegionSummary(n, hits)
