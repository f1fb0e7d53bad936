"""Nonvanishing of Gromov-Taubes and Seiberg-Witten invariants.

Classes on S are E-basis vectors (torsion bit meaningful). Classes on the
one-point blowup are B + l e, with the orientation convention that the
symplectic form is positive on e, so c1 = c1(S) - e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import LatticeVector, forward_reference, k_class, pairing
from .lattice import l as l_unit


@dataclass(frozen=True)
class BlowupClass:
    """B + l e; ``l is None`` means a class on S itself (no blowup)."""

    B: LatticeVector
    l: int | None = None

    def __post_init__(self):
        if self.B.basis != "E":
            raise ValueError("B must be an E-basis vector")

    @property
    def on_blowup(self) -> bool:
        return self.l is not None

    @property
    def lval(self) -> int:
        return self.l or 0


@dataclass(frozen=True)
class Nonvanishing:
    gr_nonzero: bool
    gr_prime_nonzero: bool
    sw_nonzero: bool


def gt_dimension(c: BlowupClass) -> Fraction:
    """d = (B^2 + c1.B) / 2; on the blowup this is (B^2 - l^2 + l) / 2."""
    b2 = c.B.square
    if not c.on_blowup:
        return b2 / 2
    l = c.lval
    return (b2 - l * l + l) / 2


def forward_closure_member(B: LatticeVector) -> bool:
    """B_f = 0, or B_f^2 >= 0 and (B_f, s1 + s2) > 0."""
    if B.is_zero():
        return True
    return B.square >= 0 and pairing(B, forward_reference("E")) > 0


def classify(c: BlowupClass) -> Nonvanishing:
    fwd = forward_closure_member(c.B)
    if not c.on_blowup:
        return Nonvanishing(fwd, fwd, fwd)
    l = c.lval
    dim_ok = c.B.square >= l * l - l
    gr = dim_ok and l <= 1 and fwd
    sw = fwd and (dim_ok or l >= 2)
    return Nonvanishing(gr, sw, sw)


def connected_rep_exists(c: BlowupClass) -> bool:
    """Whether B + l e has a connected embedded symplectic representative.

    Holds when B^2 >= l^2 - l, l <= 0 and B_f lies in the closed forward
    cone. The zero class is rejected as degenerate.
    """
    if c.B.is_zero() and c.B.torsion == 0 and c.lval == 0:
        raise ValueError("the zero class is degenerate: it has no embedded representative")
    l = c.lval
    return c.B.square >= l * l - l and l <= 0 and forward_closure_member(c.B)


def exceptional_class_l() -> LatticeVector:
    """Psi(e) = -k in the L basis."""
    return -k_class()


def symplectic_cone_member(a: LatticeVector) -> bool:
    """a^2 > 0, (a, l0) > 0 and a.e != 0, for a class a of the blowup in L."""
    if a.basis != "L":
        raise ValueError("expected an L-basis class of the blowup")
    return a.square > 0 and pairing(a, l_unit(0)) > 0 and pairing(a, exceptional_class_l()) != 0

