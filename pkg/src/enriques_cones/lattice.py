"""Exact arithmetic on the three lattices in play.

* ``L``  -- the odd unimodular lattice I_{1,10} with orthogonal basis
  l0, ..., l10 (l0^2 = 1, li^2 = -1).
* ``E``  -- the Enriques lattice -E8 + U with basis r0, ..., r7, s1, s2.
* ``K3`` -- the covering lattice 2(-E8) + 3U, coordinates ordered as
  x (8), y (8), z1 (2), z2 (2), z3 (2).

Vectors never change basis implicitly; use :func:`psi` / :func:`psi_inv`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Iterable, Sequence

from . import linalg

BASES = ("L", "E", "K3")
RANKS = {"L": 11, "E": 10, "K3": 22}

E_LABELS = tuple(f"r{i}" for i in range(8)) + ("s1", "s2")
L_LABELS = tuple(f"l{i}" for i in range(11))
K3_LABELS = (
    tuple(f"x{i}" for i in range(8))
    + tuple(f"y{i}" for i in range(8))
    + ("z1a", "z1b", "z2a", "z2b", "z3a", "z3b")
)


def _as_fraction(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


@dataclass(frozen=True)
class LatticeVector:
    """An exact rational coordinate vector tagged with its basis.

    ``torsion`` models the Z/2 summand of H^2(S; Z) (the canonical class K
    is the vector with zero coefficients and torsion 1). It is carried
    through arithmetic but never enters the pairing.
    """

    basis: str
    coeffs: tuple
    torsion: int = 0

    def __post_init__(self):
        if self.basis not in RANKS:
            raise ValueError(f"unknown basis {self.basis!r}")
        coeffs = tuple(_as_fraction(c) for c in self.coeffs)
        if len(coeffs) != RANKS[self.basis]:
            raise ValueError(
                f"basis {self.basis} needs {RANKS[self.basis]} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "torsion", int(self.torsion) % 2)

    @classmethod
    def zero(cls, basis: str) -> "LatticeVector":
        return cls(basis, (0,) * RANKS[basis])

    @classmethod
    def unit(cls, basis: str, index: int) -> "LatticeVector":
        c = [0] * RANKS[basis]
        c[index] = 1
        return cls(basis, c)

    def _check(self, other: "LatticeVector"):
        if not isinstance(other, LatticeVector):
            return NotImplemented
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        return None

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return LatticeVector(
            self.basis,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.torsion ^ other.torsion,
        )

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(self.basis, tuple(-a for a in self.coeffs), self.torsion)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return self + (-other)

    def __mul__(self, scalar) -> "LatticeVector":
        s = _as_fraction(scalar)
        tors = self.torsion * s.numerator if s.denominator == 1 else 0
        return LatticeVector(self.basis, tuple(a * s for a in self.coeffs), tors)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "LatticeVector":
        return self * (1 / _as_fraction(scalar))

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def free_part(self) -> "LatticeVector":
        """The torsion-free part B_f."""
        return LatticeVector(self.basis, self.coeffs, 0) if self.torsion else self

    @cached_property
    def square(self) -> Fraction:
        return pairing(self, self)

    def __repr__(self):
        return f"LatticeVector({self.basis}, [{', '.join(map(str, self.coeffs))}], torsion={self.torsion})"


# --- Gram matrices ----------------------------------------------------------

def gram_L() -> list[list[int]]:
    return [[(1 if i == 0 else -1) if i == j else 0 for j in range(11)] for i in range(11)]


@cache
def psi_matrix() -> tuple[tuple[int, ...], ...]:
    """11x11 integer matrix of Psi; column j is the image of the j-th domain
    basis vector, domain ordered (r0, ..., r7, s1, s2, e)."""
    cols = []
    cols.append([1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0])  # r0
    for i in range(1, 8):  # ri -> li - l(i+1)
        c = [0] * 11
        c[i], c[i + 1] = 1, -1
        cols.append(c)
    cols.append([3] + [-1] * 9 + [0])  # s1
    cols.append([3] + [-1] * 8 + [0, -1])  # s2
    cols.append([3] + [-1] * 10)  # e -> -k
    return tuple(tuple(row) for row in linalg.transpose(cols))


@cache
def psi_inverse_matrix() -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in linalg.inverse(psi_matrix()))


@cache
def gram_of_enriques_basis() -> tuple[tuple[int, ...], ...]:
    """Gram matrix of r0..r7, s1, s2, obtained by pairing their Psi-images in L."""
    m = psi_matrix()
    cols = linalg.transpose(m)[:10]
    g = gram_L()
    out = []
    for u in cols:
        gu = [sum(g[i][j] * u[j] for j in range(11)) for i in range(11)]
        out.append(tuple(sum(gu[i] * w[i] for i in range(11)) for w in cols))
    return tuple(out)


def dynkin_gram() -> list[list[int]]:
    """Gram of r0..r7, s1, s2 read straight off the Dynkin diagram.

    Chain r1 - r2 - ... - r7 with r0 attached to r3, all of square -2,
    plus the hyperbolic plane on s1, s2. Independent of Psi.
    """
    g = [[0] * 10 for _ in range(10)]
    for i in range(8):
        g[i][i] = -2
    edges = [(i, i + 1) for i in range(1, 7)] + [(0, 3)]
    for i, j in edges:
        g[i][j] = g[j][i] = 1
    g[8][9] = g[9][8] = 1
    return g


def gram_E8_negative() -> list[list[int]]:
    """The -E8 block of the Enriques Gram (rows/cols r0..r7)."""
    g = gram_of_enriques_basis()
    return [list(row[:8]) for row in g[:8]]


@cache
def gram_K3() -> tuple[tuple[int, ...], ...]:
    e8 = gram_E8_negative()
    u = [[0, 1], [1, 0]]
    blocks = [e8, e8, u, u, u]
    n = 22
    g = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                g[off + i][off + j] = b[i][j]
        off += k
    return tuple(tuple(r) for r in g)


def gram(basis: str):
    if basis == "L":
        return tuple(tuple(r) for r in gram_L())
    if basis == "E":
        return gram_of_enriques_basis()
    if basis == "K3":
        return gram_K3()
    raise ValueError(f"unknown basis {basis!r}")


@cache
def _sparse_gram(basis: str) -> tuple[tuple[int, int, int], ...]:
    g = gram(basis)
    return tuple((i, j, g[i][j]) for i in range(len(g)) for j in range(len(g)) if g[i][j])


def pairing(v: LatticeVector, w: LatticeVector) -> Fraction:
    """The intersection pairing v^T G w (torsion ignored)."""
    if v.basis != w.basis:
        raise ValueError(f"basis mismatch: {v.basis} vs {w.basis}")
    a, b = v.coeffs, w.coeffs
    total = Fraction(0)
    for i, j, g in _sparse_gram(v.basis):
        if a[i] and b[j]:
            total += g * a[i] * b[j]
    return total


# --- named classes ----------------------------------------------------------

def l(i: int) -> LatticeVector:
    return LatticeVector.unit("L", i)


def r(i: int) -> LatticeVector:
    """Enriques root r_i in the E basis, 0 <= i <= 9.

    r8 = l8 - l9 and r9 = l9 - l10 are not basis vectors; they are pulled
    back through Psi.
    """
    if 0 <= i <= 7:
        return LatticeVector.unit("E", i)
    if i in (8, 9):
        v, m = psi_inv(l(i) - l(i + 1))
        assert m == 0
        return v
    raise ValueError("root index must be in 0..9")


def s1() -> LatticeVector:
    return LatticeVector.unit("E", 8)


def s2() -> LatticeVector:
    return LatticeVector.unit("E", 9)


def k_class() -> LatticeVector:
    """k = -3 l0 + l1 + ... + l10; Psi(e) = -k."""
    return LatticeVector("L", [-3] + [1] * 10)


def canonical_class() -> LatticeVector:
    """K_S: the torsion element of H^2(S; Z)."""
    return LatticeVector("E", [0] * 10, torsion=1)


def l_class(a, b: Sequence) -> LatticeVector:
    """The class a*l0 - sum b_i l_i."""
    return LatticeVector("L", [a] + [-x for x in b])


# --- Psi --------------------------------------------------------------------

def psi(v: LatticeVector, e_mult=0) -> LatticeVector:
    """Psi(v + e_mult * e) in the L basis."""
    if v.basis != "E":
        raise ValueError("psi expects an E-basis vector")
    x = list(v.coeffs) + [_as_fraction(e_mult)]
    m = psi_matrix()
    return LatticeVector("L", [sum(m[i][j] * x[j] for j in range(11) if x[j]) for i in range(11)],
                         v.torsion)


def psi_inv(w: LatticeVector) -> tuple[LatticeVector, Fraction]:
    """Inverse of :func:`psi`: returns (E-part, multiplicity of e)."""
    if w.basis != "L":
        raise ValueError("psi_inv expects an L-basis vector")
    m = psi_inverse_matrix()
    x = [sum(m[i][j] * w.coeffs[j] for j in range(11) if w.coeffs[j]) for i in range(11)]
    return LatticeVector("E", x[:10], w.torsion), x[10]


# --- reflections ------------------------------------------------------------

@dataclass(frozen=True)
class ReflectionDescriptor:
    root: LatticeVector

    def __post_init__(self):
        if self.root.square not in (-2, -1):
            raise ValueError(f"reflection root must have square -2 or -1, got {self.root.square}")


def reflect(beta: LatticeVector, alpha: ReflectionDescriptor | LatticeVector) -> LatticeVector:
    """R_alpha(beta) = beta - 2 (alpha, beta) / (alpha, alpha) alpha."""
    if isinstance(alpha, LatticeVector):
        alpha = ReflectionDescriptor(alpha)
    root = alpha.root
    t = pairing(root, beta)
    if not t:
        return beta
    return beta - root * (2 * t / root.square)


# --- forward cone -----------------------------------------------------------

def forward_reference(basis: str) -> LatticeVector:
    if basis == "L":
        return l(0)
    if basis == "E":
        return s1() + s2()
    raise ValueError(f"no forward cone reference for basis {basis}")


def forward_cone_membership(v: LatticeVector) -> str:
    """'interior', 'boundary' or 'outside' relative to the forward cone."""
    ref = forward_reference(v.basis)
    sq = v.square
    side = pairing(v, ref)
    if sq > 0 and side > 0:
        return "interior"
    if sq == 0 and not v.is_zero() and side > 0:
        return "boundary"
    return "outside"


def as_l_class(v: LatticeVector) -> LatticeVector:
    """Express a class of H^2(S) in the L basis, checking it is orthogonal to k."""
    if v.basis == "E":
        return psi(v)
    if v.basis == "L":
        if pairing(v, k_class()) != 0:
            raise ValueError("vector is not orthogonal to k, so it is not a class of S")
        return v
    raise ValueError(f"expected an E or L vector, got basis {v.basis}")


def vectors(basis: str, rows: Iterable[Sequence]) -> list[LatticeVector]:
    return [LatticeVector(basis, row) for row in rows]
