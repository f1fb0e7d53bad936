"""Small exact linear-algebra helpers over the rationals.

Determinants, inverses, ranks and linear solves go through sympy so that
every answer is exact. Signatures are read off floating eigenvalues, which
is safe for the small nonsingular integer Gram matrices used here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

Matrix = Sequence[Sequence]


def _sym(rows: Matrix):
    import sympy

    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row]
                         for row in rows])


def _frac(x) -> Fraction:
    p, q = x.as_numer_denom()
    return Fraction(int(p), int(q))


def det(rows: Matrix) -> Fraction:
    return _frac(_sym(rows).det(method="bareiss"))


def inverse(rows: Matrix) -> list[list[Fraction]]:
    inv = _sym(rows).inv()
    return [[_frac(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]


def rank(rows: Matrix) -> int:
    if not rows:
        return 0
    return int(_sym(rows).rank())


def solve(rows: Matrix, rhs: Sequence) -> list[Fraction] | None:
    """Unique solution of ``rows @ x = rhs``, or None when singular."""
    a = _sym(rows)
    if a.rank() < a.cols:
        return None
    x = a.LUsolve(_sym([[v] for v in rhs]))
    return [_frac(x[i, 0]) for i in range(x.rows)]


def signature(rows: Matrix) -> tuple[int, int]:
    """(positive, negative) inertia of a symmetric nonsingular matrix."""
    eig = np.linalg.eigvalsh(np.array([[float(x) for x in row] for row in rows]))
    if np.min(np.abs(eig)) < 1e-9:
        raise ValueError("matrix is singular; signature not well defined")
    return int(np.sum(eig > 0)), int(np.sum(eig < 0))


def transpose(rows: Matrix) -> list[list]:
    return [list(col) for col in zip(*rows)]


def matmul(a: Matrix, b: Matrix) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def is_symmetric(rows: Matrix) -> bool:
    n = len(rows)
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(n))
