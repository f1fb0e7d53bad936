"""Structural self-checks of the lattices, Psi and the chamber vertices."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .chamber import enumerate_vertices_oracle, vertices
from .k3 import anti_invariant_sublattice, eigenspaces_meet_trivially, invariant_sublattice, is_even
from .lattice import (
    LatticeVector,
    dynkin_gram,
    gram,
    gram_of_enriques_basis,
    k_class,
    pairing,
    psi,
    psi_matrix,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)


def _domain_gram() -> list[list[int]]:
    """(-E8 + U) + <-1>, the form Psi must carry to I_{1,10}."""
    g = [row + [0] for row in dynkin_gram()]
    g.append([0] * 10 + [-1])
    return g


def psi_checks() -> list[CheckResult]:
    d = linalg.det(psi_matrix())
    out = [CheckResult("psi_unimodular", d in (1, -1), {"det": str(d)})]
    basis = [(LatticeVector.unit("E", i), 0) for i in range(10)] + [(LatticeVector.zero("E"), 1)]
    images = [psi(v, m) for v, m in basis]
    expected = _domain_gram()
    bad = [(i, j) for i in range(11) for j in range(11)
           if pairing(images[i], images[j]) != expected[i][j]]
    out.append(CheckResult("psi_isometry", not bad, {"pairs_checked": 121, "mismatches": bad}))
    k = k_class()
    orth = all(pairing(images[i], k) == 0 for i in range(10))
    out.append(CheckResult("k_orthogonal_to_enriques", orth))
    return out


def gram_checks() -> list[CheckResult]:
    out = []
    ge = gram_of_enriques_basis()
    out.append(CheckResult("enriques_gram_matches_dynkin", [list(r) for r in ge] == dynkin_gram()))
    for name, basis, sig, det_ok, even in (
        ("L", "L", (1, 10), lambda d: d == 1, None),
        ("E", "E", (1, 9), lambda d: d == -1, True),
        ("K3", "K3", (3, 19), lambda d: abs(d) == 1, True),
    ):
        g = gram(basis)
        d = linalg.det(g)
        s = linalg.signature(g)
        ok = linalg.is_symmetric(g) and s == sig and det_ok(d) and (even is None or is_even(g))
        out.append(CheckResult(f"gram_{name}", ok, {
            "det": str(d), "signature": list(s), "even": is_even(g), "symmetric": linalg.is_symmetric(g),
        }))
    return out


def k3_checks() -> list[CheckResult]:
    plus, minus = invariant_sublattice(), anti_invariant_sublattice()
    return [
        CheckResult("k3_invariant_rank", plus.rank == 10, {"rank": plus.rank}),
        CheckResult("k3_anti_invariant_rank", minus.rank == 12, {"rank": minus.rank}),
        CheckResult("k3_eigenspaces_meet_trivially", eigenspaces_meet_trivially()),
    ]


def vertex_checks() -> list[CheckResult]:
    found = set(enumerate_vertices_oracle())
    listed = set(vertices())
    extra = sorted((p.b for p in found - listed), reverse=True)
    missing = sorted((p.b for p in listed - found), reverse=True)
    detail = {
        "oracle_count": len(found),
        "listed_count": len(listed),
        "unlisted_vertices": [[str(x) for x in b] for b in extra],
        "listed_non_vertices": [[str(x) for x in b] for b in missing],
    }
    return [
        CheckResult("vertex_oracle_contains_listed", listed <= found, detail),
        CheckResult("vertex_oracle_matches_listed", listed == found, detail),
    ]


def run_all() -> list[CheckResult]:
    return psi_checks() + gram_checks() + k3_checks() + vertex_checks()
