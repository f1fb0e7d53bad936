"""JSON-friendly literals for vectors, points, traces and reports.

Every number is written as an exact rational string ("p/q" or "p").
"""

from __future__ import annotations

import json
from fractions import Fraction

from .chamber import ChamberPoint, Reduction, ReductionTrace
from .invariants import CapacityResult, InvariantReport, PhiResult, WitnessReport
from .k3 import k3_blocks, k3_vector
from .lattice import LatticeVector, ReflectionDescriptor
from .taubes import BlowupClass


def rat(x) -> str:
    return str(Fraction(x))


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ValueError(f"not a rational: {s!r}")


def parse_point(text: str) -> ChamberPoint:
    parts = [t for t in text.split(",") if t.strip()]
    if len(parts) != 10:
        raise ValueError(f"a point needs 10 comma-separated rationals, got {len(parts)}")
    return ChamberPoint(tuple(parse_rational(t) for t in parts))


def _load(obj):
    if isinstance(obj, str):
        try:
            return json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON literal: {exc}") from None
    return obj


# --- vectors ----------------------------------------------------------------

def vector_to_literal(v: LatticeVector) -> dict:
    return {"basis": v.basis, "coeffs": [rat(c) for c in v.coeffs], "torsion": v.torsion}


def vector_from_literal(obj) -> LatticeVector:
    d = _load(obj)
    if not isinstance(d, dict):
        raise ValueError("vector literal must be a JSON object")
    if "basis" not in d and {"x", "y", "z1", "z2", "z3"} <= d.keys():
        return k3_from_literal(d)
    if "basis" not in d or "coeffs" not in d:
        raise ValueError("vector literal needs 'basis' and 'coeffs'")
    torsion = d.get("torsion", 0)
    if torsion not in (0, 1):
        raise ValueError("torsion must be 0 or 1")
    return LatticeVector(d["basis"], [parse_rational(c) for c in d["coeffs"]], torsion)


def k3_to_literal(v: LatticeVector) -> dict:
    return {k: [rat(c) for c in block] for k, block in k3_blocks(v).items()}


def k3_from_literal(obj) -> LatticeVector:
    d = _load(obj)
    if not isinstance(d, dict):
        raise ValueError("K3 literal must be a JSON object")
    try:
        blocks = {k: [parse_rational(c) for c in d[k]] for k in ("x", "y", "z1", "z2", "z3")}
    except KeyError as exc:
        raise ValueError(f"K3 literal is missing block {exc}") from None
    return k3_vector(**blocks)


# --- points and traces ------------------------------------------------------

def point_to_literal(p: ChamberPoint) -> dict:
    return {"b": [rat(x) for x in p.b]}


def point_from_literal(obj) -> ChamberPoint:
    d = _load(obj)
    return ChamberPoint(tuple(parse_rational(x) for x in d["b"]))


def trace_to_literal(t: ReductionTrace) -> dict:
    return {
        "word": [{"root": vector_to_literal(d.root)} for d in t.word],
        "sign_flip": t.sign_flip,
        "scale": rat(t.scale),
    }


def trace_from_literal(obj) -> ReductionTrace:
    d = _load(obj)
    word = tuple(ReflectionDescriptor(vector_from_literal(w["root"])) for w in d["word"])
    return ReductionTrace(word, bool(d["sign_flip"]), parse_rational(d["scale"]))


def blowup_from_literal(obj) -> BlowupClass:
    d = _load(obj)
    l = d.get("l")
    if l is not None and (isinstance(l, bool) or not isinstance(l, int)):
        raise ValueError("l must be an integer")
    return BlowupClass(vector_from_literal(d["B"]), l)


# --- records ----------------------------------------------------------------

def reduction_record(red: Reduction, normalized: bool) -> dict:
    rec = {
        "input": vector_to_literal(red.input),
        "output": vector_to_literal(red.vector),
        "cone": [rat(x) for x in red.cone_coords],
    }
    if normalized:
        rec["point"] = point_to_literal(red.point)["b"]
    rec["trace"] = trace_to_literal(red.trace)
    return rec


def phi_record(res: PhiResult) -> dict:
    return {
        "value": rat(res.value),
        "argmin": vector_to_literal(res.argmin),
        "bound": res.bound,
        "verified_up_to_bound": True,
        "certified": res.certified,
    }


def capacity_record(res: CapacityResult) -> dict:
    return {"value": rat(res.value), "argmin": vector_to_literal(res.argmin), "certified": res.certified}


def witness_record(p: ChamberPoint, rep: WitnessReport) -> dict:
    return {
        "point": point_to_literal(p)["b"],
        "s_squared": rat(rep.s_squared),
        "upper_squared": rat(rep.upper_squared),
        "verdict": rep.verdict,
        "margin": rat(rep.margin),
    }


def invariant_record(rep: InvariantReport) -> dict:
    """Flat record: rational strings and booleans only."""
    rec = {
        "b": point_to_literal(rep.point)["b"],
        "phi": rat(rep.phi),
        "s_squared": rat(rep.s_squared),
        "kahler_lower": rat(rep.kahler_lower),
        "kahler_upper": rat(rep.kahler_upper),
        "upper_squared": rat(rep.kahler_upper ** 2),
        "non_kahler": rep.non_kahler,
    }
    for k, cap in rep.c_alg.items():
        rec[f"c{k}_alg"] = rat(cap.value)
        rec[f"c{k}_alg_certified"] = cap.certified
    return rec
