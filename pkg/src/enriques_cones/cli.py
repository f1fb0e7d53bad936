"""Command-line front end.

Each subcommand writes one record per line (JSON lines by default, or CSV).
Numbers are exact rational strings; ``--decimal`` adds float columns for
human reading. Failures are written to stderr as JSON records.

Exit codes: 0 ok, 2 usage, 3 infeasible bound, 4 invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import checks, k3
from .chamber import enumerate_vertices_oracle, reduce, vertices
from .invariants import (
    InfeasibleBoundError,
    SamplingError,
    alg_capacity,
    phi_bruteforce,
    phi_closed_form,
    phi_of_class,
    sample_region,
    symp_radius_squared,
    non_kahler_witness,
)
from .literals import (
    blowup_from_literal,
    capacity_record,
    k3_from_literal,
    k3_to_literal,
    parse_point,
    phi_record,
    rat,
    reduction_record,
    vector_from_literal,
    vector_to_literal,
    witness_record,
)
from .taubes import BlowupClass, classify, connected_rep_exists, gt_dimension

EXIT_OK, EXIT_USAGE, EXIT_BOUND, EXIT_INVARIANT = 0, 2, 3, 4
NEF_FLAGS = {"forward": "forward_cone", "chamber": "chamber_dual"}
DECIMAL_KEYS = ("value", "phi", "s_squared", "upper_squared", "margin", "witness_fraction")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- argument types ---------------------------------------------------------

def _point(text):
    try:
        return parse_point(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {exc}") from None


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _pair(text):
    parts = text.split(",")
    try:
        i, j = (int(t) for t in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("projection is two coordinate indices like 1,10") from None
    if not (1 <= i <= 10 and 1 <= j <= 10):
        raise argparse.ArgumentTypeError("projection indices run from 1 to 10")
    return i, j


# --- subcommands ------------------------------------------------------------

def cmd_reduce(args):
    v = vector_from_literal(args.vector)
    normalize = not args.no_normalize
    yield reduction_record(reduce(v, normalize=normalize), normalize)


def cmd_phi(args):
    if args.vector is not None:
        value, arg = phi_of_class(vector_from_literal(args.vector), args.cmax)
        yield {"value": rat(value), "argmin": vector_to_literal(arg), "bound": args.cmax,
               "verified_up_to_bound": True}
        return
    p = _require_point(args)
    if args.brute:
        yield {"point": [rat(x) for x in p.b], **phi_record(phi_bruteforce(p, args.cmax))}
    else:
        yield {"point": [rat(x) for x in p.b], "value": rat(phi_closed_form(p))}


def cmd_capacity(args):
    p = _require_point(args)
    model = NEF_FLAGS[args.nef_model]
    res = alg_capacity(p, args.k, args.cmax, model)
    yield {"point": [rat(x) for x in p.b], "k": args.k, "nef_model": model,
           "bound": args.cmax, **capacity_record(res)}


def cmd_symp_radius(args):
    p = _require_point(args)
    yield {"point": [rat(x) for x in p.b], "s_squared": rat(symp_radius_squared(p))}


def cmd_witness(args):
    p = _require_point(args)
    yield witness_record(p, non_kahler_witness(p))


def cmd_sample_region(args):
    i, j = args.projection
    n = hits = 0
    for p, rep in sample_region(args.n, args.seed, args.denom):
        n += 1
        hits += rep.verdict
        row = {f"b{t + 1}": rat(x) for t, x in enumerate(p.b)}
        row.update(s_squared=rat(rep.s_squared), upper_squared=rat(rep.upper_squared),
                   verdict=rep.verdict, proj_x=rat(p.b[i - 1]), proj_y=rat(p.b[j - 1]))
        yield row
    yield {"summary": True, "n": n, "witness_count": hits,
           "witness_fraction": rat(Fraction(hits, n)), "seed": args.seed, "denom": args.denom}


def cmd_vertices(args):
    pts = enumerate_vertices_oracle() if args.oracle else vertices()
    for idx, p in enumerate(pts, 1):
        yield {"index": idx, "b": [rat(x) for x in p.b]}


def cmd_check_lattice(args):
    for res in checks.run_all():
        yield {"check": res.name, "passed": res.passed, "detail": res.detail}


def cmd_k3_info(args):
    plus, minus = k3.invariant_sublattice(), k3.anti_invariant_sublattice()
    yield {
        "signature": list(k3.k3_signature()),
        "even": k3.is_even(k3.gram_K3()),
        "rank_invariant": plus.rank,
        "rank_anti_invariant": minus.rank,
        "eigenspaces_meet_trivially": k3.eigenspaces_meet_trivially(),
        "invariant_gram": [list(r) for r in plus.gram],
        "anti_invariant_gram": [list(r) for r in minus.gram],
    }


def cmd_gr_sw(args):
    if args.vector is None:
        raise UsageError("gr-sw needs --vector")
    lit = args.vector
    if isinstance(lit, dict) and "B" in lit:
        c = blowup_from_literal(lit)
    else:
        c = BlowupClass(vector_from_literal(lit), args.l)
    flags = classify(c)
    rec = {
        "B": vector_to_literal(c.B),
        "l": c.l,
        "gt_dimension": rat(gt_dimension(c)),
        "gr_nonzero": flags.gr_nonzero,
        "gr_prime_nonzero": flags.gr_prime_nonzero,
        "sw_nonzero": flags.sw_nonzero,
    }
    try:
        rec["connected_rep"] = connected_rep_exists(c)
    except ValueError:
        rec["connected_rep"] = None
    yield rec


def cmd_period_check(args):
    if args.p is None or args.q is None:
        raise UsageError("period-check needs --p and --q")
    pc = k3.PeriodCandidate(k3_from_literal(args.p), k3_from_literal(args.q))
    rep = k3.period_point_check(pc, args.cmax)
    yield {
        "isotropic": rep.isotropic,
        "positive": rep.positive,
        "d0_up_to_bound": rep.d0_up_to_bound,
        "bound": rep.bound,
        "violating_root": k3_to_literal(rep.violating_root) if rep.violating_root is not None else None,
    }


def _require_point(args):
    if args.point is None:
        raise UsageError(f"{args.command} needs --point")
    return args.point


COMMANDS = {
    "reduce": (cmd_reduce, "reduce a class into the chamber cone"),
    "phi": (cmd_phi, "the Phi invariant of a chamber point or class"),
    "capacity": (cmd_capacity, "the k-th algebraic capacity"),
    "symp-radius": (cmd_symp_radius, "squared symplectic radius"),
    "witness": (cmd_witness, "exact non-Kahler witness test"),
    "sample-region": (cmd_sample_region, "seeded chamber sample with witness verdicts"),
    "vertices": (cmd_vertices, "listed chamber vertices, or the brute-force oracle"),
    "check-lattice": (cmd_check_lattice, "structural lattice checks"),
    "k3-info": (cmd_k3_info, "K3 lattice and involution data"),
    "gr-sw": (cmd_gr_sw, "Gromov-Taubes and Seiberg-Witten nonvanishing"),
    "period-check": (cmd_period_check, "bounded period-domain test"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--point", type=_point, help="ten comma-separated rationals")
    common.add_argument("--vector", type=_json, help="JSON vector literal")
    common.add_argument("--cmax", type=_positive, default=None,
                        help="enumeration bound (default 6; 2 for period-check)")
    common.add_argument("--nef-model", choices=sorted(NEF_FLAGS), default="forward")
    common.add_argument("--k", type=int, default=0)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--denom", type=_positive, default=120)
    common.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    common.add_argument("--out", help="write output to this path")
    common.add_argument("--decimal", action="store_true", help="add float columns for reading")

    parser = _Parser(prog="enriques-cones", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if name == "reduce":
            sp.add_argument("--no-normalize", action="store_true")
        elif name == "phi":
            sp.add_argument("--brute", action="store_true")
        elif name == "sample-region":
            sp.add_argument("--n", type=_positive, default=1000)
            sp.add_argument("--projection", type=_pair, default=(1, 10))
        elif name == "vertices":
            sp.add_argument("--oracle", action="store_true")
        elif name == "gr-sw":
            sp.add_argument("--l", type=int, default=None, help="multiple of e; omit for a class on S")
        elif name == "period-check":
            sp.add_argument("--p", type=_json)
            sp.add_argument("--q", type=_json)
    return parser


# --- output -----------------------------------------------------------------

def _with_decimals(rec: dict) -> dict:
    out = dict(rec)
    for key in DECIMAL_KEYS:
        if isinstance(rec.get(key), str):
            out[f"{key}_decimal"] = f"{float(Fraction(rec[key])):.12g}"
    return out


def _render(records: list[dict], fmt: str) -> str:
    if fmt == "jsonl":
        return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)
    columns: list[str] = []
    for r in records:
        columns += [k for k in r if k not in columns]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow({k: _csv_cell(v) for k, v in r.items()})
    return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return v


def _fail(code: int, kind: str, message: str) -> int:
    sys.stdout.flush()
    sys.stderr.write(json.dumps({"error": kind, "message": message, "exit_code": code}) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.cmax is None:
            # the root search grows like (2C+1)^12, so period-check defaults low
            args.cmax = 2 if args.command == "period-check" else 6
        records = list(COMMANDS[args.command][0](args))
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except (InfeasibleBoundError, SamplingError) as exc:
        return _fail(EXIT_BOUND, "infeasible_bound", str(exc))
    except (ValueError, KeyError, TypeError) as exc:
        return _fail(EXIT_USAGE, "invalid_input", str(exc))

    if args.decimal:
        records = [_with_decimals(r) for r in records]
    text = _render(records, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if args.command == "check-lattice" and not all(r["passed"] for r in records):
        return _fail(EXIT_INVARIANT, "invariant_failure",
                     "failed: " + ", ".join(r["check"] for r in records if not r["passed"]))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
