import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from enriques_cones.cli import main

WITNESS = "1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/3,1/4,1/12"
V1 = "3/7,2/7,2/7,2/7,2/7,2/7,2/7,2/7,2/7,2/7"
ZERO_E = '{"basis":"E","coeffs":["0","0","0","0","0","0","0","0","0","0"],"torsion":0}'
Z8 = [0] * 8


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, [json.loads(line) for line in out.splitlines()], err


def test_witness(capsys):
    code, recs, _ = run(capsys, "witness", "--point", WITNESS)
    assert code == 0
    assert recs == [{"point": WITNESS.split(","), "s_squared": "1/24", "upper_squared": "1/36",
                     "verdict": True, "margin": "1/72"}]


def test_vertices_lists_nine_rows(capsys):
    code, recs, _ = run(capsys, "vertices")
    assert code == 0 and len(recs) == 9
    assert recs[0]["b"] == V1.split(",")
    assert recs[8]["b"] == ["1/3"] * 9 + ["0"]


def test_vertices_oracle_lists_ten_rows(capsys):
    _, recs, _ = run(capsys, "vertices", "--oracle")
    assert len(recs) == 10 and recs[-1]["b"] == ["3/10"] * 10


def test_phi_brute_at_v1(capsys):
    code, recs, _ = run(capsys, "phi", "--point", V1, "--brute", "--cmax", "6")
    assert code == 0
    assert recs[0]["value"] == "2/7"
    assert recs[0]["argmin"]["coeffs"] == ["3"] + ["-1"] * 9 + ["0"]


def test_phi_closed_form_and_vector(capsys):
    _, recs, _ = run(capsys, "phi", "--point", WITNESS)
    assert recs[0]["value"] == "1/12"
    vec = '{"basis":"L","coeffs":["12","-4","-4","-4","-4","-4","-4","-4","-4","-3","-1"]}'
    _, recs, _ = run(capsys, "phi", "--vector", vec)
    assert recs[0]["value"] == "1"


def test_capacity(capsys):
    code, recs, _ = run(capsys, "capacity", "--point", WITNESS, "--nef-model", "chamber")
    assert code == 0 and recs[0]["value"] == "1/12" and recs[0]["nef_model"] == "chamber_dual"


def test_symp_radius(capsys):
    _, recs, _ = run(capsys, "symp-radius", "--point", WITNESS)
    assert recs[0]["s_squared"] == "1/24"


def test_reduce(capsys):
    vec = '{"basis":"L","coeffs":["13","-4","-5","-4","-4","-5","-4","-4","-4","-4","-1"]}'
    code, recs, _ = run(capsys, "reduce", "--vector", vec)
    assert code == 0 and recs[0]["point"] == WITNESS.split(",")
    assert recs[0]["trace"]["scale"] == "12"
    _, recs, _ = run(capsys, "reduce", "--vector", vec, "--no-normalize")
    assert "point" not in recs[0] and recs[0]["cone"][0] == "12"


def test_gr_sw(capsys):
    _, recs, _ = run(capsys, "gr-sw", "--vector", ZERO_E, "--l", "2")
    r = recs[0]
    assert (r["gr_nonzero"], r["gr_prime_nonzero"], r["sw_nonzero"]) == (False, True, True)
    _, recs, _ = run(capsys, "gr-sw", "--vector", ZERO_E, "--l", "0")
    assert recs[0]["connected_rep"] is None


def test_period_check(capsys):
    p = json.dumps({"x": Z8, "y": Z8, "z1": [2, 2], "z2": [0, 0], "z3": [0, 0]})
    q = json.dumps({"x": Z8, "y": Z8, "z1": [0, 0], "z2": [1, 2], "z3": [-1, -2]})
    code, recs, _ = run(capsys, "period-check", "--p", p, "--q", q, "--cmax", "1")
    assert code == 0 and recs[0]["d0_up_to_bound"] is False
    assert recs[0]["violating_root"]["z1"] == ["1", "-1"]


def test_k3_info(capsys):
    _, recs, _ = run(capsys, "k3-info")
    assert recs[0]["rank_invariant"] == 10 and recs[0]["rank_anti_invariant"] == 12


def test_check_lattice_reports_vertex_mismatch(capsys):
    code, recs, err = run(capsys, "check-lattice")
    failed = [r["check"] for r in recs if not r["passed"]]
    assert failed == ["vertex_oracle_matches_listed"]
    assert code == 4 and json.loads(err)["error"] == "invariant_failure"


def test_sample_region_rows_are_self_contained(capsys):
    code, recs, _ = run(capsys, "sample-region", "--n", "300", "--seed", "3", "--denom", "60",
                        "--projection", "9,10")
    assert code == 0 and len(recs) == 301
    *rows, summary = recs
    assert summary["summary"] and summary["n"] == 300
    hits = 0
    for row in rows:
        b = [Fraction(row[f"b{i}"]) for i in range(1, 11)]
        s2 = 1 - sum(x * x for x in b)
        u2 = 4 * b[9] ** 2
        assert (Fraction(row["s_squared"]), Fraction(row["upper_squared"])) == (s2, u2)
        assert row["verdict"] == (s2 > u2)
        assert (row["proj_x"], row["proj_y"]) == (row["b9"], row["b10"])
        hits += row["verdict"]
    assert summary["witness_count"] == hits
    assert Fraction(summary["witness_fraction"]) == Fraction(hits, 300)


def test_output_is_byte_identical(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert main(["sample-region", "--n", "200", "--seed", "5", "--format", "csv",
                     "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    rows = list(csv.DictReader(io.StringIO(paths[0].read_text())))
    assert len(rows) == 201 and rows[-1]["summary"] == "true"


def test_decimal_columns_only_on_request(capsys):
    _, recs, _ = run(capsys, "witness", "--point", WITNESS)
    assert "s_squared_decimal" not in recs[0]
    _, recs, _ = run(capsys, "witness", "--point", WITNESS, "--decimal")
    assert recs[0]["s_squared_decimal"] == "0.0416666666667"


@pytest.mark.parametrize("argv", [
    ["witness", "--point", "1,2"],
    ["witness"],
    ["frobnicate"],
    ["reduce", "--vector", "{bad json"],
    ["witness", "--point", "1/2,1/2,1/2,1/2,1/2,1/2,0,0,0,0"],
    ["gr-sw", "--vector", '{"basis":"L","coeffs":["1"]}'],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert json.loads(err)["exit_code"] == 2


def test_infeasible_bound_exits_3(capsys):
    code, _, err = run(capsys, "capacity", "--point", WITNESS, "--k", "1", "--cmax", "2")
    assert code == 3 and json.loads(err)["error"] == "infeasible_bound"
    code, _, _ = run(capsys, "phi", "--point", WITNESS, "--brute", "--cmax", "2")
    assert code == 3


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "enriques_cones", "symp-radius", "--point", WITNESS],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["s_squared"] == "1/24"
