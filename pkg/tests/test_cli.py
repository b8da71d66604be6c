import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from quipu.cli import parse_spec, run_command
from quipu.families import DSLError, Hn, Path
from quipu.graph import Graph, from_graph6, to_graph6


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    rc = run_command(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return rc, out.getvalue(), err.getvalue()


def test_parse_spec_examples():
    assert parse_spec("H:10") == Hn(10)
    assert parse_spec(" P:4 ") == Path(4)
    g = parse_spec("Bw")
    assert isinstance(g, Graph) and g.n == 3 and g.num_edges == 3
    with pytest.raises(DSLError) as info:
        parse_spec("U(P:2,)")
    assert info.value.pos == 6


def test_charpoly_h10():
    rc, out, _ = run("charpoly", "H:10")
    assert rc == 0
    assert json.loads(out) == ["-1", "0", "13", "0", "-30", "0", "26", "0", "-9", "0", "1"]


def test_charpoly_engines_agree():
    assert run("charpoly", "CQ[g=7;0:2,3:1]")[1] == run("charpoly", "CQ[g=7;0:2,3:1]", "--engine", "berkowitz")[1]


def test_charpoly_json_flag():
    rc, out, _ = run("--json", "charpoly", "P:3")
    assert rc == 0 and json.loads(out) == {"coeffs": ["0", "-2", "0", "1"], "degree": 3}


def test_graph6_from_stdin():
    g6 = to_graph6(from_graph6("Bw"))
    rc, out, _ = run("charpoly", "-", stdin=g6 + "\n")
    assert rc == 0 and json.loads(out) == ["-2", "-3", "0", "1"]  # (x-2)(x+1)^2


def test_divides_quotient_and_refusal():
    rc, out, _ = run("divides", "P:5", "H:17")
    assert rc == 0
    assert out.strip() == "x^12 - 12*x^10 + 52*x^8 - 100*x^6 + 88*x^4 - 32*x^2 + 3"
    rc, out, _ = run("divides", "P:4", "H:17")
    assert rc == 0 and out.strip() == "NOT DIVISIBLE"
    rc, out, _ = run("--json", "divides", "P:4", "H:17")
    assert json.loads(out) == {"divides": False, "quotient": None}


def test_radius_interval_is_certified():
    rc, out, _ = run("--json", "radius", "P:3", "--width", "1/1000000")
    d = json.loads(out)
    lo, hi = Fraction(d["lower"]), Fraction(d["upper"])
    assert rc == 0 and hi - lo <= Fraction(1, 10**6)
    assert lo * lo < 2 <= hi * hi


def test_eig_reports_multiplicity():
    rc, out, _ = run("--json", "eig", "C:6", "2")
    d = json.loads(out)
    assert rc == 0 and d["multiplicity"] == 2
    assert Fraction(d.get("lower", d.get("exact"))) <= 1


def test_eig_rejects_bad_k():
    assert run("eig", "P:3", "4")[0] == 2


def test_mates_output():
    assert run("mates", "11")[1] == "no cospectral mates\n"
    assert run("mates", "10")[1] == "U(P:2,CQ[g=6;0:1,3:1])\n"
    assert run("mates", "9")[0] == 2


def test_catalog_listing():
    rc, out, _ = run("catalog", "4", "2")
    assert rc == 0
    assert len(out.strip().splitlines()) == 7


@pytest.mark.parametrize("argv", [("charpoly", "U(P:2,)"), ("frob",), ("radius", "H:9"), ("charpoly",)])
def test_usage_errors_exit_two(argv):
    rc, _, err = run(*argv)
    assert rc == 2


def test_bad_dsl_reports_position():
    _, _, err = run("charpoly", "U(P:2,)")
    assert "position 6" in err


def test_verify_named_suite_with_parameters():
    rc, out, _ = run("verify", "divi2", "--m-max", "25", "--n-max", "120")
    assert rc == 0 and out.startswith("PASS divi2")


def test_verify_rejects_foreign_parameters():
    assert run("verify", "divi4", "--h-max", "3")[0] == 2


def test_verify_json():
    rc, out, _ = run("--json", "verify", "main1")
    assert rc == 0 and json.loads(out)[0]["ok"] is True


@pytest.mark.slow
def test_verify_all_succeeds():
    rc, out, _ = run("--threads", "4", "verify", "all")
    assert rc == 0, out


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "quipu.cli", "charpoly", "P:2"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == ["-1", "0", "1"]
