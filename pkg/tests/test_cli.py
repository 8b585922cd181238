import io
import json
import subprocess
import sys

import pytest

from euclid_kernel.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_run_midpoint_from_corpus_path():
    code, out, _ = run("run", "corpus/midpoint.geo", "--args", "a=(0,0);b=(2,0)", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["defined"] and d["result"]["x"]["expr"] == "1" and d["result"]["y"]["expr"] == "0"


def test_run_perp_on_the_line_is_defined():
    code, out, _ = run("run", "perp", "--args", "x=(1/2,0);a=(0,0);b=(1,0)", "--json")
    assert code == 0 and json.loads(out)["defined"]


def test_text_output():
    code, out, _ = run("run", "midpoint", "--args", "a=(0,0);b=(2,0)")
    assert code == 0 and out.rstrip().endswith("result: (1, 0)")


def test_undefined_result_is_a_successful_run():
    code, out, _ = run("run", "squareroot", "--args", "G=(-1,0)", "--json")
    assert code == 0
    d = json.loads(out)
    assert not d["defined"] and d["result"]["origin"] == "I"


@pytest.mark.parametrize("argv", [
    ("run", "midpoint", "--args", "a=(0,0;b=(1,1)"),
    ("run", "midpoint", "--args", "a=0"),
    ("run", "midpoint", "--precision-cap", "8"),
    ("run", "midpoint", "--trunc-order", "-1"),
    ("run", "midpoint", "--field", "reals"),
    ("dehn", "--slope", "t +"),
    ("selftest", "--suite", "nonexistent"),
    ("frobnicate",),
])
def test_usage_errors_exit_2(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_contract_and_file_errors_exit_1(tmp_path):
    assert run("run", "no_such_script")[0] == 1
    assert run("run", "midpoint", "--args", "a=(0,0)")[0] == 1  # missing b
    bad = tmp_path / "bad.geo"
    bad.write_text("Foo(a){ return b; }")
    code, _, err = run("run", str(bad))
    assert code == 1 and "1:16: unbound identifier 'b'" in err


def test_json_output_is_deterministic():
    argv = ("run", "reciprocal", "--args", "a=(3,0)", "--json")
    assert run(*argv)[1] == run(*argv)[1]


def test_render_writes_svg(tmp_path):
    path = tmp_path / "perp.svg"
    code, _, _ = run("render", "perp", "--args", "x=(1/2,1);a=(0,0);b=(1,0)", "--svg", str(path))
    assert code == 0
    first = path.read_bytes()
    run("render", "perp", "--args", "x=(1/2,1);a=(0,0);b=(1,0)", "--svg", str(path))
    assert path.read_bytes() == first and first.startswith(b"<svg")


def test_run_can_also_write_svg(tmp_path):
    path = tmp_path / "m.svg"
    code, _, _ = run("run", "squareroot", "--args", "G=(-1,0)", "--svg", str(path))
    assert code == 0 and "undefined(no-intersection)" in path.read_text()


def test_dehn_report_four_parts():
    code, out, _ = run("dehn")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("(i) axiom report on puiseux-bounded")
    assert any("EF1  FAILS" in l and "witness: t + O(t^16)" in l for l in lines)
    assert "(ii) Euclid 5 on puiseux-bounded with slope t + O(t^16): undefined" in out
    assert "meet at (-t^-1 + O(t^14), 0 + O(t^15))" in out
    assert "(iii) Playfair: implication holds on all 64 instances of the family: yes" in out
    assert "(iv) constructible with slope (/ 1 1000): meets-with-betweenness at (-1000, 0)" in out


def test_dehn_json_and_options():
    d = json.loads(run("dehn", "--json")[1])
    assert [a["axiom"] for a in d["axioms"]["axioms"] if a["verdict"] == "fails"] == ["EF1"]
    assert d["euclid5"]["verdict"] == "undefined"
    assert d["constructible"]["euclid5"]["point"] == ["-1000", "0"]
    finite = json.loads(run("dehn", "--json", "--slope", "1")[1])
    assert finite["euclid5"]["verdict"] == "meets-with-betweenness"
    low = json.loads(run("dehn", "--json", "--trunc-order", "4")[1])
    assert low["euclid5"]["verdict"] == d["euclid5"]["verdict"]
    assert low["playfair"]["implication_holds"] == d["playfair"]["implication_holds"]


def test_check_axioms():
    code, out, _ = run("check-axioms", "--field", "puiseux-bounded", "--json")
    assert code == 0
    verdicts = {a["axiom"]: a["verdict"] for a in json.loads(out)["axioms"]}
    assert verdicts.pop("EF1") == "fails" and set(verdicts.values()) == {"holds"}
    code, out, _ = run("check-axioms")
    assert code == 0 and "FAILS" not in out


def test_checker_on_bundled_instances():
    code, out, _ = run("checker", "--json")
    assert code == 0
    by_name = {e["file"]: e for e in json.loads(out)}
    assert by_name["dehn_bounded.json"]["reports"][0]["verdict"] == "undefined"
    assert by_name["dehn_constructible.json"]["reports"][0]["point"] == ["-1000", "0"]
    code, out, _ = run("checker", "spp_other_side")
    assert code == 0 and "spp: meets at (1, 1)" in out


def test_selftest_subset_and_seed_env(monkeypatch):
    code, out, _ = run("selftest", "--suite", "orientation", "--suite", "dsl-corpus", "--seed", "5")
    assert code == 0 and "selftest seed 5" in out and out.count("PASS") == 2
    monkeypatch.setenv("EUCLID_KERNEL_SEED", "11")
    code, out, _ = run("selftest", "--suite", "field-identities", "--seed", "5", "--json")
    d = json.loads(out)
    assert code == 0 and d["seed"] == 11 and d["passed"]


def test_selftest_on_puiseux_is_qualified():
    code, out, _ = run("selftest", "--field", "puiseux", "--suite", "field-axioms", "--suite", "orientation")
    assert code == 0 and out.count("(up to truncation)") == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "euclid_kernel.cli", "run", "midpoint",
                           "--args", "a=(0,0);b=(2,0)"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "result: (1, 0)" in proc.stdout
