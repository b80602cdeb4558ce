import json
import subprocess
import sys

import pytest

from fkdual import cache
from fkdual.cli import main
from fkdual.ncpoly import MonomialOrder
from fkdual.quadratic import fk_dual
from fkdual.rewrite import complete
from fkdual.suites import SUITES


@pytest.fixture(autouse=True)
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hilbert_examples(capsys):
    code, out, _ = run(capsys, "hilbert", "--algebra", "e-dual", "--n", "3", "--degree", "8")
    assert code == 0 and out.strip() == "1 3 5 6 6 6 6 6 6"
    code, out, _ = run(capsys, "hilbert", "--algebra", "dn", "--n", "3", "--degree", "6", "--closed-form")
    assert code == 0 and out.strip() == "1 3 4 4 4 4 4"
    code, out, _ = run(capsys, "hilbert", "--algebra", "e-dual-at-1", "--n", "3")
    assert code == 0 and out.strip() == "total dimension 6 (terminated)"


def test_hilbert_options(capsys):
    code, out, _ = run(capsys, "hilbert", "--algebra", "dn", "--n", "3", "--degree", "3", "--closed-form",
                       "--substitute", "t2")
    assert out.strip() == "1 0 3 0 4 0 4"
    code, out, _ = run(capsys, "hilbert", "--algebra", "e-dual", "--n", "3", "--degree", "10", "--gk")
    assert code == 0 and "GK ~ 1" in out
    code, out, _ = run(capsys, "hilbert", "--algebra", "e-dual", "--n", "3", "--degree", "4", "--gk")
    assert code == 3 and "inconclusive" in out
    code, out, _ = run(capsys, "hilbert", "--algebra", "e-dual", "--n", "3", "--degree", "3", "--csv")
    assert out.splitlines() == ["degree,dimension", "0,1", "1,3", "2,5", "3,6"]
    code, out, _ = run(capsys, "hilbert", "--algebra", "e-dual", "--n", "3", "--degree", "3", "--json")
    assert json.loads(out)["series"] == [1, 3, 5, 6]
    code, out, _ = run(capsys, "hilbert", "--algebra", "e-dual", "--n", "3", "--degree", "2", "--format", "table")
    assert out.splitlines()[2].split() == ["2", "5"]


def test_usage_errors(capsys):
    code, _, err = run(capsys, "gb", "--algebra", "e", "--n", "1")
    assert code == 2 and "n must be >= 2" in err
    assert run(capsys, "gb")[0] == 2
    assert run(capsys, "verify", "no-such-suite")[0] == 2
    assert run(capsys, "hilbert", "--algebra", "e", "--n", "3", "--closed-form")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "gb", "--file", "/nonexistent/file.pres")[0] == 2


def test_gb_from_file(capsys, tmp_path):
    f = tmp_path / "my.pres"
    f.write_text("name: demo\ngens: a b\nrels:\n  b*a - a*b\n")
    code, out, _ = run(capsys, "gb", "--file", str(f), "--degree", "6")
    assert code == 0
    assert out.splitlines()[0] == "demo: 1 rules, terminated"
    assert "b*a -> a*b" in out
    code, out, _ = run(capsys, "gb", "--file", str(f), "--order", "b<a", "--degree", "6")
    assert "a*b -> b*a" in out


def test_gb_parse_error_exit_code(capsys, tmp_path):
    f = tmp_path / "bad.pres"
    f.write_text("gens: a\nrels: a*q\n")
    code, _, err = run(capsys, "gb", "--file", str(f))
    assert code == 2 and "line 2" in err


def test_inconsistent_exit_code(capsys, tmp_path):
    f = tmp_path / "zero.pres"
    f.write_text("gens: a\nrels: a - 1; a\n")
    assert run(capsys, "gb", "--file", str(f))[0] == 1


def test_gb_json_and_csv(capsys):
    code, out, _ = run(capsys, "gb", "--algebra", "e-dual", "--n", "3", "--degree", "4", "--json")
    doc = json.loads(out)
    assert doc["algebra"] == "E_dual_3" and "y13*y12 -> -y12*y23" in doc["rules"]
    code, out, _ = run(capsys, "gb", "--algebra", "e-dual", "--n", "3", "--degree", "4", "--csv")
    assert out.splitlines()[0] == "lhs,rhs"


def test_cache_round_trip(capsys, cache_dir):
    argv = ["gb", "--algebra", "e-dual", "--n", "4", "--degree", "5"]
    first = run(capsys, *argv)[1]
    files = list(cache_dir.glob("*.json"))
    assert len(files) == 1
    doc = json.loads(files[0].read_text())
    assert doc["format"] == cache.CACHE_FORMAT and doc["format_version"] == cache.CACHE_VERSION
    assert run(capsys, *argv)[1] == first
    # a tampered file fails its hash and is recomputed
    doc["rules"] = doc["rules"][:-1]
    files[0].write_text(json.dumps(doc))
    assert run(capsys, *argv)[1] == first


def test_cache_matches_fresh_completion(cache_dir):
    pres = fk_dual(4)
    order = MonomialOrder(pres.gens)
    sys_ = complete(pres, order, 5)
    key = cache.cache_key(pres.digest(), order, 5)
    cache.save(sys_, key)
    back = cache.load(key, order)
    assert back.rule_table() == sys_.rule_table()
    assert (back.terminated, back.complete_to) == (sys_.terminated, sys_.complete_to)
    assert cache.load("0" * 64, order) is None


def test_no_cache_flag(capsys, cache_dir):
    run(capsys, "gb", "--algebra", "e-dual", "--n", "3", "--degree", "4", "--no-cache")
    assert not list(cache_dir.glob("*.json"))


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "list")
    assert code == 0
    assert [l.split()[0] for l in out.splitlines()] == list(SUITES)


def test_verify_json_is_deterministic(capsys):
    a = run(capsys, "verify", "auxiliary-series", "--json")
    b = run(capsys, "verify", "auxiliary-series", "--json")
    assert a[0] == 0 and a[1] == b[1]
    doc = json.loads(a[1])
    assert doc["status"] == "pass" and "wall_time" not in json.dumps(doc)


def test_verify_text_and_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "central-squares", "--n", "4")
    assert code == 0 and "PASS" in out.upper()


def test_verify_inconclusive_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "growth-and-zero-divisors", "--n", "4", "--degree", "6")
    assert code == 3


def test_ext_command(capsys):
    code, out, _ = run(capsys, "ext", "--algebra", "e", "--n", "3", "--I", "4", "--J", "6", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["dims"][3][5] == 1 and doc["p_koszul"]["p"] == 5
    code, _, err = run(capsys, "ext", "--algebra", "e", "--n", "3", "--I", "4", "--J", "6", "--max-columns", "10")
    assert code == 1 and "limit" in err


def test_dual_command(capsys):
    code, out, _ = run(capsys, "dual", "--algebra", "e", "--n", "3")
    assert code == 0 and out.startswith("name: E_3_dual;")


def test_partitions_command(capsys):
    code, out, _ = run(capsys, "partitions", "--n", "4")
    assert code == 0 and len(out.splitlines()) == 16
    assert run(capsys, "partitions", "--n", "13")[0] == 2


def test_module_entry_point(cache_dir):
    res = subprocess.run([sys.executable, "-m", "fkdual", "hilbert", "--algebra", "b", "--degree", "4", "-v"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "1 2 4 6 9"
