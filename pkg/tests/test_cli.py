import json
import subprocess
import sys

import pytest

from cmlab import suites
from cmlab.cli import main
from cmlab.suites import SUITES, SuiteConfig, expand


def run(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = main([*argv, "--json", str(out)])
    return code, json.loads(out.read_text()) if out.exists() else None


def test_registered_suites():
    assert set(SUITES) == {"lattice", "mutation", "belt", "finite-minors", "regular-minors", "homogeneous",
                           "c2-affine", "example-A2affine"}


def test_example_suite(tmp_path, capsys):
    code, records = run(tmp_path, "example-A2affine")
    assert code == 0
    assert isinstance(records, list) and len(records) == 1
    rec = records[0]
    assert set(rec) == {"id", "anchor", "status", "witness", "wall_time"}
    assert rec["status"] == "pass"
    assert "1/1 passed" in capsys.readouterr().out


def test_belt_rank2_kmax0(tmp_path):
    code, records = run(tmp_path, "belt", "--n", "2", "--kmax", "0")
    assert code == 0 and records and all(r["status"] == "pass" for r in records)


def test_unknown_suite_and_bad_config(tmp_path):
    assert main(["nope"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"B": [[0, 1], [1, 0]]}')
    assert main(["belt", "--config", str(bad)]) == 2
    bad.write_text('{"colour": 1}')
    assert main(["belt", "--config", str(bad)]) == 2
    bad.write_text('{"suite": "lattice"}')
    assert main(["belt", "--config", str(bad)]) == 2
    bad.write_text('{"cycle": "+++"}')
    assert main(["regular-minors", "--config", str(bad)]) == 2
    bad.write_text("not json")
    assert main(["belt", "--config", str(bad)]) == 2
    assert main(["lattice", "--n", "0"]) == 2
    assert main(["lattice", "--jobs", "0"]) == 2


def test_config_file(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"suite": "regular-minors", "cycle": "+-+", "bounds": {"depth": 4}}))
    code, records = run(tmp_path, "regular-minors", "--config", str(cfg))
    assert code == 0
    assert [r["id"] for r in records] == ["regular/3/+-+"]


def test_parallel_reports_match(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["homogeneous", "--n", "4", "--json", str(a)]) == 0
    assert main(["homogeneous", "--n", "4", "--jobs", "3", "--json", str(b)]) == 0
    strip = lambda p: [{k: v for k, v in r.items() if k != "wall_time"} for r in json.loads(p.read_text())]  # noqa
    assert strip(a) == strip(b)


def test_failure_witness_replays(tmp_path, monkeypatch):
    real = suites.check_engine_invariants

    def broken(B, path):
        rep = real(B, path)
        if len(path) > 3:
            return {"ok": False, "failure": {"check": "injected"}}
        return rep

    monkeypatch.setattr(suites, "check_engine_invariants", broken)
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"bounds": {"paths": 10, "seed": 5}}))
    code, records = run(tmp_path, "mutation", "--config", str(cfg))
    assert code == 1
    failed = [r for r in records if r["status"] == "fail"]
    assert failed
    witness = dict(failed[0]["witness"])
    assert witness.pop("detail") == {"counterexample": {"check": "injected"}}
    replay = tmp_path / "replay.json"
    replay.write_text(json.dumps(witness))
    code, again = run(tmp_path, "mutation", "--config", str(replay))
    assert code == 1 and len(again) == 1
    assert again[0]["witness"]["path"] == witness["path"]


def test_crash_is_reported_as_failure(tmp_path, monkeypatch):
    def boom():
        raise RuntimeError("boom")

    monkeypatch.setitem(suites.CHECKS, "run_example", boom)
    code, records = run(tmp_path, "example-A2affine")
    assert code == 1 and "boom" in records[0]["witness"]["detail"]["error"]


def test_ids_are_unique_and_sorted():
    for name in SUITES:
        checks = expand(SuiteConfig(name, paths=5, random_matrices=3))
        ids = [c.id for c in checks]
        assert len(ids) == len(set(ids)) and ids


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "cmlab.cli", "c2-affine"], capture_output=True, text=True)
    assert out.returncode == 0 and "c2-affine: 1/1 passed" in out.stdout


@pytest.mark.parametrize("suite", ["lattice", "c2-affine", "example-A2affine"])
def test_quick_suites_pass(suite, tmp_path):
    assert main([suite]) == 0
