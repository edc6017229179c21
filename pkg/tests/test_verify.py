import json

from monoclif import verify
from monoclif.cli import main
from monoclif.polynomial import constant


def _strip(report):
    for c in report["cases"]:
        c.pop("elapsed_ms")
    return report


def test_every_acceptance_criterion_registered():
    assert set(verify.ACCEPTANCE) <= set(verify.CRITERIA)
    for key in verify.CRITERIA:
        assert verify.CRITERIA[key].suite in verify.SUITES


def test_settings_restrict_dims_and_degree():
    cfg = verify.Settings(dims=(3,), max_degree=2)
    assert cfg.pick_dims((2, 3)) == [3]
    assert cfg.cap(5) == 2 and verify.Settings().cap(5) == 5


def test_parallel_matches_serial():
    cfg = verify.Settings(seed=3, dims=(2,), max_degree=2)
    serial = verify.run_suite("hermite", cfg, jobs=1)
    parallel = verify.run_suite("hermite", cfg, jobs=2)
    assert _strip(serial) == _strip(parallel)
    assert serial["ok"]


def test_seed_changes_random_cases():
    a = verify.run_suite("core", verify.Settings(seed=0, dims=(2,)), full=True)
    b = verify.run_suite("core", verify.Settings(seed=1, dims=(2,)), full=True)
    assert a["ok"] and b["ok"]
    assert _strip(a)["cases"] != _strip(b)["cases"]


def test_failing_identity_exits_one(monkeypatch, capsys):
    def broken(cfg):
        yield "broken", {"m": 2}, lambda: (constant(2, 1), constant(2, 2))

    crit = verify.Criterion("broken", "core", "deliberately unequal", broken)
    monkeypatch.setitem(verify.CRITERIA, "broken", crit)
    code = main(["verify", "--suite", "core", "--m", "2"])
    report = json.loads(capsys.readouterr().out)
    assert code == 1 and not report["ok"]
    bad = [c for c in report["cases"] if not c["equal"]]
    assert [c["name"] for c in bad] == ["broken"]
    assert "lhs" in bad[0] and "rhs" in bad[0]
    assert report["summary"]["criteria"]["broken"]["ok"] is False
