import pytest

from multcoef import selftest
from multcoef.selftest import SUITES, SelfTestFailure, aft_small_partitions, kostka_weights, run_selftest
from multcoef.partitions import aft, partitions_list


def test_quick_level_passes():
    results = run_selftest("quick")
    assert [r.name for r in results] == list(SUITES)
    assert all(r.checked > 0 for r in results)


def test_aft_small_partitions_complete():
    for n in range(0, 16):
        want = sorted(p for p in partitions_list(n) if aft(p) <= 3)
        assert sorted(aft_small_partitions(n, 3)) == want


def test_kostka_weights():
    ws = list(kostka_weights(3))
    assert (1, 2) in ws and (0, 3) in ws and (3, 0, 0) in ws
    assert len(ws) == len(set(ws))


def test_failure_names_instance(monkeypatch):
    monkeypatch.setattr(selftest, "kronecker_jt", lambda *a: 99)
    with pytest.raises(SelfTestFailure) as exc:
        selftest.suite_kronecker("quick")
    assert exc.value.suite == "kronecker"
    assert exc.value.instance == ((2,), (2,), (2,))


def test_bad_level():
    with pytest.raises(ValueError):
        run_selftest("medium")
