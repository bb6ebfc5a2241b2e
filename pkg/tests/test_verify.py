import pytest

from stalg.verify import DEFAULT_SEED, SUITE_NAMES, run_suite


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_each_suite_passes_exact(suite):
    report = run_suite(suite, mode="exact")
    assert report.failures == 0
    assert report.checks, suite


def test_all_suite_aggregates():
    report = run_suite("all", mode="exact")
    assert report.failures == 0
    total = sum(len(run_suite(s, mode="exact").checks) for s in SUITE_NAMES)
    assert len(report.checks) == total


def test_all_suite_passes_float():
    report = run_suite("all", mode="float")
    assert report.failures == 0


def test_report_json_shape():
    report = run_suite("core", mode="exact", seed=5)
    data = report.to_json_dict()
    assert data["suite"] == "core"
    assert data["mode"] == "exact"
    assert data["seed"] == 5
    assert data["counts"]["total"] == data["counts"]["pass"] + data["counts"]["fail"]
    for check in data["checks"]:
        assert set(check) >= {"id", "description", "status"}
        assert check["status"] in ("pass", "fail")


def test_reports_are_deterministic_per_seed():
    a = run_suite("splits", seed=DEFAULT_SEED).to_json_dict()
    b = run_suite("splits", seed=DEFAULT_SEED).to_json_dict()
    assert a == b


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("nosuch")
