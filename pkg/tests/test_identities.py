import json

import pytest

from hookexp import identities
from hookexp.identities import (
    REGISTRY,
    VerificationReport,
    budget_params,
    verify,
    verify_all,
)

ALL_IDS = [
    "main-identity", "theorem-2-1", "corollary-2-3", "corollary-2-4",
    "corollary-2-6", "rsk-square-sum", "pp-identity", "pentagonal-beta2",
    "tau-5core", "jacobi-beta4", "eta8-beta9", "gks-weight", "phi-v-theorem",
    "lemma-5-5", "lemma-5-6", "macdonald", "prop-6-1", "thm-6-2", "sebbm",
    "prop-6-4", "cor-6-7", "prop-6-8", "thm-6-9", "marked-hook", "prop-6-11",
    "prop-6-12", "kostant-poly", "kostant-sign", "cauchy-special", "thm-8-3",
    "magic", "euler-cor-8-4", "reversion", "cor-9-2",
]

# the closed form recorded for prop-6-12 is off by n(n-1)(n-2) n! from
# n = 3 on (both independent routes agree on the other value), so that one
# entry fails by design at any n >= 3
EXPECTED_FAILING = {"prop-6-12"}


def test_registry_is_complete():
    assert sorted(REGISTRY) == sorted(ALL_IDS)
    assert len(REGISTRY) == 34


def test_registry_entries_have_descriptions_and_defaults():
    for cid, entry in REGISTRY.items():
        assert entry.id == cid
        assert entry.description
        assert isinstance(entry.defaults, dict) and entry.defaults
        for key in entry.range_params:
            assert key in entry.defaults


def test_every_entry_passes_at_small_parameters():
    for cid, entry in REGISTRY.items():
        params = budget_params(entry, 6)
        if cid in EXPECTED_FAILING:
            params = dict(entry.minimal)
        report = verify(cid, params)
        assert report.status == "pass", (cid, report.first_mismatch)
        assert report.first_mismatch is None
        assert report.id == cid


def test_prop_6_12_fails_where_the_recorded_closed_form_is_wrong():
    report = verify("prop-6-12", {"n": 4})
    assert report.status == "fail"
    assert report.first_mismatch == {
        "location": "n=3", "lhs": "108", "rhs": "72"}
    # the enumeration side differs from the recorded polynomial by
    # exactly n(n-1)(n-2) * n! -- here 3*2*1*6 = 36
    assert int(report.first_mismatch["lhs"]) - \
        int(report.first_mismatch["rhs"]) == 36


def test_report_dict_shape():
    report = verify("pentagonal-beta2", {"N": 6})
    d = report.to_dict()
    assert list(d) == ["id", "params", "status", "checked_range",
                       "first_mismatch", "elapsed_ms"]
    assert d["id"] == "pentagonal-beta2"
    assert d["params"] == {"N": 6}
    assert d["status"] == "pass"
    assert d["first_mismatch"] is None
    assert isinstance(d["elapsed_ms"], float)
    parsed = json.loads(report.to_json())
    assert parsed["checked_range"] == d["checked_range"]


def test_report_tuples_become_json_lists():
    report = verify("macdonald", {"t": (3,), "N": 4})
    d = report.to_dict()
    assert d["params"] == {"t": [3], "N": 4}
    json.dumps(d)  # must be serializable as-is


def test_verify_rejects_unknown_id_and_param():
    with pytest.raises(ValueError):
        verify("not-a-check")
    with pytest.raises(ValueError):
        verify("main-identity", {"badparam": 3})


def test_verify_normalizes_scalar_t():
    report = verify("gks-weight", {"n": 6, "t": 3})
    assert report.params["t"] == (3,)
    assert report.status == "pass"


def test_reports_are_reproducible():
    a = verify("thm-6-2", {"N": 8}).to_dict()
    b = verify("thm-6-2", {"N": 8}).to_dict()
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_verify_all_minimal_budget_passes_everything():
    reports = verify_all(order_budget=0)
    assert len(reports) == len(REGISTRY)
    assert [r.id for r in reports] == sorted(REGISTRY)
    assert all(r.status == "pass" for r in reports)


def test_verify_all_budget_clamps_but_keeps_non_range_params():
    entry = REGISTRY["thm-6-2"]
    params = budget_params(entry, 5)
    assert params["N"] == 5
    assert params["alpha"] == (-1, 0, 1, 2)
    # budgets above the default never raise the default
    assert budget_params(entry, 10 ** 6)["N"] == entry.defaults["N"]
    # minimal floors are respected
    assert budget_params(REGISTRY["prop-6-12"], 0)["n"] == 2
    assert budget_params(REGISTRY["tau-5core"], 0)["N"] == 1


def test_verify_all_worker_count_does_not_change_results():
    serial = [r.to_dict() for r in verify_all(order_budget=4, workers=1)]
    parallel = [r.to_dict() for r in verify_all(order_budget=4, workers=3)]
    for d in serial + parallel:
        d.pop("elapsed_ms")
    assert serial == parallel


def test_injected_failure_is_reported_with_location(monkeypatch):
    # perturb one side of a check and make sure the harness notices and
    # pinpoints the smallest failing coefficient
    from fractions import Fraction
    import hookexp.series

    real = hookexp.series.pentagonal_series

    def skewed(order):
        ser = real(order)
        if order >= 5:
            ser.coeffs[5] += Fraction(1)
        return ser

    monkeypatch.setattr(identities, "pentagonal_series", skewed)
    report = verify("pentagonal-beta2", {"N": 8})
    assert report.status == "fail"
    assert report.first_mismatch is not None
    assert report.first_mismatch["location"] == "x^5"
    assert report.first_mismatch["lhs"] == "1"
    assert report.first_mismatch["rhs"] == "2"


def test_failing_status_and_mismatch_are_consistent():
    ok = verify("rsk-square-sum", {"n": 5})
    assert ok.status == "pass" and ok.first_mismatch is None
    bad = verify("prop-6-12", {"n": 3})
    assert bad.status == "fail" and bad.first_mismatch is not None


def test_kostant_polynomials_match_their_closed_forms():
    report = verify("kostant-poly", {"k": 4})
    assert report.status == "pass"
    # and the degree-3 polynomial vanishes at s = 8: checked through the
    # series route, which the registry compares against the partition route
    from hookexp.series import euler_power
    assert euler_power(8, 3)[3] == 0


def test_beta_sampled_checks_use_enough_points():
    # a degree-N polynomial identity needs N+1 samples; the sampled checks
    # use N+3 distinct rationals
    from hookexp.identities import _beta_samples
    for n in (0, 4, 12):
        samples = _beta_samples(n)
        assert len(samples) == n + 3
        assert len(set(samples)) == len(samples)
