from fractions import Fraction

import pytest

from rampoly import family as fam
from rampoly import polyring as pr
from rampoly import theorems as th
from rampoly.numtheory import totient
from rampoly.polyring import IntPoly
from rampoly.theorems import CLAIMS, CheckResult, Status, SuiteConfig, run_suite


def statuses(results):
    return {(r.claim, r.params): r.status for r in results}


def only(results, claim):
    picked = [r for r in results if r.claim == claim]
    assert picked, claim
    return picked


def all_pass(results, claim):
    return all(r.status is Status.PASS for r in only(results, claim))


def test_derivative_identity_examples():
    for n in (1, 4, 12, 30, 97):
        (res,) = th.check_derivative_identity(n)
        assert res.passed
    assert fam.p_poly(4) == IntPoly([0, -2, 0, 2])


@pytest.mark.parametrize("n, x0", [(2, Fraction(1, 2)), (6, Fraction(1, 2)), (3, Fraction(-1, 2))])
def test_log_series_examples(n, x0):
    (res,) = th.check_log_series(n, x0, 200, 1e-9)
    assert res.passed
    assert dict(res.params) == {"x0": str(x0), "terms": 200}


def test_log_series_gating_and_errors():
    assert th.check_log_series(1)[0].status is Status.NA
    with pytest.raises(ValueError):
        th.check_log_series(5, Fraction(1))
    with pytest.raises(ValueError):
        th.check_log_series(5, Fraction(-3, 2))
    with pytest.raises(ValueError):
        th.check_log_series(5, Fraction(1, 2), terms=0)


def test_log_series_allowance_covers_short_series():
    # one term at x0 = 9/10 is far off, but the tail bound is honest about it
    (res,) = th.check_log_series(6, Fraction(9, 10), terms=1, tol=1e-12)
    assert res.passed


def test_log_series_failure_has_witness(monkeypatch):
    monkeypatch.setattr(fam, "phi_poly", lambda n: IntPoly([2, 1]))
    (res,) = th.check_log_series(2, Fraction(1, 2))
    assert res.status is Status.FAIL
    assert res.witness["exact"] == 2.5 and abs(res.witness["series"] - 1.5) < 1e-9


def test_r_representation_examples():
    for n in (1, 10, 36):
        assert th.check_r_representation(n)[0].passed


def test_structure_examples():
    res = th.check_structure(18)
    assert all(r.passed for r in res)
    assert fam.r_poly(18).nonzero_count() == 6 and fam.r_poly(18).degree == 15
    assert sum(1 for c in fam.r_poly(15) if abs(c) == 1) == 8
    assert all(r.passed for r in th.check_structure(1))


def test_special_values_r_examples():
    s = statuses(th.check_special_values_r(2))
    assert s[("Thm4.R2", ())] is Status.PASS
    assert s[("Thm4.i", ())] is Status.NA and s[("Thm4.ii", ())] is Status.NA
    s = statuses(th.check_special_values_r(9))
    assert s[("Thm4.i", ())] is Status.PASS
    assert pr.eval_int(fam.r_poly(9), -1) == 6
    assert pr.divides(fam.phi_poly(6), fam.r_poly(6) - 6)
    assert all(r.status is not Status.FAIL for r in th.check_special_values_r(6))


def test_recurrences_r_examples():
    res = th.check_recurrences_r(3, primes=(2, 5))
    assert all_pass(res, "Thm6.i")
    assert fam.r_poly(6) == pr.binomial(3) * pr.negate_var(fam.r_poly(3))
    s = statuses(res)
    assert s[("Thm5.iii", (("p", 5),))] is Status.PASS
    assert pr.divides(pr.binomial(5), fam.r_poly(15))
    res = th.check_recurrences_r(2, primes=(2,))
    assert statuses(res)[("Thm5.ii-a", (("p", 2),))] is Status.PASS
    assert fam.r_poly(4) == pr.scale(2, pr.compose_power(fam.r_poly(2), 2))
    assert statuses(res)[("Thm6.i", ())] is Status.NA


def test_divisibility_examples():
    r18, r30 = fam.r_poly(18), fam.r_poly(30)
    assert pr.divides(pr.binomial(9) * pr.binomial(3, sign=1), r18)
    assert pr.divides(pr.binomial(15) * pr.binomial(3, sign=1), r30)
    assert pr.divides(pr.binomial(4), fam.r_poly(8))
    for n in (18, 30, 8):
        res = th.check_divisibility_r(n)
        assert not any(r.status is Status.FAIL for r in res)
    s = statuses(th.check_divisibility_r(18))
    assert s[("Thm7.ii", ())] is Status.PASS and s[("Thm7.i", ())] is Status.NA
    s = statuses(th.check_divisibility_r(30))
    assert s[("Thm7.iv", (("p", 3),))] is Status.PASS
    assert s[("Thm7.iv", (("p", 5),))] is Status.PASS
    s = statuses(th.check_divisibility_r(8))
    assert s[("Thm7.i", (("p", 2),))] is Status.PASS


def test_divisibility_witness_on_false_claim():
    res = th._divides("Thm7.i", 7, pr.binomial(1, sign=1), fam.r_poly(7), p=7)
    assert res.status is Status.FAIL
    assert res.witness["remainder"] == IntPoly([pr.eval_int(fam.r_poly(7), -1)])


def test_holder_representation_examples():
    for n in (1, 6, 20):
        assert all(r.passed for r in th.check_holder_representation(n))


def test_t_formula_examples():
    assert fam.t_poly(4) == IntPoly([2, 0, 2])
    res = th.check_t_formula(15)
    assert all(r.passed for r in res)
    assert dict(only(res, "Thm11.pq")[0].params) == {"p": 3, "q": 5}
    assert th.check_t_formula(49)[0].passed
    assert th.check_t_formula(49)[1].status is Status.NA


def test_special_values_t_examples():
    assert pr.eval_int(fam.t_poly(6), -1) == 0
    assert pr.eval_int(fam.t_poly(12), -1) == 16
    assert th._t_root_value(9) == 3
    assert th._t_root_value(12) == 0
    assert pr.divides(fam.phi_poly(9), fam.t_poly(9) - 3)
    for n in (6, 9, 12):
        assert not any(r.status is Status.FAIL for r in th.check_special_values_t(n))


def test_recurrences_t_examples():
    res = th.check_recurrences_t(3, primes=(2,))
    assert all_pass(res, "Thm14.i")
    assert fam.t_poly(6) == pr.binomial(3, sign=1) * fam.t_poly(3)
    res = th.check_recurrences_t(4, primes=(2, 3))
    assert all_pass(res, "Thm14.iii")
    assert pr.divides(pr.binomial(2, sign=1), fam.t_poly(4))
    res = th.check_recurrences_t(5, primes=(3,))
    assert statuses(res)[("Thm13.ii-b", (("p", 3),))] is Status.PASS
    t5 = fam.t_poly(5)
    assert fam.t_poly(15) == pr.compose_power(t5, 3) + pr.geometric(5, 15) * t5


@pytest.mark.parametrize("n, p", [(3, 5), (5, 3), (4, 3), (7, 2)])
def test_t_recurrence_needs_no_totient_factor(n, p):
    # the same recurrence with an extra phi(n) on the lifted term is false
    t = fam.t_poly(n)
    lifted = pr.compose_power(t, p)
    tail = pr.geometric(n, n * p) * t
    assert fam.t_poly(n * p) == pr.scale(p - 2, lifted) + tail
    if totient(n) != 1 and p != 2:
        assert fam.t_poly(n * p) != pr.scale((p - 2) * totient(n), lifted) + tail


def test_psi_examples():
    assert all(r.passed for r in th.check_psi(1) if r.status is not Status.NA)
    assert pr.eval_int(fam.psi_poly(1), -1) == -1
    assert pr.eval_int(fam.psi_poly(4), -1) == -2
    assert pr.eval_int(fam.psi_poly(9), -1) == 0
    for n in (1, 4, 9):
        assert not any(r.status is Status.FAIL for r in th.check_psi(n))
    assert statuses(th.check_psi(1))[("Rem1.plain", ())] is Status.NA


def test_v_examples():
    assert pr.eval_int(fam.v_poly(1), 1) == 1
    assert pr.eval_int(fam.v_poly(6), 1) == 12
    assert pr.eval_int(fam.v_poly(10), 0) == 16
    for n in (1, 6, 10):
        assert all(r.passed for r in th.check_v(n))


def test_check_result_invariants():
    with pytest.raises(ValueError):
        CheckResult("Thm99", 1, Status.PASS)
    with pytest.raises(ValueError):
        CheckResult("Thm2", 1, Status.FAIL)
    assert CheckResult("Thm2", 1, Status.FAIL, witness={"lhs": 1}).passed is False


def test_select_claims():
    assert th.select_claims(["Thm7"]) == {"Thm7.i", "Thm7.ii", "Thm7.iii", "Thm7.iv"}
    assert th.select_claims(["Thm1"]) == {"Thm1.i", "Thm1.ii"}
    assert th.select_claims(["Thm5.ii"]) == {"Thm5.ii-a", "Thm5.ii-b"}
    assert th.select_claims(["Thm8", "Rem2"]) == {"Thm8", "Rem2.at0", "Rem2.at1"}
    assert th.select_claims(None) == set(CLAIMS)
    with pytest.raises(ValueError):
        th.select_claims(["Thm15"])


def test_suite_small_range_all_pass():
    report = run_suite(1, 20)
    assert report.ok
    assert set(report.summary) == set(CLAIMS)
    # the smallest index with the Thm7.iv shape is 30
    assert [c for c, v in report.summary.items() if not v["pass"]] == ["Thm7.iv"]
    assert sum(sum(c.values()) for c in report.summary.values()) == len(report.results)


def test_suite_degenerate_index():
    report = run_suite(1, 1)
    assert report.ok
    na = {r.claim for r in report.results if r.status is Status.NA}
    assert {"Thm1.ii", "Thm4.R2", "Thm4.ii", "Rem1.plain", "Thm8"} <= na


def test_suite_single_branch_filters():
    report = run_suite(2, 2, {"Thm4"})
    applicable = [r for r in report.results if r.status is not Status.NA]
    assert {r.claim for r in report.results} <= th.select_claims(["Thm4"])
    r2 = only(report.results, "Thm4.R2")
    assert len(r2) == 1 and r2[0].passed
    assert all(r.passed for r in applicable)
    report = run_suite(2, 2, {"Thm4.R2"})
    assert len(report.results) == 1 and report.results[0].passed


def test_suite_ordering_and_determinism():
    a = run_suite(1, 40, ["Thm5", "Thm7", "Thm13"])
    b = run_suite(1, 40, ["Thm13", "Thm7", "Thm5"])
    assert a.results == b.results
    keys = [r.sort_key() for r in a.results]
    assert keys == sorted(keys)


def test_suite_parallel_matches_serial():
    serial = run_suite(1, 60)
    parallel = run_suite(1, 60, jobs=3)
    assert serial.results == parallel.results


def test_suite_rejects_bad_range():
    with pytest.raises(ValueError):
        run_suite(0, 3)
    with pytest.raises(ValueError):
        run_suite(5, 4)


def test_suite_records_failures_as_data(monkeypatch):
    real = fam.r_via_holder

    def skewed(n):
        out = real(n)
        return out + 1 if n == 12 else out

    monkeypatch.setattr(fam, "r_via_holder", skewed)
    report = run_suite(10, 14, ["Thm9"])
    assert not report.ok
    (bad,) = report.failures
    assert bad.claim == "Thm9" and bad.n == 12
    assert bad.witness["rhs"] - bad.witness["lhs"] == IntPoly([1])
    assert report.summary["Thm9"] == {"pass": 4, "fail": 1, "na": 0}


def test_suite_config_primes():
    cfg = SuiteConfig(primes=(2,), max_doubling=1)
    report = run_suite(3, 3, ["Thm5.ii-b", "Thm6.ii"], cfg)
    assert [(r.claim, r.params) for r in report.results] == [
        ("Thm5.ii-b", (("p", 2),)),
        ("Thm6.ii", (("k", 1),)),
    ]
