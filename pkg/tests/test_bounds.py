import math

import numpy as np
import pytest

from magcurv.bounds import (alpha_bound_check, cheeger_bound_check,
                            eigenvalue_lower_bound, harnack_check,
                            verify_report)
from magcurv.curvature import kappa_max
from magcurv.errors import PreconditionError
from magcurv.graphs import from_edge_list, signature_status
from magcurv.operators import energy, spectrum


def test_harnack_b3_plain(b3):
    records = harnack_check(b3, 2.0, "auto", "plain")
    assert len(records) == 2  # the two lambda = 3/2 eigenpairs
    assert all(abs(r.lam - 1.5) <= 1e-12 for r in records)
    assert all(r.passed for r in records)


def test_harnack_t3_magnetic(t3):
    records = harnack_check(t3, 2.0, "auto", "magnetic")
    assert len(records) == 3
    np.testing.assert_allclose(sorted(r.lam for r in records), [0.5, 0.5, 2.0],
                               atol=1e-12)
    assert all(r.passed for r in records)


def test_harnack_requires_connected():
    g = from_edge_list(4, 2, [(0, 1, 1.0, 1), (2, 3, 1.0, 1)])
    with pytest.raises(PreconditionError):
        harnack_check(g, 2.0, "auto", "magnetic")


def test_harnack_scaling_invariance(t3):
    """Both sides of the raw inequality are quadratic in f: scaling f by 10
    scales the slack by 100 and never flips the verdict."""
    spec = spectrum(t3, "magnetic")
    kap = kappa_max(t3, 2.0, "magnetic").kappa_max
    f = spec.eigenvectors[:, 2]
    lam = spec.eigenvalues[2]
    for scale in (1.0, 10.0):
        fs = scale * f
        lhs = float(energy(t3, fs, "magnetic").max())
        rhs = ((8.0 - 1.0) * lam - 4.0 * kap) * float(np.abs(fs).max()) ** 2
        if scale == 1.0:
            base_slack = rhs - lhs
            base_ok = lhs <= rhs
        else:
            assert abs((rhs - lhs) - 100.0 * base_slack) <= 1e-9 * max(1.0, abs(rhs))
            assert (lhs <= rhs) == base_ok


def test_harnack_rhs_nonnegative_when_active(small_corpus):
    for g in small_corpus[:10]:
        records = harnack_check(g, 2.0, "auto", "magnetic")
        for r in records:
            if r.lhs > 1e-12:
                assert r.rhs >= -1e-9


def test_alpha_reduction_matches_harnack(t3, b3):
    for g, kind in ((t3, "magnetic"), (b3, "plain")):
        kap = kappa_max(g, 2.0, kind).kappa_max
        for hrec in harnack_check(g, 2.0, kap, kind):
            alpha = 4.0 - 2.0 * kap / hrec.lam
            arecs = alpha_bound_check(g, 2.0, kap, alpha, kind)
            arec = next(r for r in arecs if r.eigen_index == hrec.eigen_index)
            assert arec.applicable and not arec.ill_conditioned
            assert abs(arec.rhs - hrec.rhs) <= 1e-12 * max(1.0, abs(hrec.rhs))


def test_alpha_grid_b3(b3):
    kap = kappa_max(b3, 2.0, "plain").kappa_max
    for alpha in (3.0, 4.0, 5.0, 6.0):
        for rec in alpha_bound_check(b3, 2.0, kap, alpha, "plain"):
            assert rec.applicable
            assert rec.passed


def test_alpha_boundary_is_ill_conditioned(b3):
    kap = kappa_max(b3, 2.0, "plain").kappa_max
    lam = 1.5
    alpha = 2.0 - 2.0 * kap / lam + 1e-9
    recs = alpha_bound_check(b3, 2.0, kap, alpha, "plain")
    assert all(r.ill_conditioned for r in recs if abs(r.lam - lam) < 1e-9)


def test_alpha_below_threshold_reported_not_raised(t3):
    recs = alpha_bound_check(t3, 2.0, 0.0, -5.0, "magnetic")
    assert all(not r.applicable for r in recs)


def test_eigenvalue_bound_c4sigma(c4sigma):
    rec = eigenvalue_lower_bound(c4sigma, 2.0)
    closed_form = 1.0 - math.cos(math.pi / 4.0)
    assert abs(rec.lambda_min - closed_form) <= 1e-9
    assert rec.passed and rec.passed_lift
    assert rec.lambda_min >= rec.bound - 1e-12
    assert rec.lambda_min >= rec.lift_bound - 1e-12


def test_eigenvalue_bound_t3_quantities(t3):
    rec = eigenvalue_lower_bound(t3, 2.0)
    assert (rec.diameter, rec.girth, rec.max_degree) == (1, 3, 2.0)
    assert rec.lift_diameter == 3
    assert abs(rec.lambda_min - 0.5) <= 1e-12
    assert rec.passed and rec.passed_lift
    # hand recomputation of the bound with L = 2*1 + 2*3 = 8
    kap = rec.kappa
    want = (1.0 + 4.0 * kap * 2.0 * 64.0) / (2.0 * 7.0 * 64.0)
    assert abs(rec.bound - want) <= 1e-15


def test_eigenvalue_bound_hypothesis_gates(b3):
    with pytest.raises(PreconditionError) as err:
        eigenvalue_lower_bound(b3, 2.0)
    assert err.value.hypothesis == "unbalanced"
    g = from_edge_list(4, 2, [(0, 1, 1.0, 1), (2, 3, 1.0, 1)])
    with pytest.raises(PreconditionError) as err:
        eigenvalue_lower_bound(g, 2.0)
    assert err.value.hypothesis == "connected"


def test_lift_bound_dominates_path_bound(small_corpus):
    # the bound is decreasing in the squared length and the lift diameter
    # never exceeds 2D + ell * girth, so the lift form is at least as tight
    for g in small_corpus:
        status = signature_status(g)
        if status.balanced or not status.entire:
            continue
        try:
            rec = eigenvalue_lower_bound(g, 2.0)
        except PreconditionError:
            continue
        assert rec.lift_bound >= rec.bound - 1e-15


def test_eigenvalue_bound_vacuous_flag(t3):
    # a hugely negative kappa makes the bound nonpositive: trivially true,
    # reported with the vacuous flag rather than suppressed
    rec = eigenvalue_lower_bound(t3, 2.0, kappa=-100.0)
    assert rec.bound <= 0.0
    assert rec.vacuous and rec.vacuous_lift
    assert rec.passed and rec.passed_lift


def test_cheeger_bound_t3(t3):
    rec = cheeger_bound_check(t3, 2.0)
    assert abs(rec.lambda_min - 0.5) <= 1e-12
    assert abs(rec.h1 - 1.0 / 3.0) <= 1e-12
    assert abs(rec.lower - 0.25) <= 1e-12
    assert abs(rec.upper - 2.0 * math.sqrt(2.0)) <= 1e-12
    assert rec.lower_passed and rec.upper_passed
    assert rec.curvature_lower is not None and rec.curvature_lower_passed


def test_cheeger_bound_c4sigma(c4sigma):
    rec = cheeger_bound_check(c4sigma, 2.0)
    assert rec.lower_passed and rec.upper_passed
    assert rec.curvature_lower_passed


def test_cheeger_bound_balanced_degenerates(b3):
    rec = cheeger_bound_check(b3, 2.0)
    assert abs(rec.lambda_min) <= 1e-9
    assert rec.h1 == 0.0
    assert rec.lower_passed and rec.upper_passed
    assert rec.curvature_lower is None  # hypotheses not met


def test_verify_report_t3(t3):
    report = verify_report(t3, 2.0)
    assert report.all_passed
    assert report.eigenvalue is not None
    assert report.cheeger is not None
    md = report.to_markdown()
    assert "harnack" in md and "all pass" in md
    payload = report.to_json_dict()
    assert payload["all_passed"] is True
    assert payload["hypotheses"] == {"connected": True, "balanced": False,
                                     "entire": True, "girth_finite": True}


def test_verify_report_balanced_skips_eigen_bound(b3):
    report = verify_report(b3, 2.0)
    assert report.eigenvalue is None
    assert "unbalanced" in report.eigenvalue_skipped
    assert report.cheeger is not None
    assert report.all_passed


def test_verify_report_fails_at_uncertified_kappa(t3):
    report = verify_report(t3, 2.0, kappa=10.0)
    assert not report.all_passed
