import math

import pytest

from k3calc.admissible import fixed_fiber_count
from k3calc.bounds import (
    HEURISTIC_C,
    OMEGA_GENUS_LB,
    BoundReport,
    appendix_conjectural_bound,
    asymptotic_fit,
    polarization_genus,
    severi_lower_bound,
)
from k3calc.chow import closed_form_genus_44, quintic_44


def test_polarization_genus():
    assert polarization_genus(2) == 2
    assert polarization_genus(40) == 21
    for g in range(2, 101):
        assert polarization_genus(2 * g - 2) == g


@pytest.mark.parametrize("bad", [0, -2, 3, 7])
def test_polarization_genus_rejects(bad):
    with pytest.raises(ValueError):
        polarization_genus(bad)


@pytest.mark.parametrize("g, bl, bound", [(3, 1, 8), (5, 48, 384), (7, 1224, 9792)])
def test_severi_lower_bound(g, bl, bound):
    rep = severi_lower_bound(g)
    assert (rep.g, rep.r, rep.bl_count, rep.omega_genus_lb, rep.severi_genus_lb) == (
        g, (g - 1) // 2, bl, OMEGA_GENUS_LB, bound)


def test_even_genus_message():
    with pytest.raises(ValueError, match="odd genus"):
        severi_lower_bound(4)


def test_small_genus_rejected():
    with pytest.raises(ValueError):
        severi_lower_bound(1)


def test_report_json():
    assert severi_lower_bound(5).to_dict() == {
        "g": 5, "r": 2, "bl_count": "48", "omega_genus_lb": 9, "severi_genus_lb": "384",
    }


def test_report_invariant_enforced():
    with pytest.raises(ValueError):
        BoundReport(g=5, r=2, bl_count=48, omega_genus_lb=9, severi_genus_lb=385)


def test_strictly_increasing():
    vals = [severi_lower_bound(g, 60).severi_genus_lb for g in range(5, 120, 2)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_two_paths_agree():
    for g in range(3, 62, 2):
        assert severi_lower_bound(g, 31).bl_count == fixed_fiber_count((g - 1) // 2)


def test_exponential_in_sqrt_g_shape():
    vals = [math.log(severi_lower_bound(g, 201).severi_genus_lb) / math.sqrt(g) for g in range(101, 402, 2)]
    diffs = [b - a for a, b in zip(vals, vals[1:])]
    assert all(d > 0 for d in diffs)
    assert all(b < a for a, b in zip(diffs, diffs[1:]))


def test_fit_small_range():
    fit = asymptotic_fit(20, 200)
    assert fit.estimated_C > 0
    assert fit.sample_range == (20, 200)
    assert 0 <= fit.max_relative_residual < 0.1


@pytest.mark.parametrize("lo, hi", [(5, 100), (50, 50), (50, 51)])
def test_fit_rejects_bad_range(lo, hi):
    with pytest.raises(ValueError):
        asymptotic_fit(lo, hi)


def test_heuristic_constant():
    assert HEURISTIC_C == pytest.approx(4 * math.pi * math.sqrt(2))
    assert HEURISTIC_C == pytest.approx(17.7715, abs=1e-4)


def test_conjectural_bound():
    assert appendix_conjectural_bound(11) == 1 + 4**8 * 40737 // 6
    assert appendix_conjectural_bound(13) == closed_form_genus_44(6)
    with pytest.raises(ValueError):
        appendix_conjectural_bound(12)
    with pytest.raises(ValueError):
        appendix_conjectural_bound(9)


def test_conjectural_ratio():
    ratio = appendix_conjectural_bound(13) / appendix_conjectural_bound(11)
    assert ratio == pytest.approx(4 * quintic_44(6) / quintic_44(5), rel=1e-6)


def test_conjectural_outgrows_severi_bound():
    # log of the 4^r-type bound pulls away from the e^{C sqrt g} bound
    logs_c = [math.log(appendix_conjectural_bound(g)) for g in range(11, 2002, 10)]
    logs_s = [math.log(severi_lower_bound(g, 1001).severi_genus_lb) for g in range(11, 2002, 10)]
    gaps = [c - s for c, s in zip(logs_c, logs_s)]
    assert all(b > a for a, b in zip(gaps[5:], gaps[6:]))
    per_r = (logs_c[-1] - logs_c[-2]) / 5
    assert per_r == pytest.approx(math.log(4), rel=0.01)
