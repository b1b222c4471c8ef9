from fractions import Fraction

import pytest

from cpdirac.bounds import (
    Verdict,
    bounds_report,
    killing_spinor_count,
    kirchberg_lower_bound,
    re_spectrum_totally_geodesic,
    scalar_curvature,
    sharpness_report,
    type_rr1_bounds,
    upper_bound,
)
from cpdirac.core import EmbeddingParams, ParameterError
from cpdirac.normal import enumerate_normal, lowest_eigenvalue

from oracles import odd_pairs


def test_upper_bound():
    assert upper_bound(1) == 4
    assert upper_bound(3) == 16
    assert upper_bound(2) == 8
    assert upper_bound(3, Fraction(1, 4)) == 4


@pytest.mark.parametrize("n,mu", [(3, 6), (5, 20), (7, 70), (9, 252), (11, 924)])
def test_killing_spinor_count(n, mu):
    assert killing_spinor_count(n) == mu


def test_killing_spinor_count_rejects_even():
    with pytest.raises(ParameterError):
        killing_spinor_count(4)


def test_re_spectrum_examples():
    values, kappa1 = re_spectrum_totally_geodesic(EmbeddingParams(1, 3))
    assert sorted(set(values)) == [-8, 0, 8]
    assert kappa1 == -8
    assert 0 in values
    assert re_spectrum_totally_geodesic(EmbeddingParams(3, 5))[1] == -24


@pytest.mark.parametrize("d,n", odd_pairs(11))
def test_kappa1_closed_form(d, n):
    values, kappa1 = re_spectrum_totally_geodesic(EmbeddingParams(d, n))
    assert kappa1 == min(values) == -4 * d * (n - d)
    assert len(values) == (d + 1) * (n - d + 1)


def test_kirchberg_examples():
    assert kirchberg_lower_bound(3, 48, -24) == 8
    assert kirchberg_lower_bound(1, 8, -8) == 0
    assert kirchberg_lower_bound(7, 100, -100) == 0
    assert kirchberg_lower_bound(2, 24, 0) == Fraction(2, 4) * 24
    with pytest.raises(ParameterError):
        kirchberg_lower_bound(1, 8, 0, branch="even")


def test_type_rr1_examples():
    assert type_rr1_bounds(1, 0, 8, -8) == (0, 0)
    assert type_rr1_bounds(3, 1, 48, -24) == (8, 8)
    with pytest.raises(ParameterError):
        type_rr1_bounds(3, 3, 48, -24)


@pytest.mark.parametrize("d", [1, 3, 5, 7, 9])
def test_type_rr1_recovers_corollary(d):
    scal0, kappa1 = 4 * d * (d + 1), -4 * d
    first, _ = type_rr1_bounds(d, (d - 1) // 2, scal0, kappa1)
    assert first == kirchberg_lower_bound(d, scal0, kappa1)


def test_scalar_curvature():
    assert scalar_curvature(3) == 48
    assert scalar_curvature(1) == 8


def test_bounds_report_cp3_in_cp5():
    r = bounds_report(EmbeddingParams(3, 5))
    assert (r.upper_bound, r.mu, r.scal0, r.kappa1, r.kirchberg_bound, r.lowest) == (16, 20, 48, -24, 8, 12)


def test_bounds_report_scales_with_alpha():
    base = bounds_report(EmbeddingParams(3, 7))
    half = bounds_report(EmbeddingParams(3, 7), Fraction(1, 2))
    assert half.upper_bound == base.upper_bound / 2
    assert half.kirchberg_bound == base.kirchberg_bound / 2
    assert half.lowest == base.lowest / 2
    with pytest.raises(ParameterError):
        bounds_report(EmbeddingParams(3, 7), 0)


@pytest.mark.parametrize(
    "n,mult_zero,mu,verdict",
    [(3, 2, 6, Verdict.SHARP), (7, 60, 70, Verdict.SHARP), (9, 280, 252, Verdict.NOT_SHARP)],
)
def test_sharpness_examples(n, mult_zero, mu, verdict):
    r = sharpness_report(EmbeddingParams(1, n))
    assert (r.mult_zero, r.mu, r.verdict) == (mult_zero, mu, verdict)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_sharpness_closed_forms_match_enumeration(n):
    r = sharpness_report(EmbeddingParams(1, n))
    spec = enumerate_normal(EmbeddingParams(1, n), 4)
    assert r.mult_zero == spec.multiplicity(0)
    assert r.mult_bound == spec.multiplicity(4)
    assert r.cumulative_below == spec.cumulative(4)


def test_sharpness_higher_dimension_uses_enumeration():
    r = sharpness_report(EmbeddingParams(3, 5))
    assert r.bound == 16
    assert r.mult_zero == 0
    assert r.strictly_below == enumerate_normal(EmbeddingParams(3, 5), 15).cumulative(15)
    assert r.verdict is Verdict.SHARP
