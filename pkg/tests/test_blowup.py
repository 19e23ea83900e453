import pytest
import sympy

from sixfix import blowup, forms
from sixfix.blowup import BASES, CP3, Q, V5, V22, CurveBlowupSpec, FanoBase
from sixfix.forms import CubicData, TopologyRecord


def minus_k_cubed_after_curve(base, k):
    # (-K_Y)^3 = (-K_X)^3 - 2 (-K_X . C) + 2g - 2 for a smooth curve of genus 0
    return base.d * base.r**3 - 2 * base.r * k - 2


@pytest.mark.parametrize("base", BASES, ids=lambda b: b.name)
@pytest.mark.parametrize("k", [1, 2, 3, 7, 40])
def test_curve_blowup_anticanonical_degree(base, k):
    coh = blowup.curve_blowup(CurveBlowupSpec(base, k))
    assert TopologyRecord(coh.cubic, coh.c1).c1_cubed() == minus_k_cubed_after_curve(base, k)
    assert coh.chi == base.chi + 2
    assert coh.normal_degree == base.r * k - 2


@pytest.mark.parametrize("base", BASES, ids=lambda b: b.name)
def test_point_blowup_anticanonical_degree(base):
    coh = blowup.point_blowup(base)
    assert TopologyRecord(coh.cubic, coh.c1).c1_cubed() == base.d * base.r**3 - 8
    assert coh.chi == base.chi + 1
    assert coh.normal_degree is None


def test_well_known_degrees():
    # blow-ups of P^3 in a line and a point, of Q in a line, of V5 in a line
    rec = lambda coh: TopologyRecord(coh.cubic, coh.c1).c1_cubed()
    assert rec(blowup.curve_blowup(CurveBlowupSpec(CP3, 1))) == 54
    assert rec(blowup.point_blowup(CP3)) == 56
    assert rec(blowup.curve_blowup(CurveBlowupSpec(Q, 1))) == 46
    assert rec(blowup.curve_blowup(CurveBlowupSpec(V5, 1))) == 34


def test_point_blowup_of_quadric():
    coh = blowup.point_blowup(Q)
    assert coh.cubic.as_tuple() == (2, 0, 0, 1)
    assert forms.has_cube_zero_class(coh.cubic) is None


def test_closed_form_polynomial():
    # -27 Delta is the discriminant of d x^3 - 3k x y^2 + (2 - rk) y^3
    d, r, k = sympy.symbols("d r k")
    a, b, c, e = d, 0, -3 * k, 2 - r * k
    disc = b * b * c * c - 4 * a * c**3 - 4 * b**3 * e - 27 * a * a * e * e + 18 * a * b * c * e
    assert sympy.expand(disc + 27 * (d**2 * (2 - r * k) ** 2 - 4 * d * k**3)) == 0
    for base in BASES:
        for kk in range(1, 60):
            spec = CurveBlowupSpec(base, kk)
            assert blowup.delta_curve_blowup(spec) == forms.delta(blowup.curve_blowup(spec).cubic)


@pytest.mark.parametrize("base", BASES, ids=lambda b: b.name)
def test_multiple_of_degree_form(base):
    d, r = base.d, base.r
    for n in range(1, 30):
        assert blowup.delta_curve_blowup(CurveBlowupSpec(base, n * d)) == d * d * ((2 - r * n * d) ** 2 - 4 * n**3 * d**2)


def test_specific_values():
    assert [blowup.delta_closed_form(1, 4, k) for k in (1, 2, 3)] == [0, 4, -8]
    assert blowup.delta_curve_blowup(CurveBlowupSpec(V5, 5)) == -900


@pytest.mark.parametrize("base", BASES, ids=lambda b: b.name)
def test_threshold_is_where_the_tail_starts_decreasing(base):
    t = blowup.decrease_threshold(base)
    vals = {k: blowup.delta_closed_form(base.d, base.r, k) for k in range(1, 400)}
    assert all(vals[k + 1] < vals[k] for k in range(t, 399))
    # the derivative is still nonnegative just below the threshold, when there is one
    if t > 1:
        kk = sympy.Symbol("k")
        poly = base.d**2 * (2 - base.r * kk) ** 2 - 4 * base.d * kk**3
        crit = max(float(s) for s in sympy.solve(sympy.diff(poly, kk), kk) if s.is_real)
        assert t - 1 < crit <= t


def test_family_scan_maxima():
    expect = {"CP3": (4, 2), "Q": (0, 2), "V5": (-20, 1), "V22": (396, 1)}
    for base in BASES:
        scan = blowup.delta_family_scan(base, 200)
        assert (scan.maximum, scan.argmax) == expect[base.name]
        assert scan.decreasing_past_threshold
        assert len(scan.values) == 200


def test_family_scan_rejects_empty_range():
    with pytest.raises(ValueError):
        blowup.delta_family_scan(CP3, 0)


def test_exceptional_enumeration():
    v5 = blowup.enumerate_exceptional_blowups(V5)
    v22 = blowup.enumerate_exceptional_blowups(V22)
    assert v5 == [(k, 2 * k - 2) for k in range(1, 7)]
    assert v22 == [(k, k - 2) for k in range(1, 13)]
    with pytest.raises(ValueError):
        blowup.enumerate_exceptional_blowups(CP3)


def test_spec_validation():
    with pytest.raises(ValueError):
        CurveBlowupSpec(CP3, 0)
    with pytest.raises(ValueError):
        CurveBlowupSpec(CP3, 1, genus=1)
    with pytest.raises(ValueError):
        FanoBase("CP3", 2, 4)
    with pytest.raises(ValueError):
        blowup.get_base("v7")
    assert blowup.get_base("V22") is V22


def test_fibration_check():
    # P^1 x P^2 with basis (pullback of a point of P^1, hyperplane of P^2)
    prod = CubicData(0, 0, 1, 0)
    assert blowup.fibration_delta_check(prod, (1, 0))
    assert not blowup.fibration_delta_check(prod, (0, 1))
    assert not blowup.fibration_delta_check(CubicData(1, 0, 0, 1), (1, 0))
    with pytest.raises(ValueError):
        blowup.fibration_delta_check(prod, (0, 0))
