from math import gcd

import pytest
import sympy

from sixfix import planecurve as pc
from sixfix.planecurve import PlaneAction, PlaneCurveComponent

x0, x1, x2 = sympy.symbols("x0 x1 x2")


def singular_points(F):
    """Singular points of a plane curve, computed chart by chart with sympy."""
    pts = set()
    for chart, var in enumerate((x0, x1, x2)):
        G = F.subs(var, 1)
        free = [v for v in (x0, x1, x2) if v != var]
        sols = sympy.solve([G] + [sympy.diff(G, v) for v in free], free, dict=True)
        for s in sols:
            p = [s.get(v, None) if v != var else 1 for v in (x0, x1, x2)]
            if any(c is None for c in p):
                continue
            first = next(c for c in p if c != 0)
            pts.add(tuple(sympy.nsimplify(c / first) for c in p))
    return pts


@pytest.mark.parametrize(
    "a,b", [(a, b) for b in range(2, 8) for a in range(1, b) if gcd(a, b) == 1]
)
def test_monomial_singularities_match_sympy(a, b):
    F = x1**b - x0 ** (b - a) * x2**a
    sing = singular_points(F)
    v = pc.classify_monomial(a, b)
    witnessed = {tuple(sympy.Integer(c) for c in w[0]) for w in v.witnesses}
    assert witnessed == sing
    assert (v.cls == pc.SMOOTH) == (not sing)


def test_reduction_by_gcd():
    assert pc.classify_monomial(2, 4).cls == pc.SMOOTH
    assert pc.classify_monomial(4, 6) == pc.classify_monomial(2, 3)
    assert PlaneCurveComponent.monomial(3, 3).kind == "line"


def test_cusp_witness():
    v = pc.classify_monomial(2, 3)
    assert v.cls == pc.NON_NODAL
    assert v.witnesses == (((1, 0, 0), "branch (t^2, t^3)"),)


def test_pairwise_intersection():
    lines = [PlaneCurveComponent.coordinate_line(i) for i in range(3)]
    conic = PlaneCurveComponent.monomial(1, 2)
    inter = pc.intersect(lines[1], conic)
    assert inter.transverse
    assert sorted(p for p, _ in inter.points) == [(0, 0, 1), (1, 0, 0)]
    tangent = pc.intersect(lines[0], conic)
    assert not tangent.transverse
    assert tangent.points == (((0, 0, 1), 2),)
    with pytest.raises(ValueError):
        pc.intersect(lines[0], lines[0])


def test_unions():
    lines = [PlaneCurveComponent.coordinate_line(i) for i in range(3)]
    tri = pc.classify_union(lines)
    assert tri.verdict.cls == pc.NODAL and tri.degree == 3
    concurrent = pc.classify_union([lines[1], lines[2], PlaneCurveComponent("line", (0, 1, -1))])
    assert concurrent.verdict.cls == pc.NON_NODAL
    assert ((1, 0, 0), "three components through one point") in concurrent.verdict.witnesses
    conics = pc.classify_union([PlaneCurveComponent.monomial(1, 2, 1), PlaneCurveComponent.monomial(1, 2, 2)])
    assert conics.verdict.cls == pc.NON_NODAL
    assert pc.classify_union([PlaneCurveComponent.monomial(2, 3)]).verdict.cls == pc.NON_NODAL


def test_max_nodal_degree_small_cases():
    assert pc.max_nodal_union_degree(PlaneAction(1, 2)).degree == 3
    assert pc.max_nodal_union_degree(PlaneAction(1, 1)).degree == 3
    assert pc.max_nodal_union_degree(PlaneAction(2, 5)).degree == 3


def test_invariant_components_trivial_weight_cases():
    comps = pc.invariant_components(PlaneAction(0, 1))
    assert any("pointwise fixed" in c.note for c in comps)
    comps = pc.invariant_components(PlaneAction(3, 3))
    assert any("pointwise fixed" in c.note for c in comps)
    with pytest.raises(ValueError):
        PlaneAction(3, 2)


def test_plane_scan_rows_and_bound():
    rows = pc.plane_scan(12)
    assert len(rows) == 12 * 13 // 2
    assert [(r.a, r.b) for r in rows[:4]] == [(1, 1), (1, 2), (2, 2), (1, 3)]
    assert max(r.max_nodal.degree for r in rows) <= 3
    smooth = {(r.a, r.b) for r in rows if gcd(r.a, r.b) == 1 and r.monomial_verdict.cls == pc.SMOOTH}
    assert smooth == {(1, 1), (1, 2)}
