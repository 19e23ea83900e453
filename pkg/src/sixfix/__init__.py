"""Exact-integer invariants of cubic forms on 3-folds and torus fixed-point counts."""

from sixfix.blowup import (
    BASES,
    CP3,
    Q,
    V5,
    V22,
    CurveBlowupSpec,
    FanoBase,
    curve_blowup,
    decrease_threshold,
    delta_curve_blowup,
    delta_family_scan,
    point_blowup,
)
from sixfix.forms import BasisChange, CubicData, TopologyRecord, change_basis, delta, has_cube_zero_class
from sixfix.planecurve import PlaneAction, classify_monomial, classify_union, max_nodal_union_degree, plane_scan
from sixfix.torus import (
    DiagonalAction,
    FixedLocusReport,
    Hypersurface,
    MonomialCurve,
    ProjectiveSpace,
    blowup_fixed_report,
    euler_consistency,
    fixed_locus,
    fixed_points_on_hypersurface,
)
from sixfix.verify import verify_paper

__version__ = "0.1.0"

__all__ = [
    "BASES", "CP3", "Q", "V5", "V22", "BasisChange", "CubicData", "CurveBlowupSpec", "DiagonalAction",
    "FanoBase", "FixedLocusReport", "Hypersurface", "MonomialCurve", "PlaneAction", "ProjectiveSpace",
    "TopologyRecord", "blowup_fixed_report", "change_basis", "classify_monomial", "classify_union",
    "curve_blowup", "decrease_threshold", "delta", "delta_curve_blowup", "delta_family_scan",
    "euler_consistency", "fixed_locus", "fixed_points_on_hypersurface", "has_cube_zero_class",
    "max_nodal_union_degree", "plane_scan", "point_blowup", "verify_paper",
]
