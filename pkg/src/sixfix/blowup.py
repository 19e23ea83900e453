"""Intersection numbers and Delta for blow-ups of Picard-rank-1 Fano 3-folds.

Everything is expressed in the ordered basis ``(h, e)`` of H^2 of the
blow-up, where ``h`` is the pulled-back ample generator and ``e`` the
exceptional divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from sixfix.forms import CubicData, delta


@dataclass(frozen=True)
class FanoBase:
    """A smooth Fano 3-fold with H^2 = Z h, ``d = h^3`` and ``c1 = r h``."""

    name: str
    d: int
    r: int
    # every base carries a C*-action with 4 isolated fixed points
    chi: int = 4

    def __post_init__(self):
        if (self.name, self.d, self.r) not in _ALLOWED:
            raise ValueError(f"unknown Fano base {self.name!r} with d={self.d}, r={self.r}")


_ALLOWED = {("CP3", 1, 4), ("Q", 2, 3), ("V5", 5, 2), ("V22", 22, 1)}

CP3 = FanoBase("CP3", 1, 4)
Q = FanoBase("Q", 2, 3)
V5 = FanoBase("V5", 5, 2)
V22 = FanoBase("V22", 22, 1)
BASES = (CP3, Q, V5, V22)


def get_base(name: str) -> FanoBase:
    for base in BASES:
        if base.name.lower() == name.lower():
            return base
    raise ValueError(f"unknown base {name!r}; expected one of cp3, q, v5, v22")


@dataclass(frozen=True)
class CurveBlowupSpec:
    """Blow-up of ``base`` along a smooth rational curve with ``h``-degree ``k``."""

    base: FanoBase
    k: int
    genus: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"curve degree k must be positive, got {self.k}")
        if self.genus != 0:
            raise ValueError("only rational curves are supported")


@dataclass(frozen=True)
class BlowupCohomology:
    cubic: CubicData
    c1: tuple[int, int]
    chi: int
    # c1 of the normal bundle of the blown-up curve; None for point blow-ups
    normal_degree: int | None = None


def curve_blowup(spec: CurveBlowupSpec) -> BlowupCohomology:
    d, r, k = spec.base.d, spec.base.r, spec.k
    return BlowupCohomology(
        cubic=CubicData(d, 0, -k, 2 - r * k),
        c1=(r, -1),
        chi=spec.base.chi + 2,
        normal_degree=r * k - 2,
    )


def point_blowup(base: FanoBase) -> BlowupCohomology:
    return BlowupCohomology(
        cubic=CubicData(base.d, 0, 0, 1),
        c1=(base.r, -2),
        chi=base.chi + 1,
    )


def delta_closed_form(d: int, r: int, k: int) -> int:
    """``d^2 (2 - r k)^2 - 4 d k^3``, the Delta of a curve blow-up as a polynomial in k."""
    return d * d * (2 - r * k) ** 2 - 4 * d * k**3


def delta_curve_blowup(spec: CurveBlowupSpec) -> int:
    """Delta of the blow-up via the closed form.

    For ``k = n d`` this is ``d^2 ((2 - r n d)^2 - 4 n^3 d^2)``.
    """
    return delta_closed_form(spec.base.d, spec.base.r, spec.k)


def decrease_threshold(base: FanoBase) -> int:
    """Smallest integer ``k >= 1`` past the largest real critical point of Delta(k).

    ``Delta(k) = -4d k^3 + d^2 r^2 k^2 - 4 d^2 r k + 4 d^2``; its critical points
    solve ``12 k^2 - 2 d r^2 k + 4 d r = 0``.  With no real critical point the
    polynomial is strictly decreasing everywhere and the threshold is 1.
    """
    d, r = base.d, base.r
    lin = 2 * d * r * r
    disc = lin * lin - 192 * d * r
    if disc < 0:
        return 1
    s = isqrt(disc)
    if s * s == disc:
        k_crit_ceil = -(-(lin + s) // 24)
    else:
        k_crit_ceil = (lin + s) // 24 + 1
    return max(1, k_crit_ceil)


@dataclass(frozen=True)
class FamilyScan:
    base: FanoBase
    values: tuple[tuple[int, int], ...]
    maximum: int
    argmax: int
    threshold: int
    decreasing_past_threshold: bool


def delta_family_scan(base: FanoBase, k_max: int) -> FamilyScan:
    """Tabulate Delta for ``k = 1..k_max`` and check the tail is strictly decreasing."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    values = tuple(
        (k, delta_curve_blowup(CurveBlowupSpec(base, k))) for k in range(1, k_max + 1)
    )
    argmax, maximum = max(values, key=lambda kv: (kv[1], -kv[0]))
    threshold = decrease_threshold(base)
    tail = [v for k, v in values if k >= threshold]
    ok = all(a > b for a, b in zip(tail, tail[1:]))
    return FamilyScan(base, values, maximum, argmax, threshold, ok)


def enumerate_exceptional_blowups(base: FanoBase) -> list[tuple[int, int]]:
    """All ``(k, normal_degree)`` with ``1 <= -K.C = r k <= 12`` on V5 or V22."""
    if base.name not in ("V5", "V22"):
        raise ValueError(f"the anticanonical-degree bound applies to V5 and V22 only, not {base.name}")
    out = []
    k = 1
    while base.r * k <= 12:
        out.append((k, base.r * k - 2))
        k += 1
    return out


def fibration_delta_check(cubic: CubicData, fiber_class: tuple[int, int]) -> bool:
    """Consistency test for a fibration over a curve with fibre class ``F``.

    True iff ``F^2`` is zero as a class (``F^2 a = F^2 b = 0``) and
    ``delta(cubic) == 0``.
    """
    x, y = fiber_class
    if x == 0 and y == 0:
        raise ValueError("fibre class must be nonzero")
    a0, a1, a2, a3 = cubic.as_tuple()
    f2a = x * x * a0 + 2 * x * y * a1 + y * y * a2
    f2b = x * x * a1 + 2 * x * y * a2 + y * y * a3
    return f2a == 0 and f2b == 0 and delta(cubic) == 0
