"""Fixed points of diagonal torus actions.

A rank-``m`` torus acts on a product of projective spaces by scaling each
homogeneous coordinate by a character.  Characters are integer vectors of
length ``m`` ("weights").  The engine decomposes the ambient fixed locus
into coordinate strata, intersects it with weight-homogeneous hypersurfaces,
and tracks fixed points through blow-ups along invariant monomial curves.

Tangent weights at a fixed point ``e_i`` of ``P^N`` are ``w_j - w_i``.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from sixfix import _binary

Weight = tuple[int, ...]


class TorusError(ValueError):
    """Base class for precondition failures in the fixed-point engine."""


class NotWeightHomogeneous(TorusError):
    pass


class NotInvariant(TorusError):
    pass


class NonTransverse(TorusError):
    pass


class CurveError(TorusError):
    pass


def _wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def _wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _wscale(k: int, a: Weight) -> Weight:
    return tuple(k * x for x in a)


def _remove_one(weights: list[Weight], w: Weight) -> list[Weight]:
    out = list(weights)
    out.remove(w)
    return out


def _as_weight(w, rank: int | None = None) -> Weight:
    if isinstance(w, bool):
        raise TypeError("weights must be integers")
    if isinstance(w, int):
        t = (w,)
    else:
        t = tuple(w)
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in t):
            raise TypeError(f"weight {w!r} has non-integer entries")
    if rank is not None and len(t) != rank:
        raise ValueError(f"weight {w!r} does not have rank {rank}")
    return t


# ---------------------------------------------------------------------------
# actions and ambients


@dataclass(frozen=True)
class DiagonalAction:
    """Weights per ambient factor; ``weights[f][i]`` is the weight of coordinate i of factor f."""

    weights: tuple[tuple[Weight, ...], ...]

    def __post_init__(self):
        if not self.weights or any(len(f) < 2 for f in self.weights):
            raise ValueError("every factor needs at least two coordinates")
        ranks = {len(w) for f in self.weights for w in f}
        if len(ranks) != 1 or 0 in ranks:
            raise ValueError("all weights must have the same positive rank")

    @classmethod
    def on_projective_space(cls, weights) -> "DiagonalAction":
        return cls.on_product([weights])

    @classmethod
    def on_product(cls, factors) -> "DiagonalAction":
        return cls(tuple(tuple(_as_weight(w) for w in f) for f in factors))

    @property
    def rank(self) -> int:
        return len(self.weights[0][0])

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(f) - 1 for f in self.weights)

    def restrict(self, cocharacter) -> "DiagonalAction":
        """Rank-1 action of the one-parameter subgroup ``cocharacter``."""
        cochar = _as_weight(cocharacter, self.rank)
        return DiagonalAction(
            tuple(tuple((sum(a * b for a, b in zip(w, cochar)),) for w in f) for f in self.weights)
        )


@dataclass(frozen=True)
class ProjectiveSpace:
    """A product of projective spaces ``P^{n_1} x ... x P^{n_k}``."""

    dims: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(self.dims)


Exponents = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Hypersurface:
    """Zero set of one multihomogeneous polynomial in a product of projective spaces.

    ``terms`` is a sequence of ``(coefficient, exponents)`` with one exponent
    tuple per factor.  All terms must share the same multidegree.
    """

    dims: tuple[int, ...]
    terms: tuple[tuple[int, Exponents], ...]

    def __post_init__(self):
        merged: dict[Exponents, int] = defaultdict(int)
        for coeff, exps in self.terms:
            exps = tuple(tuple(e) for e in exps)
            if len(exps) != len(self.dims) or any(
                len(e) != n + 1 for e, n in zip(exps, self.dims)
            ):
                raise ValueError(f"monomial {exps} does not match ambient dims {self.dims}")
            if any(x < 0 for e in exps for x in e):
                raise ValueError(f"negative exponent in {exps}")
            merged[exps] += coeff
        terms = tuple(sorted((c, e) for e, c in merged.items() if c != 0))
        if not terms:
            raise ValueError("hypersurface equation is identically zero")
        degs = {tuple(sum(e) for e in exps) for _, exps in terms}
        if len(degs) != 1:
            raise ValueError(f"equation is not multihomogeneous: degrees {sorted(degs)}")
        object.__setattr__(self, "terms", terms)

    @property
    def multidegree(self) -> tuple[int, ...]:
        return tuple(sum(e) for e in self.terms[0][1])

    @property
    def dimension(self) -> int:
        return sum(self.dims) - 1

    def weight(self, action: DiagonalAction) -> Weight:
        """Common weight of all monomials; raises if the equation is not weight-homogeneous."""
        if action.dims != self.dims:
            raise ValueError(f"action acts on {action.dims}, hypersurface lives in {self.dims}")
        ws = set()
        for _, exps in self.terms:
            w = (0,) * action.rank
            for f, e in enumerate(exps):
                for i, k in enumerate(e):
                    w = _wadd(w, _wscale(k, action.weights[f][i]))
            ws.add(w)
        if len(ws) != 1:
            raise NotWeightHomogeneous(f"monomials carry distinct weights {sorted(ws)}")
        return ws.pop()


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class FixedPoint:
    """An isolated fixed point.

    ``coords`` holds one homogeneous coordinate vector per factor.  For
    points on a fixed P^1 with irrational coordinates, ``coords`` is None and
    ``multiplicity`` counts the conjugate points lumped together.
    """

    coords: tuple[tuple[int, ...], ...] | None
    tangent_weights: tuple[Weight, ...]
    label: str = ""
    multiplicity: int = 1


@dataclass(frozen=True)
class FixedComponent:
    """A positive-dimensional piece of the fixed locus.

    ``supports`` lists, per factor, the coordinates spanning the stratum.
    """

    supports: tuple[tuple[int, ...], ...]
    dim: int | None
    note: str = ""


@dataclass
class FixedLocusReport:
    isolated_points: list[FixedPoint] = field(default_factory=list)
    positive_dim_components: list[FixedComponent] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def isolated(self) -> bool:
        return not self.positive_dim_components

    @property
    def count(self) -> int | str:
        if not self.isolated:
            return "infinite"
        return sum(p.multiplicity for p in self.isolated_points)


def coordinate_point(dims: tuple[int, ...], supports) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(1 if i == s else 0 for i in range(n + 1)) for n, s in zip(dims, supports)
    )


def _groups(weights: tuple[Weight, ...]) -> list[tuple[int, ...]]:
    by_weight: dict[Weight, list[int]] = defaultdict(list)
    for i, w in enumerate(weights):
        by_weight[w].append(i)
    return sorted(tuple(g) for g in by_weight.values())


def _ambient_tangent(action: DiagonalAction, point_weights: tuple[Weight, ...]) -> list[Weight]:
    """Tangent weights of the ambient product at a fixed point.

    ``point_weights[f]`` is the common weight of the coordinates on which the
    point is supported in factor ``f``; one zero per factor accounts for the
    projectivization.
    """
    out = []
    for f, wp in enumerate(point_weights):
        ws = [_wsub(w, wp) for w in action.weights[f]]
        out.extend(_remove_one(ws, (0,) * action.rank))
    return sorted(out)


def _ambient_strata(action: DiagonalAction):
    """Products of per-factor weight groups, i.e. the ambient fixed components."""
    per_factor = [_groups(f) for f in action.weights]
    return [tuple(s) for s in itertools.product(*per_factor)]


def _stratum_weights(action: DiagonalAction, stratum) -> tuple[Weight, ...]:
    return tuple(action.weights[f][g[0]] for f, g in enumerate(stratum))


def fixed_locus(action: DiagonalAction) -> FixedLocusReport:
    """Fixed locus of a diagonal action on a product of projective spaces."""
    report = FixedLocusReport()
    for stratum in _ambient_strata(action):
        dim = sum(len(g) - 1 for g in stratum)
        if dim == 0:
            pts = tuple(g[0] for g in stratum)
            tw = _ambient_tangent(action, _stratum_weights(action, stratum))
            report.isolated_points.append(
                FixedPoint(coordinate_point(action.dims, pts), tuple(tw), _label(pts))
            )
        else:
            report.positive_dim_components.append(
                FixedComponent(stratum, dim, "coordinate subspace of repeated weights")
            )
    return report


def fixed_locus_projective(action: DiagonalAction) -> FixedLocusReport:
    if len(action.dims) != 1:
        raise ValueError("fixed_locus_projective expects a single projective space")
    return fixed_locus(action)


def _label(pts) -> str:
    return " x ".join(f"e{i}" for i in pts)


# ---------------------------------------------------------------------------
# hypersurfaces


def _restrict_to_stratum(X: Hypersurface, stratum) -> dict[Exponents, int]:
    """Terms of the equation not vanishing identically on the coordinate stratum."""
    out = {}
    for coeff, exps in X.terms:
        if all(e[i] == 0 for f, e in enumerate(exps) for i in range(len(e)) if i not in stratum[f]):
            out[exps] = coeff
    return out


def _hypersurface_tangent(action, X, w_F, point_weights, label) -> list[Weight]:
    normal = w_F
    for d_f, wp in zip(X.multidegree, point_weights):
        normal = _wsub(normal, _wscale(d_f, wp))
    ambient = _ambient_tangent(action, point_weights)
    if normal not in ambient:
        raise NonTransverse(
            f"normal weight {normal} missing from ambient tangent weights at {label}; "
            "the hypersurface is singular there"
        )
    return _remove_one(ambient, normal)


def fixed_points_on_hypersurface(action: DiagonalAction, X: Hypersurface) -> FixedLocusReport:
    """Fixed locus of ``action`` restricted to the invariant hypersurface ``X``."""
    w_F = X.weight(action)
    report = FixedLocusReport()
    for stratum in _ambient_strata(action):
        dim = sum(len(g) - 1 for g in stratum)
        sw = _stratum_weights(action, stratum)
        restricted = _restrict_to_stratum(X, stratum)
        if dim == 0:
            pts = tuple(g[0] for g in stratum)
            if restricted:
                continue  # the pure-power monomial is nonzero here
            label = _label(pts)
            tw = _hypersurface_tangent(action, X, w_F, sw, label)
            report.isolated_points.append(
                FixedPoint(coordinate_point(X.dims, pts), tuple(tw), label)
            )
            continue
        if not restricted:
            report.positive_dim_components.append(
                FixedComponent(stratum, dim, "ambient fixed stratum contained in the hypersurface")
            )
            continue
        # restricted degree along the stratum; zero means a nonzero constant there
        line_factor = [f for f, g in enumerate(stratum) if len(g) > 1]
        deg_along = sum(X.multidegree[f] for f in line_factor)
        if deg_along == 0:
            continue
        if dim >= 2:
            report.positive_dim_components.append(
                FixedComponent(stratum, dim - 1, "hypersurface section of a fixed stratum (not resolved)")
            )
            report.notes.append(f"stratum {stratum} meets X in a positive-dimensional set")
            continue
        _resolve_p1(action, X, w_F, stratum, sw, restricted, report)
    report.isolated_points.sort(key=_point_sort_key)
    return report


def _resolve_p1(action, X, w_F, stratum, sw, restricted, report):
    (f,) = [f for f, g in enumerate(stratum) if len(g) > 1]
    i, j = stratum[f]
    d = X.multidegree[f]
    coeffs = [0] * (d + 1)
    for exps, c in restricted.items():
        coeffs[exps[f][j]] += c
    roots = _binary.rational_roots(coeffs)
    tw = tuple(_hypersurface_tangent(action, X, w_F, sw, f"stratum {stratum}"))
    if (0,) * action.rank in tw:
        report.notes.append(f"zero tangent weight on stratum {stratum}: tangency with the fixed line")
    base = [list(v) for v in coordinate_point(X.dims, [g[0] for g in stratum])]
    for (p, q), mult in roots.roots:
        vec = [list(v) for v in base]
        vec[f] = [0] * (X.dims[f] + 1)
        vec[f][i], vec[f][j] = p, q
        coords = tuple(tuple(v) for v in vec)
        if mult > 1:
            report.notes.append(f"root {coords} has multiplicity {mult}")
        report.isolated_points.append(FixedPoint(coords, tw, f"on stratum {stratum}"))
    if roots.residual_degree > 0:
        report.isolated_points.append(
            FixedPoint(None, tw, f"irrational points on stratum {stratum}", roots.residual_degree)
        )


def _point_sort_key(p: FixedPoint):
    return (p.coords is None, [tuple(-x for x in v) for v in p.coords] if p.coords else [], p.label)


# ---------------------------------------------------------------------------
# invariant monomial curves


@dataclass(frozen=True)
class MonomialCurve:
    """Rational curve ``[c_0 s^{D-e_0} t^{e_0} : ... : c_N s^{D-e_N} t^{e_N}]``.

    Coordinates with coefficient 0 vanish identically on the curve.  Exponents
    of the remaining coordinates are shifted so the smallest is 0; ``D`` is
    then the largest.
    """

    exponents: tuple[int, ...]
    coefficients: tuple[int, ...] | None = None

    def __post_init__(self):
        exps = tuple(self.exponents)
        coeffs = tuple(self.coefficients) if self.coefficients is not None else (1,) * len(exps)
        if len(coeffs) != len(exps):
            raise ValueError("exponents and coefficients differ in length")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        active = [e for e, c in zip(exps, coeffs) if c != 0]
        if len(set(active)) < 2:
            raise CurveError("a monomial curve needs at least two distinct exponents")
        lo = min(active)
        exps = tuple(e - lo if c != 0 else 0 for e, c in zip(exps, coeffs))
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def active(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coefficients) if c != 0)

    @property
    def degree(self) -> int:
        """Degree of the parametrization (the curve's degree when it is injective)."""
        return max(self.exponents[i] for i in self.active)

    def endpoint_supports(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        D = self.degree
        lo = tuple(i for i in self.active if self.exponents[i] == 0)
        hi = tuple(i for i in self.active if self.exponents[i] == D)
        return lo, hi

    @property
    def degenerate(self) -> bool:
        """True when an endpoint is not a coordinate point."""
        lo, hi = self.endpoint_supports()
        return len(lo) > 1 or len(hi) > 1

    @property
    def injective(self) -> bool:
        g = 0
        for i in self.active:
            g = gcd(g, self.exponents[i])
        return g == 1

    def smooth_at_endpoints(self) -> bool:
        vals = sorted(set(self.exponents[i] for i in self.active))
        return vals[1] - vals[0] == 1 and vals[-1] - vals[-2] == 1

    def endpoint_points(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        lo, hi = self.endpoint_supports()
        n = len(self.exponents)
        p0 = tuple(self.coefficients[i] if i in lo else 0 for i in range(n))
        p1 = tuple(self.coefficients[i] if i in hi else 0 for i in range(n))
        return p0, p1

    def reparametrize(self, u: int) -> "MonomialCurve":
        """The same curve written with parameter ``t -> u t``."""
        return MonomialCurve(
            self.exponents, tuple(c * u ** e for c, e in zip(self.coefficients, self.exponents))
        )

    def lies_on(self, X: Hypersurface) -> bool:
        if len(X.dims) != 1 or X.dims[0] + 1 != len(self.exponents):
            raise ValueError("curve and hypersurface live in different ambients")
        acc: dict[int, int] = defaultdict(int)
        for coeff, (e,) in X.terms:
            term = coeff
            t_exp = 0
            for i, k in enumerate(e):
                if k:
                    term *= self.coefficients[i] ** k
                    t_exp += k * self.exponents[i]
            if term:
                acc[t_exp] += term
        return not any(acc.values())


def parameter_weight(C: MonomialCurve, action: DiagonalAction) -> Weight:
    """Weight ``lambda`` with ``w_i = w_base + lambda * e_i`` on the active coordinates.

    Raises :class:`NotInvariant` when no such affine relation exists.
    """
    if len(action.dims) != 1 or action.dims[0] + 1 != len(C.exponents):
        raise ValueError("curve and action live in different ambients")
    ws = action.weights[0]
    act = C.active
    i0 = act[0]
    j0 = next(i for i in act if C.exponents[i] != C.exponents[i0])
    de = C.exponents[j0] - C.exponents[i0]
    lam = tuple(Fraction(a - b, de) for a, b in zip(ws[j0], ws[i0]))
    for i in act:
        dei = C.exponents[i] - C.exponents[i0]
        for comp, l in enumerate(lam):
            if ws[i][comp] - ws[i0][comp] != l * dei:
                raise NotInvariant(
                    f"coordinate {i} has weight {ws[i]}, not affine in its exponent {C.exponents[i]}"
                )
    if any(l.denominator != 1 for l in lam):
        raise NotInvariant(f"parameter weight {lam} is not integral")
    return tuple(int(l) for l in lam)


@dataclass(frozen=True)
class CurveData:
    p_min: int
    p_max: int
    parameter_weight: Weight
    degree: int


def curve_endpoints_and_weights(C: MonomialCurve, action: DiagonalAction) -> CurveData:
    """Endpoint coordinate points, parameter weight and degree of an invariant curve."""
    lam = parameter_weight(C, action)
    if C.degenerate:
        raise CurveError("curve endpoints are not coordinate points")
    (lo,), (hi,) = C.endpoint_supports()
    return CurveData(lo, hi, lam, C.degree)


# ---------------------------------------------------------------------------
# blow-ups along invariant curves


def _fiber_points(normal: list[Weight], curve_w: Weight, endpoint: int, dims) -> tuple[list[FixedPoint], list[str], bool]:
    """Fixed points on the exceptional fibre P(N_p) over a curve endpoint."""
    zero = (0,) * len(curve_w)
    notes = []
    if zero in normal:
        notes.append(f"zero normal weight over e{endpoint}: exceptional fibre is degenerate")
    counts = Counter(normal)
    pts = []
    repeated = False
    for u in sorted(counts):
        if counts[u] > 1:
            repeated = True
            continue
        others = [_wsub(v, u) for v in normal if v != u]
        tw = sorted([curve_w, u] + others)
        pts.append(
            FixedPoint(coordinate_point(dims, [endpoint]), tuple(tw), f"exceptional fibre over e{endpoint}, normal direction {u}")
        )
    return pts, notes, repeated


def blowup_fixed_report(action: DiagonalAction, ambient, C: MonomialCurve) -> FixedLocusReport:
    """Fixed locus of the induced action on the blow-up of ``ambient`` along ``C``.

    ``ambient`` is a single :class:`ProjectiveSpace` or a :class:`Hypersurface`
    in one projective space.
    """
    if len(ambient.dims) != 1:
        raise CurveError("blow-ups are supported in a single projective space only")
    lam = parameter_weight(C, action)
    if isinstance(ambient, Hypersurface):
        if not C.lies_on(ambient):
            raise CurveError("curve does not lie on the hypersurface")
        base = fixed_points_on_hypersurface(action, ambient)
    else:
        base = fixed_locus(action)
    zero = (0,) * action.rank
    report = FixedLocusReport(notes=list(base.notes))

    lo, hi = C.endpoint_supports()
    if not base.isolated or lam == zero:
        for comp in base.positive_dim_components:
            meets = [s for s in (lo, hi) if set(s) <= set(comp.supports[0])]
            note = comp.note + ("; contains a curve endpoint" if meets else "") + " (strict transform)"
            report.positive_dim_components.append(FixedComponent(comp.supports, comp.dim, note))
        if lam == zero:
            report.positive_dim_components.append(
                FixedComponent((C.active,), 1, "curve is pointwise fixed")
            )
        ends = {s[0] for s in (lo, hi) if len(s) == 1}
        for p in base.isolated_points:
            if p.coords is not None and _support(p) in ends:
                report.notes.append(f"endpoint e{_support(p)} is isolated downstairs; fibre not resolved")
            else:
                report.isolated_points.append(p)
        return report

    if C.degenerate:
        raise CurveError("isolated ambient fixed points but a degenerate curve: inconsistent input")
    if not C.injective:
        raise CurveError("monomial parametrization is not injective")
    if not C.smooth_at_endpoints():
        raise CurveError("curve is singular at an endpoint")

    data = curve_endpoints_and_weights(C, action)
    by_support = {_support(p): p for p in base.isolated_points if p.coords is not None}
    for p in base.isolated_points:
        if p.coords is None or _support(p) not in (data.p_min, data.p_max):
            report.isolated_points.append(p)
    for endpoint, cw in ((data.p_min, lam), (data.p_max, _wscale(-1, lam))):
        if endpoint not in by_support:
            raise CurveError(f"curve endpoint e{endpoint} is not an isolated fixed point of the ambient")
        tangent = list(by_support[endpoint].tangent_weights)
        if cw not in tangent:
            raise CurveError(f"curve tangent weight {cw} missing at e{endpoint}")
        normal = _remove_one(tangent, cw)
        pts, notes, repeated = _fiber_points(normal, cw, endpoint, ambient.dims)
        report.isolated_points.extend(pts)
        report.notes.extend(notes)
        if repeated:
            report.positive_dim_components.append(
                FixedComponent(((endpoint,),), None, "exceptional fibre fixed: repeated normal weights")
            )
    report.isolated_points.sort(key=_point_sort_key)
    return report


def _support(p: FixedPoint) -> int:
    (v,) = p.coords
    nz = [i for i, x in enumerate(v) if x]
    return nz[0] if len(nz) == 1 else -1


def normal_weights_at_endpoints(action: DiagonalAction, ambient, C: MonomialCurve) -> dict[int, list[Weight]]:
    """Normal weights of ``C`` at each endpoint (ambient tangent minus curve tangent)."""
    lam = parameter_weight(C, action)
    data = curve_endpoints_and_weights(C, action)
    base = (
        fixed_points_on_hypersurface(action, ambient)
        if isinstance(ambient, Hypersurface)
        else fixed_locus(action)
    )
    by_support = {_support(p): p for p in base.isolated_points if p.coords is not None}
    out = {}
    for endpoint, cw in ((data.p_min, lam), (data.p_max, _wscale(-1, lam))):
        out[endpoint] = sorted(_remove_one(list(by_support[endpoint].tangent_weights), cw))
    return out


def euler_consistency(report: FixedLocusReport, expected_chi: int, dim: int = 3) -> bool:
    """Fixed-point count equals Euler characteristic and meets the ``dim + 1`` lower bound."""
    if not report.isolated:
        raise TorusError("Euler consistency needs an isolated fixed locus")
    count = report.count
    return count == expected_chi and count >= dim + 1


def contracted_fixed_count(total: int, contracted: int) -> int:
    """Fixed points left after an invariant subvariety carrying ``contracted`` of them collapses to one point."""
    return total - contracted + 1
