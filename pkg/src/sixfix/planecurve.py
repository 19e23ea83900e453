"""Curves in P^2 invariant under ``z.[x0:x1:x2] = [x0 : z^a x1 : z^b x2]``.

Irreducible invariant curves are lines or orbit closures, the latter being
monomial curves ``[X^b : mu X^(b-a) Y^a : Y^b]``.  Their singularities are
read off from local branches, and unions are tested for nodality by exact
intersection multiplicities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from sixfix import _binary

SMOOTH = "smooth"
NODAL = "nodal"
NON_NODAL = "non-nodal"


@dataclass(frozen=True)
class PlaneAction:
    a: int
    b: int

    def __post_init__(self):
        if not 0 <= self.a <= self.b:
            raise ValueError(f"need 0 <= a <= b, got ({self.a}, {self.b})")
        if self.b == 0:
            raise ValueError("trivial action")

    @property
    def weights(self) -> tuple[int, int, int]:
        return (0, self.a, self.b)


@dataclass(frozen=True)
class SingularityVerdict:
    cls: str
    witnesses: tuple[tuple[tuple[int, int, int] | None, str], ...] = ()


def _normalize_point(v) -> tuple[int, int, int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    v = [x // g for x in v]
    first = next(x for x in v if x)
    if first < 0:
        v = [-x for x in v]
    return tuple(v)


@dataclass(frozen=True)
class PlaneCurveComponent:
    """A line ``l0 x0 + l1 x1 + l2 x2 = 0`` or a monomial curve with scale ``mu``."""

    kind: str
    line: tuple[int, int, int] | None = None
    a: int = 0
    b: int = 0
    scale: int = 1
    note: str = ""

    @classmethod
    def coordinate_line(cls, i: int, note: str = "") -> "PlaneCurveComponent":
        line = [0, 0, 0]
        line[i] = 1
        return cls("line", tuple(line), note=note or f"x{i} = 0")

    @classmethod
    def monomial(cls, a: int, b: int, scale: int = 1) -> "PlaneCurveComponent":
        g = gcd(a, b)
        a, b = a // g, b // g
        if b == 1:
            # [X : Y : Y] is the line x1 = x2
            return cls("line", (0, 1, -scale), note=f"x1 = {scale} x2")
        return cls("monomial", a=a, b=b, scale=scale, note=f"[X^{b} : {scale} X^{b - a} Y^{a} : Y^{b}]")

    @property
    def degree(self) -> int:
        return 1 if self.kind == "line" else self.b

    def implicit(self) -> dict[tuple[int, int, int], int]:
        if self.kind == "line":
            out = {}
            for i, c in enumerate(self.line):
                if c:
                    e = [0, 0, 0]
                    e[i] = 1
                    out[tuple(e)] = c
            return out
        a, b = self.a, self.b
        return {(0, b, 0): 1, (b - a, 0, a): -(self.scale**b)}

    def parametrization(self) -> list[list[int]]:
        """Three binary forms in ``(X, Y)`` giving the coordinates."""
        if self.kind == "line":
            p, q = _line_basis(self.line)
            return [[p[i], q[i]] for i in range(3)]
        a, b = self.a, self.b
        x0 = [0] * (b + 1)
        x1 = [0] * (b + 1)
        x2 = [0] * (b + 1)
        x0[0] = 1
        x1[a] = self.scale
        x2[b] = 1
        return [x0, x1, x2]

    def point_at(self, root: tuple[int, int]) -> tuple[int, int, int]:
        return _normalize_point([_binary.evaluate(f, *root) for f in self.parametrization()])

    def verdict(self) -> SingularityVerdict:
        if self.kind == "line":
            return SingularityVerdict(SMOOTH)
        return classify_monomial(self.a, self.b)


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _line_basis(line):
    # two independent integer points on the line
    cands = [_cross(line, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    cands = [c for c in cands if any(c)]
    p = cands[0]
    q = next(c for c in cands[1:] if any(_cross(p, c)))
    return p, q


def _substitute(implicit: dict, param: list[list[int]]) -> list[int]:
    deg_param = len(param[0]) - 1
    deg_imp = sum(next(iter(implicit)))
    total = [0] * (deg_param * deg_imp + 1)
    for exps, c in implicit.items():
        term = [c]
        for f, k in zip(param, exps):
            term = _binary.mul(term, _binary.power(f, k))
        total = _binary.add(total, term)
    return total


@dataclass(frozen=True)
class PairIntersection:
    form: tuple[int, ...]  # restriction of the second curve's equation to the first's parameter
    transverse: bool
    points: tuple[tuple[tuple[int, int, int], int], ...]


def intersect(c1: PlaneCurveComponent, c2: PlaneCurveComponent) -> PairIntersection:
    """Intersection of two distinct invariant curves, ``c1`` smooth.

    Multiplicities are root multiplicities of ``c2``'s equation pulled back
    along ``c1``'s (injective, immersive) parametrization.
    """
    form = _substitute(c2.implicit(), c1.parametrization())
    if not any(form):
        raise ValueError("components coincide")
    roots = _binary.rational_roots(form)
    pts = tuple((c1.point_at(r), m) for r, m in roots.roots)
    return PairIntersection(tuple(form), _binary.is_squarefree(form), pts)


def classify_monomial(a: int, b: int) -> SingularityVerdict:
    """Singularities of the orbit closure ``[X^b : X^(b-a) Y^a : Y^b]``."""
    if a < 1 or b < a:
        raise ValueError(f"need 1 <= a <= b, got ({a}, {b})")
    g = gcd(a, b)
    a, b = a // g, b // g
    if b == 1:
        return SingularityVerdict(SMOOTH)
    witnesses = []
    # local branches at the two endpoints; interior points lie on a free orbit
    if a >= 2:
        witnesses.append(((1, 0, 0), f"branch (t^{a}, t^{b})"))
    if b - a >= 2:
        witnesses.append(((0, 0, 1), f"branch (s^{b - a}, s^{b})"))
    if not witnesses:
        return SingularityVerdict(SMOOTH)
    return SingularityVerdict(NON_NODAL, tuple(witnesses))


def invariant_components(action: PlaneAction) -> list[PlaneCurveComponent]:
    """One representative of each type of irreducible invariant curve."""
    a, b = action.a, action.b
    lines = [PlaneCurveComponent.coordinate_line(i) for i in range(3)]
    if 0 < a < b:
        return lines + [PlaneCurveComponent.monomial(a, b)]
    if a == 0:
        # x0, x1 share a weight: x2 = 0 is pointwise fixed, lines through [0:0:1] invariant
        lines[2] = PlaneCurveComponent.coordinate_line(2, "x2 = 0, pointwise fixed")
        return lines + [PlaneCurveComponent("line", (1, -1, 0), note="x0 = x1, through the fixed point [0:0:1]")]
    lines[0] = PlaneCurveComponent.coordinate_line(0, "x0 = 0, pointwise fixed")
    return lines + [PlaneCurveComponent("line", (0, 1, -1), note="x1 = x2, through the fixed point [1:0:0]")]


def candidate_pool(action: PlaneAction) -> list[PlaneCurveComponent]:
    """Invariant components with two members of each continuous family.

    Two members suffice: three members of a family already contain a
    non-nodal pair (tangent conics) or a triple point (concurrent lines).
    """
    a, b = action.a, action.b
    lines = [PlaneCurveComponent.coordinate_line(i) for i in range(3)]
    if 0 < a < b:
        return lines + [PlaneCurveComponent.monomial(a, b, mu) for mu in (1, 2)]
    if a == 0:
        return lines + [PlaneCurveComponent("line", (1, -mu, 0)) for mu in (1, 2)]
    return lines + [PlaneCurveComponent("line", (0, 1, -mu)) for mu in (1, 2)]


def triple_point(c1, c2, c3) -> tuple[bool, tuple[int, int, int] | None]:
    """Whether three curves share a point, and that point when it is rational."""
    f2 = _substitute(c2.implicit(), c1.parametrization())
    f3 = _substitute(c3.implicit(), c1.parametrization())
    if _binary.common_root_degree(f2, f3) == 0:
        return False, None
    r2 = {r for r, _ in _binary.rational_roots(f2).roots}
    for r, _ in _binary.rational_roots(f3).roots:
        if r in r2:
            return True, c1.point_at(r)
    return True, None


@dataclass
class UnionVerdict:
    components: tuple[PlaneCurveComponent, ...]
    verdict: SingularityVerdict
    degree: int


def classify_union(components) -> UnionVerdict:
    """Nodal iff every component is smooth, all crossings are transverse and no three meet."""
    comps = tuple(components)
    degree = sum(c.degree for c in comps)
    for c in comps:
        v = c.verdict()
        if v.cls != SMOOTH:
            return UnionVerdict(comps, SingularityVerdict(NON_NODAL, v.witnesses), degree)
    bad = []
    nodes = []
    for c1, c2 in itertools.combinations(comps, 2):
        inter = intersect(c1, c2)
        if inter.transverse:
            nodes.extend((p, "node") for p, _ in inter.points)
            continue
        tangencies = [(p, f"tangency of multiplicity {m}") for p, m in inter.points if m > 1]
        bad.extend(tangencies or [(None, "tangency at an irrational point")])
    for trio in itertools.combinations(comps, 3):
        shared, point = triple_point(*trio)
        if shared:
            bad.append((point, "three components through one point"))
    if bad:
        return UnionVerdict(comps, SingularityVerdict(NON_NODAL, tuple(bad)), degree)
    if nodes:
        return UnionVerdict(comps, SingularityVerdict(NODAL, tuple(sorted(set(nodes)))), degree)
    return UnionVerdict(comps, SingularityVerdict(SMOOTH), degree)


def max_nodal_union_degree(action: PlaneAction) -> UnionVerdict:
    """Largest-degree nodal union of distinct invariant curves, with the union itself."""
    pool = [c for c in candidate_pool(action) if c.verdict().cls == SMOOTH]
    best = None
    for size in range(1, len(pool) + 1):
        for subset in itertools.combinations(pool, size):
            u = classify_union(subset)
            if u.verdict.cls == NON_NODAL:
                continue
            if best is None or u.degree > best.degree:
                best = u
    return best


@dataclass
class ScanRow:
    a: int
    b: int
    components: list[PlaneCurveComponent]
    monomial_verdict: SingularityVerdict | None
    max_nodal: UnionVerdict = field(repr=False, default=None)


def plane_scan(b_max: int) -> list[ScanRow]:
    """Rows for every ``1 <= a <= b <= b_max`` in ascending order."""
    rows = []
    for b in range(1, b_max + 1):
        for a in range(1, b + 1):
            act = PlaneAction(a, b)
            rows.append(
                ScanRow(a, b, invariant_components(act), classify_monomial(a, b), max_nodal_union_degree(act))
            )
    return rows
