"""Integral binary cubic intersection forms of 6-manifolds with b2 = 2.

A form is stored as the four intersection numbers ``(a0, a1, a2, a3)`` =
``(a^3, a^2 b, a b^2, b^3)`` of an ordered integral basis ``(a, b)``.  The
associated cubic polynomial is ``F(x, y) = a0 x^3 + 3 a1 x^2 y + 3 a2 x y^2
+ a3 y^3``, i.e. ``F(x, y)`` is the self-intersection of ``x a + y b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sixfix import _binary


@dataclass(frozen=True)
class CubicData:
    a0: int
    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an integer, got {v!r}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a0, self.a1, self.a2, self.a3)

    def coefficients(self) -> list[int]:
        """Coefficients of ``F`` in the ``x^3, x^2 y, x y^2, y^3`` monomials."""
        return [self.a0, 3 * self.a1, 3 * self.a2, self.a3]

    def __call__(self, x: int, y: int) -> int:
        return _binary.evaluate(self.coefficients(), x, y)

    def __iter__(self):
        return iter(self.as_tuple())


@dataclass(frozen=True)
class BasisChange:
    """Unimodular matrix ``((m00, m01), (m10, m11))``.

    Rows are the new basis vectors in old coordinates:
    ``a' = m00 a + m01 b`` and ``b' = m10 a + m11 b``.
    """

    m00: int
    m01: int
    m10: int
    m11: int

    def __post_init__(self):
        if abs(self.det) != 1:
            raise ValueError(f"basis change must have determinant +-1, got {self.det}")

    @classmethod
    def from_rows(cls, rows) -> "BasisChange":
        (m00, m01), (m10, m11) = rows
        return cls(m00, m01, m10, m11)

    @property
    def det(self) -> int:
        return self.m00 * self.m11 - self.m01 * self.m10

    def __matmul__(self, other: "BasisChange") -> "BasisChange":
        return BasisChange(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
        )


IDENTITY = BasisChange(1, 0, 0, 1)


@dataclass(frozen=True)
class TopologyRecord:
    """Cubic form plus first Chern class of a simply connected 6-manifold.

    ``c1`` holds the coefficients of the first Chern class in the basis of
    ``cubic``.  Betti numbers are fixed by the class of manifolds studied.
    """

    cubic: CubicData
    c1: tuple[int, int]
    b2: int = field(default=2, init=False)
    b3: int = field(default=0, init=False)
    simply_connected: bool = field(default=True, init=False)

    def change_basis(self, m: BasisChange) -> "TopologyRecord":
        # c1 is a cohomology class: its coordinates transform by the inverse
        # matrix, since the rows of m express the new basis in the old one.
        x, y = self.c1
        inv_det = m.det  # +-1, so 1/det == det
        nx = inv_det * (m.m11 * x - m.m10 * y)
        ny = inv_det * (-m.m01 * x + m.m00 * y)
        return TopologyRecord(change_basis(self.cubic, m), (nx, ny))

    def c1_cubed(self) -> int:
        return self.cubic(*self.c1)


def delta(c: CubicData) -> int:
    """The Delta-invariant of a cubic intersection form."""
    a0, a1, a2, a3 = c.as_tuple()
    return (a0 * a3 - a1 * a2) ** 2 - 4 * (a0 * a2 - a1 * a1) * (a1 * a3 - a2 * a2)


def change_basis(c: CubicData, m: BasisChange) -> CubicData:
    """Re-express the intersection numbers in the basis given by the rows of ``m``."""
    if abs(m.det) != 1:
        raise ValueError("basis change must be unimodular")
    vals = c.as_tuple()
    rows = ((m.m00, m.m01), (m.m10, m.m11))

    def trilinear(u, v, w) -> int:
        # T(e_i, e_j, e_k) depends only on how many of i, j, k point at b
        total = 0
        for i in (0, 1):
            for j in (0, 1):
                for k in (0, 1):
                    coef = u[i] * v[j] * w[k]
                    if coef:
                        total += coef * vals[i + j + k]
        return total

    p, q = rows
    return CubicData(
        trilinear(p, p, p),
        trilinear(p, p, q),
        trilinear(p, q, q),
        trilinear(q, q, q),
    )


def _canonical_key(pt: tuple[int, int]):
    x, y = pt
    return (abs(x), abs(y), x < 0, y < 0)


def cube_zero_classes(c: CubicData) -> list[tuple[int, int]] | None:
    """All primitive ``(x, y)`` up to sign with ``F(x, y) = 0``.

    Returns ``None`` when ``F`` vanishes identically.  Each projective zero
    is returned once, in the sign preferred by :func:`has_cube_zero_class`.
    """
    coeffs = c.coefficients()
    if not any(coeffs):
        return None
    out = []
    for (p, q), _ in _binary.rational_roots(coeffs).roots:
        out.append(min((p, q), (-p, -q), key=_canonical_key))
    return sorted(out, key=_canonical_key)


def has_cube_zero_class(c: CubicData) -> tuple[int, int] | None:
    """A primitive nonzero class ``alpha = x a + y b`` with ``alpha^3 = 0``, or None.

    Integer zeros of a binary cubic are exactly its rational linear factors,
    so the decision is exact.  When several exist, the one minimizing
    ``(|x|, |y|, x < 0, y < 0)`` is returned; the zero form yields ``(0, 1)``.
    """
    zeros = cube_zero_classes(c)
    if zeros is None:
        return (0, 1)
    return zeros[0] if zeros else None


def delta_projective_bundle(c1E: int, c2E: int) -> int:
    """Delta of the projectivization of a rank-2 bundle on P^2 with Chern numbers c1, c2."""
    return c1E * c1E - 4 * c2E

