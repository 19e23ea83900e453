"""Explicit torus actions, ambients and invariant curves of the standard families."""

from __future__ import annotations

from sixfix.torus import DiagonalAction, Hypersurface, MonomialCurve, ProjectiveSpace

P3 = ProjectiveSpace((3,))


def quadric() -> Hypersurface:
    """The smooth quadric ``x2^2 - x0 x4 - 2 x1 x3 = 0`` in P^4."""
    return Hypersurface(
        (4,),
        (
            (1, ((0, 0, 2, 0, 0),)),
            (-1, ((1, 0, 0, 0, 1),)),
            (-2, ((0, 1, 0, 1, 0),)),
        ),
    )


def conic_bundle() -> Hypersurface:
    """``x0 y0^2 + x1 y1^2 + x2 y2^2 = 0`` in P^2 x P^2."""
    return Hypersurface(
        (2, 2),
        (
            (1, ((1, 0, 0), (2, 0, 0))),
            (1, ((0, 1, 0), (0, 2, 0))),
            (1, ((0, 0, 1), (0, 0, 2))),
        ),
    )


def conic_bundle_action() -> DiagonalAction:
    return DiagonalAction.on_product([[(2, 0), (0, 2), (0, 0)], [(-1, 0), (0, -1), (0, 0)]])


def cptc(n: int) -> tuple[DiagonalAction, ProjectiveSpace, MonomialCurve]:
    """Weights ``(0, 1, n-1, n)`` on P^3 and the degree-n curve ``[X^n : X^(n-1) Y : X Y^(n-1) : Y^n]``."""
    if n < 1:
        raise ValueError("n must be positive")
    action = DiagonalAction.on_projective_space([0, 1, n - 1, n])
    return action, P3, MonomialCurve((0, 1, n - 1, n))


def quadc(n: int) -> tuple[DiagonalAction, Hypersurface, MonomialCurve]:
    """Weights ``(0, 1, n+1, 2n+1, 2n+2)`` on the quadric and an invariant curve of degree 2n+2 on it.

    The curve ``[X^(2n+2) : X^(2n+1) Y : X^(n+1) Y^(n+1) : X Y^(2n+1) : Y^(2n+2)]``
    needs the coordinate rescaling ``(1, 2, 3, 2, 1)`` to lie on this quadric.
    """
    if n < 1:
        raise ValueError("n must be positive")
    exps = (0, 1, n + 1, 2 * n + 1, 2 * n + 2)
    action = DiagonalAction.on_projective_space(list(exps))
    return action, quadric(), MonomialCurve(exps, (1, 2, 3, 2, 1))
