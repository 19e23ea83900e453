"""Exact arithmetic on integral binary forms.

A binary form of degree ``d`` is stored as its coefficient list
``[c0, ..., cd]`` meaning ``sum(c[i] * x**(d - i) * y**i)``.  Roots are
projective points ``(p, q)`` with ``gcd(p, q) == 1`` and a fixed sign
(``q > 0``, or ``(1, 0)`` for the point at ``y = 0``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` by trial division (``n != 0``)."""
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of 0 are unbounded")
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


# above this, trial division of the end coefficients is too slow and real
# roots are isolated instead
TRIAL_DIVISION_LIMIT = 10**8


def content(coeffs: list[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def evaluate(coeffs: list[int], x: int, y: int) -> int:
    d = len(coeffs) - 1
    return sum(c * x ** (d - i) * y**i for i, c in enumerate(coeffs))


def _divide_linear(coeffs: list[int], p: int, q: int) -> list[int]:
    # exact division of f(x, y) by (q*x - p*y); Gauss's lemma keeps it integral
    d = len(coeffs) - 1
    out = []
    rem = 0
    for i in range(d):
        num = coeffs[i] + rem
        if num % q:
            raise ArithmeticError("non-exact division by linear factor")
        b = num // q
        out.append(b)
        rem = b * p
    if coeffs[d] + rem != 0:
        raise ArithmeticError("non-exact division by linear factor")
    return out


@dataclass(frozen=True)
class RootData:
    """Rational roots with multiplicities plus the irrational remainder."""

    roots: tuple[tuple[tuple[int, int], int], ...]
    residual: tuple[int, ...]

    @property
    def residual_degree(self) -> int:
        return len(self.residual) - 1

    def multiplicity(self, point: tuple[int, int]) -> int:
        for r, m in self.roots:
            if r == point:
                return m
        return 0


def rational_roots(coeffs: list[int]) -> RootData:
    """Factor out every rational linear factor of a nonzero binary form.

    The residual is the primitive cofactor without rational roots; its degree counts
    the remaining (irrational) roots with multiplicity.
    """
    f = list(coeffs)
    if not any(f):
        raise ValueError("the zero form has every point as a root")
    roots: list[tuple[tuple[int, int], int]] = []

    lead_zeros = 0
    while f[0] == 0:
        f.pop(0)
        lead_zeros += 1
    if lead_zeros:
        roots.append(((1, 0), lead_zeros))

    tail_zeros = 0
    while f[-1] == 0:
        f.pop()
        tail_zeros += 1
    if tail_zeros:
        roots.append(((0, 1), tail_zeros))

    # f now has nonzero x^d and y^d coefficients; candidate roots x/y = p/q
    # have p | f[-1] and q | f[0].
    if len(f) > 1:
        g = content(f)
        f = [c // g for c in f]
        if max(abs(f[0]), abs(f[-1])) <= TRIAL_DIVISION_LIMIT:
            numerators = divisors(f[-1])
            candidates = [
                (p, q)
                for q in divisors(f[0])
                for p0 in numerators
                for p in (p0, -p0)
                if gcd(p, q) == 1
            ]
        else:
            candidates = _isolated_rational_roots(f)
        for p, q in candidates:
            m = 0
            while len(f) > 1 and evaluate(f, p, q) == 0:
                f = _divide_linear(f, p, q)
                m += 1
            if m:
                roots.append(((p, q), m))
    roots.sort()
    return RootData(tuple(roots), tuple(f))


def _peval(g: list[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(g):
        acc = acc * t + c
    return acc


def _sign_changes(seq: list[list[Fraction]], t: Fraction) -> int:
    signs = [v for v in (_peval(g, t) for g in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def _isolated_rational_roots(f: list[int]) -> list[tuple[int, int]]:
    """Rational roots of ``f(t, 1)`` via Sturm isolation and rational reconstruction.

    Any rational root has denominator at most ``L = |f[0]|``, and two such
    rationals are at least ``1/L^2`` apart, so an isolating interval of
    width below ``1/(2L^2)`` pins the candidate down; it is then checked
    exactly.
    """
    g = [Fraction(c) for c in reversed(f)]
    dg = [i * c for i, c in enumerate(g)][1:]
    common = _poly_gcd(g, dg)
    sqf = _poly_div(g, common) if len(common) > 1 else g
    seq = [sqf, [i * c for i, c in enumerate(sqf)][1:]]
    while len(seq[-1]) > 1:
        r = _poly_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    L = abs(f[0])
    bound = 1 + max(abs(c / sqf[-1]) for c in sqf[:-1]) if len(sqf) > 1 else Fraction(1)
    width = Fraction(1, 2 * L * L)
    found: list[Fraction] = []

    def safe(t: Fraction, step: Fraction) -> Fraction:
        # nudge a split point off the roots of sqf, recording any it hits
        while _peval(sqf, t) == 0:
            found.append(t)
            step /= 3
            t += step
        return t

    lo, hi = safe(-bound, Fraction(1, 7)), safe(bound, Fraction(1, 7))
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = _sign_changes(seq, a) - _sign_changes(seq, b)
        if n == 0:
            continue
        if n > 1:
            mid = safe((a + b) / 2, (b - a) / 5)
            stack += [(a, mid), (mid, b)]
            continue
        sa = _peval(sqf, a) > 0
        while b - a >= width:
            mid = (a + b) / 2
            v = _peval(sqf, mid)
            if v == 0:
                found.append(mid)
                break
            if (v > 0) == sa:
                a = mid
            else:
                b = mid
        else:
            cand = ((a + b) / 2).limit_denominator(L)
            if a < cand < b and _peval(sqf, cand) == 0:
                found.append(cand)
    out = []
    for t in found:
        if t.denominator <= L and (t.numerator, t.denominator) not in out:
            out.append((t.numerator, t.denominator))
    return out


def _poly_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    # exact quotient, lowest degree first
    a = list(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        factor = a[shift + len(b) - 1] / b[-1]
        q[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
    return q


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    # polynomials in t, lowest degree first
    a = list(a)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        while a and a[-1] == 0:
            a.pop()
    return a


def is_squarefree(coeffs: list[int]) -> bool:
    """True iff the binary form has no repeated projective root."""
    f = list(coeffs)
    if not any(f):
        return False
    if f[0] == 0 and (len(f) < 2 or f[1] == 0):
        return False
    if f[-1] == 0 and (len(f) < 2 or f[-2] == 0):
        return False
    # dehomogenize at y = 1 after removing simple roots at infinity / zero
    while f and f[0] == 0:
        f.pop(0)
    while f and f[-1] == 0:
        f.pop()
    g = [Fraction(c) for c in reversed(f)]  # coefficients of t^0, t^1, ...
    if len(g) <= 2:
        return True
    dg = [i * c for i, c in enumerate(g)][1:]
    a, b = g, dg
    while b and any(b):
        a, b = b, _poly_rem(a, b)
    return len(a) == 1


def add(f: list[int], g: list[int]) -> list[int]:
    if len(f) != len(g):
        raise ValueError("binary forms of different degree")
    return [a + b for a, b in zip(f, g)]


def mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def power(f: list[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = mul(out, f)
    return out


def _infinity_order(f: list[int]) -> int:
    # multiplicity of the root (1, 0), i.e. number of leading zero coefficients
    n = 0
    while n < len(f) and f[n] == 0:
        n += 1
    return n


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b and any(b):
        a, b = b, _poly_rem(a, b)
    return a


def common_root_degree(f: list[int], g: list[int]) -> int:
    """Number of common projective roots of two nonzero forms, with multiplicity of the gcd."""
    if not any(f) or not any(g):
        raise ValueError("zero form")
    at_inf = min(_infinity_order(f), _infinity_order(g))
    # f(t, 1) as a polynomial in t, lowest degree first
    ft = [Fraction(c) for c in reversed(f)]
    gt = [Fraction(c) for c in reversed(g)]
    while ft[-1] == 0:
        ft.pop()
    while gt[-1] == 0:
        gt.pop()
    return at_inf + len(_poly_gcd(ft, gt)) - 1
