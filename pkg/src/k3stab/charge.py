"""Central charges on the ample line β = xL, ω = yL.

With L² = 2d and v = (r, n, s) the charge Z = <exp(β + iω), v> is

    Re Z = 2d·n·x − s − r·d·(x² − y²),    Im Z = 2d·y·(n − r·x).

Since the Picard rank is one, the transverse part of c₁ vanishes and the
L-projected charge Z^L coincides with Z for every rank, including rank 0.
Every quantity is a ``Fraction``; floats are rejected at the boundary.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .lattice import MukaiVector, SurfaceContext, self_pairing
from .rational import as_fraction, format_rational, parse_rational

__all__ = [
    "StabilityPoint",
    "ExactComplex",
    "TwistedPolynomial",
    "Ordering",
    "VXResult",
    "central_charge",
    "central_charge_squared_form",
    "real_charge",
    "lambda_",
    "n_function",
    "n_function_at",
    "phase_less",
    "twisted_polynomial",
    "twisted_polynomial_via_pairing",
    "compare_gieseker",
    "in_V_X",
    "in_V_X_brute_force",
    "parse_point",
]


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    @classmethod
    def of(cls, a, b) -> Ordering:
        if a < b:
            return cls.LESS
        if a > b:
            return cls.GREATER
        return cls.EQUAL


@dataclass(frozen=True)
class StabilityPoint:
    """σ_(β,ω) with β = xL, ω = yL and y > 0."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_fraction(self.x))
        object.__setattr__(self, "y", as_fraction(self.y))
        if self.y <= 0:
            raise ValueError(f"ω = yL must be ample, got y = {format_rational(self.y)}")

    def __str__(self) -> str:
        return f"x={format_rational(self.x)},y={format_rational(self.y)}"


@dataclass(frozen=True)
class ExactComplex:
    re: Fraction
    im: Fraction

    def __add__(self, other: ExactComplex) -> ExactComplex:
        return ExactComplex(self.re + other.re, self.im + other.im)

    def __str__(self) -> str:
        return f"({format_rational(self.re)}, {format_rational(self.im)})"


@dataclass(frozen=True)
class TwistedPolynomial:
    """c2·m² + c1·m + c0."""

    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __call__(self, m) -> Fraction:
        m = as_fraction(m)
        return (self.c2 * m + self.c1) * m + self.c0

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c2, self.c1, self.c0)


def real_charge(v: MukaiVector, x: Fraction, y_squared: Fraction, ctx: SurfaceContext) -> Fraction:
    """Re Z, which depends on y only through y²."""
    d = ctx.d
    return 2 * d * v.n * x - v.s - v.r * d * (x * x - y_squared)


def central_charge(v: MukaiVector, sigma: StabilityPoint, ctx: SurfaceContext) -> ExactComplex:
    x, y = sigma.x, sigma.y
    return ExactComplex(real_charge(v, x, y * y, ctx), 2 * ctx.d * y * (v.n - v.r * x))


def central_charge_squared_form(v: MukaiVector, sigma: StabilityPoint,
                                ctx: SurfaceContext) -> ExactComplex:
    """Z = v²/2r + (r/2)(ω + i(δ/r − β))², valid for r ≠ 0.

    Independent of :func:`central_charge`; used to cross-check it.
    """
    if v.r == 0:
        raise ValueError("the completed-square form needs nonzero rank")
    r, d = v.r, ctx.d
    t = Fraction(v.n, r) - sigma.x
    y = sigma.y
    # (yL + i·tL)² = 2d(y² − t² + 2ity)
    square_re = 2 * d * (y * y - t * t)
    square_im = 2 * d * 2 * t * y
    head = Fraction(self_pairing(v, ctx), 2 * r)
    return ExactComplex(head + Fraction(r, 2) * square_re, Fraction(r, 2) * square_im)


def lambda_(v: MukaiVector, sigma: StabilityPoint) -> Fraction:
    """λ = n − r·x; Im Z = 2d·y·λ."""
    return v.n - v.r * sigma.x


def n_function_at(a: MukaiVector, e: MukaiVector, x: Fraction, y_squared: Fraction,
                  ctx: SurfaceContext) -> Fraction:
    """N_{a,e} evaluated from (x, y²); lets wall samples with irrational y stay exact."""
    lam_a = a.n - a.r * x
    lam_e = e.n - e.r * x
    return lam_e * real_charge(a, x, y_squared, ctx) - lam_a * real_charge(e, x, y_squared, ctx)


def n_function(a: MukaiVector, e: MukaiVector, sigma: StabilityPoint,
               ctx: SurfaceContext) -> Fraction:
    """N_{a,e} = λ_e·Re Z(a) − λ_a·Re Z(e).

    Satisfies 2dy·N_{a,e} = Re Z(a)·Im Z(e) − Re Z(e)·Im Z(a).
    """
    return n_function_at(a, e, sigma.x, sigma.y * sigma.y, ctx)


def phase_less(a: MukaiVector, e: MukaiVector, sigma: StabilityPoint,
               ctx: SurfaceContext) -> Ordering:
    """Compare arg Z(a) with arg Z(e) for charges on the same side of the real axis."""
    lam_a, lam_e = lambda_(a, sigma), lambda_(e, sigma)
    if lam_a == 0 or lam_e == 0:
        raise ValueError("phase comparison needs both charges off the real axis")
    if (lam_a > 0) != (lam_e > 0):
        raise ValueError("charges lie in opposite half-planes; compare phases explicitly")
    # Both half-planes: arg Z(a) < arg Z(e) iff the cross product Re Z(a)·Im Z(e) − Re Z(e)·Im Z(a) > 0,
    # and that cross product has the sign of N because 2dy > 0.
    return Ordering.of(0, n_function(a, e, sigma, ctx))


def twisted_polynomial(v: MukaiVector, x_beta, y_omega, ctx: SurfaceContext) -> TwistedPolynomial:
    """Reduced (β, ω)-twisted Hilbert polynomial for β = x_beta·L, ω = y_omega·L."""
    if v.r <= 0:
        raise ValueError(f"twisted polynomial needs positive rank, got r = {v.r}")
    xb, yw = as_fraction(x_beta), as_fraction(y_omega)
    d = ctx.d
    slope = Fraction(v.n, v.r)
    return TwistedPolynomial(
        c2=d * yw * yw,
        c1=2 * d * yw * (slope - xb),
        c0=Fraction(v.s, v.r) - 2 * d * slope * xb + d * xb * xb + 1,
    )


def twisted_polynomial_via_pairing(v: MukaiVector, x_beta, m: int, ctx: SurfaceContext) -> Fraction:
    """−<v(O_X(−m)), exp(−β)·v> / r with ω = L, evaluated at the integer m."""
    if v.r <= 0:
        raise ValueError(f"twisted polynomial needs positive rank, got r = {v.r}")
    xb = as_fraction(x_beta)
    d = ctx.d
    # exp(−β)·(r, n, s) = (r, n − r·x, s − 2d·n·x + d·r·x²)
    tn = v.n - v.r * xb
    ts = v.s - 2 * d * v.n * xb + d * v.r * xb * xb
    line = (1, -m, d * m * m + 1)  # v(O_X(−m))
    pairing = 2 * d * line[1] * tn - line[0] * ts - v.r * line[2]
    return -pairing / Fraction(v.r)


def compare_gieseker(v: MukaiVector, w: MukaiVector, x_beta, y_omega,
                     ctx: SurfaceContext) -> Ordering:
    """Order of p(v) against p(w) for all large arguments."""
    pv = twisted_polynomial(v, x_beta, y_omega, ctx).coefficients()
    pw = twisted_polynomial(w, x_beta, y_omega, ctx).coefficients()
    return Ordering.of(pv, pw)


@dataclass(frozen=True)
class VXResult:
    """Membership of σ in V(X), with the offending spherical class on failure."""

    member: bool
    candidate: MukaiVector | None = None
    real_part: Fraction | None = None

    @property
    def witness(self) -> MukaiVector | None:
        return None if self.member else self.candidate

    def __bool__(self) -> bool:
        return self.member


def in_V_X(sigma: StabilityPoint, ctx: SurfaceContext) -> VXResult:
    """Decide whether Z_σ avoids R≤0 on every spherical class of positive rank.

    Im Z(v) = 0 with r > 0 forces n = r·x. Writing x = p/q in lowest terms,
    q divides r, so (r, n) = (mq, mp); sphericity r·s = d·n² + 1 then makes
    m divide 1. The only candidate is therefore (q, p, (dp² + 1)/q), present
    iff q divides dp² + 1, and its real part is q·d·y² − 1/q.
    """
    p, q = sigma.x.numerator, sigma.x.denominator
    top = ctx.d * p * p + 1
    if top % q:
        return VXResult(True)
    cand = MukaiVector(q, p, top // q)
    re_z = real_charge(cand, sigma.x, sigma.y * sigma.y, ctx)
    return VXResult(re_z > 0, cand, re_z)


def in_V_X_brute_force(sigma: StabilityPoint, ctx: SurfaceContext, bound: int = 50) -> VXResult:
    """Scan spherical classes with 0 < r ≤ bound, |n| ≤ bound."""
    for r in range(1, bound + 1):
        for n in range(-bound, bound + 1):
            top = ctx.d * n * n + 1
            if top % r:
                continue
            v = MukaiVector(r, n, top // r)
            z = central_charge(v, sigma, ctx)
            if z.im == 0 and z.re <= 0:
                return VXResult(False, v, z.re)
    return VXResult(True)


_POINT_RE = re.compile(r"^\s*(?:x\s*=\s*)?([^,=]+?)\s*,\s*(?:y\s*=\s*)?([^,=]+?)\s*$")


def parse_point(text: str) -> StabilityPoint:
    """Parse ``"x=p/q,y=p/q"`` or the short form ``"p/q,p/q"``."""
    m = _POINT_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse stability point {text!r}; expected 'x=p/q,y=p/q'")
    return StabilityPoint(parse_rational(m.group(1)), parse_rational(m.group(2)))
