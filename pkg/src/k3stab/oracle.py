"""Brute-force cross-checks: destabilizer enumeration, walls, region scans.

The enumerator lists integer classes that pass the necessary numerical
conditions for destabilizing v at σ. An empty list means no numerical
destabilizer was found inside the bounds. It is not a proof of stability.

Candidate conditions, with λ_v > 0 (charge in the upper half-plane):
    1 ≤ r_w ≤ max_rank,  w² ≥ −2,  0 < λ_w ≤ λ_v,  N(w, v) ≤ 0,  w ≠ v;
with λ_v < 0: λ_v ≤ λ_w < 0 and N(w, v) ≥ 0 instead. N = 0 marks an
on-wall candidate, anything else is a strict violator.

Finite box. λ bounds n for each rank. w² ≥ −2 gives s ≤ (d·n² + 1)/r.
Re Z(w) = C_w − s with C_w = 2d·n·x − r·d·(x² − y²), and the phase
inequality is λ_v(C_w − s) ≤ λ_w·Re Z(v) (upper) or ≥ (lower); dividing by
λ_v gives s ≥ C_w − λ_w·Re Z(v)/λ_v in both cases.

Optional prunings (``SearchBounds.pruning``), each taken from a
subobject inequality used in the stability proofs:
    upper  a subobject of a Gieseker-stable sheaf has strictly smaller
           reduced Hilbert polynomial (p_ω(w) < p_ω(v), ω = yL);
    lower  a torsion-free quotient of a μ-stable locally free sheaf in
           the shifted heart has strictly larger slope (μ(w) > μ(v)).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .charge import (
    Ordering,
    StabilityPoint,
    compare_gieseker,
    in_V_X,
    lambda_,
    n_function_at,
    real_charge,
)
from .criteria import (
    Assumption,
    Certificate,
    Region,
    Theorem,
    Verdict,
    certify_A4,
    certify_A5,
    certify_A6,
    certify_A10,
    certify_A11,
    region_of,
)
from .lattice import MukaiVector, SurfaceContext
from .rational import as_fraction, format_rational

__all__ = [
    "SearchBounds",
    "Destabilizer",
    "VerificationStatus",
    "Verification",
    "WallPoint",
    "WallCurve",
    "Grid",
    "ScanRow",
    "enumerate_destabilizers",
    "verify_certificate",
    "wall_locus",
    "scan_region",
]


def _floor(q: Fraction) -> int:
    return math.floor(q)


def _ceil(q: Fraction) -> int:
    return math.ceil(q)


@dataclass(frozen=True)
class SearchBounds:
    max_rank: int = 20
    pruning: bool = True

    def __post_init__(self):
        if self.max_rank < 1:
            raise ValueError("max_rank must be positive")


@dataclass(frozen=True)
class Destabilizer:
    vector: MukaiVector
    n_value: Fraction
    on_wall: bool

    def to_dict(self) -> dict:
        return {"vector": str(self.vector), "N": format_rational(self.n_value),
                "on_wall": self.on_wall}


def _passes_pruning(w: MukaiVector, v: MukaiVector, sigma: StabilityPoint,
                    ctx: SurfaceContext, upper: bool) -> bool:
    if upper:
        return compare_gieseker(w, v, 0, sigma.y, ctx) is Ordering.LESS
    return w.n * v.r > v.n * w.r


def _row_pruned(r: int, n: int, v: MukaiVector, upper: bool) -> bool:
    """True when no s can pass the pruning test for this (r, n).

    Both prunings compare slopes first: the reduced polynomials share their
    leading coefficient, and the next one is 2d·y·(n/r − x).
    """
    if upper:
        return n * v.r > v.n * r
    return n * v.r <= v.n * r


def enumerate_destabilizers(v: MukaiVector, sigma: StabilityPoint, ctx: SurfaceContext,
                            bounds: SearchBounds = SearchBounds()) -> list[Destabilizer]:
    """All numerical destabilizer candidates of v at σ, sorted by (r, n, s)."""
    lam_v = lambda_(v, sigma)
    if lam_v == 0:
        raise ValueError("lambda(v) = 0: phase-0 classes are outside the N-function's domain")
    vx = in_V_X(sigma, ctx)
    if not vx.member:
        raise ValueError(f"sigma = ({sigma}) is not in V(X); witness {vx.witness}")
    if bounds.pruning and v.r <= 0:
        raise ValueError("pruned enumeration needs a positive-rank class")
    upper = lam_v > 0
    d, x = ctx.d, sigma.x
    y2 = sigma.y * sigma.y
    re_v = real_charge(v, x, y2, ctx)
    found = []
    for r in range(1, bounds.max_rank + 1):
        rx = r * x
        if upper:
            n_lo, n_hi = _floor(rx) + 1, _floor(rx + lam_v)
        else:
            n_lo, n_hi = _ceil(rx + lam_v), _ceil(rx) - 1
        for n in range(n_lo, n_hi + 1):
            lam_w = n - rx
            if bounds.pruning and _row_pruned(r, n, v, upper):
                continue
            s_hi = (d * n * n + 1) // r
            c_w = 2 * d * n * x - r * d * (x * x - y2)
            s_lo = _ceil(c_w - lam_w * re_v / lam_v)
            for s in range(s_lo, s_hi + 1):
                w = MukaiVector(r, n, s)
                if w == v:
                    continue
                if bounds.pruning and not _passes_pruning(w, v, sigma, ctx, upper):
                    continue
                val = n_function_at(w, v, x, y2, ctx)
                if (val > 0) if upper else (val < 0):  # pragma: no cover - excluded by s_lo
                    continue
                found.append(Destabilizer(w, val, val == 0))
    found.sort(key=lambda c: c.vector)
    return found


class VerificationStatus(enum.Enum):
    VERIFIED = "no numerical destabilizer found"
    FALSIFIED = "falsified"
    UNCONFIRMED = "unconfirmed"


@dataclass(frozen=True)
class Verification:
    status: VerificationStatus
    strict: tuple[Destabilizer, ...]
    on_wall: tuple[Destabilizer, ...]
    recomputed: Verdict
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status is VerificationStatus.VERIFIED


_RECERTIFY = {
    Theorem.A4: certify_A4,
    Theorem.A5: certify_A5,
    Theorem.A10: certify_A10,
    Theorem.A11: certify_A11,
}


def verify_certificate(v: MukaiVector, sigma: StabilityPoint, cert: Certificate,
                       ctx: SurfaceContext, bounds: SearchBounds = SearchBounds()) -> Verification:
    """Cross-check a Stable certificate against the enumerator.

    A strict violator falsifies it. With none found, the certificate is
    verified only if its hypotheses re-check; otherwise it is unconfirmed.
    """
    if cert.verdict is not Verdict.STABLE:
        raise ValueError(f"only Stable certificates can be verified, got {cert.verdict.value}")
    if cert.theorem not in _RECERTIFY:
        raise ValueError(f"theorem {cert.theorem.value} has no destabilizer search")
    recomputed = _RECERTIFY[cert.theorem](v, sigma, ctx, cert.assumptions).verdict
    vx = in_V_X(sigma, ctx)
    if not vx.member:
        return Verification(VerificationStatus.FALSIFIED, (), (), recomputed,
                            f"sigma is outside V(X): spherical class ({vx.witness}) has Z <= 0")
    if lambda_(v, sigma) == 0:
        return Verification(VerificationStatus.UNCONFIRMED, (), (), recomputed,
                            "lambda(v) = 0: no N-function search possible")
    cands = enumerate_destabilizers(v, sigma, ctx, bounds)
    strict = tuple(c for c in cands if not c.on_wall)
    on_wall = tuple(c for c in cands if c.on_wall)
    if strict:
        return Verification(VerificationStatus.FALSIFIED, strict, on_wall, recomputed,
                            f"{len(strict)} strict violator(s), first ({strict[0].vector})")
    if recomputed is Verdict.STABLE:
        return Verification(VerificationStatus.VERIFIED, strict, on_wall, recomputed)
    return Verification(VerificationStatus.UNCONFIRMED, strict, on_wall, recomputed,
                        "hypotheses fail on recomputation but no violator lies within bounds")


# --- walls -------------------------------------------------------------------

@dataclass(frozen=True)
class WallPoint:
    """A point of a wall given by x and y². N depends on y only through y²."""

    x: Fraction
    y_squared: Fraction

    @property
    def y(self) -> Fraction | None:
        """y when y² is the square of a rational, else None."""
        q = self.y_squared
        rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
        if rn * rn == q.numerator and rd * rd == q.denominator:
            return Fraction(rn, rd)
        return None

    def to_dict(self) -> dict:
        y = self.y
        return {"x": format_rational(self.x), "y_squared": format_rational(self.y_squared),
                "y": None if y is None else format_rational(y)}


@dataclass(frozen=True)
class WallCurve:
    """A·x² + B·xy + C·y² + D·x + E·y + F = 0, the zero set of N_{a,e}."""

    a: MukaiVector
    e: MukaiVector
    d: int
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    E: Fraction
    F: Fraction
    samples: tuple[WallPoint, ...] = ()

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def evaluate(self, x, y_squared) -> Fraction:
        # B = E = 0 always, so only y² enters
        x, y2 = as_fraction(x), as_fraction(y_squared)
        return self.A * x * x + self.C * y2 + self.D * x + self.F

    def describe(self) -> str:
        if self.A == 0:
            return f"line x = {format_rational(-self.F / self.D)}"
        c = -self.D / (2 * self.A)
        r2 = c * c - self.F / self.A
        return (f"circle (x - {format_rational(c)})^2 + y^2 = {format_rational(r2)}")

    def to_dict(self) -> dict:
        return {
            "a": str(self.a),
            "e": str(self.e),
            "coefficients": {k: format_rational(getattr(self, k)) for k in "ABCDEF"},
            "curve": self.describe(),
            "samples": [dict(p.to_dict(), N=format_rational(n_function_at(
                self.a, self.e, p.x, p.y_squared, SurfaceContext(self.d))))
                for p in self.samples],
        }


def _sqrt_floor(q: Fraction, scale: int = 100) -> Fraction:
    """Largest k/scale with (k/scale)² ≤ q."""
    return Fraction(math.isqrt(q.numerator * scale * scale // q.denominator), scale)


def _sample_wall(A: Fraction, D: Fraction, F: Fraction, count: int) -> list[WallPoint]:
    if count <= 0:
        return []
    if A == 0:
        if D == 0:
            return []
        x0 = -F / D
        return [WallPoint(x0, Fraction(j * j)) for j in range(1, count + 1)]
    c = -D / (2 * A)
    r2 = c * c - F / A
    if r2 <= 0:
        return []
    rho = _sqrt_floor(r2)
    if rho == 0:
        rho = r2 / (1 + r2)
    pts = []
    for j in range(1, count + 1):
        u = rho * (Fraction(2 * j, count + 1) - 1)
        pts.append(WallPoint(c + u, r2 - u * u))
    return pts


def wall_locus(a: MukaiVector, e: MukaiVector, ctx: SurfaceContext,
               samples: int = 5) -> WallCurve:
    """Expand N_{a,e}(x, y) into conic coefficients and sample the curve.

    With k = r_a·n_e − r_e·n_a the expansion is

        N = d·k·(x² + y²) + (r_e·s_a − r_a·s_e)·x + (n_a·s_e − n_e·s_a),

    a semicircle centred on the x-axis, or a vertical line when k = 0.
    Every sample is re-evaluated through the N-function and must give 0.
    """
    if a.is_proportional_to(e):
        raise ValueError(f"({a}) and ({e}) are proportional; N vanishes identically")
    k = a.r * e.n - e.r * a.n
    A = Fraction(ctx.d * k)
    D = Fraction(e.r * a.s - a.r * e.s)
    F = Fraction(a.n * e.s - e.n * a.s)
    zero = Fraction(0)
    pts = _sample_wall(A, D, F, samples)
    for p in pts:
        if p.y_squared <= 0 or n_function_at(a, e, p.x, p.y_squared, ctx) != 0:
            raise ArithmeticError(f"wall sample ({p.x}, y^2={p.y_squared}) is off the curve")
    return WallCurve(a, e, ctx.d, A, zero, A, D, zero, F, tuple(pts))


# --- scans -------------------------------------------------------------------

@dataclass(frozen=True)
class Grid:
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction
    step: Fraction

    def __post_init__(self):
        for name in ("x0", "x1", "y0", "y1", "step"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.step <= 0:
            raise ValueError("grid step must be positive")
        if self.y0 <= 0:
            raise ValueError("grid must lie in y > 0")

    def xs(self) -> list[Fraction]:
        return _arange(self.x0, self.x1, self.step)

    def ys(self) -> list[Fraction]:
        return _arange(self.y0, self.y1, self.step)


def _arange(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    out = []
    t = lo
    while t <= hi:
        out.append(t)
        t += step
    return out


@dataclass(frozen=True)
class ScanRow:
    x: Fraction
    y: Fraction
    in_vx: bool
    region: Region
    certificates: tuple[tuple[Theorem, Verdict], ...]
    witness: MukaiVector | None = None

    def csv_fields(self) -> list[str]:
        certs = ";".join(f"{t.value}={v.value}" for t, v in self.certificates)
        return [format_rational(self.x), format_rational(self.y),
                "true" if self.in_vx else "false", self.region.value, certs]


def _point_certificates(v, sigma, ctx, assume) -> tuple[tuple[Theorem, Verdict], ...]:
    lam = lambda_(v, sigma)
    if lam > 0:
        certs: list[Certificate] = [certify_A4(v, sigma, ctx, assume), certify_A5(v, sigma, ctx, assume)]
    elif lam < 0:
        certs = [certify_A10(v, sigma, ctx, assume), certify_A11(v, sigma, ctx, assume)]
    else:
        certs = [certify_A6(v, sigma, ctx, assume)]
    return tuple((c.theorem, c.verdict) for c in certs)


def scan_region(v: MukaiVector, grid: Grid, ctx: SurfaceContext,
                assume=(Assumption.MU_STABLE_LOCALLY_FREE,),
                include_zero_column: bool = True) -> list[ScanRow]:
    """Evaluate regions and certificates at every grid point, row-major in (y, x).

    With ``include_zero_column`` the abscissa x = n/r of V_v^0 is added to
    the grid when it falls inside [x0, x1], so the phase-0 line shows up
    even when the step misses it.
    """
    xs = grid.xs()
    if include_zero_column and xs and v.r > 0:
        x_zero = Fraction(v.n, v.r)
        if grid.x0 <= x_zero <= grid.x1 and x_zero not in xs:
            xs = sorted(xs + [x_zero])
    rows = []
    for y in grid.ys():
        for x in xs:
            sigma = StabilityPoint(x, y)
            rv = region_of(v, sigma, ctx)
            rows.append(ScanRow(x, y, rv.in_vx.member, rv.region,
                                _point_certificates(v, sigma, ctx, assume),
                                rv.in_vx.witness))
    return rows

