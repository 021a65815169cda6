"""Decidable stability certificates and region predicates on the ample line.

Sheaf-level premises (Gieseker stability, μ-stability, local freeness) are
not decidable from a Mukai vector. Callers state them as
:class:`Assumption` flags, which are recorded in the certificate as given;
only the numerical implications are checked here.

Bound conventions, with λ = n − r·x and the factor
f(v) = 1 if v² = −2, else v²/(2r) + 1:

    A4   2d·λ·f ≤ d·y²          A10  −2d·λ·f < d·y²
    A5     λ·f ≤ d·y²           A11    −λ·f < d·y²

A5/A11 are the Picard-rank-one forms (bounds divided by L² = 2d). The
non-strict/strict split is kept exactly; equality in A10/A11 is a failed
bound.
"""
from __future__ import annotations

import enum
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .charge import StabilityPoint, VXResult, in_V_X, lambda_
from .lattice import (
    POINT,
    MukaiVector,
    SurfaceContext,
    euler_form,
    fine_moduli_gcd,
    is_spherical,
    self_pairing,
    spherical_reflect,
)
from .rational import format_rational

__all__ = [
    "Theorem",
    "Verdict",
    "Assumption",
    "Hypothesis",
    "Certificate",
    "Region",
    "RegionVerdict",
    "ModuliVerdict",
    "ModuliClassification",
    "Factor",
    "BoundaryDecomposition",
    "certify",
    "certify_A4",
    "certify_A5",
    "certify_A10",
    "certify_A11",
    "certify_A6",
    "region_of",
    "region_VL_pos",
    "classify_moduli_B4",
    "boundary_decomposition",
    "chi_positivity_C3",
    "bound_factor",
]


class Theorem(enum.Enum):
    A4 = "A4"
    A5 = "A5"
    A10 = "A10"
    A11 = "A11"
    A6 = "A6"
    VL_POS = "VL_POS"


class Verdict(enum.Enum):
    STABLE = "Stable"
    SEMISTABLE_PHASE0 = "SemistablePhase0"
    STABLE_IFF_MU_STABLE_LOCALLY_FREE = "StableIffMuStableLocallyFree"
    NOT_APPLICABLE = "NotApplicable"
    # Reserved; the ≤ bounds certify at equality and the < bounds fail there.
    ON_BOUNDARY = "OnBoundary"


class Assumption(enum.Enum):
    GIESEKER_STABLE = "gieseker-stable"
    MU_STABLE_LOCALLY_FREE = "mu-stable-locally-free"
    MU_SEMISTABLE = "mu-semistable"


# μ-stable locally free ⇒ Gieseker stable ⇒ μ-semistable (torsion-free sheaves).
_IMPLIED = {
    Assumption.MU_STABLE_LOCALLY_FREE: {Assumption.GIESEKER_STABLE, Assumption.MU_SEMISTABLE},
    Assumption.GIESEKER_STABLE: {Assumption.MU_SEMISTABLE},
    Assumption.MU_SEMISTABLE: set(),
}


def _closure(assumptions: Iterable[Assumption | str]) -> frozenset[Assumption]:
    out: set[Assumption] = set()
    for a in assumptions:
        a = Assumption(a)
        out.add(a)
        out |= _IMPLIED[a]
    return frozenset(out)


_RELATIONS = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "==": operator.eq,
    "!=": operator.ne,
}


@dataclass(frozen=True)
class Hypothesis:
    """One checked condition. ``lhs``/``rhs`` are None for assumed flags."""

    name: str
    relation: str
    lhs: Fraction | None
    rhs: Fraction | None
    holds: bool

    @classmethod
    def compare(cls, name: str, lhs, relation: str, rhs) -> Hypothesis:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(name, relation, lhs, rhs, _RELATIONS[relation](lhs, rhs))

    @classmethod
    def flag(cls, name: str, holds: bool) -> Hypothesis:
        return cls(name, "assumed", None, None, holds)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "relation": self.relation,
            "rhs": None if self.rhs is None else format_rational(self.rhs),
            "holds": self.holds,
        }

    def __str__(self) -> str:
        mark = "ok  " if self.holds else "FAIL"
        if self.lhs is None:
            return f"[{mark}] {self.name}"
        return (f"[{mark}] {self.name}: {format_rational(self.lhs)} {self.relation} "
                f"{format_rational(self.rhs)}")


def _vx_to_dict(vx: VXResult) -> dict:
    return {
        "member": vx.member,
        "witness": None if vx.witness is None else str(vx.witness),
        "candidate": None if vx.candidate is None else str(vx.candidate),
        "candidate_re_z": None if vx.real_part is None else format_rational(vx.real_part),
    }


@dataclass(frozen=True)
class Certificate:
    theorem: Theorem
    verdict: Verdict
    v: MukaiVector | None
    sigma: StabilityPoint
    d: int
    hypotheses: tuple[Hypothesis, ...]
    assumptions: frozenset[Assumption] = frozenset()
    in_vx: VXResult | None = None
    conclusions: tuple[str, ...] = ()

    @property
    def requires_V_X(self) -> bool:
        return True

    @property
    def failed(self) -> list[str]:
        return [h.name for h in self.hypotheses if not h.holds]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "verdict": self.verdict.value,
            "v": None if self.v is None else str(self.v),
            "sigma": {"x": format_rational(self.sigma.x), "y": format_rational(self.sigma.y)},
            "d": self.d,
            "assumptions": sorted(a.value for a in self.assumptions),
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "requires_V_X": self.requires_V_X,
            "V_X": None if self.in_vx is None else _vx_to_dict(self.in_vx),
            "failed": self.failed,
            "conclusions": list(self.conclusions),
        }

    def to_text(self) -> str:
        head = f"{self.theorem.value}: {self.verdict.value}"
        if self.v is not None:
            head += f"  v=({self.v})"
        lines = [head + f"  sigma=({self.sigma})  d={self.d}"]
        lines += [f"  {h}" for h in self.hypotheses]
        if self.in_vx is not None and not self.in_vx.member:
            lines.append(f"  V(X) witness: ({self.in_vx.witness}), Re Z = "
                         f"{format_rational(self.in_vx.real_part)}")
        lines += [f"  => {c}" for c in self.conclusions]
        return "\n".join(lines)


def bound_factor(v: MukaiVector, ctx: SurfaceContext) -> Fraction:
    """1 for v² = −2, v²/(2r) + 1 for v² ≥ 0 (r > 0)."""
    sq = self_pairing(v, ctx)
    if sq == -2:
        return Fraction(1)
    return Fraction(sq, 2 * v.r) + 1


_BOUND_SPEC = {
    # theorem: (sign of λ required, bound carries L² = 2d, relation, assumption)
    Theorem.A4: (1, True, "<=", Assumption.GIESEKER_STABLE),
    Theorem.A5: (1, False, "<=", Assumption.GIESEKER_STABLE),
    Theorem.A10: (-1, True, "<", Assumption.MU_STABLE_LOCALLY_FREE),
    Theorem.A11: (-1, False, "<", Assumption.MU_STABLE_LOCALLY_FREE),
}

_STABLE_CONCLUSION = {
    1: "v is the class of a sigma-stable object in the heart (Im Z > 0)",
    -1: "v is the class of a sigma-stable object whose shift by 1 lies in the heart (Im Z < 0)",
}


def _certify_bound(theorem: Theorem, v: MukaiVector, sigma: StabilityPoint,
                   ctx: SurfaceContext, assume) -> Certificate:
    sign, general, rel, needed = _BOUND_SPEC[theorem]
    assumptions = _closure(assume)
    lam = lambda_(v, sigma)
    sq = self_pairing(v, ctx)
    hyps = [
        Hypothesis.flag(f"assumed {needed.value}", needed in assumptions),
        Hypothesis.compare("rank r", v.r, ">", 0),
        Hypothesis.compare("self-pairing v^2", sq, ">=", -2),
        Hypothesis.compare("lambda = n - r x", lam, ">" if sign > 0 else "<", 0),
    ]
    vx = in_V_X(sigma, ctx)
    hyps.append(Hypothesis.flag("sigma in V(X)", vx.member))
    if v.r > 0 and sq >= -2:
        lhs = sign * (ctx.degree if general else 1) * lam * bound_factor(v, ctx)
        hyps.append(Hypothesis.compare(
            f"{'case v^2=-2' if sq == -2 else 'case v^2>=0'} bound", lhs, rel,
            ctx.d * sigma.y * sigma.y))
    ok = all(h.holds for h in hyps)
    return Certificate(
        theorem=theorem,
        verdict=Verdict.STABLE if ok else Verdict.NOT_APPLICABLE,
        v=v, sigma=sigma, d=ctx.d,
        hypotheses=tuple(hyps),
        assumptions=assumptions,
        in_vx=vx,
        conclusions=(_STABLE_CONCLUSION[sign],) if ok else (),
    )


def certify_A4(v: MukaiVector, sigma: StabilityPoint, ctx: SurfaceContext,
               assume=()) -> Certificate:
    """Gieseker-stable class with λ > 0, general-NS bound 2dλ·f ≤ dy²."""
    return _certify_bound(Theorem.A4, v, sigma, ctx, assume)


def certify_A5(v: MukaiVector, sigma: StabilityPoint, ctx: SurfaceContext,
               assume=()) -> Certificate:
    """Picard-rank-one strengthening of A4: λ·f ≤ dy²."""
    return _certify_bound(Theorem.A5, v, sigma, ctx, assume)


def certify_A10(v: MukaiVector, sigma: StabilityPoint, ctx: SurfaceContext,
                assume=()) -> Certificate:
    """μ-stable locally free class with λ < 0, strict bound −2dλ·f < dy²."""
    return _certify_bound(Theorem.A10, v, sigma, ctx, assume)


def certify_A11(v: MukaiVector, sigma: StabilityPoint, ctx: SurfaceContext,
                assume=()) -> Certificate:
    """Picard-rank-one strengthening of A10: −λ·f < dy²."""
    return _certify_bound(Theorem.A11, v, sigma, ctx, assume)


def certify_A6(v: MukaiVector, sigma: StabilityPoint, ctx: SurfaceContext,
               assume=()) -> Certificate:
    """Phase-0 case λ = 0.

    With any assumption implying μ-semistability the class is σ-semistable
    of phase 0. Independently of flags, σ-stability with phase 0 is
    equivalent to being a μ-stable locally free sheaf; the certificate
    records that equivalence since local freeness is not numerical.
    """
    assumptions = _closure(assume)
    vx = in_V_X(sigma, ctx)
    hyps = [
        Hypothesis.compare("rank r", v.r, "!=", 0),
        Hypothesis.compare("lambda = n - r x", lambda_(v, sigma), "==", 0),
        Hypothesis.flag("sigma in V(X)", vx.member),
    ]
    biconditional = ("sigma-stable with phase 0 if and only if v is the class of a "
                     "mu-stable locally free sheaf")
    if not all(h.holds for h in hyps):
        verdict, conclusions = Verdict.NOT_APPLICABLE, ()
    elif Assumption.MU_SEMISTABLE in assumptions:
        verdict = Verdict.SEMISTABLE_PHASE0
        conclusions = ("sigma-semistable with phase 0", biconditional)
    else:
        verdict, conclusions = Verdict.STABLE_IFF_MU_STABLE_LOCALLY_FREE, (biconditional,)
    hyps.append(Hypothesis.flag("assumed mu-semistable torsion free",
                                Assumption.MU_SEMISTABLE in assumptions))
    return Certificate(Theorem.A6, verdict, v, sigma, ctx.d, tuple(hyps),
                       assumptions, vx, conclusions)


_CERTIFIERS = {
    Theorem.A4: certify_A4,
    Theorem.A5: certify_A5,
    Theorem.A10: certify_A10,
    Theorem.A11: certify_A11,
    Theorem.A6: certify_A6,
}


def certify(v: MukaiVector, sigma: StabilityPoint, ctx: SurfaceContext, assume=(),
            theorem: Theorem | str | None = None) -> Certificate:
    """Run the named theorem, or pick A5/A6/A11 from the sign of λ."""
    if theorem is not None:
        theorem = Theorem(theorem)
        if theorem is Theorem.VL_POS:
            return region_VL_pos(sigma, ctx)
        return _CERTIFIERS[theorem](v, sigma, ctx, assume)
    lam = lambda_(v, sigma)
    if lam > 0:
        return certify_A5(v, sigma, ctx, assume)
    if lam < 0:
        return certify_A11(v, sigma, ctx, assume)
    return certify_A6(v, sigma, ctx, assume)


# --- regions -----------------------------------------------------------------

class Region(enum.Enum):
    V_PLUS = "V_plus"
    V_ZERO = "V_zero"
    V_MINUS = "V_minus"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class RegionVerdict:
    region: Region
    lam: Fraction
    factor: Fraction
    bound_lhs: Fraction | None
    bound_rhs: Fraction
    in_vx: VXResult

    def to_dict(self) -> dict:
        return {
            "region": self.region.value,
            "lambda": format_rational(self.lam),
            "factor": format_rational(self.factor),
            "bound_lhs": None if self.bound_lhs is None else format_rational(self.bound_lhs),
            "bound_rhs": format_rational(self.bound_rhs),
            "V_X": _vx_to_dict(self.in_vx),
        }


def region_of(v: MukaiVector, sigma: StabilityPoint, ctx: SurfaceContext) -> RegionVerdict:
    """Locate σ among V_v^+, V_v^0, V_v^- (all inside V(X)).

    Points outside V(X) are reported as Outside even when λ = 0.
    """
    if v.r <= 0:
        raise ValueError(f"regions are defined for positive rank, got r = {v.r}")
    if self_pairing(v, ctx) < -2:
        raise ValueError(f"regions need v^2 >= -2, got {self_pairing(v, ctx)}")
    lam = lambda_(v, sigma)
    f = bound_factor(v, ctx)
    rhs = ctx.d * sigma.y * sigma.y
    vx = in_V_X(sigma, ctx)
    lhs = None if lam == 0 else abs(lam) * f
    if not vx.member:
        region = Region.OUTSIDE
    elif lam == 0:
        region = Region.V_ZERO
    elif lhs <= rhs:
        region = Region.V_PLUS if lam > 0 else Region.V_MINUS
    else:
        region = Region.OUTSIDE
    return RegionVerdict(region, lam, f, lhs, rhs, vx)


def region_VL_pos(sigma: StabilityPoint, ctx: SurfaceContext) -> Certificate:
    """σ ∈ V_L^{>0}: L² − βL ≤ ω²/2, i.e. 2d(1 − x) ≤ d·y², inside V(X)."""
    vx = in_V_X(sigma, ctx)
    hyps = (
        Hypothesis.compare("L^2 - beta.L <= omega^2/2", 2 * ctx.d * (1 - sigma.x), "<=",
                           ctx.d * sigma.y * sigma.y),
        Hypothesis.flag("sigma in V(X)", vx.member),
    )
    ok = all(h.holds for h in hyps)
    conclusions = ("sigma lies in the image of U(X) under the spherical twist by L; "
                   "L tensor I_x is sigma-stable for every point x",) if ok else ()
    return Certificate(Theorem.VL_POS, Verdict.STABLE if ok else Verdict.NOT_APPLICABLE,
                       None, sigma, ctx.d, hyps, frozenset(), vx, conclusions)


# --- fine moduli classification ----------------------------------------------

class ModuliVerdict(enum.Enum):
    MU_STABLE_LOCALLY_FREE = "MuStableLocallyFree"
    SQUARE_AMBIGUOUS = "SquareAmbiguous"
    NOT_FINE = "NotFine"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class ModuliClassification:
    v: MukaiVector
    d: int
    verdict: ModuliVerdict
    gcd: int
    fine: bool
    rank_square: bool
    ell: int | None = None
    witness: MukaiVector | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "v": str(self.v),
            "d": self.d,
            "verdict": self.verdict.value,
            "gcd": self.gcd,
            "fine": self.fine,
            "rank_square": self.rank_square,
            "ell": self.ell,
            "witness": None if self.witness is None else str(self.witness),
            "reason": self.reason,
        }

    def to_text(self) -> str:
        out = f"{self.verdict.value}  v=({self.v})  d={self.d}  gcd={self.gcd}"
        if self.rank_square:
            out += f"  rank={self.ell}^2"
        if self.witness is not None:
            out += f"  witness={self.witness}"
        if self.reason:
            out += f"\n  {self.reason}"
        return out


def classify_moduli_B4(v: MukaiVector, ctx: SurfaceContext) -> ModuliClassification:
    """Classify the fine moduli space of sheaves with isotropic class v.

    The gcd test runs before the isotropy test, so a non-fine vector is
    reported NotFine whatever its square.
    """
    g = fine_moduli_gcd(v, ctx)
    fine = g == 1
    ell = math.isqrt(v.r) if v.r > 0 else None
    square = ell is not None and ell * ell == v.r
    base = dict(v=v, d=ctx.d, gcd=g, fine=fine, rank_square=square,
                ell=ell if square else None)
    if v.r <= 0:
        return ModuliClassification(verdict=ModuliVerdict.NOT_APPLICABLE,
                                    reason="rank must be positive", **base)
    if not fine:
        return ModuliClassification(verdict=ModuliVerdict.NOT_FINE,
                                    reason=f"gcd(r, n L^2, s) = {g} != 1", **base)
    if self_pairing(v, ctx) != 0:
        return ModuliClassification(verdict=ModuliVerdict.NOT_APPLICABLE,
                                    reason=f"v^2 = {self_pairing(v, ctx)} != 0", **base)
    if not square:
        return ModuliClassification(verdict=ModuliVerdict.MU_STABLE_LOCALLY_FREE,
                                    reason="rank is not a perfect square", **base)
    # v + v(O_x) would be ell copies of a spherical class w
    target = v + POINT
    if target.r % ell or target.n % ell or target.s % ell:
        return ModuliClassification(verdict=ModuliVerdict.MU_STABLE_LOCALLY_FREE,
                                    reason="(v + (0,0,1))/ell is not integral", **base)
    w = MukaiVector(target.r // ell, target.n // ell, target.s // ell)
    if not is_spherical(w, ctx):  # pragma: no cover - forced by v^2 = 0 and ell^2 = r
        return ModuliClassification(verdict=ModuliVerdict.MU_STABLE_LOCALLY_FREE,
                                    reason="(v + (0,0,1))/ell is not spherical", **base)
    return ModuliClassification(
        verdict=ModuliVerdict.SQUARE_AMBIGUOUS, witness=w,
        reason="both the mu-stable locally free case and the properly Gieseker stable "
               "case (moduli isomorphic to X, transform a spherical twist) remain numerically possible",
        **base)


# --- boundary decompositions -------------------------------------------------

@dataclass(frozen=True)
class Factor:
    """A JH factor ``label`` with class ``vector``, shifted by ``shift``."""

    label: str
    vector: MukaiVector
    multiplicity: int
    shift: int = 0

    @property
    def signed_class(self) -> MukaiVector:
        return ((-1) ** self.shift * self.multiplicity) * self.vector

    def to_dict(self) -> dict:
        return {"label": self.label, "vector": str(self.vector),
                "multiplicity": self.multiplicity, "shift": self.shift}


@dataclass(frozen=True)
class BoundaryDecomposition:
    a: MukaiVector
    plus: tuple[Factor, ...]
    minus: tuple[Factor, ...]
    sign_convention: str = "v(E[k]) = (-1)^k v(E); signed sum of factors equals v(O_x)"

    @staticmethod
    def signed_sum(factors: Iterable[Factor]) -> MukaiVector:
        total = MukaiVector(0, 0, 0)
        for f in factors:
            total = total + f.signed_class
        return total

    def to_dict(self) -> dict:
        return {
            "a": str(self.a),
            "A_plus": [f.to_dict() for f in self.plus],
            "A_minus": [f.to_dict() for f in self.minus],
            "sign_convention": self.sign_convention,
        }


def boundary_decomposition(a: MukaiVector, ctx: SurfaceContext) -> BoundaryDecomposition:
    """Vector-level JH factors of O_x on the two wall types of a spherical class.

    A⁺:  A^{⊕r} → O_x → T_A(O_x)
    A⁻:  T_A⁻¹(O_x) → O_x → A^{⊕r}[2]

    On the lattice both twists act by the same reflection, so both branches
    carry the class (0,0,1) − r·a.
    """
    if not is_spherical(a, ctx):
        raise ValueError(f"{a} is not spherical")
    if a.r <= 0:
        raise ValueError(f"spherical class must have positive rank, got r = {a.r}")
    twisted = spherical_reflect(POINT, a, ctx)
    plus = (Factor("A", a, a.r, 0), Factor("T_A(O_x)", twisted, 1, 0))
    minus = (Factor("T_A^-1(O_x)", twisted, 1, 0), Factor("A", a, a.r, 2))
    return BoundaryDecomposition(a, plus, minus)


# --- chi positivity ----------------------------------------------------------

def chi_positivity_C3(a: MukaiVector, e: MukaiVector, ctx: SurfaceContext) -> tuple[int, Fraction]:
    """χ(a, e) and its closed form d·(n_a/r_a − n_e/r_e)² + 1/r_a².

    Requires a spherical, e isotropic, both of positive rank; then
    χ = r_a·r_e·closed_form > 0.
    """
    if a.r <= 0 or e.r <= 0:
        raise ValueError("both classes need positive rank")
    if self_pairing(a, ctx) != -2:
        raise ValueError(f"{a} is not spherical")
    if self_pairing(e, ctx) != 0:
        raise ValueError(f"{e} is not isotropic")
    chi = euler_form(a, e, ctx)
    gap = Fraction(a.n, a.r) - Fraction(e.n, e.r)
    closed = ctx.d * gap * gap + Fraction(1, a.r * a.r)
    if chi != a.r * e.r * closed or chi <= 0:
        raise ArithmeticError(f"chi identity failed for a={a}, e={e}: chi={chi}, closed={closed}")
    return chi, closed

