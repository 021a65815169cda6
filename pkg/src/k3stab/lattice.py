"""Numerical Grothendieck lattice of a K3 surface with Picard group Z·L.

A class r ⊕ nL ⊕ s is stored as the integer triple (r, n, s); with
L² = 2d the Mukai pairing reads

    <(r, n, s), (r', n', s')> = 2d·n·n' − r·s' − r'·s.

Python integers are unbounded, so nothing here can overflow.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

__all__ = [
    "SurfaceContext",
    "MukaiVector",
    "POINT",
    "STRUCTURE_SHEAF",
    "mukai_pairing",
    "euler_form",
    "self_pairing",
    "is_spherical",
    "is_isotropic",
    "spherical_reflect",
    "fine_moduli_gcd",
    "parse_vector",
    "parse_context",
]


@dataclass(frozen=True)
class SurfaceContext:
    """Picard-rank-one K3 surface, fixed by the half-degree ``d`` (L² = 2d)."""

    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or isinstance(self.d, bool) or self.d < 1:
            raise ValueError(f"half-degree d must be a positive integer, got {self.d!r}")

    @property
    def degree(self) -> int:
        return 2 * self.d

    def __str__(self) -> str:
        return f"d={self.d}"


@dataclass(frozen=True, order=True)
class MukaiVector:
    r: int
    n: int
    s: int

    def __post_init__(self):
        for name in ("r", "n", "s"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"Mukai vector component {name} must be an int, got {value!r}")

    def __add__(self, other: MukaiVector) -> MukaiVector:
        return MukaiVector(self.r + other.r, self.n + other.n, self.s + other.s)

    def __sub__(self, other: MukaiVector) -> MukaiVector:
        return MukaiVector(self.r - other.r, self.n - other.n, self.s - other.s)

    def __neg__(self) -> MukaiVector:
        return MukaiVector(-self.r, -self.n, -self.s)

    def __mul__(self, k: int) -> MukaiVector:
        return MukaiVector(k * self.r, k * self.n, k * self.s)

    __rmul__ = __mul__

    def __iter__(self):
        return iter((self.r, self.n, self.s))

    def __str__(self) -> str:
        return f"{self.r},{self.n},{self.s}"

    def is_zero(self) -> bool:
        return self.r == 0 and self.n == 0 and self.s == 0

    def is_proportional_to(self, other: MukaiVector) -> bool:
        """True when the two triples are linearly dependent over Q."""
        a, b = tuple(self), tuple(other)
        return all(a[i] * b[j] == a[j] * b[i] for i in range(3) for j in range(i + 1, 3))


# v(O_x) and v(O_X)
POINT = MukaiVector(0, 0, 1)
STRUCTURE_SHEAF = MukaiVector(1, 0, 1)


def mukai_pairing(v: MukaiVector, w: MukaiVector, ctx: SurfaceContext) -> int:
    return 2 * ctx.d * v.n * w.n - v.r * w.s - w.r * v.s


def euler_form(v: MukaiVector, w: MukaiVector, ctx: SurfaceContext) -> int:
    """χ(v, w) = −<v, w>."""
    return -mukai_pairing(v, w, ctx)


def self_pairing(v: MukaiVector, ctx: SurfaceContext) -> int:
    return mukai_pairing(v, v, ctx)


def is_spherical(v: MukaiVector, ctx: SurfaceContext) -> bool:
    return self_pairing(v, ctx) == -2


def is_isotropic(v: MukaiVector, ctx: SurfaceContext) -> bool:
    return self_pairing(v, ctx) == 0


def spherical_reflect(v: MukaiVector, a: MukaiVector, ctx: SurfaceContext) -> MukaiVector:
    """Action of the spherical twist by a class ``a`` with a² = −2.

    Returns v + <v, a>·a. This is an involutive isometry, so the twist and
    its inverse act identically on the lattice.
    """
    if not is_spherical(a, ctx):
        raise ValueError(f"reflection vector {a} is not spherical (a² = {self_pairing(a, ctx)})")
    return v + mukai_pairing(v, a, ctx) * a


def fine_moduli_gcd(v: MukaiVector, ctx: SurfaceContext) -> int:
    """gcd(r, n·L², s); the zero vector gives 0."""
    return math.gcd(v.r, v.n * ctx.degree, v.s)


_VECTOR_RE = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$")
_CONTEXT_RE = re.compile(r"^\s*(?:d\s*=\s*)?(\d+)\s*$")


def parse_vector(text: str) -> MukaiVector:
    """Parse ``"r,n,s"``."""
    m = _VECTOR_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse Mukai vector {text!r}; expected 'r,n,s'")
    return MukaiVector(*(int(g) for g in m.groups()))


def parse_context(text: str) -> SurfaceContext:
    """Parse ``"d=3"`` (a bare ``"3"`` is accepted too)."""
    m = _CONTEXT_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse surface context {text!r}; expected 'd=<positive integer>'")
    return SurfaceContext(int(m.group(1)))
