"""Exact rational I/O: ``"p/q"`` or ``"p"``, always in lowest terms on output."""
from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse rational {text!r}; expected 'p' or 'p/q'")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_fraction(value) -> Fraction:
    """Coerce int/Fraction/str to Fraction, refusing floats."""
    if isinstance(value, float):
        raise TypeError("floating-point input is not allowed; pass an int, Fraction or 'p/q' string")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)
