from __future__ import annotations

from fractions import Fraction


def frac(x) -> str:
    """Rationals as "a/b" (integers without a denominator)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s.strip())
