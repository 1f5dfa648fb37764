"""Exact rationals as used in configuration files: strings "p/q" or integers."""

from fractions import Fraction


def parse_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Canonical form: lowest terms, "p/q" or plain "p" for integers."""
    return str(Fraction(value))
