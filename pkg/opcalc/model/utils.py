from fractions import Fraction

import sympy


def build_error(message, error_code, traceback=None):
    return {"error": message, "stacktrace": traceback}, error_code


def sign(exponent):
    return -1 if exponent % 2 else 1


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(raw):
    # bool is an int subclass; floats are rejected to keep inputs exact
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ValueError(f"Coefficient {raw!r} is not an exact rational")
    if isinstance(raw, (int, Fraction)):
        return Fraction(raw)
    if isinstance(raw, str):
        return Fraction(raw.strip())
    raise ValueError(f"Coefficient {raw!r} is not an exact rational")


def to_fraction(value):
    """Converts a sympy Rational (or anything Fraction accepts) to a Fraction."""
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def to_rational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)
