"""Exact extended-nonnegative rationals.

Finite values are :class:`fractions.Fraction`; the single extended value is
``math.inf``, which compares and adds correctly against fractions.
"""
import math
from fractions import Fraction

INF = math.inf


def ext(value):
    """Coerce ``value`` to an exact rational or ``INF``.

    Floats are rejected (other than infinity) so that no rounding can leak in.
    Strings follow the file format: ``"p"``, ``"p/q"`` or ``"inf"``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not distances")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value == INF:
            return INF
        raise TypeError(f"float {value!r} is not exact; use a Fraction or a 'p/q' string")
    if isinstance(value, str):
        return parse_ext(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_ext(text):
    s = text.strip()
    if s == "inf":
        return INF
    if not s or any(c not in "0123456789-/" for c in s):
        raise ValueError(f"malformed rational {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def format_ext(value):
    if value == INF:
        return "inf"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_finite(value):
    return value != INF
