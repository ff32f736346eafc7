"""Exact rational parsing and printing."""

from fractions import Fraction


class ParseError(ValueError):
    """Malformed input text or file."""


def parse_rational(text):
    """Parse a decimal (``"1.2"``) or ``"p/q"`` literal exactly.

    >>> parse_rational("1.2")
    Fraction(6, 5)
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError) as exc:
        raise ParseError(f"not a rational literal: {text!r}") from exc


def format_rational(x):
    """Exact decimal when the denominator is ``2**a * 5**b``, else ``"p/q"``.

    >>> format_rational(Fraction(6, 5)), format_rational(Fraction(1, 3))
    ('1.2', '1/3')
    """
    x = Fraction(x)
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    places = max(twos, fives)
    if places == 0:
        return str(x.numerator)
    scaled = abs(x.numerator) * 10**places // x.denominator
    sign = "-" if x < 0 else ""
    digits = str(scaled).rjust(places + 1, "0")
    whole, frac = digits[:-places], digits[-places:].rstrip("0")
    return f"{sign}{whole}.{frac}"


def order_keys(values):
    """Replace each value by its rank among the distinct values.

    Returns ``(keys, levels)`` with ``levels[keys[i]] == values[i]``.
    """
    levels = sorted(set(values))
    index = {v: k for k, v in enumerate(levels)}
    return [index[v] for v in values], levels
