from fractions import Fraction
from math import lcm


def parse_rational(token):
    """
    Parse an exact rational from text.

    Integers ("3"), decimals ("1.5") and fractions ("7/2") are accepted.

    Args:
        token (str): the text to parse

    Returns:
        Fraction: the exact value

    Raises:
        ValueError: if the token is not a rational literal
    """
    token = token.strip()
    if not token:
        raise ValueError('empty rational literal')
    return Fraction(token)


def format_rational(value):
    """Render a rational as "p/q", or as a bare integer when q = 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def common_denominator(values):
    """Least common multiple of the denominators (1 for an empty or integral vector)."""
    return lcm(1, *(Fraction(v).denominator for v in values))
