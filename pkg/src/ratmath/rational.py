from fractions import Fraction

from src.errors import FormatError

# Fraction is always reduced with a positive denominator, and 0 is 0/1,
# so structural equality is value equality.
Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse "a/b" or "a" into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise FormatError(f"expected a rational string, got {text!r}")
    cleaned = text.strip()
    num, sep, den = cleaned.partition("/")
    try:
        if sep:
            if int(den) <= 0:
                raise FormatError(f"denominator must be positive in {text!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except ValueError:
        raise FormatError(f"not a rational number: {text!r}") from None


def format_rational(value: Fraction) -> str:
    """Text form: "a/b", or "a" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
