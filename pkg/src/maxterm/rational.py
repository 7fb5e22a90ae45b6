"""Exact rational arithmetic for all exact inputs and exact bounds.

Family parameters, certification targets, tail and Lipschitz bounds all travel
as :class:`fractions.Fraction`, which already guarantees the two invariants we
rely on everywhere: positive denominator and gcd-reduced canonical form after
every operation.  Nothing in this module touches floating point; decimal
rendering lives with the certificate emitter.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_DECIMAL_RE = re.compile(r"^[+-]?\d+(\.\d+)?$")
_FRACTION_RE = re.compile(r"^([+-]?\d+)/(\d+)$")


def rational_from_decimal(s: str) -> Fraction:
    """Parse a finite decimal literal ("3.56850", "-0.25", "7") exactly.

    Scientific notation and anything float-shaped beyond an optional sign,
    integer part and fraction part is rejected: exact inputs must never pass
    through binary floating point.
    """
    s = s.strip()
    if not _DECIMAL_RE.match(s):
        raise ValueError(f"not a finite decimal literal: {s!r}")
    return Fraction(s)


def parse_rational(s: str) -> Fraction:
    """Parse the CLI rational syntax: either "p/q" or a decimal literal."""
    s = s.strip()
    m = _FRACTION_RE.match(s)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in rational literal: {s!r}")
        return Fraction(num, den)
    return rational_from_decimal(s)


def rational_pow(a: Fraction, e: int) -> Fraction:
    """Exact a**e for integer e, negative exponents included.

    Raising zero to a negative power is an error, not an infinity.
    """
    if a == 0 and e < 0:
        raise ZeroDivisionError("0 cannot be raised to a negative power")
    return a ** e
