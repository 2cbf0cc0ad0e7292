"""Plain-text polynomial format: parse and pretty-print, exact round-trip.

The grammar is deliberately small: terms made of an optional run of signs,
a rational coefficient (`3`, `3/4`), an optional `x` with an optional `^`
exponent, joined by `+`/`-`. Terms may appear in any order and repeated
exponents are summed; whitespace is ignored everywhere. The formatter emits
the canonical descending form (`x^4+2x^3+3x^2+2x+1`, `1/4x^2+1/2x+1`) and
`parse_polynomial(format_polynomial(p)) == p` holds exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .polynomial import Polynomial, Scalar


def parse_polynomial(text: str) -> Polynomial:
    """Parse polynomial text into exact coefficients.

    Raises ParseError (with the byte offset of the problem) on malformed
    input, including empty input and zero denominators.
    """
    n = len(text)
    pos = 0
    terms: dict = {}

    def skip_ws(p: int) -> int:
        while p < n and text[p].isspace():
            p += 1
        return p

    def scan_int(p: int, what: str):
        start = p
        while p < n and text[p].isdigit():
            p += 1
        if p == start:
            raise ParseError(f"expected {what}", start)
        return int(text[start:p]), p

    pos = skip_ws(pos)
    if pos >= n:
        raise ParseError("expected a polynomial, got empty input", pos)

    first = True
    while True:
        pos = skip_ws(pos)
        if pos >= n:
            break
        sign = 1
        saw_sign = False
        while pos < n and text[pos] in "+-":
            if text[pos] == "-":
                sign = -sign
            saw_sign = True
            pos = skip_ws(pos + 1)
        if not first and not saw_sign:
            raise ParseError("expected '+' or '-' between terms", pos)
        if pos >= n:
            raise ParseError("expected a term after sign", pos)

        coeff: Scalar | None = None
        if text[pos].isdigit():
            value, pos = scan_int(pos, "a coefficient")
            coeff = value
            if pos < n and text[pos] == "/":
                den, pos = scan_int(pos + 1, "a denominator")
                if den == 0:
                    raise ParseError("zero denominator", pos - 1)
                coeff = Fraction(value, den)
            pos = skip_ws(pos)

        exponent = 0
        if pos < n and text[pos] == "x":
            pos += 1
            exponent = 1
            after_x = skip_ws(pos)
            if after_x < n and text[after_x] == "^":
                exponent, pos = scan_int(skip_ws(after_x + 1), "an exponent")
        elif coeff is None:
            raise ParseError("expected a coefficient or 'x'", pos)

        if coeff is None:
            coeff = 1
        terms[exponent] = terms.get(exponent, 0) + sign * coeff
        first = False

    top = max(terms)
    coeffs = [0] * (top + 1)
    for e, c in terms.items():
        coeffs[e] = c
    return Polynomial(coeffs)


def format_scalar(value: Scalar) -> str:
    """`p/q` for proper fractions, plain integer otherwise. No spaces."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Canonical descending text form; parses back to exactly `p`."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        magnitude = format_scalar(-c if c < 0 else c)
        if i == 0:
            body = magnitude
        else:
            x = "x" if i == 1 else f"x^{i}"
            body = x if magnitude == "1" else magnitude + x
        parts.append(sign + body)
    return "".join(parts)


def format_factors(f) -> str:
    """Factor list as `Psi_3(x)^2`, `Psi_2(-x)*Psi_4(-x)`, `1` for an empty list.

    Repeats collapse to `^exponent` for display only; a non-unit rational
    prefix is printed first when present.
    """
    pieces = []
    if f.unit != 1 or not f.factors:
        pieces.append(format_scalar(f.unit))
    for factor, exponent in f.grouped():
        text = factor.text()
        pieces.append(text if exponent == 1 else f"{text}^{exponent}")
    return "*".join(pieces)
