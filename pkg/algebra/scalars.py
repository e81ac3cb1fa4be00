# algebra/scalars.py
"""Cuerpos exactos: racionales (por defecto) o cuerpo primo, sobre los dominios de sympy."""
import re

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.polyerrors import NotInvertible

from .exceptions import FieldError

_SCALAR_RE = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")


def make_field(selector="rationals"):
    """'rationals' -> QQ; un primo p (int o texto) -> GF(p) con representantes en [0, p)."""
    if selector in (None, "rationals", "QQ"):
        return QQ
    try:
        p = int(selector)
    except (TypeError, ValueError):
        raise FieldError(f"unknown field selector: {selector}") from None
    if not isprime(p):
        raise FieldError(f"{p} is not prime")
    return GF(p, symmetric=False)


def field_name(K):
    if K.is_FiniteField:
        return f"GF({K.mod})"
    return "QQ"


def from_ratio(K, numerator, denominator=1):
    if denominator == 0:
        raise FieldError("zero denominator")
    try:
        return K(numerator) / K(denominator)
    except (ZeroDivisionError, NotInvertible):
        raise FieldError(f"{numerator}/{denominator} is not defined in {field_name(K)}") from None


def from_rational(K, value):
    """Convierte un sympy.Rational (o int) al cuerpo K."""
    return from_ratio(K, int(value.p), int(value.q)) if hasattr(value, "q") else from_ratio(K, int(value))


def parse_scalar(K, text):
    match = _SCALAR_RE.match(text.strip())
    if not match:
        raise FieldError(f"not a scalar literal: {text!r}")
    sign, num, den = match.groups()
    value = from_ratio(K, int(num), int(den) if den else 1)
    return -value if sign else value


def format_scalar(K, value):
    if K.is_FiniteField:
        return str(int(K.to_int(value)))
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def is_negative(K, value):
    return not K.is_FiniteField and value.numerator < 0
