"""Text serialization of polynomials: `c * x[j,i]^e * ...` terms joined by ` + `."""

import re

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from .ring import GREVLEX, MonomialOrder, PolyRing

_FACTOR = re.compile(r"^(?:x\[(\d+),(\d+)\]|dx\[(\d+)\]|(t))(?:\^(\d+))?$")
_RATIONAL = re.compile(r"^\d+(?:/\d+)?$")


def format_coefficient(c: object) -> str:
    numerator, denominator = QQ.numer(c), QQ.denom(c)
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def _format_factor(ring: PolyRing, position: int, exponent: int) -> str:
    kind, j, i = ring.locate(position)
    match kind:
        case "x":
            name = f"x[{j},{i}]"
        case "dx":
            name = f"dx[{i}]"
        case "t":
            name = "t"
    return name if exponent == 1 else f"{name}^{exponent}"


def _factor_positions(ring: PolyRing) -> list[int]:
    # variables print by (j, i), then differentials, then t
    positions = list(range(ring.ngens))
    if ring.aux:
        positions = positions[1:] + [0]
    return positions


def format_polynomial(p: PolyElement, ring: PolyRing, order: MonomialOrder | None = None) -> str:
    """Render `p` with terms sorted by `order` (the ring's order by default), largest first."""
    if not p:
        return "0"
    positions = _factor_positions(ring)
    terms: list[str] = []
    for monom, coeff in p.terms(order.to_sympy() if order is not None else None):
        factors = [_format_factor(ring, k, monom[k]) for k in positions if monom[k]]
        terms.append(" * ".join([format_coefficient(coeff), *factors]))
    return " + ".join(terms)


def parse_polynomial(ring: PolyRing, text: str, order: MonomialOrder = GREVLEX) -> PolyElement:
    """Parse the output of `format_polynomial`; ` - ` between terms and a leading `-` on a factor are accepted."""
    target = ring.sympy_ring(order)
    body = text.strip()
    if body in ("", "0"):
        return target.zero
    body = re.sub(r"\s+-\s+", " + -", body)
    result = target.zero
    for raw_term in body.split("+"):
        term = raw_term.strip()
        if not term:
            raise ValueError(f"Empty term in polynomial {text!r}")
        coeff = QQ.one
        exponents = [0] * ring.ngens
        for raw_factor in term.split("*"):
            factor = raw_factor.strip()
            while factor.startswith("-"):
                coeff = -coeff
                factor = factor[1:].strip()
            if _RATIONAL.match(factor):
                numerator, _, denominator = factor.partition("/")
                coeff *= QQ(int(numerator), int(denominator or 1))
                continue
            match = _FACTOR.match(factor)
            if match is None:
                raise ValueError(f"Cannot parse factor {factor!r} in polynomial {text!r}")
            j, i, dx_i, t, exponent = match.groups()
            if j is not None:
                position = ring.index(int(j), int(i))
            elif dx_i is not None:
                position = ring.dx_index(int(dx_i))
            else:
                position = ring.t_index
            exponents[position] += int(exponent or 1)
        result += target.from_dict({tuple(exponents): coeff})
    return result
