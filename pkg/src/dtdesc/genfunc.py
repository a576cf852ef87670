"""Rational generating functions for descendant counts by level.

Coefficient lists are ascending and hold Python ints, so every expansion and
identity test is exact.  ``level_gf`` counts by vertices; the triangle-count
versions differ by a factor x^L.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonUnitConstantTerm, UnsupportedLevel

Poly = tuple[int, ...]


def _trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (0,)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    size = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)])


def poly_prod(*factors: Sequence[int]) -> Poly:
    out: Poly = (1,)
    for f in factors:
        out = poly_mul(out, f)
    return out


def monomial(k: int, c: int = 1) -> Poly:
    return tuple([0] * k + [c])


def one_minus_x(k: int = 1) -> Poly:
    """1 - x^k."""
    return tuple([1] + [0] * (k - 1) + [-1])


@dataclass(frozen=True)
class RationalGF:
    numerator: Poly
    denominator: Poly

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", _trim(self.numerator))
        object.__setattr__(self, "denominator", _trim(self.denominator))
        if self.denominator[0] == 0:
            raise NonUnitConstantTerm("denominator has zero constant term")

    def __add__(self, other: "RationalGF") -> "RationalGF":
        num = poly_add(poly_mul(self.numerator, other.denominator), poly_mul(other.numerator, self.denominator))
        return RationalGF(num, poly_mul(self.denominator, other.denominator))

    def scale(self, c: int) -> "RationalGF":
        return RationalGF(tuple(c * x for x in self.numerator), self.denominator)

    def shift(self, k: int) -> "RationalGF":
        """Multiply by x^k."""
        return RationalGF(poly_mul(self.numerator, monomial(k)), self.denominator)

    def is_zero(self) -> bool:
        return not any(self.numerator)

    def series(self, n: int) -> list[int]:
        return series(self, n)


ZERO = RationalGF((0,), (1,))


def series(f: RationalGF, n: int) -> list[int]:
    """Coefficients c_0..c_n by the recurrence the denominator induces."""
    lead = f.denominator[0]
    if lead not in (1, -1):
        raise NonUnitConstantTerm(f"denominator constant term {lead} is not a unit")
    num, den = f.numerator, f.denominator
    out: list[int] = []
    for k in range(n + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc * lead)  # lead is its own inverse
    return out


def gf_equal(f: RationalGF, g: RationalGF) -> bool:
    return poly_mul(f.numerator, g.denominator) == poly_mul(g.numerator, f.denominator)


LEVEL4_NUMERATOR: Poly = tuple([0] * 9 + [1, 4, 3, 6, 3, 4, 0, 4, -3, 3, -1, 1])


def level_gf(level: int) -> RationalGF:
    """Generating function of level-``level`` descendants by number of vertices."""
    if level == 0:
        return RationalGF(monomial(7), one_minus_x())
    if level == 1:
        return ZERO
    if level == 2:
        return RationalGF(monomial(8), poly_prod(one_minus_x(), one_minus_x(2)))
    if level == 3:
        return RationalGF(
            poly_mul(monomial(9), (1, 0, 1)),
            poly_prod(one_minus_x(), one_minus_x(), one_minus_x(), (1, 1, 1)),
        )
    if level == 4:
        return RationalGF(
            LEVEL4_NUMERATOR,
            poly_prod(one_minus_x(), one_minus_x(), one_minus_x(), one_minus_x(), (1, 1), (1, 1), (1, 0, 1)),
        )
    raise UnsupportedLevel(f"no closed form for level {level}")


def level_gf_by_triangles(level: int) -> RationalGF:
    """Same counts marked by triangles: divide the vertex form by x^level."""
    f = level_gf(level)
    if f.is_zero():
        return f
    num = f.numerator
    if any(num[:level]):
        raise ValueError("numerator not divisible by x^level")
    return RationalGF(num[level:], f.denominator)


def level3_alternative_forms() -> list[RationalGF]:
    """The two further presentations displayed next to the level-3 closed form."""
    num = poly_mul(monomial(9), (1, 0, 1))
    return [
        RationalGF(num, poly_prod(one_minus_x(), one_minus_x(), one_minus_x(3))),
        RationalGF(poly_mul(num, (1, 1)), poly_prod(one_minus_x(), one_minus_x(2), one_minus_x(3))),
    ]


def level4_triangle_form() -> RationalGF:
    """The level-4 function as displayed by triangle count."""
    return RationalGF(LEVEL4_NUMERATOR[4:], level_gf(4).denominator)


# (row-sum weight, OGF by triangles) for each row of the two level-3 tables
LEVEL3_TEMPLATES: tuple[tuple[int, RationalGF], ...] = (
    (4, RationalGF(monomial(12), poly_prod(one_minus_x(3), one_minus_x(2), one_minus_x()))),
    (3, RationalGF(monomial(11), poly_prod(one_minus_x(3), one_minus_x(2)))),
    (3, RationalGF(monomial(10), poly_prod(one_minus_x(3), one_minus_x()))),
    (2, RationalGF(monomial(9), one_minus_x(3))),
    (1, RationalGF(poly_mul(monomial(7), (1, 1, 1)), poly_prod(one_minus_x(2), one_minus_x()))),
    (1, RationalGF(poly_mul(monomial(6), (1, 1, 1)), one_minus_x(2))),
)


def level3_from_templates(by_vertices: bool = True) -> RationalGF:
    """Weighted sum of the level-3 template OGFs; shifted by x^3 to count vertices."""
    total = ZERO
    for weight, f in LEVEL3_TEMPLATES:
        total = total + f.scale(weight)
    return total.shift(3) if by_vertices else total


def level3_displayed_sum() -> RationalGF:
    """The weighted sum exactly as written out in the level-3 proof, by triangles."""
    d3, d2, d1 = one_minus_x(3), one_minus_x(2), one_minus_x()
    terms = [
        RationalGF(monomial(6, 4), poly_prod(d3, d2, d1)),
        RationalGF(monomial(5, 3), poly_prod(d3, d2)),
        RationalGF(monomial(4, 3), poly_prod(d3, d1)),
        RationalGF(monomial(3, 2), d3),
        RationalGF(monomial(6), poly_prod(d3, d2, d1)),
        RationalGF(monomial(5), poly_prod(d3, d2)),
    ]
    total = ZERO
    for t in terms:
        total = total + t
    return total


ASYMPTOTIC_CONSTANTS = {2: Fraction(1, 2), 3: Fraction(1, 3), 4: Fraction(25, 48)}


def asymptotic_ratio(level: int, n: int) -> Fraction:
    """g_L(n) / (C_L n^(L-1)), exactly."""
    if level not in ASYMPTOTIC_CONSTANTS:
        raise UnsupportedLevel(f"no asymptotic constant for level {level}")
    coeff = series(level_gf(level), n)[n]
    return Fraction(coeff) / (ASYMPTOTIC_CONSTANTS[level] * n ** (level - 1))
