"""2x2 matrices over Q0 with a total inverse that satisfies the inversion-ring
axioms (Ref, Pil, x*1 = x, (-x)^-1 = -(x^-1)) but not Ril.

The inverse is defined by case analysis on the zero pattern of a singular
matrix; see :func:`classify`.
"""
from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .algebra import Structure, inv_rational, random_rational, render_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)
_TWO = _ONE + _ONE
_FOUR = _TWO + _TWO


@dataclass(frozen=True)
class Matrix2:
    x11: Fraction
    x12: Fraction
    x21: Fraction
    x22: Fraction

    @classmethod
    def of(cls, rows) -> "Matrix2":
        (a, b), (c, d) = rows
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    def __add__(self, o):
        return Matrix2(self.x11 + o.x11, self.x12 + o.x12, self.x21 + o.x21, self.x22 + o.x22)

    def __neg__(self):
        return Matrix2(-self.x11, -self.x12, -self.x21, -self.x22)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        return Matrix2(
            self.x11 * o.x11 + self.x12 * o.x21,
            self.x11 * o.x12 + self.x12 * o.x22,
            self.x21 * o.x11 + self.x22 * o.x21,
            self.x21 * o.x12 + self.x22 * o.x22,
        )

    def entries(self):
        return (self.x11, self.x12, self.x21, self.x22)

    def __str__(self):
        a, b, c, d = (render_rational(e) for e in self.entries())
        return f"[[{a},{b}],[{c},{d}]]"


ZERO = Matrix2(_ZERO, _ZERO, _ZERO, _ZERO)
IDENTITY = Matrix2(_ONE, _ZERO, _ZERO, _ONE)


class SingularityClass(enum.Enum):
    Regular = "regular"
    AllZero = "all-zero"
    ThreeZeroDiagTopLeft = "three-zero-diag-top-left"
    ThreeZeroDiagBottomRight = "three-zero-diag-bottom-right"
    ThreeZeroLowerLeft = "three-zero-lower-left"
    ThreeZeroUpperRight = "three-zero-upper-right"
    TwoZeroBottomRow = "two-zero-bottom-row"
    TwoZeroRightColumn = "two-zero-right-column"
    TwoZeroTopRow = "two-zero-top-row"
    TwoZeroLeftColumn = "two-zero-left-column"
    NoZeroSingular = "no-zero-singular"


def det(m: Matrix2) -> Fraction:
    return m.x11 * m.x22 - m.x12 * m.x21


# zero pattern (x11, x12, x21, x22 nonzero?) of a singular matrix -> class
_PATTERNS = {
    (False, False, False, False): SingularityClass.AllZero,
    (True, False, False, False): SingularityClass.ThreeZeroDiagTopLeft,
    (False, False, False, True): SingularityClass.ThreeZeroDiagBottomRight,
    (False, False, True, False): SingularityClass.ThreeZeroLowerLeft,
    (False, True, False, False): SingularityClass.ThreeZeroUpperRight,
    (True, True, False, False): SingularityClass.TwoZeroBottomRow,
    (True, False, True, False): SingularityClass.TwoZeroRightColumn,
    (False, False, True, True): SingularityClass.TwoZeroTopRow,
    (False, True, False, True): SingularityClass.TwoZeroLeftColumn,
    (True, True, True, True): SingularityClass.NoZeroSingular,
}


def classify(m: Matrix2) -> SingularityClass:
    if det(m) != 0:
        return SingularityClass.Regular
    pattern = tuple(e != 0 for e in m.entries())
    try:
        return _PATTERNS[pattern]
    except KeyError:
        # one zero, or two zeros on a (anti)diagonal, forces det != 0
        raise AssertionError(f"singular matrix {m} with impossible zero pattern") from None


def inv_matrix(m: Matrix2) -> Matrix2:
    kind = classify(m)
    a, b, c, d = m.entries()
    S = SingularityClass
    if kind is S.Regular:
        r = inv_rational(det(m))
        return Matrix2(d * r, -b * r, -c * r, a * r)
    if kind is S.AllZero:
        return ZERO
    if kind is S.ThreeZeroDiagTopLeft:
        return Matrix2(inv_rational(a), _ZERO, _ZERO, _ZERO)
    if kind is S.ThreeZeroDiagBottomRight:
        return Matrix2(_ZERO, _ZERO, _ZERO, inv_rational(d))
    if kind is S.ThreeZeroLowerLeft:
        return Matrix2(_ZERO, inv_rational(c), _ZERO, _ZERO)
    if kind is S.ThreeZeroUpperRight:
        return Matrix2(_ZERO, _ZERO, inv_rational(b), _ZERO)
    if kind is S.TwoZeroBottomRow:
        return Matrix2(inv_rational(_TWO * a), _ZERO, inv_rational(_TWO * b), _ZERO)
    if kind is S.TwoZeroRightColumn:
        return Matrix2(inv_rational(_TWO * a), inv_rational(_TWO * c), _ZERO, _ZERO)
    if kind is S.TwoZeroTopRow:
        return Matrix2(_ZERO, inv_rational(_TWO * c), _ZERO, inv_rational(_TWO * d))
    if kind is S.TwoZeroLeftColumn:
        return Matrix2(_ZERO, _ZERO, inv_rational(_TWO * b), inv_rational(_TWO * d))
    # m = [[x, x*y], [x*z, x*y*z]]
    x = a
    y = b / a
    z = c / a
    q = inv_rational(_FOUR * x)
    return Matrix2(q, q / z, q / y, q / (y * z))


def grid_values(bound: int) -> list[Fraction]:
    """All reduced p/q with |p| <= bound and 1 <= q <= bound, sorted."""
    vals = {Fraction(p, q) for p in range(-bound, bound + 1) for q in range(1, bound + 1)}
    return sorted(vals)


def grid(bound: int) -> Iterator[Matrix2]:
    vals = grid_values(bound)
    for entries in itertools.product(vals, repeat=4):
        yield Matrix2(*entries)


def class_representative(kind: SingularityClass, rng: random.Random, bound: int) -> Matrix2:
    """A matrix of the requested class with entries bounded by ``bound``."""

    def nz():
        while True:
            q = random_rational(rng, max(bound, 1))
            if q != 0:
                return q

    S = SingularityClass
    o = _ZERO
    if kind is S.Regular:
        while True:
            m = Matrix2(nz(), random_rational(rng, bound), random_rational(rng, bound), nz())
            if det(m) != 0:
                return m
    if kind is S.AllZero:
        return ZERO
    if kind is S.NoZeroSingular:
        x, y, z = nz(), nz(), nz()
        return Matrix2(x, x * y, x * z, x * y * z)
    pattern = next(p for p, k in _PATTERNS.items() if k is kind)
    return Matrix2(*(nz() if keep else o for keep in pattern))


class MatrixRing(Structure):
    """M2(Q0) with the case-analysis inverse."""

    name = "m2q0"
    zero = ZERO
    one = IDENTITY

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return inv_matrix(a)

    def random_element(self, rng, bound):
        return Matrix2(*(random_rational(rng, bound) for _ in range(4)))
