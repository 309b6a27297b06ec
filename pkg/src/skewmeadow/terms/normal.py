"""Evaluation of closed terms in any structure, and canonical forms over Q0.

Canonical forms are the transversal ``0``, ``k * inv(l)`` and
``-(k * inv(l))`` with ``k``, ``l`` coprime positive naturals.  They are
reached by exact evaluation in Q0 followed by reading off the reduced fraction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..algebra import RationalField, Structure, UnsupportedSymbol
from .ast import (Add, Conj, ConstI, ConstJ, ConstK, CONSTANTS, Div, Inv,
                  LocalUnit, Mul, Neg, Numeral, One, Square, Sub, Term, Zero,
                  ZOf, children, symbols)
from .parser import parse

Q0 = RationalField()

_BINARY_OPS = {
    Add: lambda s, a, b: s.add(a, b),
    Sub: lambda s, a, b: s.sub(a, b),
    Mul: lambda s, a, b: s.mul(a, b),
    Div: lambda s, a, b: s.div(a, b),
}
_UNARY_OPS = {
    Neg: lambda s, a: s.neg(a),
    Inv: lambda s, a: s.inv(a),
    Conj: lambda s, a: s.conj(a),
    Square: lambda s, a: s.square(a),
    LocalUnit: lambda s, a: s.local_unit(a),
    ZOf: lambda s, a: s.z_of(a),
}


def evaluate(t: Term, s: Structure):
    """Homomorphic evaluation of ``t`` in ``s``.

    Sugar nodes are evaluated through their definitions.  Raises
    :class:`UnsupportedSymbol` before doing any work if ``t`` uses a constant
    or operator that ``s`` does not interpret.
    """
    s.require(symbols(t))
    # iterative post-order so long parsed sums do not hit the recursion limit
    values: list = []
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        kids = children(node)
        if kids and not expanded:
            stack.append((node, True))
            stack.extend((k, False) for k in reversed(kids))
            continue
        kind = type(node)
        if kind is Zero:
            values.append(s.zero)
        elif kind is One:
            values.append(s.one)
        elif kind is Numeral:
            values.append(s.numeral(node.n))
        elif kind in CONSTANTS:
            values.append(s.constant(CONSTANTS[kind]))
        elif kind in _UNARY_OPS:
            values.append(_UNARY_OPS[kind](s, values.pop()))
        else:
            b = values.pop()
            a = values.pop()
            values.append(_BINARY_OPS[kind](s, a, b))
    return values.pop()


@dataclass(frozen=True)
class CanonicalRational:
    """A transversal form: ``sign`` is 0 for the zero form, else +1 or -1."""

    sign: int
    k: int = 0
    l: int = 1

    def __post_init__(self):
        if self.sign == 0:
            if (self.k, self.l) != (0, 1):
                raise ValueError("the zero form carries no numerals")
        elif self.sign not in (1, -1) or self.k < 1 or self.l < 1 or gcd(self.k, self.l) != 1:
            raise ValueError(f"not a transversal form: {self}")

    @classmethod
    def from_fraction(cls, q: Fraction) -> "CanonicalRational":
        if q == 0:
            return cls(0)
        return cls(1 if q > 0 else -1, abs(q.numerator), q.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.sign * self.k, self.l)

    def __str__(self):
        if self.sign == 0:
            return "0"
        body = f"{self.k}*inv({self.l})"
        return body if self.sign > 0 else f"-({body})"


def _check_pure(t: Term) -> None:
    extra = symbols(t)
    if extra:
        raise UnsupportedSymbol(Q0.name, sorted(extra)[0])


def normalize(t: Term | str) -> CanonicalRational:
    if isinstance(t, str):
        t = parse(t)
    _check_pure(t)
    return CanonicalRational.from_fraction(evaluate(t, Q0))


def print_canonical(c: CanonicalRational) -> Term:
    if c.sign == 0:
        return Zero()
    t = Mul(Numeral(c.k), Inv(Numeral(c.l)))
    return t if c.sign > 0 else Neg(t)


def equiv(t1: Term | str, t2: Term | str) -> bool:
    return normalize(t1) == normalize(t2)
