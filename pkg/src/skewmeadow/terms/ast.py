"""Closed terms over 0, 1, +, -, *, inv, extended with i, j, k and conjugation c."""
from __future__ import annotations

from dataclasses import dataclass


class Term:
    __slots__ = ()

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class ConstI(Term):
    pass


@dataclass(frozen=True)
class ConstJ(Term):
    pass


@dataclass(frozen=True)
class ConstK(Term):
    pass


@dataclass(frozen=True)
class Numeral(Term):
    n: int


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Sub(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Div(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Inv(Term):
    arg: Term


@dataclass(frozen=True)
class Conj(Term):
    arg: Term


@dataclass(frozen=True)
class Square(Term):
    arg: Term


@dataclass(frozen=True)
class LocalUnit(Term):
    arg: Term


@dataclass(frozen=True)
class ZOf(Term):
    arg: Term


CONSTANTS = {ConstI: "i", ConstJ: "j", ConstK: "k"}
BINARY = (Add, Sub, Mul, Div)
UNARY = (Neg, Inv, Conj, Square, LocalUnit, ZOf)
SUGAR = (Sub, Div, Square, LocalUnit, ZOf, Numeral)


def children(t: Term) -> tuple:
    if isinstance(t, BINARY):
        return (t.left, t.right)
    if isinstance(t, UNARY):
        return (t.arg,)
    return ()


def rebuild(t: Term, kids) -> Term:
    """Same node type as ``t`` with new children."""
    if isinstance(t, BINARY):
        return type(t)(*kids)
    if isinstance(t, UNARY):
        return type(t)(kids[0])
    return t


def symbols(t: Term) -> set:
    """Structure symbols needed to evaluate ``t``."""
    found = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if type(node) in CONSTANTS:
            found.add(CONSTANTS[type(node)])
        elif isinstance(node, Conj):
            found.add("c")
        stack.extend(children(node))
    return found


def numeral_term(n: int) -> Term:
    """The numeral as 1+1+...+1, associated to the left; 0 for n = 0."""
    if n == 0:
        return Zero()
    t: Term = One()
    for _ in range(n - 1):
        t = Add(t, One())
    return t


def desugar(t: Term) -> Term:
    """Rewrite every sugar node to its definition over 0, 1, +, -, *, inv (and i, j, k, c)."""
    if isinstance(t, Numeral):
        return numeral_term(t.n)
    kids = [desugar(k) for k in children(t)]
    if isinstance(t, Sub):
        return Add(kids[0], Neg(kids[1]))
    if isinstance(t, Div):
        return Mul(kids[0], Inv(kids[1]))
    if isinstance(t, Square):
        return Mul(kids[0], kids[0])
    if isinstance(t, LocalUnit):
        return Mul(kids[0], Inv(kids[0]))
    if isinstance(t, ZOf):
        return Add(One(), Neg(Mul(kids[0], Inv(kids[0]))))
    return rebuild(t, kids)


def size(t: Term) -> int:
    return 1 + sum(size(k) for k in children(t))


def depth(t: Term) -> int:
    return 1 + max((depth(k) for k in children(t)), default=0)


# --------------------------------------------------------------------------
# printing

_FUNCS = {Inv: "inv", Conj: "c", LocalUnit: "unit", ZOf: "z"}


def to_text(t: Term) -> str:
    """Render ``t`` in the concrete syntax accepted by :func:`parse`.

    ``Div`` and ``Square`` have no concrete syntax and print as their
    definitions.
    """
    return _print(t, 0)


def _print(t: Term, prec: int) -> str:
    # prec: 0 expression, 1 additive operand, 2 multiplicative, 3 unary operand
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if type(t) in CONSTANTS:
        return CONSTANTS[type(t)]
    if isinstance(t, Numeral):
        return str(t.n)
    if type(t) in _FUNCS:
        return f"{_FUNCS[type(t)]}({_print(t.arg, 0)})"
    if isinstance(t, (Add, Sub)):
        op = "+" if isinstance(t, Add) else "-"
        text = f"{_print(t.left, 1)}{op}{_print(t.right, 2)}"
        return f"({text})" if prec >= 2 else text
    if isinstance(t, Mul):
        text = f"{_print(t.left, 2)}*{_print(t.right, 3)}"
        return f"({text})" if prec >= 3 else text
    if isinstance(t, Div):
        return _print(Mul(t.left, Inv(t.right)), prec)
    if isinstance(t, Square):
        return _print(Mul(t.arg, t.arg), prec)
    if isinstance(t, Neg):
        return f"-{_print(t.arg, 3)}"
    raise TypeError(f"not a term: {t!r}")
