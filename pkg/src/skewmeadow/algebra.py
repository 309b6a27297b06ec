"""Exact zero-totalized structures: rationals, prime fields, complex rationals,
rational quaternions and finite products of any of these.

Every structure implements the same carrier contract (:class:`Structure`):
constants ``zero``/``one``, operations ``add``, ``neg``, ``mul``, ``inv`` and
the auxiliary operators built from them.  Inverse is total, with ``inv(0) = 0``.
"""
from __future__ import annotations

import itertools
import random
from abc import ABC, abstractmethod
from fractions import Fraction
from math import gcd
from typing import Any, Iterator, Sequence

CORE_SYMBOLS = frozenset({"0", "1", "+", "-", "*", "inv"})


class UnsupportedSymbol(Exception):
    """A term or law mentions a constant/operator the structure lacks."""

    def __init__(self, structure: str, symbol: str):
        super().__init__(f"structure {structure} does not interpret {symbol!r}")
        self.structure = structure
        self.symbol = symbol


class Structure(ABC):
    """Carrier contract shared by every concrete model.

    Subclasses provide ``zero``, ``one`` and the four primitive operations.
    Optional constants (``i``, ``j``, ``k``) and the conjugation ``c`` are
    advertised through ``symbols``; anything not listed raises
    :class:`UnsupportedSymbol`.
    """

    name = "structure"
    symbols: frozenset = CORE_SYMBOLS
    finite = False
    zero: Any
    one: Any

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    @abstractmethod
    def mul(self, a, b): ...

    def inv(self, a):
        raise UnsupportedSymbol(self.name, "inv")

    def eq(self, a, b) -> bool:
        return a == b

    # auxiliary operators
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def square(self, a):
        return self.mul(a, a)

    def bar(self, a):
        return self.inv(a)

    def local_unit(self, a):
        return self.mul(a, self.inv(a))

    def z_of(self, a):
        return self.sub(self.one, self.local_unit(a))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def numeral(self, n: int):
        """Value of the numeral 1+1+...+1 (n ones), by doubling."""
        if n < 0:
            raise ValueError("numerals are natural numbers")
        result, power = self.zero, self.one
        while n:
            if n & 1:
                result = self.add(result, power)
            power = self.add(power, power)
            n >>= 1
        return result

    def constant(self, name: str):
        raise UnsupportedSymbol(self.name, name)

    def conj(self, a):
        raise UnsupportedSymbol(self.name, "c")

    def require(self, symbols) -> None:
        for sym in sorted(symbols):
            if sym not in self.symbols:
                raise UnsupportedSymbol(self.name, sym)

    def elements(self) -> Iterator:
        raise TypeError(f"{self.name} is infinite; no exhaustive enumeration")

    def random_element(self, rng: random.Random, bound: int):
        raise TypeError(f"{self.name} has no random sampler")

    def render(self, a) -> str:
        return str(a)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


# --------------------------------------------------------------------------
# rationals


def inv_rational(a: Fraction) -> Fraction:
    if a == 0:
        return Fraction(0)
    return 1 / a


def render_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def random_rational(rng: random.Random, bound: int) -> Fraction:
    # small special values keep implications with equality premises exercised
    if rng.random() < 0.1:
        return Fraction(rng.choice((0, 1, -1)))
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


class RationalField(Structure):
    """The zero-totalized rationals Q0."""

    name = "q0"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return inv_rational(a)

    def random_element(self, rng, bound):
        return random_rational(rng, bound)

    def render(self, a):
        return render_rational(a)


# --------------------------------------------------------------------------
# prime fields


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def inv_prime_field(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return pow(a, -1, p)


class PrimeField(Structure):
    """Z/p with 0^-1 = 0; elements are residues in [0, p)."""

    finite = True
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"fp:{p}"

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        return inv_prime_field(a, self.p)

    def numeral(self, n):
        return n % self.p

    def elements(self):
        return iter(range(self.p))

    def random_element(self, rng, bound):
        return rng.randrange(self.p)


# --------------------------------------------------------------------------
# complex rationals and rational quaternions


def _render_linear(coeffs: Sequence[Fraction], units: Sequence[str]) -> str:
    out = ""
    for coeff, unit in zip(coeffs, units):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = render_rational(mag)
        if unit:
            body = unit if mag == 1 else body + unit
        if not out:
            out = body if sign == "+" else "-" + body
        else:
            out += sign + body
    return out or "0"


class _RationalVector:
    """Immutable vector of rationals kept as integer numerators over one
    positive denominator, reduced so that gcd(den, *nums) = 1."""

    __slots__ = ("nums", "den")
    DIM = 0

    def __init__(self, *coeffs):
        if len(coeffs) > self.DIM:
            raise TypeError(f"{type(self).__name__} takes at most {self.DIM} coefficients")
        fr = [Fraction(c) for c in coeffs] + [Fraction(0)] * (self.DIM - len(coeffs))
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        object.__setattr__(self, "nums", tuple(f.numerator * (den // f.denominator) for f in fr))
        object.__setattr__(self, "den", den)

    @classmethod
    def _make(cls, nums, den):
        g = gcd(den, *nums)
        if g != 1:
            nums = tuple(n // g for n in nums)
            den //= g
        obj = object.__new__(cls)
        object.__setattr__(obj, "nums", nums)
        object.__setattr__(obj, "den", den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def coefficients(self) -> tuple:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def __iter__(self):
        return iter(self.coefficients())

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.den == other.den and self.nums == other.nums

    def __hash__(self):
        return hash((type(self).__name__, self.nums, self.den))

    def __repr__(self):
        args = ", ".join(render_rational(c) for c in self.coefficients())
        return f"{type(self).__name__}({args})"

    def __add__(self, o):
        d1, d2 = self.den, o.den
        return self._make(tuple(a * d2 + b * d1 for a, b in zip(self.nums, o.nums)), d1 * d2)

    def __neg__(self):
        return self._make(tuple(-a for a in self.nums), self.den)

    def __sub__(self, o):
        return self + (-o)

    def conjugate(self):
        first, *rest = self.nums
        return self._make((first, *(-a for a in rest)), self.den)

    def norm(self) -> Fraction:
        return Fraction(sum(a * a for a in self.nums), self.den * self.den)

    def scale(self, q: Fraction):
        q = Fraction(q)
        return self._make(tuple(a * q.numerator for a in self.nums), self.den * q.denominator)

    def inverse(self):
        """Conjugate over the norm; zero maps to zero."""
        total = sum(a * a for a in self.nums)
        if total == 0:
            return self
        first, *rest = self.nums
        d = self.den
        return self._make((first * d, *(-a * d for a in rest)), total)


class ComplexRational(_RationalVector):
    """re + im*i."""

    __slots__ = ()
    DIM = 2

    @property
    def re(self) -> Fraction:
        return Fraction(self.nums[0], self.den)

    @property
    def im(self) -> Fraction:
        return Fraction(self.nums[1], self.den)

    def __mul__(self, o):
        a, b = self.nums
        c, d = o.nums
        return self._make((a * c - b * d, a * d + b * c), self.den * o.den)

    def __str__(self):
        return _render_linear(self.coefficients(), ("", "i"))


def inv_complex(a: ComplexRational) -> ComplexRational:
    return a.inverse()


class QuaternionRational(_RationalVector):
    """w + x i + y j + z k, coefficients always in (1, i, j, k) order."""

    __slots__ = ()
    DIM = 4

    w = property(lambda self: Fraction(self.nums[0], self.den))
    x = property(lambda self: Fraction(self.nums[1], self.den))
    y = property(lambda self: Fraction(self.nums[2], self.den))
    z = property(lambda self: Fraction(self.nums[3], self.den))

    def __mul__(self, o):
        return mul_quaternion(self, o)

    def __str__(self):
        return _render_linear(self.coefficients(), ("", "i", "j", "k"))


def mul_quaternion(p: QuaternionRational, q: QuaternionRational) -> QuaternionRational:
    a1, b1, c1, d1 = p.nums
    a2, b2, c2, d2 = q.nums
    return QuaternionRational._make((
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ), p.den * q.den)


def inv_quaternion(q: QuaternionRational) -> QuaternionRational:
    return q.inverse()


def conjugate(a):
    return a.conjugate()


class ComplexRationalField(Structure):
    name = "c0"
    symbols = CORE_SYMBOLS | {"i", "c"}
    zero = ComplexRational()
    one = ComplexRational(Fraction(1))

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return inv_complex(a)

    def conj(self, a):
        return a.conjugate()

    def constant(self, name):
        if name == "i":
            return ComplexRational(Fraction(0), Fraction(1))
        raise UnsupportedSymbol(self.name, name)

    def random_element(self, rng, bound):
        return ComplexRational(random_rational(rng, bound), random_rational(rng, bound))


class QuaternionField(Structure):
    name = "h0"
    symbols = CORE_SYMBOLS | {"i", "j", "k", "c"}
    zero = QuaternionRational()
    one = QuaternionRational(Fraction(1))
    _units = {"i": 1, "j": 2, "k": 3}

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return mul_quaternion(a, b)

    def inv(self, a):
        return inv_quaternion(a)

    def conj(self, a):
        return a.conjugate()

    def constant(self, name):
        if name not in self._units:
            raise UnsupportedSymbol(self.name, name)
        coeffs = [Fraction(0)] * 4
        coeffs[self._units[name]] = Fraction(1)
        return QuaternionRational(*coeffs)

    def random_element(self, rng, bound):
        return QuaternionRational(*(random_rational(rng, bound) for _ in range(4)))


# --------------------------------------------------------------------------
# products


class ProductStructure(Structure):
    """Componentwise product of arbitrary factors; elements are tuples."""

    def __init__(self, factors: Sequence[Structure]):
        if not factors:
            raise ValueError("a product needs at least one factor")
        self.factors = tuple(factors)
        self.name = "prod:" + ",".join(f.name for f in self.factors)
        self.symbols = frozenset.intersection(*(f.symbols for f in self.factors))
        self.finite = all(f.finite for f in self.factors)
        self.zero = tuple(f.zero for f in self.factors)
        self.one = tuple(f.one for f in self.factors)

    def add(self, a, b):
        return tuple([f.add(x, y) for f, x, y in zip(self.factors, a, b)])

    def neg(self, a):
        return tuple([f.neg(x) for f, x in zip(self.factors, a)])

    def mul(self, a, b):
        return tuple([f.mul(x, y) for f, x, y in zip(self.factors, a, b)])

    def inv(self, a):
        return tuple([f.inv(x) for f, x in zip(self.factors, a)])

    def eq(self, a, b):
        return all(f.eq(x, y) for f, x, y in zip(self.factors, a, b))

    def numeral(self, n):
        return tuple(f.numeral(n) for f in self.factors)

    def conj(self, a):
        self.require({"c"})
        return tuple(f.conj(x) for f, x in zip(self.factors, a))

    def constant(self, name):
        self.require({name})
        return tuple(f.constant(name) for f in self.factors)

    def elements(self):
        if not self.finite:
            return super().elements()
        return itertools.product(*(list(f.elements()) for f in self.factors))

    def random_element(self, rng, bound):
        return tuple(f.random_element(rng, bound) for f in self.factors)

    def render(self, a):
        return "(" + ", ".join(f.render(x) for f, x in zip(self.factors, a)) + ")"


def unit_regular_witness(s: Structure, x):
    """Return ``(y, y')`` with ``x*y*x = x`` and ``y*y' = 1``.

    ``y = Z(x) + x^-1`` and ``y' = Z(x) + x``; valid in any skew meadow.
    """
    zx = s.z_of(x)
    return s.add(zx, s.inv(x)), s.add(zx, x)
