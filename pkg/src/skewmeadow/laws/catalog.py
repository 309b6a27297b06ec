"""Named law suites.

Each law is a predicate over a structure and an argument tuple.  Implications
are checked as implications; laws with existential content use explicit
witness formulas instead of search.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..algebra import Structure, unit_regular_witness

RING = frozenset({"0", "1", "+", "-", "*"})
MEADOW = RING | {"inv"}


@dataclass(frozen=True)
class Law:
    name: str
    arity: int
    check: Callable[..., bool]
    symbols: frozenset = MEADOW

    def holds(self, s: Structure, args: tuple) -> bool:
        return bool(self.check(s, *args))


@dataclass(frozen=True)
class LawSuite:
    name: str
    laws: tuple

    @property
    def symbols(self) -> frozenset:
        return frozenset().union(*(law.symbols for law in self.laws))

    def law(self, name: str) -> Law:
        for law in self.laws:
            if law.name == name:
                return law
        raise KeyError(f"{self.name} has no law {name}")

    def __len__(self):
        return len(self.laws)


# --------------------------------------------------------------------------
# ring with unit

RU = LawSuite("RU", (
    Law("AddAssociative", 3, lambda s, x, y, z: s.eq(s.add(s.add(x, y), z), s.add(x, s.add(y, z))), RING),
    Law("AddCommutative", 2, lambda s, x, y: s.eq(s.add(x, y), s.add(y, x)), RING),
    Law("AddZero", 1, lambda s, x: s.eq(s.add(x, s.zero), x), RING),
    Law("AddInverse", 1, lambda s, x: s.eq(s.add(x, s.neg(x)), s.zero), RING),
    Law("MulAssociative", 3, lambda s, x, y, z: s.eq(s.mul(s.mul(x, y), z), s.mul(x, s.mul(y, z))), RING),
    Law("LeftUnit", 1, lambda s, x: s.eq(s.mul(s.one, x), x), RING),
    Law("LeftDistributive", 3,
        lambda s, x, y, z: s.eq(s.mul(x, s.add(y, z)), s.add(s.mul(x, y), s.mul(x, z))), RING),
    Law("RightDistributive", 3,
        lambda s, x, y, z: s.eq(s.mul(s.add(x, y), z), s.add(s.mul(x, z), s.mul(y, z))), RING),
))


def _ref(s, x):
    return s.eq(s.inv(s.inv(x)), x)


def _ril(s, x):
    return s.eq(s.mul(x, s.mul(x, s.inv(x))), x)


def _pil(s, x):
    return s.eq(s.mul(x, s.mul(s.inv(x), x)), x)


SKMD = LawSuite("SkMd", (
    Law("Ref", 1, _ref),
    Law("Ril", 1, _ril),
))

IR = LawSuite("IR", (
    Law("RightUnit", 1, lambda s, x: s.eq(s.mul(x, s.one), x)),
    Law("NegInverse", 1, lambda s, x: s.eq(s.inv(s.neg(x)), s.neg(s.inv(x)))),
    Law("Ref", 1, _ref),
    Law("Pil", 1, _pil),
))


def _anti_hom(s, x, y):
    return s.eq(s.inv(s.mul(x, y)), s.mul(s.inv(y), s.inv(x)))


PCIR = LawSuite("PCIR", (
    Law("InverseAntiHomomorphism", 2, _anti_hom),
    Law("Ref", 1, _ref),
    Law("Pil", 1, _pil),
))


# --------------------------------------------------------------------------
# consequences of the skew meadow axioms


def _implies(p: bool, q: Callable[[], bool]) -> bool:
    return not p or q()


def _reduced(s, x):
    return _implies(s.eq(s.mul(x, x), s.zero), lambda: s.eq(x, s.zero))


def _inverse_square_absorbs(s, x):
    xi = s.inv(x)
    return s.eq(s.mul(s.mul(xi, xi), x), xi)


def _right_inverse_is_inverse(s, x, y):
    return _implies(s.eq(s.mul(x, y), s.one), lambda: s.eq(x, s.inv(y)))


def _local_unit_idempotent(s, x):
    e = s.local_unit(x)
    return s.eq(s.mul(e, e), e)


def _idempotents_central(s, e, x):
    # (i) right unit, (ii) Pil, (iii) idempotents commute with everything
    return (s.eq(s.mul(e, s.one), e) and _pil(s, e)
            and _implies(s.eq(s.mul(e, e), e), lambda: s.eq(s.mul(e, x), s.mul(x, e))))


def _inverse_commutes(s, x):
    xi = s.inv(x)
    return s.eq(s.mul(x, xi), s.mul(xi, x))


def _dedekind_finite(s, x, y):
    return _implies(s.eq(s.mul(x, y), s.one), lambda: s.eq(s.mul(y, x), s.one))


def _unit_regular(s, x):
    y, y2 = unit_regular_witness(s, x)
    return s.eq(s.mul(s.mul(x, y), x), x) and s.eq(s.mul(y, y2), s.one)


def _unique_inverse(s, x, y):
    first = s.eq(s.mul(s.mul(x, y), x), x) or s.eq(s.mul(s.mul(x, x), y), x)
    second = s.eq(s.mul(s.mul(y, x), y), y) or s.eq(s.mul(s.mul(y, y), x), y)
    return _implies(first and second, lambda: s.eq(y, s.inv(x)))


def _local_unit_laws(s, x, y):
    ux, uy = s.local_unit(x), s.local_unit(y)
    xy = s.mul(x, y)
    uxy = s.local_unit(xy)
    xb, yb = s.inv(x), s.inv(y)
    return (s.eq(s.mul(x, ux), x) and s.eq(s.mul(ux, x), x)                     # (i)
            and s.eq(s.mul(s.mul(uxy, ux), uy), uxy)                            # (ii)
            and s.eq(s.mul(ux, uy), s.mul(s.mul(xy, yb), xb))                   # (iii)
            and s.eq(s.inv(xy), s.mul(yb, xb)))                                 # (iv)


def _local_unit_symmetric(s, x, y):
    return s.eq(s.local_unit(s.mul(x, y)), s.local_unit(s.mul(y, x)))


def _zero_product_symmetric(s, x, y):
    return _implies(s.eq(s.mul(x, y), s.zero), lambda: s.eq(s.mul(y, x), s.zero))


DERIVED = LawSuite("DerivedProps", (
    Law("Reduced", 1, _reduced),
    Law("InverseSquareAbsorbs", 1, _inverse_square_absorbs),
    Law("RightInverseIsInverse", 2, _right_inverse_is_inverse),
    Law("LocalUnitIdempotent", 1, _local_unit_idempotent),
    Law("IdempotentsCentral", 2, _idempotents_central),
    Law("InverseCommutes", 1, _inverse_commutes),
    Law("DedekindFinite", 2, _dedekind_finite),
    Law("UnitRegular", 1, _unit_regular),
    Law("UniqueInverse", 2, _unique_inverse),
    Law("LocalUnitLaws", 2, _local_unit_laws),
    Law("LocalUnitSymmetric", 2, _local_unit_symmetric),
    Law("ZeroProductSymmetric", 2, _zero_product_symmetric),
))


def derived_props_catalog() -> LawSuite:
    return DERIVED


# --------------------------------------------------------------------------
# initial algebra specifications of Q0, complex rationals and quaternions


def _sq_sum(s, *xs):
    total = s.one
    for x in xs:
        total = s.add(total, s.square(x))
    return total


def _conj_sum(s, *xs):
    total = s.one
    for x in xs:
        total = s.add(total, s.mul(x, s.conj(x)))
    return total


def _const_law(name, lhs, rhs, syms):
    return Law(name, 0, lambda s: s.eq(lhs(s), rhs(s)), MEADOW | syms)


def _sq_is_minus_one(c):
    return _const_law(f"{c.upper()}Squared", lambda s: s.square(s.constant(c)),
                      lambda s: s.neg(s.one), {c})


def _conj_unit(c):
    return _const_law(f"Conj{c.upper()}", lambda s: s.conj(s.constant(c)),
                      lambda s: s.neg(s.constant(c)), {c, "c"})


_C = frozenset({"c"})
_CONJ_INV = Law("ConjInverse", 1, lambda s, x: s.eq(s.conj(s.inv(x)), s.inv(s.conj(x))), MEADOW | _C)
_CONJ_ADD = Law("ConjAdditive", 2,
                lambda s, x, y: s.eq(s.conj(s.add(x, y)), s.add(s.conj(x), s.conj(y))), MEADOW | _C)
_CONJ_UNIT = Law("ConjLocalUnit", 1, lambda s, x: s.eq(s.local_unit(s.conj(x)), s.local_unit(x)),
                 MEADOW | _C)

QSPEC = LawSuite("QSpec", (
    Law("FourSquares", 4, lambda s, x, y, z, u: s.eq(s.z_of(_sq_sum(s, x, y, z, u)), s.zero)),
))

CSPEC = LawSuite("CSpec", (
    _sq_is_minus_one("i"),
    _conj_unit("i"),
    _CONJ_INV,
    _CONJ_ADD,
    Law("ConjMultiplicative", 2,
        lambda s, x, y: s.eq(s.conj(s.mul(x, y)), s.mul(s.conj(x), s.conj(y))), MEADOW | _C),
    _CONJ_UNIT,
    Law("TwoNorms", 2, lambda s, x, y: s.eq(s.z_of(_conj_sum(s, x, y)), s.zero), MEADOW | _C),
))

HSPEC = LawSuite("HSpec", (
    _sq_is_minus_one("i"),
    _sq_is_minus_one("j"),
    _sq_is_minus_one("k"),
    _const_law("IJK", lambda s: s.mul(s.mul(s.constant("i"), s.constant("j")), s.constant("k")),
               lambda s: s.neg(s.one), {"i", "j", "k"}),
    _conj_unit("i"),
    _conj_unit("j"),
    _CONJ_INV,
    _CONJ_ADD,
    Law("ConjAntiMultiplicative", 2,
        lambda s, x, y: s.eq(s.conj(s.mul(x, y)), s.mul(s.conj(y), s.conj(x))), MEADOW | _C),
    _CONJ_UNIT,
    Law("NormInvertible", 1, lambda s, x: s.eq(s.z_of(_conj_sum(s, x)), s.zero), MEADOW | _C),
))


def spec_suites() -> dict:
    return {"QSpec": QSPEC, "CSpec": CSPEC, "HSpec": HSPEC}


SUITES = {suite.name.lower(): suite for suite in (RU, SKMD, IR, PCIR, DERIVED, QSPEC, CSPEC, HSPEC)}
SUITES["derived"] = DERIVED


def get_suite(name: str) -> LawSuite:
    try:
        return SUITES[name.lower()]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}") from None
