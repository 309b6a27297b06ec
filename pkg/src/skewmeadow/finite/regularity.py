"""Exhaustive quantifier evaluation of regularity conditions on finite rings."""
from __future__ import annotations

from dataclasses import dataclass, field

from .ring import FiniteRing


def pseudoinverses(r: FiniteRing, x: int) -> frozenset:
    """All y with x*y*x = x."""
    M = r.mul_table
    row = M[x]
    return frozenset(y for y in range(r.n) if M[row[y]][x] == x)


def inverse_pairs(r: FiniteRing, x: int) -> frozenset:
    """All y with x*y*x = x and y*x*y = y."""
    M = r.mul_table
    return frozenset(y for y in pseudoinverses(r, x) if M[M[y][x]][y] == y)


def idempotents(r: FiniteRing) -> list:
    return [e for e in range(r.n) if r.mul_table[e][e] == e]


def is_central(r: FiniteRing, c: int) -> bool:
    M = r.mul_table
    return all(M[c][x] == M[x][c] for x in range(r.n))


def is_commutative(r: FiniteRing) -> bool:
    M = r.mul_table
    return all(M[a][b] == M[b][a] for a in range(r.n) for b in range(a + 1, r.n))


def right_units(r: FiniteRing) -> frozenset:
    """Elements y with some z such that y*z = 1."""
    M = r.mul_table
    return frozenset(y for y in range(r.n) if r.one in M[y])


@dataclass
class RegularityReport:
    regular: bool
    strongly_regular: bool
    distinctly_regular: bool
    unit_regular: bool
    reduced: bool
    idempotents_central: bool
    idempotents_commute: bool
    # first counterexample for each false flag
    witnesses: dict = field(default_factory=dict)

    FLAGS = ("regular", "strongly_regular", "distinctly_regular", "unit_regular",
             "reduced", "idempotents_central", "idempotents_commute")

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.FLAGS}


def _first(pred, items):
    for item in items:
        if not pred(item):
            return item
    return None


def check_regularity(r: FiniteRing) -> RegularityReport:
    n = r.n
    M = r.mul_table
    xs = range(n)
    pinv = [pseudoinverses(r, x) for x in xs]
    idem = idempotents(r)
    units = right_units(r)
    witnesses = {}

    def record(flag, witness):
        if witness is not None:
            witnesses[flag] = witness
        return witness is None

    regular = record("regular", _first(lambda x: pinv[x], xs))
    strong = record("strongly_regular",
                    _first(lambda x: any(M[M[x][x]][y] == x for y in xs), xs))
    distinct = record("distinctly_regular",
                      _first(lambda x: len(inverse_pairs(r, x)) == 1, xs))
    unit = record("unit_regular", _first(lambda x: pinv[x] & units, xs))
    reduced = record("reduced", _first(lambda x: M[x][x] != 0 or x == 0, xs))
    central = record("idempotents_central",
                     _first(lambda ex: M[ex[0]][ex[1]] == M[ex[1]][ex[0]],
                            ((e, x) for e in idem for x in xs)))
    commute = record("idempotents_commute",
                     _first(lambda ef: M[ef[0]][ef[1]] == M[ef[1]][ef[0]],
                            ((e, f) for e in idem for f in idem)))
    return RegularityReport(regular, strong, distinct, unit, reduced, central, commute, witnesses)
