"""Random closed terms and random equations derivable from the skew meadow axioms."""
from __future__ import annotations

import random

from .ast import (Add, Div, Inv, LocalUnit, Mul, Neg, Numeral, One, Square,
                  Sub, Term, Zero, ZOf, children, rebuild)

_LEAVES = (Zero, One)


def random_term(rng: random.Random, max_depth: int = 12, *, sugar: bool = True) -> Term:
    """A random pure term of depth at most ``max_depth``.

    Leaf probability grows with depth so typical terms stay small while the
    depth bound is still reached now and then.
    """
    return _random_term(rng, max_depth, 1, sugar)


def _random_term(rng, max_depth, level, sugar):
    if level >= max_depth or rng.random() < 0.15 + 0.6 * level / max_depth:
        r = rng.random()
        if r < 0.3:
            return Zero()
        if r < 0.6:
            return One()
        return Numeral(rng.randint(2, 12))
    ops = [Add, Sub, Mul, Mul, Neg, Inv, Inv]
    if sugar:
        ops += [Div, Square, LocalUnit, ZOf]
    op = rng.choice(ops)
    if op in (Add, Sub, Mul, Div):
        return op(_random_term(rng, max_depth, level + 1, sugar),
                  _random_term(rng, max_depth, level + 1, sugar))
    return op(_random_term(rng, max_depth, level + 1, sugar))


def positions(t: Term, path=()):
    """All (path, subterm) pairs in pre-order."""
    yield path, t
    for i, kid in enumerate(children(t)):
        yield from positions(kid, path + (i,))


def replace_at(t: Term, path, new: Term) -> Term:
    if not path:
        return new
    kids = list(children(t))
    kids[path[0]] = replace_at(kids[path[0]], path[1:], new)
    return rebuild(t, kids)


# Each rule maps a subterm to an equal subterm (in every skew meadow) or None.

def _ref_intro(t, rng):
    return Inv(Inv(t))


def _ref_elim(t, rng):
    if isinstance(t, Inv) and isinstance(t.arg, Inv):
        return t.arg.arg


def _ril_intro(t, rng):
    return Mul(t, Mul(t, Inv(t)))


def _local_unit_left(t, rng):
    return Mul(Mul(t, Inv(t)), t)


def _inv_square(t, rng):
    # x^-1 * x * x = 1_x * x = x
    return Mul(Mul(Inv(t), t), t)


def _add_comm(t, rng):
    if isinstance(t, Add):
        return Add(t.right, t.left)


def _add_assoc(t, rng):
    if isinstance(t, Add) and isinstance(t.left, Add):
        return Add(t.left.left, Add(t.left.right, t.right))
    if isinstance(t, Add) and isinstance(t.right, Add):
        return Add(Add(t.left, t.right.left), t.right.right)


def _mul_assoc(t, rng):
    if isinstance(t, Mul) and isinstance(t.left, Mul):
        return Mul(t.left.left, Mul(t.left.right, t.right))
    if isinstance(t, Mul) and isinstance(t.right, Mul):
        return Mul(Mul(t.left, t.right.left), t.right.right)


def _distribute(t, rng):
    if isinstance(t, Mul) and isinstance(t.right, Add):
        return Add(Mul(t.left, t.right.left), Mul(t.left, t.right.right))
    if isinstance(t, Mul) and isinstance(t.left, Add):
        return Add(Mul(t.left.left, t.right), Mul(t.left.right, t.right))


def _unit_intro(t, rng):
    return rng.choice((Mul(t, One()), Mul(One(), t), Add(t, Zero())))


def _unit_elim(t, rng):
    if isinstance(t, Mul) and isinstance(t.right, One):
        return t.left
    if isinstance(t, Mul) and isinstance(t.left, One):
        return t.right
    if isinstance(t, Add) and isinstance(t.right, Zero):
        return t.left


def _inv_antihom(t, rng):
    if isinstance(t, Inv) and isinstance(t.arg, Mul):
        return Mul(Inv(t.arg.right), Inv(t.arg.left))


def _local_unit_comm(t, rng):
    if isinstance(t, Mul) and isinstance(t.right, Inv) and t.right.arg == t.left:
        return Mul(t.right, t.left)


def _neg_rules(t, rng):
    if isinstance(t, Inv) and isinstance(t.arg, Neg):
        return Neg(Inv(t.arg.arg))
    if isinstance(t, Neg) and isinstance(t.arg, Add):
        return Add(Neg(t.arg.left), Neg(t.arg.right))
    if isinstance(t, Neg) and isinstance(t.arg, Mul):
        return Mul(Neg(t.arg.left), t.arg.right)
    if isinstance(t, Neg) and isinstance(t.arg, Neg):
        return t.arg.arg


def _numerals(t, rng):
    if isinstance(t, (Mul, Add)) and isinstance(t.left, Numeral) and isinstance(t.right, Numeral):
        a, b = t.left.n, t.right.n
        return Numeral(a * b if isinstance(t, Mul) else a + b)
    if isinstance(t, Numeral) and t.n >= 2:
        return Add(Numeral(t.n - 1), One())


def _zero_absorb(t, rng):
    if isinstance(t, Zero):
        junk = random_term(rng, 4, sugar=False)
        return rng.choice((Mul(junk, Zero()), Mul(Zero(), junk), Inv(Zero())))


def _cancel_intro(t, rng):
    junk = random_term(rng, 4, sugar=False)
    return Add(t, Add(junk, Neg(junk)))


REWRITES = (
    _ref_intro, _ref_elim, _ril_intro, _local_unit_left, _inv_square,
    _add_comm, _add_assoc, _mul_assoc, _distribute, _unit_intro, _unit_elim,
    _inv_antihom, _local_unit_comm, _neg_rules, _numerals, _zero_absorb,
    _cancel_intro,
)


def rewrite_once(t: Term, rng: random.Random) -> Term:
    """Apply one randomly chosen sound rewrite at a random position."""
    spots = list(positions(t))
    rng.shuffle(spots)
    rules = list(REWRITES)
    for path, sub in spots:
        rng.shuffle(rules)
        for rule in rules:
            new = rule(sub, rng)
            if new is not None:
                return replace_at(t, path, new)
    return t


def random_equation(rng: random.Random, max_depth: int = 6, steps: int = 6) -> tuple[Term, Term]:
    """A pair of ground terms provably equal from the skew meadow axioms."""
    lhs = random_term(rng, max_depth, sugar=False)
    rhs = lhs
    for _ in range(rng.randint(1, steps)):
        rhs = rewrite_once(rhs, rng)
    return lhs, rhs
