from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from skewmeadow.algebra import (ComplexRationalField, PrimeField, ProductStructure,
                                QuaternionField, QuaternionRational, RationalField,
                                UnsupportedSymbol)
from skewmeadow.matrix import MatrixRing
from skewmeadow.terms import (Add, CanonicalRational, Conj, ConstI, ConstJ, Inv, Mul, Neg,
                              Numeral, One, ParseError, Zero, depth, desugar, equiv, evaluate,
                              normalize, parse, print_canonical, random_equation, random_term,
                              to_text)

Q0 = RationalField()


def q0_oracle(t):
    # straight recursive evaluation over Fraction, independent of evaluate()
    return Fraction(eval(_py(desugar(t)), {"F": Fraction, "inv": lambda a: 0 if a == 0 else 1 / a}))


def _py(t):
    if isinstance(t, Zero):
        return "F(0)"
    if isinstance(t, One):
        return "F(1)"
    if isinstance(t, Add):
        return f"({_py(t.left)}+{_py(t.right)})"
    if isinstance(t, Mul):
        return f"({_py(t.left)}*{_py(t.right)})"
    if isinstance(t, Neg):
        return f"(-{_py(t.arg)})"
    if isinstance(t, Inv):
        return f"inv({_py(t.arg)})"
    raise TypeError(t)


@pytest.mark.parametrize("src,tree", [
    ("inv(0)", Inv(Zero())),
    ("2 * inv(3)", Mul(Numeral(2), Inv(Numeral(3)))),
    ("c(i*j)", Conj(Mul(ConstI(), ConstJ()))),
    ("1+1*1", Add(One(), Mul(One(), One()))),
    ("-1*1", Mul(Neg(One()), One())),
    ("2^-1^-1", Inv(Inv(Numeral(2)))),
    ("  ( 1 )  ", One()),
])
def test_parse_examples(src, tree):
    assert parse(src) == tree


@pytest.mark.parametrize("src,offset", [("1 + * 2", 4), ("inv(1", 5), ("", 0), ("1 1", 2),
                                        ("x", 0), ("1 ^ 2", 4), ("é", 0), ("1+é", 2)])
def test_parse_errors_report_byte_offset(src, offset):
    with pytest.raises(ParseError) as err:
        parse(src)
    assert err.value.offset == offset
    assert err.value.expected


def test_parse_error_lists_expected_tokens():
    with pytest.raises(ParseError) as err:
        parse("1 + * 2")
    assert {"INT", "(", "inv", "-"} <= err.value.expected
    assert err.value.found == "'*'"


@pytest.mark.parametrize("src,structure,text", [
    ("inv(1+1)", Q0, "1/2"),
    ("i*j*k", QuaternionField(), "-1"),
    ("i*j", QuaternionField(), "k"),
    ("inv(1+1)", PrimeField(7), "4"),
    ("c(i) * i", ComplexRationalField(), "1"),
    ("inv(1+1)", ProductStructure([PrimeField(3), PrimeField(5)]), "(2, 3)"),
    ("z(0) + unit(5)", Q0, "2"),
])
def test_eval_examples(src, structure, text):
    assert structure.render(evaluate(parse(src), structure)) == text


def test_eval_matrix_ring():
    assert str(evaluate(parse("inv(1+1)"), MatrixRing())) == "[[1/2,0],[0,1/2]]"


@pytest.mark.parametrize("src,structure", [("j", Q0), ("i", PrimeField(5)), ("c(1)", MatrixRing()),
                                           ("k", ComplexRationalField())])
def test_eval_unsupported(src, structure):
    with pytest.raises(UnsupportedSymbol):
        evaluate(parse(src), structure)


@pytest.mark.parametrize("src,text", [
    ("(1+1)*inv(1+1+1)", "2*inv(3)"),
    ("inv(0)", "0"),
    ("2*inv(4) + 1*inv(4)", "3*inv(4)"),
    ("0 - 1", "-(1*inv(1))"),
    ("-(6*inv(4))", "-(3*inv(2))"),
])
def test_normalize_examples(src, text):
    assert str(normalize(src)) == text


def test_normalize_rejects_extension_symbols():
    with pytest.raises(UnsupportedSymbol):
        normalize("i*i")


def test_print_canonical_examples():
    assert print_canonical(CanonicalRational(0)) == Zero()
    assert print_canonical(CanonicalRational(1, 2, 3)) == Mul(Numeral(2), Inv(Numeral(3)))
    assert print_canonical(CanonicalRational(-1, 1, 1)) == Neg(Mul(Numeral(1), Inv(Numeral(1))))


def test_canonical_invariants():
    with pytest.raises(ValueError):
        CanonicalRational(1, 2, 4)
    with pytest.raises(ValueError):
        CanonicalRational(1, 0, 1)


def test_equiv_examples():
    assert equiv("1+1", "2")
    assert equiv("inv(inv(1+1+1))", "1+1+1")
    assert not equiv("inv(0)", "1")


@given(st.integers(0, 40), st.integers(0, 40))
def test_numeral_multiplicativity(m, n):
    assert evaluate(Mul(Numeral(m), Numeral(n)), Q0) == evaluate(Numeral(m * n), Q0)


@settings(max_examples=300)
@given(st.integers(0, 2 ** 32))
def test_random_terms_normalize_soundly(seed):
    t = random_term(random.Random(seed), 10)
    c = normalize(t)
    assert c.value == q0_oracle(t) == evaluate(t, Q0)
    assert normalize(print_canonical(c)) == c


@settings(max_examples=300)
@given(st.integers(0, 2 ** 32))
def test_print_parse_round_trip(seed):
    t = random_term(random.Random(seed), 8)
    assert desugar(parse(to_text(t))) == desugar(t)


def test_random_term_depth_bound():
    rng = random.Random(1)
    depths = [depth(random_term(rng, 12)) for _ in range(2000)]
    assert max(depths) <= 12
    assert max(depths) >= 8


@settings(max_examples=200)
@given(st.integers(0, 2 ** 32))
def test_generated_equations_hold_everywhere(seed):
    lhs, rhs = random_equation(random.Random(seed))
    for s in (Q0, PrimeField(2), PrimeField(5), QuaternionField(),
              ProductStructure([PrimeField(2), PrimeField(3)])):
        assert evaluate(lhs, s) == evaluate(rhs, s)


def test_skmd_axiom_instances_as_terms():
    h = QuaternionField()
    for src in ("1+i", "1+1+j*k", "inv(1+i+j)", "0"):
        x = to_text(parse(src))
        for lhs, rhs in ((f"inv(inv({x}))", x), (f"({x})*(({x})*inv({x}))", x)):
            assert evaluate(parse(lhs), h) == evaluate(parse(rhs), h)
    assert evaluate(parse("inv(1+i)"), h) == QuaternionRational(Fraction(1, 2), Fraction(-1, 2))


def test_deep_terms_evaluate_iteratively():
    t = One()
    for _ in range(5000):
        t = Add(t, One())
    assert evaluate(t, Q0) == 5001
