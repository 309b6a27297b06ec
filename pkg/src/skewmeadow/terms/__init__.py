"""Term language: syntax, parsing, evaluation and canonical forms."""
from .ast import (Add, Conj, ConstI, ConstJ, ConstK, Div, Inv, LocalUnit, Mul,
                  Neg, Numeral, One, Square, Sub, Term, Zero, ZOf, depth,
                  desugar, numeral_term, size, symbols, to_text)
from .generate import random_equation, random_term, rewrite_once
from .normal import (CanonicalRational, equiv, evaluate, normalize,
                     print_canonical)
from .parser import ParseError, parse

__all__ = [
    "Add", "Conj", "ConstI", "ConstJ", "ConstK", "Div", "Inv", "LocalUnit",
    "Mul", "Neg", "Numeral", "One", "Square", "Sub", "Term", "Zero", "ZOf",
    "depth", "desugar", "numeral_term", "size", "symbols", "to_text", "random_equation",
    "random_term", "rewrite_once", "CanonicalRational", "equiv", "evaluate",
    "normalize", "print_canonical", "ParseError", "parse",
]
