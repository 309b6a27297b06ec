"""Finite rings given by explicit operation tables.

Elements are indices ``0..n-1`` with zero pinned to index 0 and one to index 1
(index 0 again for the one-element ring).  Tables are validated against the
ring axioms when constructed unless ``validate=False`` is passed, which exists
for negative controls.
"""
from __future__ import annotations

import itertools
from typing import Callable, Hashable, Sequence

import numpy as np

from ..algebra import CORE_SYMBOLS, Structure

RING_SYMBOLS = CORE_SYMBOLS - {"inv"}


class RingTableError(ValueError):
    """A table violates a ring axiom; ``witness`` is the smallest failing tuple."""

    def __init__(self, law: str, witness: tuple):
        super().__init__(f"ring axiom {law} fails at {witness}")
        self.law = law
        self.witness = witness


class InversionTableError(ValueError):
    def __init__(self, law: str, witness: tuple):
        super().__init__(f"inverse table violates {law} at {witness}")
        self.law = law
        self.witness = witness


class TableFormatError(ValueError):
    pass


def _tuple_table(rows, n, what):
    table = tuple(tuple(int(v) for v in row) for row in rows)
    if len(table) != n or any(len(row) != n for row in table):
        raise TableFormatError(f"{what} table must be {n}x{n}")
    return table


class FiniteRing(Structure):
    finite = True
    symbols = RING_SYMBOLS
    zero = 0

    def __init__(self, add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]],
                 neg: Sequence[int], *, name: str = "table", labels: Sequence[str] | None = None,
                 validate: bool = True):
        n = len(neg)
        if n < 1:
            raise TableFormatError("a ring has at least one element")
        self.n = n
        self.add_table = _tuple_table(add, n, "add")
        self.mul_table = _tuple_table(mul, n, "mul")
        self.neg_table = tuple(int(v) for v in neg)
        self.one = 1 if n > 1 else 0
        self.name = name
        self.labels = tuple(labels) if labels is not None else None
        for table in (self.add_table, self.mul_table, (self.neg_table,)):
            for row in table:
                for v in row:
                    if not 0 <= v < n:
                        raise TableFormatError(f"table entry {v} outside [0, {n})")
        if validate:
            self.validate()

    # structure contract
    def add(self, a, b):
        return self.add_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def elements(self):
        return iter(range(self.n))

    def random_element(self, rng, bound):
        return rng.randrange(self.n)

    def render(self, a):
        return self.labels[a] if self.labels is not None else str(a)

    @property
    def ring(self) -> "FiniteRing":
        return self

    def ru_violation(self):
        """First violated ring axiom as ``(law, witness)``, or None."""
        n = self.n
        A = np.array(self.add_table, dtype=np.int32)
        M = np.array(self.mul_table, dtype=np.int32)
        N = np.array(self.neg_table, dtype=np.int32)
        ix = np.arange(n)
        X = ix[:, None, None]
        checks = [
            ("AddAssociative", A[A] == A[X, A[None, :, :]]),
            ("AddCommutative", A == A.T),
            ("AddZero", A[:, 0] == ix),
            ("AddInverse", A[ix, N] == 0),
            ("MulAssociative", M[M] == M[X, M[None, :, :]]),
            ("LeftUnit", M[self.one, :] == ix),
            ("LeftDistributive", M[X, A[None, :, :]] == A[M[:, :, None], M[:, None, :]]),
            ("RightDistributive", M[A] == A[M[:, None, :], M[None, :, :]]),
        ]
        for law, ok in checks:
            if not ok.all():
                return law, tuple(int(v) for v in np.argwhere(~ok)[0])
        return None

    def validate(self) -> None:
        bad = self.ru_violation()
        if bad is not None:
            raise RingTableError(*bad)


class FiniteInversionStructure(Structure):
    """A finite ring together with an inverse table."""

    finite = True
    symbols = CORE_SYMBOLS
    zero = 0

    def __init__(self, ring: FiniteRing, inv: Sequence[int], *, validate: bool = True):
        self.ring = ring
        self.inv_table = tuple(int(v) for v in inv)
        if len(self.inv_table) != ring.n:
            raise TableFormatError(f"inv table must have {ring.n} entries")
        if any(not 0 <= v < ring.n for v in self.inv_table):
            raise TableFormatError("inv entry out of range")
        self.n = ring.n
        self.one = ring.one
        self.name = ring.name
        self.labels = ring.labels
        self.add_table = ring.add_table
        self.mul_table = ring.mul_table
        self.neg_table = ring.neg_table
        self._skmd = None
        if validate:
            bad = self.ir_violation()
            if bad is not None:
                raise InversionTableError(*bad)

    def add(self, a, b):
        return self.add_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        return self.inv_table[a]

    def elements(self):
        return iter(range(self.n))

    def random_element(self, rng, bound):
        return rng.randrange(self.n)

    def render(self, a):
        return self.labels[a] if self.labels is not None else str(a)

    def ir_violation(self):
        """First failing inversion-ring axiom (x*1 = x, (-x)^-1 = -x^-1, Ref, Pil)."""
        M, N, I = self.mul_table, self.neg_table, self.inv_table
        for x in range(self.n):
            if M[x][self.one] != x:
                return "RightUnit", (x,)
        for x in range(self.n):
            if I[N[x]] != N[I[x]]:
                return "NegInverse", (x,)
        for x in range(self.n):
            if I[I[x]] != x:
                return "Ref", (x,)
        for x in range(self.n):
            if M[x][M[I[x]][x]] != x:
                return "Pil", (x,)
        return None

    def skmd_violation(self):
        M, I = self.mul_table, self.inv_table
        for x in range(self.n):
            if I[I[x]] != x:
                return "Ref", (x,)
        for x in range(self.n):
            if M[x][M[x][I[x]]] != x:
                return "Ril", (x,)
        return None

    @property
    def is_skew_meadow(self) -> bool:
        if self._skmd is None:
            self._skmd = self.skmd_violation() is None
        return self._skmd


# --------------------------------------------------------------------------
# generators


def from_operations(elements: Sequence[Hashable], zero, one, add: Callable, neg: Callable,
                    mul: Callable, *, inv: Callable | None = None, name: str = "table",
                    render: Callable = str, validate: bool = True):
    """Tabulate a finite ring given as Python operations on hashable elements.

    Zero and one are moved to indices 0 and 1; the remaining elements keep
    their given order.
    """
    order = [zero] + ([one] if one != zero else [])
    order += [e for e in elements if e != zero and e != one]
    index = {e: i for i, e in enumerate(order)}
    n = len(order)
    if len(index) != n:
        raise ValueError("duplicate elements")
    add_t = [[index[add(a, b)] for b in order] for a in order]
    mul_t = [[index[mul(a, b)] for b in order] for a in order]
    neg_t = [index[neg(a)] for a in order]
    labels = [render(e) for e in order]
    ring = FiniteRing(add_t, mul_t, neg_t, name=name, labels=labels, validate=validate)
    if inv is None:
        return ring
    return FiniteInversionStructure(ring, [index[inv(a)] for a in order], validate=validate)


def from_structure(s: Structure, *, validate: bool = True):
    """Tabulate a finite structure; keeps the inverse when the structure has one."""
    elems = list(s.elements())
    inv = s.inv if "inv" in s.symbols else None
    return from_operations(elems, s.zero, s.one, s.add, s.neg, s.mul, inv=inv,
                           name=s.name, render=s.render, validate=validate)


def zmod(m: int, *, validate: bool = True) -> FiniteRing:
    """Z/m with residues as indices (already in canonical position)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    r = range(m)
    return FiniteRing([[(a + b) % m for b in r] for a in r],
                      [[a * b % m for b in r] for a in r],
                      [-a % m for a in r], name=f"Z/{m}", validate=validate)


def direct_product(rings: Sequence[FiniteRing]) -> FiniteRing:
    elems = list(itertools.product(*(range(r.n) for r in rings)))
    zero = tuple(r.zero for r in rings)
    one = tuple(r.one for r in rings)

    def add(a, b):
        return tuple(r.add(x, y) for r, x, y in zip(rings, a, b))

    def mul(a, b):
        return tuple(r.mul(x, y) for r, x, y in zip(rings, a, b))

    def neg(a):
        return tuple(r.neg(x) for r, x in zip(rings, a))

    def render(a):
        return "(" + ", ".join(r.render(x) for r, x in zip(rings, a)) + ")"

    return from_operations(elems, zero, one, add, neg, mul,
                           name=" x ".join(r.name for r in rings), render=render)


def matrix_ring_mod(p: int) -> FiniteRing:
    """M2(Z/p) as a ring table (no inverse)."""
    elems = list(itertools.product(range(p), repeat=4))

    def add(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(a):
        return tuple(-x % p for x in a)

    def mul(a, b):
        a11, a12, a21, a22 = a
        b11, b12, b21, b22 = b
        return ((a11 * b11 + a12 * b21) % p, (a11 * b12 + a12 * b22) % p,
                (a21 * b11 + a22 * b21) % p, (a21 * b12 + a22 * b22) % p)

    def render(a):
        return f"[[{a[0]},{a[1]}],[{a[2]},{a[3]}]]"

    return from_operations(elems, (0, 0, 0, 0), (1, 0, 0, 1), add, neg, mul,
                           name=f"M2(Z/{p})", render=render)


# --------------------------------------------------------------------------
# text format


def dump_table(s) -> str:
    lines = [f"ring {s.n}", "neg " + " ".join(map(str, s.neg_table))]
    lines += ["add " + " ".join(map(str, row)) for row in s.add_table]
    lines += ["mul " + " ".join(map(str, row)) for row in s.mul_table]
    if isinstance(s, FiniteInversionStructure):
        lines.append("inv " + " ".join(map(str, s.inv_table)))
    return "\n".join(lines) + "\n"


def load_table(text: str, *, name: str = "table", validate: bool = True):
    """Parse the line-oriented table format; returns a ring or inversion structure."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]

    def row(i, keyword, n):
        if i >= len(lines) or lines[i][0] != keyword:
            raise TableFormatError(f"line {i + 1}: expected '{keyword}'")
        vals = lines[i][1:]
        if len(vals) != n:
            raise TableFormatError(f"line {i + 1}: expected {n} entries, got {len(vals)}")
        try:
            return [int(v) for v in vals]
        except ValueError:
            raise TableFormatError(f"line {i + 1}: non-integer entry") from None

    if not lines or lines[0][0] != "ring" or len(lines[0]) != 2 or not lines[0][1].isdigit():
        raise TableFormatError("line 1: expected 'ring <n>'")
    n = int(lines[0][1])
    if n < 1:
        raise TableFormatError("line 1: order must be at least 1")
    neg = row(1, "neg", n)
    add = [row(2 + i, "add", n) for i in range(n)]
    mul = [row(2 + n + i, "mul", n) for i in range(n)]
    ring = FiniteRing(add, mul, neg, name=name, validate=validate)
    rest = 2 + 2 * n
    if len(lines) == rest:
        return ring
    inv = row(rest, "inv", n)
    if len(lines) > rest + 1:
        raise TableFormatError(f"line {rest + 2}: unexpected trailing content")
    return FiniteInversionStructure(ring, inv, validate=validate)


def read_table(path, *, validate: bool = True):
    with open(path, encoding="utf-8") as fh:
        return load_table(fh.read(), name=f"table:{path}", validate=validate)


def write_table(path, s) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_table(s))
