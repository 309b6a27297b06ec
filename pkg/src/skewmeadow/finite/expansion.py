"""Constructive expansion of finite regular rings with an inverse operator."""
from __future__ import annotations

from dataclasses import dataclass, field

from .regularity import (check_regularity, idempotents, inverse_pairs,
                         pseudoinverses)
from .ring import FiniteInversionStructure, FiniteRing


class NotStronglyRegular(ValueError):
    def __init__(self, witness: int):
        super().__init__(f"not strongly regular: no y with x*x*y = x for x = {witness}")
        self.witness = witness


class NotDistinctlyRegular(ValueError):
    def __init__(self, witness: int, candidates):
        self.witness = witness
        self.candidates = frozenset(candidates)
        super().__init__(f"not distinctly regular: x = {witness} has {len(self.candidates)} "
                         f"y with xyx = x and yxy = y")


class ExpansionError(AssertionError):
    """The constructed inverse failed its own validation (an implementation bug)."""


def expand_strongly_regular(r: FiniteRing) -> FiniteInversionStructure:
    """Turn a strongly regular ring into a skew meadow.

    For each x take any pseudoinverse y, the local unit x*y, and set
    ``inv(x) = (x*y)*y``.  Every pseudoinverse is tried to confirm the result
    does not depend on the choice.
    """
    r = r.ring
    M = r.mul_table
    for x in range(r.n):
        row = M[M[x][x]]
        if x not in row:
            raise NotStronglyRegular(x)
    inv = []
    for x in range(r.n):
        choices = sorted(pseudoinverses(r, x))
        if not choices:
            raise NotStronglyRegular(x)
        y = choices[0]
        unit = M[x][y]
        value = M[unit][y]
        for other in choices[1:]:
            if M[x][other] != unit or M[M[x][other]][other] != value:
                raise ExpansionError(f"inverse of {x} depends on pseudoinverse choice ({y} vs {other})")
        inv.append(value)
    s = FiniteInversionStructure(r, inv, validate=False)
    bad = s.skmd_violation()
    if bad is not None:
        raise ExpansionError(f"expansion violates {bad[0]} at {bad[1]}")
    return s


def expand_distinctly_regular(r: FiniteRing) -> FiniteInversionStructure:
    """inv(x) is the unique y with x*y*x = x and y*x*y = y."""
    r = r.ring
    inv = []
    for x in range(r.n):
        cands = inverse_pairs(r, x)
        if len(cands) != 1:
            raise NotDistinctlyRegular(x, cands)
        inv.append(next(iter(cands)))
    s = FiniteInversionStructure(r, inv, validate=False)
    bad = s.ir_violation()
    if bad is not None:
        raise ExpansionError(f"expansion violates {bad[0]} at {bad[1]}")
    return s


@dataclass
class UniquenessReport:
    passed: bool
    cases: int
    witness: tuple | None = None

    def __str__(self):
        if self.passed:
            return f"uniqueness: pass ({self.cases} pairs)"
        x, y = self.witness
        return f"uniqueness: fail at x={x}, y={y} ({self.cases} pairs)"


def verify_unique_inverse(s: FiniteInversionStructure) -> UniquenessReport:
    """Any y with (xyx = x or xxy = x) and (yxy = y or yyx = y) must be inv(x)."""
    M, I = s.mul_table, s.inv_table
    n = s.n
    for x in range(n):
        for y in range(n):
            xy, yx = M[x][y], M[y][x]
            first = M[xy][x] == x or M[M[x][x]][y] == x
            second = M[yx][y] == y or M[M[y][y]][x] == y
            if first and second and y != I[x]:
                return UniquenessReport(False, x * n + y + 1, (x, y))
    return UniquenessReport(True, n * n)


@dataclass
class SemigroupReport:
    regular: bool
    idempotents_commute: bool
    distinctly_regular: bool
    pseudo_commutative: bool
    idempotents_self_inverse: bool
    idempotent_products_idempotent: bool
    # each implication -> (holds, witness or None)
    implications: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.implications.values())

    def lines(self):
        for name, (ok, witness) in self.implications.items():
            extra = "" if witness is None else f" witness={witness}"
            yield f"{name}: {'pass' if ok else 'fail'}{extra}"


def check_semigroup_props(s: FiniteInversionStructure) -> SemigroupReport:
    M, I = s.mul_table, s.inv_table
    n = s.n
    reg = check_regularity(s.ring)
    idem = idempotents(s.ring)

    pc_witness = next(((x, y) for x in range(n) for y in range(n)
                       if I[M[x][y]] != M[I[y]][I[x]]), None)
    pseudo_comm = pc_witness is None
    self_inv_witness = next((e for e in idem if I[e] != e), None)
    self_inv = self_inv_witness is None
    prod_witness = next(((e, f) for e in idem for f in idem
                         if M[M[e][f]][M[e][f]] != M[e][f]), None)
    prods_idem = prod_witness is None

    premise = reg.regular and reg.idempotents_commute
    implications = {
        # regular + commuting idempotents => distinctly regular
        "ICtoDR": (not premise or reg.distinctly_regular,
                   None if not premise or reg.distinctly_regular
                   else reg.witnesses.get("distinctly_regular")),
        # distinctly regular => idempotents commute
        "DRtoIC": (not reg.distinctly_regular or reg.idempotents_commute,
                   None if not reg.distinctly_regular or reg.idempotents_commute
                   else reg.witnesses.get("idempotents_commute")),
        # regular + commuting idempotents => the (unique) expansion is pseudo-commutative
        "RRCI2PCIR": (not premise or pseudo_comm,
                      None if not premise or pseudo_comm else pc_witness),
        # pseudo-commutative + self-inverse idempotents => idempotent products
        "selfinv": (not (pseudo_comm and self_inv) or prods_idem,
                    None if not (pseudo_comm and self_inv) or prods_idem else prod_witness),
        # distinctly regular inversion ring => pseudo-commutative
        "DRtoPC": (not reg.distinctly_regular or pseudo_comm,
                   None if not reg.distinctly_regular or pseudo_comm else pc_witness),
    }
    return SemigroupReport(reg.regular, reg.idempotents_commute, reg.distinctly_regular,
                           pseudo_comm, self_inv, prods_idem, implications)


@dataclass
class SearchResult:
    structure: FiniteInversionStructure | None
    exhausted: bool
    steps: int


def search_inversion_expansion(r: FiniteRing, budget: int = 100_000) -> SearchResult:
    """Experimental: backtracking search for an inverse table satisfying IR.

    ``exhausted`` is True when the search space was fully explored, so a None
    structure then means no expansion exists.  Hitting the step budget
    returns ``exhausted=False`` with no claim either way.
    """
    r = r.ring
    n = r.n
    M, N = r.mul_table, r.neg_table
    if any(M[x][r.one] != x for x in range(n)):
        return SearchResult(None, True, 0)
    cands = [sorted(inverse_pairs(r, x)) for x in range(n)]
    inv = [-1] * n
    steps = 0

    def assign(x, y, trail):
        # inv(x) = y forces inv(y) = x, inv(-x) = -y, inv(-y) = -x
        for a, b in ((x, y), (y, x), (N[x], N[y]), (N[y], N[x])):
            if inv[a] == -1:
                if b not in cands[a]:
                    return False
                inv[a] = b
                trail.append(a)
            elif inv[a] != b:
                return False
        return True

    def solve():
        nonlocal steps
        try:
            x = inv.index(-1)
        except ValueError:
            return True
        for y in cands[x]:
            steps += 1
            if steps > budget:
                raise _Budget
            trail = []
            if assign(x, y, trail) and solve():
                return True
            for a in trail:
                inv[a] = -1
        return False

    try:
        found = solve()
    except _Budget:
        return SearchResult(None, False, steps)
    if not found:
        return SearchResult(None, True, steps)
    return SearchResult(FiniteInversionStructure(r, inv), True, steps)


class _Budget(Exception):
    pass
