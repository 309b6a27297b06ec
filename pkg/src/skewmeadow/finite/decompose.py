"""Finite-scale embedding of a skew meadow into a product of zero-totalized
skew fields, via the atoms of its Boolean algebra of central idempotents."""
from __future__ import annotations

from dataclasses import dataclass

from ..algebra import ProductStructure
from .ring import FiniteInversionStructure, from_operations


class NotSkewMeadow(ValueError):
    pass


class DecompositionError(AssertionError):
    """A factor or the embedding failed verification."""


def local_units(s: FiniteInversionStructure) -> set:
    M, I = s.mul_table, s.inv_table
    return {M[x][I[x]] for x in range(s.n)}


def central_idempotents(s: FiniteInversionStructure) -> list:
    """Local units closed under product and complement 1 - e, sorted."""
    M, A, N = s.mul_table, s.add_table, s.neg_table
    found = local_units(s)
    frontier = list(found)
    while frontier:
        e = frontier.pop()
        new = {A[s.one][N[e]]} | {M[e][f] for f in found}
        for f in new - found:
            found.add(f)
            frontier.append(f)
    return sorted(found)


def atoms(s: FiniteInversionStructure) -> list:
    """Minimal nonzero central idempotents (e <= f iff e*f = e)."""
    M = s.mul_table
    idem = [e for e in central_idempotents(s) if e != s.zero]
    return [e for e in idem if not any(f != e and M[f][e] == f for f in idem)]


def corner(s: FiniteInversionStructure, e: int):
    """The ring e*S with unit e and inherited inverse.

    Returns the tabulated structure and the map from indices of ``s`` lying
    in e*S to indices of the new structure.
    """
    M, A, N, I = s.mul_table, s.add_table, s.neg_table, s.inv_table
    carrier = sorted({M[e][x] for x in range(s.n)})
    structure = from_operations(
        carrier, s.zero, e,
        add=lambda a, b: A[a][b], neg=lambda a: N[a], mul=lambda a, b: M[a][b],
        inv=lambda a: I[a], name=f"{s.name}*e{e}", render=s.render,
    )
    order = [s.zero] + ([e] if e != s.zero else []) + [c for c in carrier if c not in (s.zero, e)]
    return structure, {c: i for i, c in enumerate(order)}


def is_zero_totalized_field(f: FiniteInversionStructure) -> bool:
    """Only idempotents are 0 and 1, and every nonzero x has y with y*x = 1."""
    M = f.mul_table
    if any(M[e][e] == e for e in range(f.n) if e not in (f.zero, f.one)):
        return False
    return all(f.one in (M[y][x] for y in range(f.n)) for x in range(f.n) if x != f.zero)


@dataclass
class Decomposition:
    source: FiniteInversionStructure
    atoms: list
    factors: list
    index_maps: list
    embedding: list   # embedding[x] = tuple of factor indices

    @property
    def product(self) -> ProductStructure:
        return ProductStructure(self.factors)

    def embed(self, x: int) -> tuple:
        return self.embedding[x]

    def orders(self) -> list:
        return [f.n for f in self.factors]


def decompose(s: FiniteInversionStructure) -> Decomposition:
    if not isinstance(s, FiniteInversionStructure):
        raise NotSkewMeadow(f"{s.name} carries no inverse table")
    bad = s.skmd_violation()
    if bad is not None:
        raise NotSkewMeadow(f"{s.name} violates {bad[0]} at {bad[1]}")
    if s.n == 1:
        raise NotSkewMeadow("the trivial ring has no zero-totalized field factors")
    M = s.mul_table
    es = atoms(s)
    factors, maps = [], []
    for e in es:
        f, idx = corner(s, e)
        if not is_zero_totalized_field(f):
            raise DecompositionError(f"factor for atom {e} is not a zero-totalized field")
        factors.append(f)
        maps.append(idx)
    embedding = [tuple(idx[M[e][x]] for e, idx in zip(es, maps)) for x in range(s.n)]
    d = Decomposition(s, es, factors, maps, embedding)
    _verify_embedding(d)
    return d


def _verify_embedding(d: Decomposition) -> None:
    s, P, h = d.source, d.product, d.embedding
    n = s.n
    if len(set(h)) != n:
        raise DecompositionError("embedding is not injective")
    if h[s.zero] != P.zero or h[s.one] != P.one:
        raise DecompositionError("embedding does not preserve constants")
    for x in range(n):
        if h[s.neg(x)] != P.neg(h[x]) or h[s.inv(x)] != P.inv(h[x]):
            raise DecompositionError(f"embedding does not preserve unary operations at {x}")
        for y in range(n):
            if h[s.add(x, y)] != P.add(h[x], h[y]) or h[s.mul(x, y)] != P.mul(h[x], h[y]):
                raise DecompositionError(f"embedding does not preserve binary operations at {(x, y)}")
