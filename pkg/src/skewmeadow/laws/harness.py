"""Running law suites exhaustively, over grids, or by seeded random sampling."""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from ..algebra import Structure
from ..matrix import MatrixRing, SingularityClass, class_representative, grid
from .catalog import Law, LawSuite


@dataclass(frozen=True)
class Exhaustive:
    def describe(self):
        return "exhaustive"


@dataclass(frozen=True)
class Grid:
    """Exhaustive over matrices whose entries are reduced p/q with |p|, q <= bound."""

    bound: int = 2

    def describe(self):
        return f"grid(bound={self.bound})"


@dataclass(frozen=True)
class Random:
    seed: int = 0
    samples: int = 10_000
    bound: int = 100

    def describe(self):
        return f"random(seed={self.seed}, samples={self.samples}, bound={self.bound})"


@dataclass
class LawOutcome:
    name: str
    passed: bool
    cases: int
    failures: int = 0
    witness: tuple | None = None
    witness_text: str | None = None
    all_witnesses: list = field(default_factory=list)


@dataclass
class LawReport:
    suite: str
    structure: str
    mode: str
    outcomes: list

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def total_cases(self) -> int:
        return sum(o.cases for o in self.outcomes)

    def outcome(self, name: str) -> LawOutcome:
        for o in self.outcomes:
            if o.name == name:
                return o
        raise KeyError(name)

    def porcelain(self) -> str:
        lines = []
        for o in self.outcomes:
            line = f"LAW {self.suite}.{o.name} {'pass' if o.passed else 'fail'} cases={o.cases}"
            if o.witness_text is not None:
                line += f" witness={o.witness_text}"
            lines.append(line)
        return "\n".join(lines)

    def table(self) -> str:
        head = f"suite {self.suite} on {self.structure} [{self.mode}]"
        width = max([len(o.name) for o in self.outcomes] + [4])
        rows = [head, f"  {'law'.ljust(width)}  result  cases     witness"]
        for o in self.outcomes:
            result = "pass" if o.passed else "FAIL"
            rows.append(f"  {o.name.ljust(width)}  {result:<6}  {o.cases:<8}  {o.witness_text or ''}".rstrip())
        verdict = "all laws pass" if self.passed else f"{sum(not o.passed for o in self.outcomes)} law(s) fail"
        rows.append(f"  {verdict}; {self.total_cases} cases")
        return "\n".join(rows)


def render_tuple(s: Structure, args: tuple) -> str:
    return "(" + ", ".join(s.render(a) for a in args) + ")"


# --------------------------------------------------------------------------
# sampling


def sampler(s: Structure, seed: int = 0, bound: int = 100) -> Iterator:
    """Deterministic element stream.

    Finite structures yield their full carrier once.  Matrix rings first
    yield one matrix of every singularity class, then random matrices.  Other
    infinite structures yield random elements forever.
    """
    if s.finite:
        yield from s.elements()
        return
    rng = random.Random(f"sampler:{seed}:{bound}")
    if isinstance(s, MatrixRing):
        for kind in SingularityClass:
            yield class_representative(kind, rng, bound)
    while True:
        yield s.random_element(rng, bound)


def _domain(s: Structure, mode):
    if isinstance(mode, Grid):
        if not isinstance(s, MatrixRing):
            raise ValueError("grid mode applies to the matrix ring only")
        return list(grid(mode.bound))
    if not s.finite:
        raise ValueError(f"{s.name} is infinite; use random or grid mode")
    return list(s.elements())


def _check_block(law: Law, s: Structure, domain, firsts, collect: bool):
    cases = failed = 0
    witnesses = []
    tails = list(itertools.product(domain, repeat=law.arity - 1))
    for a in firsts:
        for tail in tails:
            args = (a,) + tail
            cases += 1
            if not law.holds(s, args):
                failed += 1
                if collect or not witnesses:
                    witnesses.append(args)
    return cases, failed, witnesses


def _run_exhaustive(law: Law, s: Structure, domain, collect: bool, workers: int) -> LawOutcome:
    if law.arity == 0:
        ok = law.holds(s, ())
        return _outcome(law, s, 1, 0 if ok else 1, [] if ok else [()], collect)
    if workers <= 1:
        parts = [_check_block(law, s, domain, domain, collect)]
    else:
        size = -(-len(domain) // workers)
        chunks = [domain[i:i + size] for i in range(0, len(domain), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda c: _check_block(law, s, domain, c, collect), chunks))
    # chunks are in domain order, so the first witness overall is the smallest
    witnesses = [w for p in parts for w in p[2]]
    return _outcome(law, s, sum(p[0] for p in parts), sum(p[1] for p in parts), witnesses, collect)


def _outcome(law, s, cases, failed, witnesses, collect) -> LawOutcome:
    if not failed:
        return LawOutcome(law.name, True, cases)
    witness = witnesses[0]
    return LawOutcome(law.name, False, cases, failed, witness, render_tuple(s, witness),
                      list(witnesses) if collect else [])


def _run_random(law: Law, s: Structure, mode: Random, suite: str, collect: bool) -> LawOutcome:
    if law.arity == 0:
        ok = law.holds(s, ())
        return _outcome(law, s, 1, 0 if ok else 1, [] if ok else [()], collect)
    stream = sampler(s, seed=f"{mode.seed}:{suite}.{law.name}", bound=mode.bound)
    if s.finite:
        carrier = list(stream)
        rng = random.Random(f"{mode.seed}:{suite}.{law.name}")
        draw = lambda: rng.choice(carrier)  # noqa: E731
    else:
        draw = stream.__next__
    failures = []
    best = None
    for _ in range(mode.samples):
        args = tuple(draw() for _ in range(law.arity))
        if not law.holds(s, args):
            failures.append(args)
            key = (len(render_tuple(s, args)), render_tuple(s, args))
            if best is None or key < best[0]:
                best = (key, args)
    if not failures:
        return LawOutcome(law.name, True, mode.samples)
    return LawOutcome(law.name, False, mode.samples, len(failures), best[1],
                      render_tuple(s, best[1]), failures if collect else [])


def run_suite(suite: LawSuite, s: Structure, mode=None, *, collect: bool = False,
              workers: int = 1) -> LawReport:
    """Check every law of ``suite`` on ``s``.

    ``mode`` defaults to exhaustive for finite structures and to
    ``Random()`` otherwise.  In exhaustive and grid modes every argument
    tuple is checked once and the witness is the lexicographically smallest
    failing tuple; in random mode it is the shortest rendered failure.
    ``collect`` keeps every failing tuple.
    """
    s.require(suite.symbols)
    if mode is None:
        mode = Exhaustive() if s.finite else Random()
    outcomes = []
    if isinstance(mode, Random):
        for law in suite.laws:
            outcomes.append(_run_random(law, s, mode, suite.name, collect))
    else:
        domain = _domain(s, mode)
        for law in suite.laws:
            outcomes.append(_run_exhaustive(law, s, domain, collect, workers))
    return LawReport(suite.name, s.name, mode.describe(), outcomes)
