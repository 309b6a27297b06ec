"""Acceptance criteria 1-9.

Every criterion prints one ``CRITERION n: PASS|FAIL ...`` line.  Run with
``pytest tests/test_acceptance.py`` (lines appear in the terminal summary) or
``python tests/test_acceptance.py``.
"""
from fractions import Fraction
from math import gcd
import random
import sys
import time

from skewmeadow.algebra import (PrimeField, ProductStructure, QuaternionField,
                                QuaternionRational, RationalField, ComplexRationalField)
from skewmeadow.finite import (FiniteInversionStructure, NotStronglyRegular, decompose,
                               expand_strongly_regular, verify_unique_inverse, zmod)
from skewmeadow.laws import (DERIVED, IR, PCIR, SKMD, Exhaustive, Grid, Random,
                             get_suite, run_suite)
from skewmeadow.matrix import Matrix2, MatrixRing, inv_matrix
from skewmeadow.terms import (Add, Inv, Mul, Neg, One, Zero, desugar, evaluate, normalize,
                              parse, print_canonical, random_equation, random_term, to_text)

# pinned budgets and sizes
CRIT1_SECONDS = 10.0
CRIT3_SECONDS = 5.0
CRIT6_SECONDS = 30.0
SAMPLES, SEED, BOUND = 10_000, 0, 100
GRID_BOUND = 2          # entries {-2, -1, -1/2, 0, 1/2, 1, 2}
MAX_MODULUS = 100
TERMS, TERM_DEPTH = 10_000, 12
EQUATIONS = 1_000

RESULTS = {}


def record(n, ok, detail):
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS[n] = line
    print(line)
    return ok


def finite_models():
    f = PrimeField
    return ([f(p) for p in (2, 3, 5, 7, 11)]
            + [ProductStructure([f(2), f(3)]), ProductStructure([f(2)] * 3),
               ProductStructure([f(3), f(5), f(7)])])


def prime_factors(m):
    out, d = [], 2
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 1
    return out + ([m] if m > 1 else [])


def square_free(m):
    return all(m % (d * d) for d in range(2, m + 1) if d * d <= m)


def crt_inverse_table(m):
    # componentwise field inverses, glued back by brute-force CRT search
    primes = prime_factors(m)
    table = []
    for x in range(m):
        want = [pow(x % p, p - 2, p) if x % p else 0 for p in primes]
        table.append(next(y for y in range(m) if [y % p for p in primes] == want))
    return table


def q0_value(t):
    # independent of skewmeadow.terms.evaluate
    if isinstance(t, Zero):
        return Fraction(0)
    if isinstance(t, One):
        return Fraction(1)
    if isinstance(t, Add):
        return q0_value(t.left) + q0_value(t.right)
    if isinstance(t, Mul):
        return q0_value(t.left) * q0_value(t.right)
    if isinstance(t, Neg):
        return -q0_value(t.arg)
    if isinstance(t, Inv):
        v = q0_value(t.arg)
        return Fraction(0) if v == 0 else 1 / v
    raise TypeError(t)


# --------------------------------------------------------------------------


def criterion_1():
    start = time.perf_counter()
    failures = []
    for s in finite_models():
        for suite in (SKMD, DERIVED):
            report = run_suite(suite, s, Exhaustive())
            failures += [f"{s.name}:{o.name}" for o in report.outcomes if not o.passed]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < CRIT1_SECONDS and len(DERIVED) == 12
    return record(1, ok, f"8 finite models, SkMd + {len(DERIVED)} DerivedProps laws, "
                         f"violations={failures or 0}, {elapsed:.2f}s (< {CRIT1_SECONDS:.0f}s)")


def criterion_2():
    mode = Random(seed=SEED, samples=SAMPLES, bound=BOUND)
    plan = [(RationalField(), ("skmd", "derivedprops", "qspec")),
            (ComplexRationalField(), ("skmd", "derivedprops", "cspec")),
            (QuaternionField(), ("skmd", "derivedprops", "hspec"))]
    failures, cases = [], 0
    for s, suites in plan:
        for name in suites:
            report = run_suite(get_suite(name), s, mode)
            cases += report.total_cases
            failures += [f"{s.name}:{report.suite}.{o.name} {o.witness_text}"
                         for o in report.outcomes if not o.passed]
    return record(2, not failures, f"q0/c0/h0 sampled ({SAMPLES} per law, seed {SEED}, bound {BOUND}), "
                                   f"{cases} cases, violations={failures or 0}")


def criterion_3():
    start = time.perf_counter()
    m = MatrixRing()
    mode = Grid(GRID_BOUND)
    ir = run_suite(IR, m, mode)
    ril = run_suite(SKMD, m, mode, collect=True).outcome("Ril")
    e21 = Matrix2.of([[0, 0], [1, 0]])
    p = Matrix2.of([[1, 0], [1, 0]])
    ip = inv_matrix(p)
    pc_fails = not PCIR.law("InverseAntiHomomorphism").holds(m, (p, p))
    elapsed = time.perf_counter() - start
    ok = (ir.passed and ir.total_cases == 4 * 7 ** 4 and not ril.passed
          and ril.failures > 0 and (e21,) in ril.all_witnesses and pc_fails
          and ip == Matrix2.of([["1/2", "1/2"], [0, 0]]) and ip * ip != ip
          and elapsed < CRIT3_SECONDS)
    return record(3, ok, f"grid 7^4: IR laws pass={ir.passed}, Ril fails on {ril.failures} matrices "
                         f"(e21 included={(e21,) in ril.all_witnesses}), PC fails at P={pc_fails}, "
                         f"inv(P)={ip} idempotent={ip * ip == ip}, {elapsed:.2f}s (< {CRIT3_SECONDS:.0f}s)")


def expansions():
    out, problems = {}, []
    for m in range(1, MAX_MODULUS + 1):
        try:
            s = expand_strongly_regular(zmod(m))
        except NotStronglyRegular as err:
            x = err.witness
            genuine = all((x * x * y) % m != x for y in range(m))
            if square_free(m) or not genuine:
                problems.append(f"m={m} rejected (witness {x})")
            continue
        if not square_free(m):
            problems.append(f"m={m} accepted")
            continue
        out[m] = s
    return out, problems


def criterion_4(exp):
    out, problems = exp
    for m, s in out.items():
        if list(s.inv_table) != crt_inverse_table(m):
            problems.append(f"m={m} differs from CRT oracle")
        if not run_suite(SKMD, s, Exhaustive()).passed:
            problems.append(f"m={m} fails SkMd")
    expected = sum(square_free(m) for m in range(1, MAX_MODULUS + 1))
    ok = not problems and len(out) == expected
    return record(4, ok, f"{len(out)} square-free m <= {MAX_MODULUS} expanded and match CRT, "
                         f"{MAX_MODULUS - len(out)} others rejected with witness, problems={problems or 0}")


def criterion_5(exp):
    out, _ = exp
    bad = [m for m, s in out.items() if not verify_unique_inverse(s).passed]
    good = out[7]
    inv = list(good.inv_table)
    inv[2], inv[3] = inv[3], inv[2]
    control = verify_unique_inverse(FiniteInversionStructure(good.ring, inv, validate=False))
    ok = not bad and not control.passed and control.witness is not None
    return record(5, ok, f"uniqueness holds on {len(out) - len(bad)}/{len(out)} expansions; "
                         f"corrupted Z/7 control: {control}")


def criterion_6(exp):
    out, _ = exp
    start = time.perf_counter()
    problems = []
    for m, s in out.items():
        if m == 1:
            continue
        d = decompose(s)
        if sorted(d.orders()) != prime_factors(m):
            problems.append(f"m={m} orders {d.orders()}")
        for f in d.factors:
            M, I = f.mul_table, f.inv_table
            idem = [e for e in range(f.n) if M[e][e] == e]
            gil = all(M[x][I[x]] == f.one for x in range(f.n) if x != f.zero)
            if idem != [f.zero, f.one] or not gil:
                problems.append(f"m={m} factor of order {f.n} is not a zero-totalized field")
        h = d.embedding
        if len(set(h)) != s.n:
            problems.append(f"m={m} not injective")
        fs = d.factors

        def comp(op, *args):
            return tuple(getattr(f, op)(*(a[i] for a in args)) for i, f in enumerate(fs))

        for x in range(s.n):
            if h[s.inv(x)] != comp("inv", h[x]) or h[s.neg(x)] != comp("neg", h[x]):
                problems.append(f"m={m} unary op at {x}")
            for y in range(s.n):
                if (h[s.add(x, y)] != comp("add", h[x], h[y])
                        or h[s.mul(x, y)] != comp("mul", h[x], h[y])):
                    problems.append(f"m={m} binary op at {(x, y)}")
    elapsed = time.perf_counter() - start
    count = sum(1 for m in out if m > 1)
    ok = not problems and elapsed < CRIT6_SECONDS
    return record(6, ok, f"{count} square-free 2 <= m <= {MAX_MODULUS} decomposed into prime-order "
                         f"fields, embeddings verified, problems={problems[:3] or 0}, "
                         f"{elapsed:.2f}s (< {CRIT6_SECONDS:.0f}s)")


def criterion_7():
    rng = random.Random(SEED)
    q0 = RationalField()
    problems = []
    for n in range(TERMS):
        t = random_term(rng, TERM_DEPTH)
        c = normalize(t)
        value = q0_value(desugar(t))
        canon = print_canonical(c)
        if c.sign and gcd(c.k, c.l) != 1:
            problems.append(f"term {n}: gcd")
        if c.value != value or evaluate(canon, q0) != value:
            problems.append(f"term {n}: value")
        if normalize(canon) != c or normalize(parse(to_text(canon))) != c:
            problems.append(f"term {n}: round trip")
    golden = {"inv(0)": "0", "(1+1)*inv(1+1+1)": "2*inv(3)"}
    for src, want in golden.items():
        if str(normalize(src)) != want:
            problems.append(f"golden {src}")
    return record(7, not problems, f"{TERMS} random terms (depth <= {TERM_DEPTH}, seed {SEED}) "
                                   f"normalized soundly, golden cases ok, problems={problems[:3] or 0}")


def criterion_8():
    h = QuaternionField()
    one, i, j, k = (QuaternionRational(*v) for v in ((1, 0, 0, 0), (0, 1, 0, 0),
                                                     (0, 0, 1, 0), (0, 0, 0, 1)))
    facts = {"i*j": k, "j*k": i, "k*i": j, "j*i": -k, "k*j": -i, "i*k": -j,
             "i*i": -one, "j*j": -one, "k*k": -one, "i*j*k": -one,
             "c(0)": h.zero, "c(1)": one, "c(k)": -k}
    bad = [src for src, want in facts.items() if evaluate(parse(src), h) != want]
    rng = random.Random(SEED)
    xs = [h.zero, one, i, j, k] + [h.random_element(rng, BOUND) for _ in range(2000)]
    neg_ok = all(h.conj(h.neg(x)) == h.neg(h.conj(x)) for x in xs)
    if not neg_ok:
        bad.append("c(-x) = -c(x)")
    total = len(facts) + 1
    return record(8, not bad, f"{total - len(bad)}/{total} quaternion facts exact, failures={bad or 0}")


def criterion_9():
    rng = random.Random(SEED)
    models = finite_models()
    problems, instances = [], 0
    for n in range(EQUATIONS):
        lhs, rhs = random_equation(rng)
        if normalize(lhs) != normalize(rhs):
            problems.append(f"eq {n} not valid in q0")
            continue
        for s in models:
            instances += 1
            if evaluate(lhs, s) != evaluate(rhs, s):
                problems.append(f"eq {n} diverges in {s.name}: {to_text(lhs)} = {to_text(rhs)}")
    return record(9, not problems, f"{EQUATIONS} ground equations valid in q0 checked in "
                                   f"{len(models)} finite models ({instances} checks), "
                                   f"divergences={problems[:3] or 0}")


# --------------------------------------------------------------------------
# pytest entry points

_EXP = None


def _expansions():
    global _EXP
    if _EXP is None:
        _EXP = expansions()
    return _EXP


def test_criterion_1_finite_models_exhaustive():
    assert criterion_1(), RESULTS[1]


def test_criterion_2_infinite_models_sampled():
    assert criterion_2(), RESULTS[2]


def test_criterion_3_matrix_inversion_ring():
    assert criterion_3(), RESULTS[3]


def test_criterion_4_expansion_matches_crt():
    assert criterion_4(_expansions()), RESULTS[4]


def test_criterion_5_uniqueness():
    assert criterion_5(_expansions()), RESULTS[5]


def test_criterion_6_decomposition():
    assert criterion_6(_expansions()), RESULTS[6]


def test_criterion_7_normalizer():
    assert criterion_7(), RESULTS[7]


def test_criterion_8_quaternion_facts():
    assert criterion_8(), RESULTS[8]


def test_criterion_9_cross_structure_agreement():
    assert criterion_9(), RESULTS[9]


def main():
    exp = expansions()
    oks = [criterion_1(), criterion_2(), criterion_3(), criterion_4(exp), criterion_5(exp),
           criterion_6(exp), criterion_7(), criterion_8(), criterion_9()]
    return 0 if all(oks) else 1


if __name__ == "__main__":
    sys.exit(main())
