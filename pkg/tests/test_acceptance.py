"""Acceptance criteria 1-9; each test adds one PASS/FAIL line to the run summary."""

import functools
import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from acceptance_log import LINES as ACCEPTANCE_LINES
from hlbc.alcove import count_admissible, enumerate_admissible, schwer_evaluate
from hlbc.chains import lambda_chain, validate_chain
from hlbc.characters import dimension, orbit_sum, weyl_character
from hlbc.exactpoly import HLPoly
from hlbc.fillings import (enumerate_fillings, filling_map, hhl_reduction, hhl_stats,
                           kn_fillings, in_reduction_class, stat_des, stat_N)
from hlbc.formula import compressed_fiber_demo, identity_suite, tableau_evaluate, verify_compression
from hlbc.weyl_bc import Root, apply_reflection, enumerate_group, length, length_diff

CRITERION_4 = [("C", 2, (2, 1)), ("C", 2, (3, 1)), ("C", 2, (3, 2)), ("C", 3, (3, 2, 1)),
               ("B", 2, (2, 1))]

C2_21_POLY = HLPoly(2, {
    (4, 2): (1,), (2, 4): (1,), (4, -2): (1,), (2, -4): (1,),
    (-2, 4): (1,), (-4, 2): (1,), (-2, -4): (1,), (-4, -2): (1,),
    (2, 0): (2, -1, -1), (0, 2): (2, -1, -1), (-2, 0): (2, -1, -1), (0, -2): (2, -1, -1),
})


def criterion(num, budget):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as e:
                ACCEPTANCE_LINES.append(f"criterion {num}: FAIL ({type(e).__name__}: {e})"[:200])
                raise
            dt = time.perf_counter() - t0
            ok = dt < budget
            ACCEPTANCE_LINES.append(
                f"criterion {num}: {'PASS' if ok else 'FAIL'} in {dt:.2f}s (budget {budget}s)"
                + (f"; {detail}" if detail else ""))
            assert ok, f"took {dt:.2f}s, budget {budget}s"
        return wrapper
    return deco


@criterion(1, 1.0)
def test_criterion_1_example_polynomial():
    F = enumerate_fillings("C", 2, (2, 1))
    ch = lambda_chain("C", 2, (2, 1))
    assert len(F) == 27
    assert count_admissible(ch) == 70
    assert tableau_evaluate("C", 2, (2, 1), F) == C2_21_POLY
    assert schwer_evaluate(ch) == C2_21_POLY
    return "27 fillings, 70 pairs"


@criterion(2, 1.0)
def test_criterion_2_displayed_fibers():
    rep = verify_compression("C", 2, (2, 1))
    fib = {f.filling.columns: (f.size, f.total) for f in rep.fibers}
    assert fib[((-1,), (1, 2), (1, 2))] == (3, (1, -1))
    assert fib[((-1,), (2, 1), (2, 1))] == (2, (0, 1, -1))
    assert fib[((2,), (2, -1), (1, -2))] == (2, (1, -1))
    assert fib[((-1,), (-2, -1), (-2, -1))] == (7, (1, -1))
    return "sizes 3, 2, 2 and 7"


@criterion(3, 1.0)
def test_criterion_3_chain_and_filling():
    ch = lambda_chain("C", 3, (3, 2, 1))
    segs = [[tuple(r) for r in ch.roots[s.start:s.stop]] for s in ch.segments]
    assert segs == [
        [(1, -2), (1, -3), (1, -1), (1, 3), (1, 2)],
        [(1, -2)], [(1, -3), (1, -1), (1, 3)], [(1, -2), (2, -3), (2, -2), (2, 3)],
        [(1, -2)], [(1, -3), (2, -3)], [(1, -1)], [(1, -2), (2, -2)], [(1, -3), (2, -3), (3, -3)],
    ]
    assert [s.group for s in ch.segments] == [3, 2, 2, 2, 1, 1, 1, 1, 1]
    assert ch.m == 22
    w, J = (-1, -2, -3), (2, 6, 12, 13)
    assert any(p.J == J for p in enumerate_admissible(ch, [w]))
    assert filling_map(ch, w, J).columns == (
        (-1,), (3, -2), (2, -3), (2, -3), (2, 1, 3), (2, 1, 3), (2, 1, 3))


@functools.lru_cache(maxsize=None)
def _evaluations(type_, n, parts):
    F = enumerate_fillings(type_, n, parts)
    return tableau_evaluate(type_, n, parts, F), schwer_evaluate(lambda_chain(type_, n, parts))


@criterion(4, 120.0)
def test_criterion_4_dual_formula():
    for inst in CRITERION_4:
        tab, alc = _evaluations(*inst)
        assert tab == alc, inst
    return f"{len(CRITERION_4)} instances"


@criterion(5, 120.0)
def test_criterion_5_fibers_and_weights():
    pairs = 0
    for type_, n, parts in CRITERION_4:
        rep = verify_compression(type_, n, parts)
        assert rep.ok, rep.first_failure()
        assert all(f.weight_ok for f in rep.fibers)
        pairs += rep.pairs
    return f"{pairs} pairs checked"


@criterion(6, 10.0)
def test_criterion_6_specializations():
    for type_, n, parts in CRITERION_4:
        lam = lambda_chain(type_, n, parts).lam
        P, _ = _evaluations(type_, n, parts)
        assert P.specialize_t(0) == weyl_character(type_, n, lam).specialize_t(0)
        assert P.specialize_t(1) == orbit_sum(type_, n, lam).specialize_t(1)
        assert len(kn_fillings(type_, n, parts)) == dimension(type_, n, lam)
    assert len(kn_fillings("C", 2, (2, 1))) == 16


def _all_roots(n):
    out = []
    for i in range(1, n + 1):
        out += [Root(i, 0), Root(i, -i)]
        for j in range(i + 1, n + 1):
            out += [Root(i, j), Root(i, -j)]
    return out


def _small_instances(n):
    out = []
    if n >= 2:
        for parts in combinations(range(5, 0, -1), n):
            out.append(("C", n, parts))
    for extra in range(0, 3):
        for rep in combinations(range(1, n + 1), extra):
            mu = tuple(sorted(list(range(1, n + 1)) + list(rep), reverse=True))
            out.append(("B", n, mu))
    return out


@criterion(7, 120.0)
def test_criterion_7_property_suites():
    # (a) length differences
    for n in range(1, 4):
        for w in enumerate_group(n):
            for r in _all_roots(n):
                assert length_diff(w, r) == length(apply_reflection(w, r)) - length(w)
    rng = random.Random(2024)
    for _ in range(10 ** 4):
        n = rng.randint(1, 6)
        w = tuple(rng.choice((1, -1)) * x for x in rng.sample(range(1, n + 1), n))
        r = rng.choice(_all_roots(n))
        assert length_diff(w, r) == length(apply_reflection(w, r)) - length(w)
    # (b) chain-splitting identities
    rep = identity_suite(3)
    assert rep.ok, rep.failures[:3]
    for n in (1, 2):
        assert identity_suite(n).ok
    # (c) the HHL reduction on C3 (3,2,1)
    hits = 0
    for s in enumerate_fillings("C", 3, (3, 2, 1)):
        if in_reduction_class(s):
            hits += 1
            h = hhl_stats(hhl_reduction(s), 3)
            assert stat_N(s) == h.cinv == h.cinv_triples and stat_des(s) == h.des
    # (d) chain validation
    chains = 0
    for n in (1, 2, 3):
        for type_, m, parts in _small_instances(n):
            ch = lambda_chain(type_, m, parts)
            assert validate_chain(type_, m, ch.roots, ch.lam), (type_, m, parts)
            chains += 1
    return f"{hits} reduced fillings, {chains} chains"


@criterion(8, 1.0)
def test_criterion_8_compressed_fiber():
    d = compressed_fiber_demo(2, (3, 2))
    assert d.w == (-2, -1)
    assert sorted(d.chains, key=len) == [[Root(1, -2)], [Root(1, -1), Root(1, -2), Root(2, -2)]]
    assert d.total == (1, -2, 2, -1)  # (1-t)(1-t+t^2)
    assert d.factored_form is None


@criterion(9, 120.0)
def test_criterion_9_compression_factor():
    F = enumerate_fillings("C", 3, (3, 2, 1))
    pairs = count_admissible(lambda_chain("C", 3, (3, 2, 1)))
    factor = Fraction(pairs, len(F))
    assert factor > 2
    return f"C3 (3,2,1): {pairs} pairs / {len(F)} fillings = {float(factor):.2f}"


def test_non_regular_c4_is_rejected():
    with pytest.raises(ValueError, match="lambda not regular"):
        lambda_chain("C", 4, (3, 2, 1, 0))
