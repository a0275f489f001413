"""
Tableau-side evaluation, fiber-by-fiber comparison with the alcove walk,
and enumeration checks of the chain-splitting identities.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .alcove import enumerate_admissible, level_identity_violations, sub_sum
from .chains import lambda_chain
from .exactpoly import HLPoly, TPoly, t_binomial, tpoly_add, tpoly_str
from .fillings import (Filling, compress, content, enumerate_fillings, filling_map, stat_des,
                       stat_N)
from .weyl_bc import (Root, apply_reflection, count_between, ell_minus_ij, ell_plus,
                      enumerate_group, length, length_diff, order_key)

__all__ = [
    "tableau_evaluate", "FiberReport", "CompressionReport", "verify_compression",
    "compressed_fiber_demo", "FiberDemo", "identity_suite", "IdentityReport",
    "delta_chain", "phi_chain", "delta_identity_check", "phi_identity_check",
]


def tableau_evaluate(type_: str, n: int, parts: Sequence[int],
                     fillings: Sequence[Filling] | None = None) -> HLPoly:
    if fillings is None:
        fillings = enumerate_fillings(type_, n, parts)
    p = HLPoly(n)
    for s in fillings:
        p.iadd_term(stat_N(s), stat_des(s), content(s))
    return p


@dataclass
class FiberReport:
    filling: Filling
    size: int
    total: TPoly
    predicted: TPoly
    weight_ok: bool

    @property
    def match(self) -> bool:
        return self.total == self.predicted and self.weight_ok

    def to_json(self) -> dict:
        return {"filling": self.filling.to_json(), "size": self.size,
                "sum": list(self.total), "predicted": list(self.predicted), "match": self.match}


@dataclass
class CompressionReport:
    pairs: int
    fillings: int
    fibers: list[FiberReport]
    missing: list[Filling] = field(default_factory=list)  # in F(lambda) but not hit

    @property
    def factor(self) -> Fraction:
        return Fraction(self.pairs, self.fillings)

    @property
    def ok(self) -> bool:
        return not self.missing and all(f.match for f in self.fibers)

    def first_failure(self) -> str | None:
        if self.missing:
            return f"filling not in the image of the filling map:\n{self.missing[0]}"
        for f in self.fibers:
            if not f.match:
                return (f"fiber of\n{f.filling}\nsums to {tpoly_str(f.total)}, "
                        f"expected {tpoly_str(f.predicted)} (weight ok: {f.weight_ok})")
        return None

    def to_json(self) -> dict:
        return {"fillings": self.fillings, "pairs": self.pairs,
                "factor": float(self.factor), "factor_exact": str(self.factor),
                "ok": self.ok, "fibers": [f.to_json() for f in self.fibers]}


def verify_compression(type_: str, n: int, parts: Sequence[int],
                       max_pairs: int | None = None) -> CompressionReport:
    """Group the alcove-walk terms by filling and compare each fiber sum."""
    chain = lambda_chain(type_, n, parts)
    sums: dict[Filling, TPoly] = {}
    sizes: dict[Filling, int] = defaultdict(int)
    weight_ok: dict[Filling, bool] = defaultdict(lambda: True)
    pairs = 0
    for pair in enumerate_admissible(chain, max_pairs=max_pairs):
        pairs += 1
        s = filling_map(chain, pair.w, pair.J)
        sums[s] = tpoly_add(sums.get(s, ()), t_binomial(pair.a, pair.b))
        sizes[s] += 1
        if content(s) != pair.weight:
            weight_ok[s] = False
    universe = enumerate_fillings(type_, n, parts)
    fibers = []
    for s in universe:
        if s in sums:
            fibers.append(FiberReport(s, sizes[s], sums[s], t_binomial(stat_N(s), stat_des(s)),
                                      weight_ok[s]))
    missing = [s for s in universe if s not in sums]
    extra = set(sums) - set(universe)
    for s in sorted(extra, key=lambda f: f.columns):
        fibers.append(FiberReport(s, sizes[s], sums[s], (), False))
    return CompressionReport(pairs, len(universe), fibers, missing)


@dataclass
class FiberDemo:
    compressed: tuple[tuple[int, ...], ...]
    w: tuple[int, ...]
    chains: list[list[Root]]  # reflections of each pair in the compressed fiber
    fillings: list[Filling]
    total: TPoly

    @property
    def factored_form(self) -> tuple[int, int] | None:
        """``(a, b)`` if the sum is ``t^a (1-t)^b``, else ``None``."""
        for a in range(len(self.total)):
            for b in range(len(self.total)):
                if t_binomial(a, b) == self.total:
                    return a, b
        return None


def compressed_fiber_demo(n: int = 2, parts: Sequence[int] = (3, 2),
                          target: Sequence[Sequence[int]] = ((-2,), (-2,), (-2, -1), (-2, -1),
                                                             (1, 2), (1, 2))) -> FiberDemo:
    """Pairs whose compressed filling equals ``target``; the sum need not factor."""
    chain = lambda_chain("C", n, parts)
    target = tuple(tuple(c) for c in target)
    hits = []
    for pair in enumerate_admissible(chain):
        s = filling_map(chain, pair.w, pair.J)
        if compress(s) == target:
            hits.append((pair, s))
    ws = {p.w for p, _ in hits}
    if len(ws) > 1:
        raise AssertionError(f"compressed fiber spans several w: {sorted(ws)}")
    total: TPoly = ()
    for p, _ in hits:
        total = tpoly_add(total, t_binomial(p.a, p.b))
    return FiberDemo(target, hits[0][0].w if hits else (),
                     [[chain.roots[j - 1] for j in p.J] for p, _ in hits],
                     [s for _, s in hits], total)


# -- chain-splitting identities -------------------------------------------

def delta_chain(n: int, p: int, type_: str = "C") -> list[Root]:
    sign = Root(1, 0) if type_ == "B" else Root(1, -1)
    return ([Root(1, s) for s in range(p + 1, n + 1)] + [sign]
            + [Root(1, -s) for s in range(n, p, -1)])


def phi_chain(n: int, type_: str = "C") -> list[Root]:
    out = []
    for j in range(1, n + 1):
        for i in range(1, j + 1):
            out.append(Root(i, 0) if (i == j and type_ == "B") else Root(i, -j))
    return out


def delta_identity_check(w: Sequence[int], p: int, b: int, type_: str = "C") -> tuple[TPoly, TPoly]:
    """(enumerated, closed form) for increasing chains over Delta ending at ``wT(1) = b``."""
    n = len(w)
    a = w[0]
    lhs = sub_sum(delta_chain(n, p, type_), w, increasing=True,
                  end_filter=lambda u: u[0] == b)
    N = count_between(a, b, w[1:p], n)
    return lhs, t_binomial(N, 0 if a == b else 1)


def phi_identity_check(w: Sequence[int], i: int, j: int, type_: str = "C") -> tuple[TPoly, TPoly]:
    chain = phi_chain(len(w), type_)
    start = [k for k, (ii, jj) in enumerate((r.i, abs(r.j) or r.i) for r in chain)
             if (ii, jj) == (i, j)][0]
    lhs = sub_sum(chain[start:], w)
    return lhs, t_binomial(ell_plus(w) + ell_minus_ij(w, i, j), 0)


@dataclass
class IdentityReport:
    checked: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _fail(self, msg: str) -> None:
        self.failures.append(msg)


def _delta_targets(w, p):
    a = w[0]
    n = len(w)
    cands = {a, -a} | {x for x in w[p:]} | {-x for x in w[p:]}
    return sorted(b for b in cands if order_key(b, n) >= order_key(a, n))


def identity_suite(n: int, trials: int = 0, seed: int = 0, types: str = "BC",
                   level_instances: Sequence[tuple[str, int, tuple[int, ...]]] = ()) -> IdentityReport:
    """Exhaustive checks over B_n, plus ``trials`` random length-difference checks.

    ``level_instances`` adds the level identity for every admissible pair of
    the given (type, n, parts) instances.
    """
    rep = IdentityReport()
    group = enumerate_group(n)
    for type_ in types:
        k72 = k74 = 0
        for w in group:
            for p in range(1, n + 1):
                for b in _delta_targets(w, p):
                    lhs, rhs = delta_identity_check(w, p, b, type_)
                    k72 += 1
                    if lhs != rhs:
                        rep._fail(f"Delta identity, type {type_}, w={w} p={p} b={b}: "
                                  f"{tpoly_str(lhs)} != {tpoly_str(rhs)}")
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    lhs, rhs = phi_identity_check(w, i, j, type_)
                    k74 += 1
                    if lhs != rhs:
                        rep._fail(f"Phi identity, type {type_}, w={w} ({i},{j}): "
                                  f"{tpoly_str(lhs)} != {tpoly_str(rhs)}")
        rep.checked[f"delta_{type_}"] = k72
        rep.checked[f"phi_{type_}"] = k74

    rng = random.Random(seed)
    for _ in range(trials):
        m = rng.randint(1, max(n, 1))
        w = tuple(rng.choice((1, -1)) * x for x in rng.sample(range(1, m + 1), m))
        r = _random_root(rng, m)
        if length_diff(w, r) != length(apply_reflection(w, r)) - length(w):
            rep._fail(f"length difference w={w} r={r}")
    rep.checked["length_diff_random"] = trials

    for type_, m, parts in level_instances:
        chain = lambda_chain(type_, m, parts)
        cnt = 0
        for pair in enumerate_admissible(chain):
            cnt += 1
            bad = level_identity_violations(chain, pair)
            if bad:
                rep._fail(f"level identity {type_}{m} {parts} w={pair.w} J={pair.J}: {bad[0]}")
                break
        rep.checked[f"levels_{type_}{m}_{','.join(map(str, parts))}"] = cnt
    return rep


def _random_root(rng: random.Random, n: int) -> Root:
    i = rng.randint(1, n)
    kind = rng.randrange(3) if i < n else 2
    if kind == 2:
        return Root(i, rng.choice((0, -i)))
    j = rng.randint(i + 1, n)
    return Root(i, j if kind == 0 else -j)

