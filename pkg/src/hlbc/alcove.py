"""
Admissible pairs over a lambda-chain and the alcove-walk formula

    P_lambda = sum_{(w, J)} t^{(l(w) + l(w phi(J)) - |J|) / 2} (1 - t)^{|J|} x^{w(mu(J))}.

For each starting element ``w`` a depth-first search walks the chain and
branches on folding at position ``k`` exactly when ``w r_{j1} ... r_k`` is
shorter than its predecessor.  The weight ``w(mu(J))`` is carried along as
an affine map ``v -> u(v) + c`` so nothing needs to be replayed at the end.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .chains import LambdaChain, pairing
from .exactpoly import HLPoly, TPoly, tpoly_add, t_binomial
from .weyl_bc import Root, act_on_weight, apply_reflection, enumerate_group, length, length_diff

__all__ = [
    "AdmissiblePair", "PairCapExceeded", "mu_of_J", "enumerate_admissible",
    "count_admissible", "schwer_evaluate", "enumerate_admissible_sub", "sub_sum",
    "level_identity_violations", "MAX_WORK",
]

# guards m * |W| (DFS roots times chain length) against accidental huge inputs
MAX_WORK = 10 ** 7


class PairCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class AdmissiblePair:
    w: tuple[int, ...]
    J: tuple[int, ...]  # 1-based positions in the chain
    end: tuple[int, ...]  # w phi(J)
    len_w: int
    len_end: int
    weight: tuple[int, ...]  # doubled w(mu(J))

    @property
    def a(self) -> int:
        twice = self.len_w + self.len_end - len(self.J)
        assert twice >= 0 and twice % 2 == 0, (self.w, self.J)
        return twice // 2

    @property
    def b(self) -> int:
        return len(self.J)

    def chain_of_perms(self, chain: LambdaChain) -> list[tuple[int, ...]]:
        """``w > w r_{j1} > ... > w phi(J)``."""
        out = [self.w]
        for j in self.J:
            out.append(apply_reflection(out[-1], chain.roots[j - 1]))
        return out

    def to_json(self) -> dict:
        return {"w": list(self.w), "J": list(self.J), "a": self.a, "b": self.b,
                "weight": list(self.weight)}


def _reflect_affine(v: Sequence[int], r: Root, level: int) -> tuple[int, ...]:
    # s_{r,l}(v) = v - (<v, r^vee> - l) r, all in doubled coordinates
    shift = pairing(v, r) - level
    out = list(v)
    for k, c in r.vector():
        out[k - 1] -= 2 * shift * c
    return tuple(out)


def mu_of_J(chain: LambdaChain, J: Iterable[int]) -> tuple[int, ...]:
    """``rhat_{j1} ... rhat_{js}(lambda)`` (doubled), J given 1-based."""
    v = chain.lam
    for j in sorted(J, reverse=True):
        v = _reflect_affine(v, chain.roots[j - 1], chain.levels[j - 1])
    return v


def _check_work(chain: LambdaChain) -> None:
    size = 1
    for k in range(2, chain.n + 1):
        size *= 2 * k
    size *= 2
    if chain.m * size > MAX_WORK:
        raise ValueError(f"chain length {chain.m} times |W|={size} exceeds {MAX_WORK}")


def _walk(chain: LambdaChain, w: tuple[int, ...]) -> Iterator[AdmissiblePair]:
    roots, levels, m = chain.roots, chain.levels, chain.m
    doubled = [tuple(2 * x for x in r.dense(chain.n)) for r in roots]
    len_w = length(w)
    J: list[int] = []

    def rec(k, u, len_u, c):
        if k == m:
            weight = tuple(x + y for x, y in zip(act_on_weight(u, chain.lam), c))
            yield AdmissiblePair(w, tuple(J), u, len_w, len_u, weight)
            return
        yield from rec(k + 1, u, len_u, c)
        d = length_diff(u, roots[k])
        if d < 0:
            shift = act_on_weight(u, doubled[k])
            J.append(k + 1)
            yield from rec(k + 1, apply_reflection(u, roots[k]), len_u + d,
                           tuple(x + levels[k] * y for x, y in zip(c, shift)))
            J.pop()

    yield from rec(0, w, len_w, (0,) * chain.n)


def enumerate_admissible(chain: LambdaChain, ws: Iterable[Sequence[int]] | None = None,
                         max_pairs: int | None = None) -> Iterator[AdmissiblePair]:
    """All admissible pairs, grouped by ``w`` in :func:`enumerate_group` order."""
    _check_work(chain)
    count = 0
    for w in (enumerate_group(chain.n) if ws is None else ws):
        for pair in _walk(chain, tuple(w)):
            count += 1
            if max_pairs is not None and count > max_pairs:
                raise PairCapExceeded(f"more than {max_pairs} admissible pairs")
            yield pair


def count_admissible(chain: LambdaChain) -> int:
    return sum(1 for _ in enumerate_admissible(chain))


def _partial(args) -> tuple[list[tuple[tuple[int, ...], TPoly]], int]:
    chain, ws, max_pairs = args
    p = HLPoly(chain.n)
    count = 0
    for pair in enumerate_admissible(chain, ws, max_pairs):
        p.iadd_term(pair.a, pair.b, pair.weight)
        count += 1
    return p.items(), count


def _chunks(seq: list, k: int) -> list[list]:
    size = max(1, -(-len(seq) // k))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def schwer_evaluate(chain: LambdaChain, threads: int = 1, max_pairs: int | None = None) -> HLPoly:
    """The alcove-walk sum; partial sums per block of ``w`` are merged in order."""
    _check_work(chain)
    group = enumerate_group(chain.n)
    if threads <= 1:
        items, _ = _partial((chain, group, max_pairs))
        return HLPoly(chain.n, dict(items))
    threads = min(threads, os.cpu_count() or 1, len(group))
    out = HLPoly(chain.n)
    total = 0
    with ProcessPoolExecutor(max_workers=threads) as ex:
        jobs = [(chain, ws, max_pairs) for ws in _chunks(group, threads)]
        for items, count in ex.map(_partial, jobs):
            total += count
            out = out + HLPoly(chain.n, dict(items))
    if max_pairs is not None and total > max_pairs:
        raise PairCapExceeded(f"more than {max_pairs} admissible pairs")
    return out


def enumerate_admissible_sub(roots: Sequence[Root], w: Sequence[int], increasing: bool = False,
                             end_filter=None) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int, int]]:
    """Foldings of a bare root sequence that move monotonically in length.

    Yields ``(J, end, a, b)`` where ``J`` is 1-based, ``b = |J|`` and ``a`` is
    ``(l(w) + l(end) - b) / 2`` for decreasing chains, ``(l(end) - l(w) - b) / 2``
    for increasing ones.  ``end_filter(end)`` restricts the endpoint.
    """
    w = tuple(w)
    len_w = length(w)
    m = len(roots)

    def rec(k, u, len_u, J):
        if k == m:
            if end_filter is None or end_filter(u):
                b = len(J)
                twice = (len_u - len_w - b) if increasing else (len_w + len_u - b)
                assert twice >= 0 and twice % 2 == 0
                yield tuple(J), u, twice // 2, b
            return
        yield from rec(k + 1, u, len_u, J)
        d = length_diff(u, roots[k])
        if (d > 0) == increasing:
            yield from rec(k + 1, apply_reflection(u, roots[k]), len_u + d, J + [k + 1])

    yield from rec(0, w, len_w, [])


def sub_sum(roots: Sequence[Root], w: Sequence[int], increasing: bool = False,
            end_filter=None) -> TPoly:
    """Sum of ``t^a (1-t)^b`` over :func:`enumerate_admissible_sub`."""
    acc: TPoly = ()
    for _, _, a, b in enumerate_admissible_sub(roots, w, increasing, end_filter):
        acc = tpoly_add(acc, t_binomial(a, b))
    return acc


def level_identity_violations(chain: LambdaChain, pair: AdmissiblePair) -> list[str]:
    """Check m_k = <ct(sigma[q]), gamma^vee> at every position of the walk.

    ``m_k`` is the level of the k-th wall of the folded walk, computed from the
    affine maps; the right side reads the compressed filling of the partial
    pair (folds before k only) up to the compressed column owning position k.
    """
    from .fillings import compressed_prefix_content

    n = chain.n
    u, c = pair.w, (0,) * n
    folds = set(pair.J)
    done: list[int] = []
    bad = []
    for k in range(chain.m):
        r, lev = chain.roots[k], chain.levels[k]
        gamma_co = act_on_weight(u, r.dense(n, coroot=True))
        twice = sum(x * y for x, y in zip(c, gamma_co))
        assert twice % 2 == 0
        m_k = lev + twice // 2
        ct = compressed_prefix_content(chain, pair.w, done, k)
        rhs2 = sum(x * y for x, y in zip(ct, gamma_co))
        if rhs2 != 2 * m_k:
            bad.append(f"position {k + 1}: m_k={m_k}, content pairing={rhs2 / 2}")
        if k + 1 in folds:
            shift = act_on_weight(u, tuple(2 * x for x in r.dense(n)))
            c = tuple(x + lev * y for x, y in zip(c, shift))
            u = apply_reflection(u, r)
            done.append(k + 1)
    return bad
