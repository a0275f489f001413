"""
Canonical omega_k-chains and lambda-chains of roots for types B and C.

A chain is a flat tuple of :class:`~hlbc.weyl_bc.Root` together with the
levels ``l_k`` (occurrences of ``beta_k`` so far) and a list of
:class:`Segment` records.  Segments carry everything the filling side needs:
which column group they belong to, whether the transition they induce is a
plain signed cycle ("primed") or a signed cycle followed by a change in one
position ("unprimed"), and whether a column of the filling is recorded at the
segment start.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .weyl_bc import Root

__all__ = [
    "Segment", "LambdaChain", "ChainReport", "check_regular", "conjugate",
    "lambda_weight", "mu_from_coefficients", "omega_chain", "lambda_chain",
    "positive_roots", "pairing", "validate_chain", "dump_chain",
    "omega_chain_length",
]


@dataclass(frozen=True)
class Segment:
    group: int
    kind: str  # "primed" | "unprimed"
    index: int  # the j of Gamma_j(k) or Gamma'_j
    height: int  # height of the columns of this group (the k of Gamma(k))
    start: int
    stop: int
    recorded: bool  # a filling column is read off at `start`
    label: str  # column name at `start`: "C" or "C'"
    half: str  # "head" | "tail" | "whole"; compressed-column bookkeeping


@dataclass(frozen=True)
class LambdaChain:
    type: str
    n: int
    parts: tuple[int, ...]  # strict partition (C) or mu (B)
    lam: tuple[int, ...]  # doubled e-coordinates of lambda
    roots: tuple[Root, ...]
    levels: tuple[int, ...]
    segments: tuple[Segment, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def m(self) -> int:
        return len(self.roots)

    def segment_of(self, k: int) -> Segment:
        """The segment containing 0-based position ``k``."""
        for s in self.segments:
            if s.start <= k < s.stop:
                return s
        raise IndexError(k)

    def columns(self) -> list[Segment]:
        return [s for s in self.segments if s.recorded]


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, max(parts) + 1))


def mu_from_coefficients(alpha: Sequence[int]) -> tuple[int, ...]:
    """``(a_1, ..., a_n)`` in the fundamental weight basis -> partition ``mu``."""
    n = len(alpha)
    return tuple(k for k in range(n, 0, -1) for _ in range(alpha[k - 1]))


def check_regular(type_: str, n: int, parts: Sequence[int]) -> tuple[int, ...]:
    """Validate and normalize; raises ``ValueError("lambda not regular ...")``."""
    parts = tuple(int(p) for p in parts)
    if n < 1:
        raise ValueError("n must be positive")
    if type_ == "C":
        if n < 2:
            raise ValueError("type C needs n >= 2")
        ok = (len(parts) == n and all(a > b for a, b in zip(parts, parts[1:]))
              and parts[-1] > 0)
        if not ok:
            raise ValueError(f"lambda not regular for C{n}: {parts}")
        return parts
    if type_ == "B":
        ok = (parts and all(a >= b for a, b in zip(parts, parts[1:]))
              and all(1 <= p <= n for p in parts)
              and set(parts) == set(range(1, n + 1)))
        if not ok:
            raise ValueError(f"lambda not regular for B{n}: mu={parts}")
        return parts
    raise ValueError(f"unknown type {type_!r}")


def lambda_weight(type_: str, n: int, parts: Sequence[int]) -> tuple[int, ...]:
    """Doubled e-coordinates of the dominant weight."""
    if type_ == "C":
        return tuple(2 * p for p in parts) + (0,) * (n - len(parts))
    return tuple(
        sum(2 for p in parts if j <= p < n) + sum(1 for p in parts if p == n)
        for j in range(1, n + 1)
    )


def _gamma_prime(type_: str, j: int) -> list[Root]:
    roots = [Root(r, -j) for r in range(1, j)]
    if type_ == "B":
        roots.append(Root(j, 0))
    return roots


def _gamma(type_: str, n: int, j: int, k: int) -> list[Root]:
    return ([Root(r, -j) for r in range(1, j)]
            + [Root(j, -s) for s in range(k + 1, n + 1)]
            + [Root(j, 0) if type_ == "B" else Root(j, -j)]
            + [Root(j, s) for s in range(n, k, -1)])


def _omega_segments(type_: str, n: int, k: int) -> list[tuple[str, int, list[Root]]]:
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    if type_ == "C":
        return ([("primed", j, _gamma_prime("C", j)) for j in range(2, k + 1)]
                + [("unprimed", j, _gamma("C", n, j, k)) for j in range(1, k + 1)])
    if type_ == "B":
        if k == n:
            return [("primed", j, _gamma_prime("B", j)) for j in range(1, n + 1)]
        return ([("primed", j, _gamma_prime("B", j)) for j in range(1, k + 1)]
                + [("unprimed", j, _gamma("B", n, j, k)) for j in range(1, k + 1)])
    raise ValueError(f"unknown type {type_!r}")


def omega_chain(type_: str, n: int, k: int) -> list[list[Root]]:
    """The canonical omega_k-chain, split into its segments."""
    return [roots for _, _, roots in _omega_segments(type_, n, k)]


def omega_chain_length(type_: str, n: int, k: int) -> int:
    if type_ == "C":
        return sum(j - 1 for j in range(2, k + 1)) + sum(j + 2 * (n - k) for j in range(1, k + 1))
    if k == n:
        return n * (n + 1) // 2
    return k * (k + 1) // 2 + sum(j + 2 * (n - k) for j in range(1, k + 1))


def lambda_chain(type_: str, n: int, parts: Sequence[int]) -> LambdaChain:
    """Concatenation of omega-chains, one group per column of lambda (C) or part of mu (B)."""
    parts = check_regular(type_, n, parts)
    if type_ == "C":
        heights = conjugate(parts)  # heights[i-1] = lambda'_i
        groups = [(i, heights[i - 1]) for i in range(len(heights), 0, -1)]
    else:
        groups = [(i, parts[i - 1]) for i in range(len(parts), 0, -1)]

    roots: list[Root] = []
    segments: list[Segment] = []
    for g, h in groups:
        segs = _omega_segments(type_, n, h)
        whole = type_ == "B" and h == n
        for pos, (kind, j, rs) in enumerate(segs):
            if whole:
                recorded = g != 1 or pos == 0
                label, half = "C", "whole"
            else:
                recorded = not (g == 1 and kind == "unprimed" and j > 1)
                label = "C'" if kind == "primed" else "C"
                half = "head" if kind == "primed" else "tail"
            segments.append(Segment(g, kind, j, h, len(roots), len(roots) + len(rs),
                                    recorded, label, half))
            roots.extend(rs)

    seen: Counter = Counter()
    levels = []
    for r in roots:
        seen[r] += 1
        levels.append(seen[r])
    return LambdaChain(type_, n, parts, lambda_weight(type_, n, parts), tuple(roots),
                       tuple(levels), tuple(segments))


def positive_roots(type_: str, n: int) -> list[Root]:
    out = []
    for i in range(1, n + 1):
        out.append(Root(i, 0) if type_ == "B" else Root(i, -i))
        for j in range(i + 1, n + 1):
            out.extend((Root(i, j), Root(i, -j)))
    return out


def pairing(v: Sequence[int], r: Root) -> int:
    """``<v, r^vee>`` for a doubled weight ``v``; must be integral."""
    twice = sum(v[k - 1] * c for k, c in r.coroot())
    if twice % 2:
        raise ValueError(f"{v} (doubled) pairs non-integrally with {r}")
    return twice // 2


@dataclass
class ChainReport:
    ok: bool
    rule: str = ""
    witness: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _coroot_triples(type_: str, n: int) -> list[tuple[Root, Root, Root]]:
    pos = positive_roots(type_, n)
    dense = {r: r.dense(n, coroot=True) for r in pos}
    by_coroot = {v: r for r, v in dense.items()}
    out = []
    for a, b in combinations(pos, 2):
        s = tuple(x + y for x, y in zip(dense[a], dense[b]))
        if s in by_coroot:
            out.append((a, b, by_coroot[s]))
    return out


def validate_chain(type_: str, n: int, roots: Sequence[Root], lam: Sequence[int]) -> ChainReport:
    """Check (R1) multiplicities and (R2) the pair-interlacing condition.

    ``lam`` is the doubled weight.  (R2) runs over every triple of positive
    roots with ``gamma^vee = alpha^vee + beta^vee``.
    """
    counts = Counter(roots)
    for r in positive_roots(type_, n):
        want = pairing(lam, r)
        if counts.get(r, 0) != want:
            return ChainReport(False, "R1", f"{r} occurs {counts.get(r, 0)} times, expected {want}")
    extra = set(counts) - set(positive_roots(type_, n))
    if extra:
        return ChainReport(False, "R1", f"not a positive root of type {type_}: {sorted(extra)}")
    for a, b, g in _coroot_triples(type_, n):
        sub = [r for r in roots if r in (a, b, g)]
        ok = len(sub) % 2 == 0 and all(
            sub[k] == g and sub[k + 1] in (a, b) for k in range(0, len(sub), 2))
        if not ok:
            word = " ".join(str(r) for r in sub)
            return ChainReport(False, "R2", f"alpha={a} beta={b} gamma={g}: {word}")
    return ChainReport(True)


def dump_chain(chain: LambdaChain) -> str:
    """One root per line; ``|`` between segments, ``||`` between groups."""
    lines = []
    prev = None
    for s in chain.segments:
        if prev is not None:
            lines.append("||" if s.group != prev.group else "|")
        lines.extend(str(r) for r in chain.roots[s.start:s.stop])
        prev = s
    return "\n".join(lines) + "\n"
