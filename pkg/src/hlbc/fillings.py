"""
Fillings of the widened shape, the filling map, and the statistics N, des, ct.

A filling is a left-to-right tuple of columns (top entry first).  Each column
position is described by the :class:`~hlbc.chains.Segment` that starts at it,
and the segment kind decides how the column may differ from its right
neighbour:

* primed, index k: a signed cycle ``(r_1, -k) ... (r_p, -k)``, ``r_p < k``,
  in type B optionally followed by the sign change ``(k)``;
* unprimed, index j: a signed cycle ``(r_i, -j)`` followed by lowering the
  entry in position j.

When the right neighbour is taller, only its top part is compared.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .chains import LambdaChain, Segment, lambda_chain
from .weyl_bc import Root, apply_reflection, ell_plus_column, letters, order_key

__all__ = [
    "HatShape", "Filling", "Transition", "IllegalTransition", "hat_shape",
    "filling_map", "transition_decompose", "stat_N_pair", "stat_des_pair",
    "stat_N", "stat_des", "compress", "content", "check_filling",
    "enumerate_fillings", "kn_fillings", "hhl_stats", "HHLStats",
    "in_reduction_class", "hhl_reduction", "compressed_prefix_content",
    "render_filling", "letters_between",
]

Column = tuple[int, ...]


class IllegalTransition(ValueError):
    pass


@dataclass(frozen=True)
class HatShape:
    type: str
    n: int
    parts: tuple[int, ...]
    columns: tuple[Segment, ...]

    @property
    def heights(self) -> list[int]:
        return [c.height for c in self.columns]

    def __len__(self) -> int:
        return len(self.columns)


def hat_shape(type_: str, n: int, parts: Sequence[int]) -> HatShape:
    chain = lambda_chain(type_, n, parts)
    return _shape_of(chain)


def _shape_of(chain: LambdaChain) -> HatShape:
    return HatShape(chain.type, chain.n, chain.parts, tuple(chain.columns()))


@dataclass(frozen=True)
class Filling:
    shape: HatShape
    columns: tuple[Column, ...]

    def __hash__(self):
        return hash(self.columns)

    def __eq__(self, other):
        return isinstance(other, Filling) and self.columns == other.columns

    @cached_property
    def transitions(self) -> list["Transition"]:
        out = []
        for seg, d, c in zip(self.shape.columns, self.columns, self.columns[1:]):
            out.append(transition_decompose(d, c, seg.kind, seg.index, self.shape.n,
                                            sign_change=self.shape.type == "B"))
        return out

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.columns]

    def __str__(self) -> str:
        return render_filling(self.columns)


def render_filling(columns: Sequence[Column]) -> str:
    """Rows top to bottom; columns bottom-aligned to the shape, bars as ``-k``."""
    height = max(len(c) for c in columns)
    width = max(len(str(x)) for c in columns for x in c)
    rows = []
    for i in range(height):
        cells = [str(c[i]).rjust(width) if i < len(c) else " " * width for c in columns]
        rows.append(" ".join(cells).rstrip())
    return "\n".join(rows)


# -- the filling map ---------------------------------------------------------

def filling_map(chain: LambdaChain, w: Sequence[int], J: Sequence[int]) -> Filling:
    """Record ``pi[1, height]`` at the start of every recorded segment (J is 1-based)."""
    folds = set(J)
    u = tuple(w)
    cols = []
    for seg in chain.segments:
        if seg.recorded:
            cols.append(u[:seg.height])
        for k in range(seg.start, seg.stop):
            if k + 1 in folds:
                u = apply_reflection(u, chain.roots[k])
    return Filling(_shape_of(chain), tuple(cols))


# -- transitions -------------------------------------------------------------

def _cycle(D: Sequence[int], rs: Sequence[int], j: int) -> Column:
    """``D (r_1, -j) ... (r_p, -j)`` on a column (positions 1-based)."""
    v = tuple(D)
    for r in rs:
        v = apply_reflection(v, Root(r, -j))
    return v


def _leq(x: int, y: int, n: int) -> bool:
    return order_key(x, n) <= order_key(y, n)


def letters_between(a: int, b: int, n: int, avoid=()) -> list[int]:
    """Letters strictly between ``a`` and ``b`` whose absolute value is not in ``avoid``."""
    lo, hi = order_key(a, n), order_key(b, n)
    bad = {abs(x) for x in avoid}
    return [x for x in letters(n) if lo < order_key(x, n) < hi and abs(x) not in bad]


@dataclass(frozen=True)
class Transition:
    D: Column
    C: Column  # already truncated to the height of D
    kind: str
    j: int
    rs: tuple[int, ...]
    drop: bool  # unprimed: C(j) < D'(j)
    sign: bool  # type B primed: trailing (j)

    @property
    def case(self) -> int:
        p = len(self.rs)
        if self.drop:
            return 3
        if self.sign:
            return 4
        return 0 if p == 0 else (1 if p == 1 else 2)

    @property
    def D_prime(self) -> Column:
        return _cycle(self.D, self.rs, self.j)


def transition_decompose(D: Sequence[int], C: Sequence[int], kind: str, j: int, n: int,
                         sign_change: bool = False) -> Transition:
    """Recover the unique signed cycle (and drop / sign change) taking D to C.

    ``C`` may be one taller than ``D``; only ``C[:len(D)]`` is compared.
    """
    D, C = tuple(D), tuple(C)
    d = len(D)
    if len(C) not in (d, d + 1):
        raise IllegalTransition(f"height {len(D)} -> {len(C)}")
    C = C[:d]
    if not 1 <= j <= d:
        raise IllegalTransition(f"index {j} outside a column of height {d}")
    if any(C[r] != D[r] for r in range(j, d)):
        raise IllegalTransition(f"{D} -> {C}: entries below position {j} changed")
    if any(not _leq(c, x, n) for c, x in zip(C, D)):
        raise IllegalTransition(f"{D} -> {C}: a row increases")
    rs = tuple(r + 1 for r in range(j - 1) if C[r] != D[r])
    Dp = _cycle(D, rs, j)
    if any(Dp[r] != C[r] for r in range(j - 1)):
        raise IllegalTransition(f"{D} -> {C}: not a signed cycle through position {j}")

    found = []
    if kind == "primed":
        if Dp == C:
            found.append(Transition(D, C, kind, j, rs, False, False))
        if sign_change and Dp[j - 1] < 0 and Dp[:j - 1] + (-Dp[j - 1],) + Dp[j:] == C:
            found.append(Transition(D, C, kind, j, rs, False, True))
    elif kind == "unprimed":
        x, y = C[j - 1], Dp[j - 1]
        if x == y:
            found.append(Transition(D, C, kind, j, rs, False, False))
        elif order_key(x, n) < order_key(y, n):
            others = {abs(Dp[r]) for r in range(d) if r != j - 1}
            if abs(x) not in others:
                found.append(Transition(D, C, kind, j, rs, True, False))
    else:
        raise ValueError(f"unknown transition kind {kind!r}")
    if not found:
        raise IllegalTransition(f"{D} -> {C}: no legal {kind} transition at index {j}")
    if len(found) > 1:
        raise IllegalTransition(f"{D} -> {C}: ambiguous decomposition")
    return found[0]


def _step_N(D: Column, r: int, j: int, n: int) -> int:
    a, b = D[r - 1], D[j - 1]
    inner = sum(1 for x in D[r:j - 1] if order_key(-b, n) < order_key(x, n) < order_key(a, n))
    free = len(letters_between(-b, a, n, avoid=D[:j]))
    both_barred = 1 if a < 0 and b < 0 else 0
    return inner + free + both_barred


def stat_N_pair(tr: Transition, n: int) -> int:
    N = 0
    cur = tr.D
    for r in tr.rs:
        N += _step_N(cur, r, tr.j, n)
        cur = _cycle(cur, (r,), tr.j)
    if tr.drop:
        lo, hi = order_key(tr.C[tr.j - 1], n), order_key(cur[tr.j - 1], n)
        N += sum(1 for x in tr.D[tr.j:] if lo < order_key(x, n) < hi)
    if tr.sign:
        a = cur[tr.j - 1]
        half = len(letters_between(-a, a, n, avoid=cur[:tr.j]))
        if half % 2:
            raise ArithmeticError(f"odd sign-change count in {tr}")
        N += half // 2
    return N


def stat_des_pair(tr: Transition) -> int:
    return len(tr.rs) + (1 if tr.drop or tr.sign else 0)


def stat_N(sigma: Filling) -> int:
    n = sigma.shape.n
    return sum(stat_N_pair(tr, n) for tr in sigma.transitions) + ell_plus_column(sigma.columns[-1], n)


def stat_des(sigma: Filling) -> int:
    return sum(stat_des_pair(tr) for tr in sigma.transitions)


# -- content ---------------------------------------------------------------

def _compressed_slots(shape: HatShape) -> list[tuple[int, str, int]]:
    """(group, half, index into shape.columns) for each compressed column, left to right."""
    by_group: dict[int, list[tuple[int, Segment]]] = {}
    for idx, seg in enumerate(shape.columns):
        by_group.setdefault(seg.group, []).append((idx, seg))
    out = []
    for g, cols in by_group.items():
        first_unprimed = next((idx for idx, s in cols if s.label == "C" and s.index == 1), None)
        if cols[0][1].half == "whole":
            out.append((g, "whole", first_unprimed))
            continue
        if shape.type == "C":
            head = next((idx for idx, s in cols if s.label == "C'" and s.index == 2), first_unprimed)
        else:
            head = next(idx for idx, s in cols if s.label == "C'" and s.index == 1)
        out.append((g, "head", head))
        out.append((g, "tail", first_unprimed))
    return out


def compress(sigma: Filling) -> tuple[Column, ...]:
    return tuple(sigma.columns[idx] for _, _, idx in _compressed_slots(sigma.shape))


def _signed_count(cols: Sequence[Column], n: int) -> tuple[int, ...]:
    v = [0] * n
    for col in cols:
        for x in col:
            v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


def content(sigma: Filling) -> tuple[int, ...]:
    """Doubled content: signed letter count of the compressed filling."""
    return _signed_count(compress(sigma), sigma.shape.n)


def compressed_prefix_content(chain: LambdaChain, w: Sequence[int], J: Sequence[int],
                              k: int) -> tuple[int, ...]:
    """Doubled content of the compressed columns up to the one owning position ``k`` (0-based)."""
    sigma = filling_map(chain, w, J)
    seg = chain.segment_of(k)
    slots = _compressed_slots(sigma.shape)
    want = "whole" if seg.half == "whole" else seg.half
    cut = next(i for i, (g, half, _) in enumerate(slots) if g == seg.group and half == want)
    return _signed_count([sigma.columns[idx] for _, _, idx in slots[:cut + 1]], chain.n)


# -- validation and enumeration -------------------------------------------

def check_filling(sigma: Filling) -> list[str]:
    """Conditions (1)-(3); an empty list means the filling is in F(lambda)."""
    n = sigma.shape.n
    problems = []
    if [len(c) for c in sigma.columns] != sigma.shape.heights:
        problems.append("column heights do not match the shape")
        return problems
    for idx, col in enumerate(sigma.columns):
        if len({abs(x) for x in col}) != len(col) or any(not 1 <= abs(x) <= n for x in col):
            problems.append(f"column {idx} repeats a letter up to sign: {col}")
    for idx, (d, c) in enumerate(zip(sigma.columns, sigma.columns[1:])):
        if any(not _leq(y, x, n) for x, y in zip(d, c)):
            problems.append(f"row increases between columns {idx} and {idx + 1}")
    try:
        sigma.transitions
    except IllegalTransition as e:
        problems.append(str(e))
    return problems


def _successors(D: Column, seg: Segment, next_height: int, n: int, type_: str) -> Iterator[Column]:
    j = seg.index
    d = len(D)
    for p in range(j):
        for rs in combinations(range(1, j), p):
            Dp = _cycle(D, rs, j)
            if any(not _leq(Dp[r - 1], D[r - 1], n) for r in rs):
                continue
            if seg.kind == "primed":
                bases = [Dp]
                if type_ == "B" and Dp[j - 1] < 0 and _leq(-Dp[j - 1], D[j - 1], n):
                    bases.append(Dp[:j - 1] + (-Dp[j - 1],) + Dp[j:])
            else:
                others = {abs(Dp[r]) for r in range(d) if r != j - 1}
                bases = [Dp[:j - 1] + (x,) + Dp[j:] for x in letters(n)
                         if abs(x) not in others
                         and _leq(x, Dp[j - 1], n) and _leq(x, D[j - 1], n)]
            for base in bases:
                if next_height == d:
                    yield base
                else:
                    used = {abs(x) for x in base}
                    for x in letters(n):
                        if abs(x) not in used:
                            yield base + (x,)


def _seeds(h: int, n: int) -> Iterator[Column]:
    for absvals in permutations(range(1, n + 1), h):
        for signs in product((1, -1), repeat=h):
            yield tuple(s * a for s, a in zip(signs, absvals))


def enumerate_fillings(type_: str, n: int, parts: Sequence[int]) -> list[Filling]:
    """F(lambda) by left-to-right search over legal transitions."""
    shape = hat_shape(type_, n, parts)
    specs = shape.columns
    heights = shape.heights
    out: list[Filling] = []

    def rec(cols: list[Column]):
        i = len(cols)
        if i == len(specs):
            out.append(Filling(shape, tuple(cols)))
            return
        for nxt in _successors(cols[-1], specs[i - 1], heights[i], n, type_):
            cols.append(nxt)
            rec(cols)
            cols.pop()

    for seed in _seeds(heights[0], n):
        rec([seed])
    return out


def kn_fillings(type_: str, n: int, parts: Sequence[int]) -> list[Filling]:
    """Fillings with N = 0, the t = 0 survivors."""
    return [s for s in enumerate_fillings(type_, n, parts) if stat_N(s) == 0]


# -- Haglund-Haiman-Loehr statistics on fillings of lambda ------------------

@dataclass(frozen=True)
class HHLStats:
    inv: int
    cinv: int  # n(lambda) - inv
    cinv_triples: int
    des: int


def hhl_stats(columns: Sequence[Column], n: int) -> HHLStats:
    """``columns`` left to right, Japanese style (rightmost column is column 1).

    Requires attacking cells to hold different letters and rows to weakly
    decrease; raises ``ValueError`` otherwise.
    """
    cols = [tuple(c) for c in columns]
    key = lambda x: order_key(x, n)  # noqa: E731
    m = len(cols)

    def cell(jr, i):
        # jr: column index counted from the right (1-based), i: row (1-based)
        c = cols[m - jr]
        return c[i - 1] if i <= len(c) else None

    height = {jr: len(cols[m - jr]) for jr in range(1, m + 1)}
    inv = 0
    for jr in range(1, m + 1):
        h = height[jr]
        for i in range(1, h + 1):
            for i2 in range(i + 1, h + 1):
                a, b = cell(jr, i), cell(jr, i2)
                if a == b:
                    raise ValueError("attacking cells in one column hold equal letters")
                if key(a) < key(b):
                    inv += 1
            if jr < m:
                for i2 in range(i + 1, height[jr + 1] + 1):
                    top, low = cell(jr, i), cell(jr + 1, i2)
                    if top == low:
                        raise ValueError("attacking cells in adjacent columns hold equal letters")
                    if key(top) > key(low):
                        inv += 1
    for jr in range(1, m):
        for i in range(1, height[jr] + 1):
            left = cell(jr + 1, i)
            if left is not None and key(left) < key(cell(jr, i)):
                raise ValueError("rows must weakly decrease")

    n_lambda = sum(h * (h - 1) // 2 for h in height.values())
    triples = 0
    for jr in range(1, m + 1):
        h = height[jr]
        for i in range(1, h + 1):
            for i2 in range(i + 1, h + 1):
                b, a = cell(jr, i), cell(jr, i2)
                c = cell(jr + 1, i2) if jr < m else None
                if key(a) < key(b) and (c is None or key(b) < key(c)):
                    triples += 1
    des = sum(
        1 for jr in range(2, m + 1) for i in range(1, height[jr] + 1)
        if cell(jr - 1, i) is not None and key(cell(jr, i)) > key(cell(jr - 1, i))
    )
    return HHLStats(inv, n_lambda - inv, triples, des)


def in_reduction_class(sigma: Filling) -> bool:
    """Primed transitions trivial and unprimed ones change only position j."""
    for seg, tr in zip(sigma.shape.columns, sigma.transitions):
        if seg.kind == "primed" and (tr.rs or tr.sign):
            return False
        if seg.kind == "unprimed" and tr.rs:
            return False
    return True


def hhl_reduction(sigma: Filling) -> tuple[Column, ...]:
    """The filling of lambda made of the columns C_{i1}, left to right."""
    return tuple(c for seg, c in zip(sigma.shape.columns, sigma.columns)
                 if seg.label == "C" and seg.index == 1)


def fillings_to_json(fillings: Sequence[Filling]) -> str:
    return json.dumps([f.to_json() for f in fillings], separators=(",", ":"))
