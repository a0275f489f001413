"""
The hyperoctahedral group B_n acting on the letters 1 < 2 < ... < n < -n < ... < -1.

Letters are nonzero ints; ``-i`` stands for the barred letter.  A signed
permutation is stored as its window ``(w(1), ..., w(n))``.  Roots and the
reflections they define share one representation, :class:`Root`:

* ``Root(i, j)`` with ``0 < i < j``: the transposition ``(i, j)`` / root e_i - e_j
* ``Root(i, -j)`` with ``0 < i < j``: ``(i, -j)`` / root e_i + e_j
* ``Root(i, -i)``: sign change, long root 2e_i (type C)
* ``Root(i, 0)``: sign change, short root e_i (type B)

>>> apply_reflection((1, 2, 3), Root(1, -2))
(-2, -1, 3)
>>> length((3, -2, 1))
4
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "Root", "SignedPerm", "order_key", "letters", "check_perm",
    "apply_reflection", "ell_plus", "ell_minus", "length", "ell_plus_column",
    "count_between", "length_diff", "phi_order", "ell_minus_ij",
    "enumerate_group", "act_on_weight", "identity", "longest",
    "simple_reflections", "iter_words_bfs", "MAX_GROUP_RANK",
]

SignedPerm = tuple[int, ...]

# |B_7| = 645120 is already far beyond anything the formulas can digest
MAX_GROUP_RANK = 7


def order_key(x: int, n: int) -> int:
    """Position of letter ``x`` in the order 1 < ... < n < -n < ... < -1."""
    return x if x > 0 else 2 * n + 1 + x


def letters(n: int) -> list[int]:
    """All letters of [n-bar] in increasing order."""
    return list(range(1, n + 1)) + list(range(-n, 0))


def check_perm(w: Sequence[int]) -> None:
    n = len(w)
    if sorted(abs(x) for x in w) != list(range(1, n + 1)):
        raise ValueError(f"not a signed permutation window: {tuple(w)}")


class Root(NamedTuple):
    i: int
    j: int

    @property
    def kind(self) -> str:
        if self.j == 0:
            return "short"
        if self.j == -self.i:
            return "sign"
        return "transposition" if self.j > 0 else "signed"

    def vector(self) -> tuple[int, ...]:
        """The root in e-coordinates as sparse ``(index, coefficient)`` pairs."""
        i, j = self.i, self.j
        if j == 0:
            return ((i, 1),)
        if j == -i:
            return ((i, 2),)
        return ((i, 1), (abs(j), -1 if j > 0 else 1))

    def coroot(self) -> tuple[int, ...]:
        i, j = self.i, self.j
        if j == 0:
            return ((i, 2),)
        if j == -i:
            return ((i, 1),)
        return ((i, 1), (abs(j), -1 if j > 0 else 1))

    def dense(self, n: int, coroot: bool = False) -> tuple[int, ...]:
        v = [0] * n
        for k, c in (self.coroot() if coroot else self.vector()):
            v[k - 1] += c
        return tuple(v)

    def __str__(self) -> str:
        return f"({self.i})" if self.j == 0 else f"({self.i},{self.j})"


def _check_root(r: Root, n: int) -> None:
    i, j = r.i, r.j
    ok = 1 <= i <= n and (
        j == 0 or j == -i or (i < abs(j) <= n)
    )
    if not ok:
        raise ValueError(f"reflection {r} out of range for n={n}")


def apply_reflection(w: Sequence[int], r: Root) -> SignedPerm:
    """Right multiplication ``w * r`` acting on positions."""
    _check_root(r, len(w))
    v = list(w)
    i, j = r.i - 1, r.j
    if j == 0 or j == -r.i:
        v[i] = -v[i]
    elif j > 0:
        v[i], v[j - 1] = v[j - 1], v[i]
    else:
        k = -j - 1
        v[i], v[k] = -v[k], -v[i]
    return tuple(v)


def ell_plus(w: Sequence[int]) -> int:
    n = len(w)
    keys = [order_key(x, n) for x in w]
    return sum(1 for k in range(n) for l in range(k + 1, n) if keys[k] > keys[l])


def ell_minus(w: Sequence[int]) -> int:
    n = len(w)
    return sum(
        1 for k in range(n) for l in range(k, n)
        if order_key(w[k], n) > order_key(-w[l], n)
    )


def length(w: Sequence[int]) -> int:
    return ell_plus(w) + ell_minus(w)


def ell_plus_column(column: Sequence[int], n: int) -> int:
    """Inversions of a column read top to bottom, in the [n-bar] order."""
    if len({abs(x) for x in column}) != len(column):
        raise ValueError(f"column repeats an absolute value: {tuple(column)}")
    keys = [order_key(x, n) for x in column]
    h = len(keys)
    return sum(1 for k in range(h) for l in range(k + 1, h) if keys[k] > keys[l])


def count_between(a: int, b: int, values, n: int) -> int:
    """Number of ``values`` strictly between letters ``a`` and ``b``."""
    lo, hi = order_key(a, n), order_key(b, n)
    return sum(1 for x in values if lo < order_key(x, n) < hi)


def _up_diff(w: Sequence[int], r: Root) -> int:
    # half of (l(wr) - l(w) - 1), valid when wr > w
    n = len(w)
    i, j = r.i - 1, r.j
    a = w[i]
    if j == 0 or j == -r.i:
        return count_between(a, -a, w[i:], n)
    if j > 0:
        return count_between(a, w[j - 1], w[i:j], n)
    k = -j - 1
    b = w[k]
    tail = w[k + 1:]
    tau = 1 if a > 0 and b > 0 else 0
    return (count_between(a, -b, w[i:k], n)
            + count_between(a, -b, tail, n)
            + count_between(a, -b, [-x for x in tail], n)
            + tau)


def _goes_up(w: Sequence[int], r: Root) -> bool:
    n = len(w)
    i, j = r.i - 1, r.j
    a = order_key(w[i], n)
    if j == 0 or j == -r.i:
        return a < order_key(-w[i], n)
    if j > 0:
        return a < order_key(w[j - 1], n)
    return a < order_key(-w[-j - 1], n)


def length_diff(w: Sequence[int], r: Root) -> int:
    """``l(w r) - l(w)`` from the closed forms, in O(n).

    Downward steps are evaluated at ``w r`` and negated.
    """
    _check_root(r, len(w))
    if _goes_up(w, r):
        return 1 + 2 * _up_diff(w, r)
    return -(1 + 2 * _up_diff(apply_reflection(w, r), r))


def phi_order(n: int) -> list[tuple[int, int]]:
    """Pairs (k, l), k <= l, in the order (1,1),(1,2),(2,2),(1,3),..."""
    return [(k, l) for l in range(1, n + 1) for k in range(1, l + 1)]


def ell_minus_ij(w: Sequence[int], i: int, j: int) -> int:
    """Pairs counted by ``ell_minus`` that precede (i, j) in :func:`phi_order`."""
    n = len(w)
    if not 1 <= i <= j <= n:
        raise ValueError(f"need 1 <= i <= j <= n, got ({i}, {j})")
    total = 0
    for k, l in phi_order(n):
        if (k, l) == (i, j):
            break
        if order_key(w[k - 1], n) > order_key(-w[l - 1], n):
            total += 1
    return total


def enumerate_group(n: int) -> list[SignedPerm]:
    """All 2^n n! windows: permutations lexicographic, then sign patterns."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_GROUP_RANK:
        raise ValueError(f"n={n} exceeds the cap {MAX_GROUP_RANK}")
    out = []
    for p in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            out.append(tuple(s * x for s, x in zip(signs, p)))
    return out


def identity(n: int) -> SignedPerm:
    return tuple(range(1, n + 1))


def longest(n: int) -> SignedPerm:
    return tuple(-k for k in range(1, n + 1))


def simple_reflections(n: int) -> list[Root]:
    """s_1, ..., s_{n-1} (adjacent transpositions) and s_n (last sign change)."""
    return [Root(k, k + 1) for k in range(1, n)] + [Root(n, -n)]


def act_on_weight(w: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """``w(v)``: coordinate i of v moves to |w(i)| with sign of w(i)."""
    out = [0] * len(v)
    for x, c in zip(w, v):
        out[abs(x) - 1] = c if x > 0 else -c
    return tuple(out)


def iter_words_bfs(n: int) -> Iterator[tuple[SignedPerm, int]]:
    """Breadth-first search from the identity in the Cayley graph of simple reflections."""
    gens = simple_reflections(n)
    start = identity(n)
    seen = {start: 0}
    frontier = [start]
    yield start, 0
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for s in gens:
                v = apply_reflection(u, s)
                if v not in seen:
                    seen[v] = d
                    nxt.append(v)
                    yield v, d
        frontier = nxt
