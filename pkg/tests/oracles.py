"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def signed_perms(n):
    for p in permutations(range(1, n + 1)):
        for s in product((1, -1), repeat=n):
            yield tuple(a * b for a, b in zip(s, p))


def _simple(w, k, n):
    w = list(w)
    if k < n:
        w[k - 1], w[k] = w[k], w[k - 1]
    else:
        w[n - 1] = -w[n - 1]
    return tuple(w)


def coxeter_lengths(n):
    """Word length in s_1..s_{n-1}, s_n by breadth-first search."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for k in range(1, n + 1):
                v = _simple(u, k, n)
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def reflect(w, i, j):
    """Right multiplication by the reflection (i, j); j < 0 means a barred index, j == 0 a sign change."""
    w = list(w)
    if j == 0 or j == -i:
        w[i - 1] = -w[i - 1]
    elif j > 0:
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    else:
        w[i - 1], w[-j - 1] = -w[-j - 1], -w[i - 1]
    return tuple(w)


def root_vector(i, j, n):
    v = [Fraction(0)] * n
    if j == 0:
        v[i - 1] = Fraction(1)
    elif j == -i:
        v[i - 1] = Fraction(2)
    else:
        v[i - 1] += 1
        v[abs(j) - 1] += -1 if j > 0 else 1
    return v


def coroot_vector(i, j, n):
    a = root_vector(i, j, n)
    norm = sum(x * x for x in a)
    return [2 * x / norm for x in a]


def brute_pairs(roots, lam, n):
    """All admissible pairs by trying every subset; returns {(w, J): (a, b, weight)}.

    ``roots`` are (i, j) tuples, ``lam`` a list of Fractions.
    """
    lengths = coxeter_lengths(n)
    levels = []
    seen = {}
    for r in roots:
        seen[r] = seen.get(r, 0) + 1
        levels.append(seen[r])
    out = {}
    m = len(roots)
    for w in signed_perms(n):
        for size in range(m + 1):
            for J in combinations(range(1, m + 1), size):
                u = w
                ok = True
                for j in J:
                    v = reflect(u, *roots[j - 1])
                    if lengths[v] >= lengths[u]:
                        ok = False
                        break
                    u = v
                if not ok:
                    continue
                mu = list(lam)
                for j in reversed(J):
                    i0, j0 = roots[j - 1]
                    a = root_vector(i0, j0, n)
                    co = coroot_vector(i0, j0, n)
                    shift = sum(x * y for x, y in zip(mu, co)) - levels[j - 1]
                    mu = [x - shift * y for x, y in zip(mu, a)]
                weight = [Fraction(0)] * n
                for k, x in enumerate(w):
                    weight[abs(x) - 1] = mu[k] if x > 0 else -mu[k]
                twice = lengths[w] + lengths[u] - len(J)
                out[(w, J)] = (twice // 2, len(J), tuple(int(2 * x) for x in weight))
    return out


def c2_21_closed_form():
    """The closed-form sum over (a,b,c,d,e) for C2, lambda = (2,1): {filling: (N, des, ct2)}."""
    L = [1, 2, -2, -1]
    key = {1: 0, 2: 1, -2: 2, -1: 3}
    le = lambda x, y: key[x] <= key[y]  # noqa: E731
    out = {}
    for a, b, c, d, e in product(L, repeat=5):
        if not (le(a, c) and le(c, e) and le(b, d)):
            continue
        if abs(a) == abs(b):
            continue
        if not ((c == a and d == b) or (c == -b and d == -a)):
            continue
        N = int(key[a] > key[b]) + int(a > 0 and b > 0 and a != c)
        des = int(a != c) + int(c != e)
        ct = [0, 0]
        for x in (a, b, c, d, e, e):
            ct[abs(x) - 1] += 1 if x > 0 else -1
        out[((e,), (c, d), (a, b))] = (N, des, tuple(ct))
    return out


def hhl_inv_bruteforce(cols, n):
    """inv by listing attacking pairs cell by cell (cells as (row, column-from-right))."""
    key = lambda x: x if x > 0 else 2 * n + 1 + x  # noqa: E731
    m = len(cols)
    cells = {}
    for idx, col in enumerate(cols):
        jr = m - idx
        for i, x in enumerate(col, start=1):
            cells[(i, jr)] = x
    inv = 0
    for (i, j), x in cells.items():
        for (i2, j2), y in cells.items():
            if j2 == j and i2 > i and key(x) < key(y):
                inv += 1
            if j2 == j + 1 and i2 > i and key(x) > key(y):
                inv += 1
    return inv
