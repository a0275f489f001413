"""
Weyl characters, orbit sums and dimensions for B_n and C_n.

Weights are doubled e-coordinates, as everywhere else in the package.  The
character is the alternant ratio, divided exactly term by term in
lexicographic order.

>>> dimension("C", 2, (4, 2))
16
>>> dimension("B", 2, (1, 1))
4
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .chains import positive_roots
from .exactpoly import HLPoly
from .weyl_bc import act_on_weight, enumerate_group, length

__all__ = ["rho", "check_dominant", "alternant", "laurent_divide", "weyl_character",
           "orbit_sum", "dimension"]

Weight = tuple[int, ...]


def rho(type_: str, n: int) -> Weight:
    if type_ == "C":
        return tuple(2 * (n - i) for i in range(n))
    if type_ == "B":
        return tuple(2 * (n - i) - 1 for i in range(n))
    raise ValueError(f"unknown type {type_!r}")


def check_dominant(type_: str, v: Sequence[int]) -> Weight:
    v = tuple(int(x) for x in v)
    if any(a < b for a, b in zip(v, v[1:])) or (v and v[-1] < 0):
        raise ValueError(f"weight {v} (doubled) is not dominant")
    if type_ == "C" and any(x % 2 for x in v):
        raise ValueError(f"weight {v} (doubled) is not integral for type C")
    if type_ == "B" and len({x % 2 for x in v}) > 1:
        raise ValueError(f"weight {v} (doubled) is not integral for type B")
    return v


def alternant(n: int, v: Sequence[int]) -> dict[Weight, int]:
    out: dict[Weight, int] = {}
    for w in enumerate_group(n):
        key = act_on_weight(w, v)
        out[key] = out.get(key, 0) + (-1) ** length(w)
    return {k: c for k, c in out.items() if c}


def laurent_divide(num: dict[Weight, int], den: dict[Weight, int],
                   max_steps: int = 10 ** 6) -> dict[Weight, int]:
    """Exact quotient; raises ``ArithmeticError`` if a remainder is left."""
    lead = max(den)
    lc = den[lead]
    rem = dict(num)
    q: dict[Weight, int] = {}
    for _ in range(max_steps):
        if not rem:
            return q
        top = max(rem)
        c, r = divmod(rem[top], lc)
        if r:
            raise ArithmeticError(f"inexact coefficient at {top}")
        shift = tuple(a - b for a, b in zip(top, lead))
        q[shift] = q.get(shift, 0) + c
        for e, d in den.items():
            k = tuple(a + b for a, b in zip(shift, e))
            val = rem.get(k, 0) - c * d
            if val:
                rem[k] = val
            else:
                rem.pop(k, None)
    raise ArithmeticError("division did not terminate; nonzero remainder")


def weyl_character(type_: str, n: int, v: Sequence[int]) -> HLPoly:
    """Character of the irreducible module with doubled highest weight ``v``."""
    v = check_dominant(type_, v)
    r = rho(type_, n)
    num = alternant(n, tuple(a + b for a, b in zip(v, r)))
    den = alternant(n, r)
    return HLPoly.from_constants(n, laurent_divide(num, den))


def orbit_sum(type_: str, n: int, v: Sequence[int]) -> HLPoly:
    v = check_dominant(type_, v)
    return HLPoly.from_constants(n, {act_on_weight(w, v): 1 for w in enumerate_group(n)})


def dimension(type_: str, n: int, v: Sequence[int]) -> int:
    """Weyl dimension formula, independent of :func:`weyl_character`."""
    v = check_dominant(type_, v)
    r = rho(type_, n)
    out = Fraction(1)
    for root in positive_roots(type_, n):
        co = root.dense(n, coroot=True)
        out *= Fraction(sum((a + b) * c for a, b, c in zip(v, r, co)),
                        sum(b * c for b, c in zip(r, co)))
    assert out.denominator == 1
    return int(out)
