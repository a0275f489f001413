"""
Exact polynomials in t with Laurent monomials in x_1..x_n as keys.

Exponent vectors are stored *doubled* so that half-integral (type B spin)
weights stay integral: the key ``(2, -1)`` means ``x1 * x2^(-1/2)``.
Coefficients in t are plain tuples of Python ints, lowest degree first.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .weyl_bc import act_on_weight

__all__ = [
    "TPoly", "tpoly_add", "tpoly_trim", "tpoly_eval", "tpoly_str",
    "t_binomial", "HLPoly",
]

TPoly = tuple[int, ...]
WeightVec = tuple[int, ...]


def tpoly_trim(c: Sequence[int]) -> TPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def tpoly_add(p: Sequence[int], q: Sequence[int]) -> TPoly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for k, c in enumerate(q):
        out[k] += c
    return tpoly_trim(out)


def tpoly_mul(p: Sequence[int], q: Sequence[int]) -> TPoly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tpoly_trim(out)


def tpoly_eval(p: Sequence[int], t: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


@lru_cache(maxsize=None)
def t_binomial(a: int, b: int) -> TPoly:
    """Expanded ``t^a (1 - t)^b``."""
    if a < 0 or b < 0:
        raise ValueError(f"negative exponent in t^{a}(1-t)^{b}")
    return (0,) * a + tuple((-1) ** k * comb(b, k) for k in range(b + 1))


def _term(c: int, k: int) -> str:
    mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
    if not mono:
        return str(abs(c))
    return mono if abs(c) == 1 else f"{abs(c)}{mono}"


def tpoly_str(p: Sequence[int]) -> str:
    """Ascending-degree rendering, e.g. ``2 + t - 2t^2``."""
    parts = [(c, k) for k, c in enumerate(p) if c]
    if not parts:
        return "0"
    c0, k0 = parts[0]
    s = ("-" if c0 < 0 else "") + _term(c0, k0)
    for c, k in parts[1:]:
        s += (" - " if c < 0 else " + ") + _term(c, k)
    return s


def _exp_str(d: int) -> str:
    e = Fraction(d, 2)
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def monomial_str(v: Sequence[int]) -> str:
    parts = []
    for i, d in enumerate(v, start=1):
        if d == 0:
            continue
        parts.append(f"x{i}" if d == 2 else f"x{i}^{_exp_str(d)}")
    return "*".join(parts) if parts else "1"


class HLPoly:
    """Sparse map from doubled exponent vectors to :data:`TPoly` coefficients.

    Instances are treated as immutable; :meth:`add_term` and ``+`` return new
    objects, while :meth:`iadd_term` is the in-place accumulator used by the
    enumeration loops.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[WeightVec, Sequence[int]] | None = None):
        self.n = n
        self._terms: dict[WeightVec, TPoly] = {}
        if terms:
            for v, c in terms.items():
                self._iadd(tuple(v), tuple(c))

    def _iadd(self, v: WeightVec, c: TPoly) -> None:
        if len(v) != self.n:
            raise ValueError(f"exponent {v} does not have {self.n} entries")
        s = tpoly_add(self._terms.get(v, ()), c)
        if s:
            self._terms[v] = s
        else:
            self._terms.pop(v, None)

    def iadd_term(self, a: int, b: int, v: Sequence[int]) -> None:
        self._iadd(tuple(v), t_binomial(a, b))

    def add_term(self, a: int, b: int, v: Sequence[int]) -> "HLPoly":
        out = self.copy()
        out.iadd_term(a, b, v)
        return out

    def copy(self) -> "HLPoly":
        out = HLPoly(self.n)
        out._terms = dict(self._terms)
        return out

    def __add__(self, other: "HLPoly") -> "HLPoly":
        if other.n != self.n:
            raise ValueError("rank mismatch")
        out = self.copy()
        for v, c in other._terms.items():
            out._iadd(v, c)
        return out

    def __sub__(self, other: "HLPoly") -> "HLPoly":
        neg = HLPoly(other.n, {v: tuple(-x for x in c) for v, c in other._terms.items()})
        return self + neg

    def __eq__(self, other) -> bool:
        return isinstance(other, HLPoly) and self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, tuple(self.items())))

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, v: Sequence[int]) -> TPoly:
        return self._terms.get(tuple(v), ())

    def __iter__(self) -> Iterator[WeightVec]:
        return iter(sorted(self._terms))

    def items(self) -> list[tuple[WeightVec, TPoly]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def specialize_t(self, value: int) -> dict[WeightVec, int]:
        out = {}
        for v, c in self.items():
            x = tpoly_eval(c, value)
            if x:
                out[v] = x
        return out

    def apply_group_element(self, w: Sequence[int]) -> "HLPoly":
        return HLPoly(self.n, {act_on_weight(w, v): c for v, c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for v, c in self.items():
            mono = monomial_str(v)
            if len(c) == 1:
                k = c[0]
                if mono == "1":
                    body = str(abs(k))
                else:
                    body = mono if abs(k) == 1 else f"{abs(k)}*{mono}"
                parts.append(("-" if k < 0 else "+", body))
            else:
                coeff = f"({tpoly_str(c)})"
                parts.append(("+", coeff if mono == "1" else f"{coeff}*{mono}"))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"HLPoly(n={self.n}, {self})"

    def to_json(self) -> list[dict]:
        return [{"x": list(v), "t": list(c)} for v, c in self.items()]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, n: int, data: Iterable[Mapping]) -> "HLPoly":
        return cls(n, {tuple(d["x"]): tuple(d["t"]) for d in data})

    @classmethod
    def loads(cls, n: int, s: str) -> "HLPoly":
        return cls.from_json(n, json.loads(s))

    @classmethod
    def from_constants(cls, n: int, terms: Mapping[WeightVec, int]) -> "HLPoly":
        return cls(n, {v: (c,) for v, c in terms.items() if c})
