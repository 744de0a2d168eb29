"""Exact monomial arithmetic on exponent vectors."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

__all__ = ["Monomial", "MonomialError", "parse_monomial", "lcm", "lcm_all", "divides"]

# Exponents beyond this are rejected rather than silently growing.
MAX_EXPONENT = 2**63 - 1

_FACTOR = re.compile(r"x(\d+)(?:\^(-?\d+))?")


class MonomialError(ValueError):
    """Raised for malformed monomial text or incompatible operands."""


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x1^e1 * ... * xn^en stored as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise MonomialError(f"negative exponent in {exps}")
        if any(e > MAX_EXPONENT for e in exps):
            raise MonomialError("exponent overflow")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def from_support(cls, indices: Iterable[int], n: int) -> Monomial:
        """Squarefree monomial on the given 1-based variable indices."""
        exps = [0] * n
        for k in indices:
            exps[k - 1] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def lcm(self, other: Monomial) -> Monomial:
        return lcm(self, other)

    def divides(self, other: Monomial, strict: bool = False) -> bool:
        return divides(self, other, strict)

    def __str__(self):
        factors = []
        for k, e in enumerate(self.exponents, start=1):
            if e == 1:
                factors.append(f"x{k}")
            elif e > 1:
                factors.append(f"x{k}^{e}")
        return "*".join(factors) if factors else "1"

    def __repr__(self):
        return f"Monomial({self})"


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``1`` or ``x<k>[^<e>]`` factors joined by ``*``.

    Repeated variables accumulate, so ``x1*x1`` equals ``x1^2``.
    """
    s = "".join(text.split())
    if s == "1":
        return Monomial.one(n)
    if not s:
        raise MonomialError("empty monomial")
    exps = [0] * n
    for part in s.split("*"):
        m = _FACTOR.fullmatch(part)
        if m is None:
            raise MonomialError(f"cannot parse factor {part!r} in {text!r}")
        k = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if not 1 <= k <= n:
            raise MonomialError(f"variable x{k} out of range [1, {n}]")
        if e <= 0:
            raise MonomialError(f"exponent must be positive in {part!r}")
        exps[k - 1] += e
    return Monomial(tuple(exps))


def _check_same_n(a: Monomial, b: Monomial):
    if a.n != b.n:
        raise MonomialError(f"variable counts differ: {a.n} vs {b.n}")


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same_n(a, b)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def lcm_all(monomials: Iterable[Monomial], n: int) -> Monomial:
    exps = [0] * n
    for m in monomials:
        if m.n != n:
            raise MonomialError(f"variable counts differ: {m.n} vs {n}")
        exps = [max(x, y) for x, y in zip(exps, m.exponents)]
    return Monomial(tuple(exps))


def divides(a: Monomial, b: Monomial, strict: bool = False) -> bool:
    _check_same_n(a, b)
    if any(x > y for x, y in zip(a.exponents, b.exponents)):
        return False
    return not strict or a != b
