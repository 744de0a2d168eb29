"""Monomial ideals given by minimal generators, their lcm lattice and face labels."""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import check_guard
from .monomials import Monomial, MonomialError, divides, lcm_all, parse_monomial

__all__ = [
    "Face",
    "IdealParseError",
    "LcmLattice",
    "MonomialIdeal",
    "face_label",
    "lcm_lattice",
    "minimalize",
    "parse_ideal",
    "random_ideal",
    "read_ideal",
]

# A face of the Taylor simplex: strictly increasing tuple of 1-based generator indices.
Face = tuple[int, ...]

DEFAULT_LATTICE_GUARD = 20


class IdealParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal stored as its minimal generators, in user order.

    Generator ``i`` (1-based) is vertex ``i`` of the Taylor complex.
    """

    generators: tuple[Monomial, ...]
    n: int

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        for g in gens:
            if g.n != self.n:
                raise MonomialError(f"generator {g} has {g.n} variables, expected {self.n}")
        for a, b in itertools.permutations(gens, 2):
            if divides(a, b):
                raise ValueError(f"generators are not minimal: {a} divides {b}")
        object.__setattr__(self, "generators", gens)

    @property
    def r(self) -> int:
        return len(self.generators)

    def label(self, face: Iterable[int]) -> Monomial:
        return face_label(self, face)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def minimalize(raw: Sequence[Monomial]) -> MonomialIdeal:
    """Drop duplicates and non-minimal monomials, keeping first occurrences in order."""
    if not raw:
        raise ValueError("cannot build an ideal from no monomials")
    n = raw[0].n
    kept: list[Monomial] = []
    for m in raw:
        if m.n != n:
            raise MonomialError("monomials have different variable counts")
        if m in kept:
            continue
        if any(divides(o, m, strict=True) for o in raw):
            continue
        kept.append(m)
    return MonomialIdeal(tuple(kept), n)


def face_label(ideal: MonomialIdeal, face: Iterable[int]) -> Monomial:
    """lcm of the generators indexed by ``face``."""
    face = tuple(face)
    if not face:
        raise ValueError("the empty face has no lcm label (it is labeled 1 by convention)")
    for i in face:
        if not 1 <= i <= ideal.r:
            raise IndexError(f"vertex {i} out of range [1, {ideal.r}]")
    return lcm_all((ideal.generators[i - 1] for i in face), ideal.n)


def all_faces(r: int) -> list[Face]:
    """Non-empty subsets of {1..r} ordered by (size, lexicographic)."""
    return [f for k in range(1, r + 1) for f in itertools.combinations(range(1, r + 1), k)]


@dataclass(frozen=True)
class LcmLattice:
    ideal: MonomialIdeal
    elements: frozenset[Monomial]
    # label -> faces carrying it, each list in canonical face order
    faces_by_label: dict[Monomial, tuple[Face, ...]]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m):
        return m in self.elements

    def leq(self, a: Monomial, b: Monomial) -> bool:
        return divides(a, b)

    def below(self, m: Monomial, strict: bool = True) -> list[Monomial]:
        return sorted(e for e in self.elements if divides(e, m, strict=strict))

    def sorted_elements(self) -> list[Monomial]:
        return sorted(self.elements, key=lambda m: (m.degree, m.exponents))


def lcm_lattice(ideal: MonomialIdeal, guard: int = DEFAULT_LATTICE_GUARD) -> LcmLattice:
    check_guard("max-gens", ideal.r, guard)
    by_label: dict[Monomial, list[Face]] = {}
    for f in all_faces(ideal.r):
        by_label.setdefault(face_label(ideal, f), []).append(f)
    return LcmLattice(
        ideal,
        frozenset(by_label),
        {m: tuple(fs) for m, fs in by_label.items()},
    )


_NDECL = re.compile(r"n\s*=\s*(\d+)")
_VAR = re.compile(r"x(\d+)")


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the ideal file format: optional ``n=<count>`` line, one monomial per line.

    Blank lines and ``#`` comments are skipped.  Without an ``n=`` line the
    variable count is the largest index used.
    """
    n = None
    entries: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        m = _NDECL.fullmatch(body)
        if m:
            if entries or n is not None:
                raise IdealParseError("n=<count> must come before any monomial", lineno)
            n = int(m.group(1))
            continue
        entries.append((lineno, body))
    if not entries:
        raise IdealParseError("no generators found")
    if n is None:
        n = max((int(k) for _, body in entries for k in _VAR.findall(body)), default=0)
        n = max(n, 1)
    monos = []
    for lineno, body in entries:
        try:
            monos.append(parse_monomial(body, n))
        except MonomialError as e:
            raise IdealParseError(str(e), lineno) from None
    return minimalize(monos)


def read_ideal(path: str | Path) -> MonomialIdeal:
    return parse_ideal(Path(path).read_text())


def format_ideal(ideal: MonomialIdeal) -> str:
    return f"n={ideal.n}\n" + "".join(f"{g}\n" for g in ideal.generators)


def random_ideal(
    gens: int,
    n: int,
    seed: int | random.Random | None = None,
    max_exp: int = 3,
    max_tries: int = 200,
) -> MonomialIdeal:
    """A random ideal with exactly ``gens`` minimal generators in ``n`` variables.

    Draws exponent vectors in [0, max_exp]^n, rejecting comparable ones.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(max_tries):
        picked: list[Monomial] = []
        for _ in range(50 * gens):
            m = Monomial(tuple(rng.randint(0, max_exp) for _ in range(n)))
            if m.is_one() or any(divides(a, m) or divides(m, a) for a in picked):
                continue
            picked.append(m)
            if len(picked) == gens:
                return MonomialIdeal(tuple(picked), n)
        # stuck: the antichain cannot be extended, start over
    raise ValueError(f"could not draw {gens} minimal generators in {n} variables with exponents <= {max_exp}")
