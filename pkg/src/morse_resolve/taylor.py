"""Labeled Taylor and Scarf complexes, multigraded Betti numbers, minimality test."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterable

from . import chain
from .errors import check_guard
from .ideals import Face, MonomialIdeal, all_faces, face_label
from .monomials import Monomial, divides, parse_monomial
from .parallel import pmap

__all__ = [
    "LabeledComplex",
    "MinimalityResult",
    "is_minimal_support",
    "multigraded_betti",
    "scarf_complex",
    "taylor_complex",
    "total_betti",
]

DEFAULT_TAYLOR_GUARD = 20


def face_key(face: Face) -> tuple[int, Face]:
    return (len(face), face)


@dataclass(frozen=True, eq=False)
class LabeledComplex:
    """A simplicial complex on generator indices whose faces carry lcm labels.

    ``faces`` holds the non-empty faces; the empty face is implicit (label 1).
    """

    ideal: MonomialIdeal
    faces: frozenset[Face]
    labels: dict[Face, Monomial]

    @classmethod
    def from_faces(cls, ideal: MonomialIdeal, faces: Iterable[Iterable[int]]) -> LabeledComplex:
        fs = frozenset(tuple(sorted(f)) for f in faces if f)
        for f in fs:
            for k in range(len(f)):
                sub = f[:k] + f[k + 1 :]
                if sub and sub not in fs:
                    raise ValueError(f"face set is not downward closed: {sub} < {f} missing")
        return cls(ideal, fs, {f: face_label(ideal, f) for f in fs})

    @classmethod
    def from_facets(cls, ideal: MonomialIdeal, facets: Iterable[Iterable[int]]) -> LabeledComplex:
        faces = set()
        for facet in facets:
            facet = tuple(sorted(facet))
            for k in range(1, len(facet) + 1):
                faces.update(itertools.combinations(facet, k))
        return cls.from_faces(ideal, faces)

    def __eq__(self, other):
        if not isinstance(other, LabeledComplex):
            return NotImplemented
        return self.ideal == other.ideal and self.faces == other.faces

    def __hash__(self):
        return hash((self.ideal, self.faces))

    def __contains__(self, face):
        face = tuple(sorted(face))
        return not face or face in self.faces

    def __len__(self):
        return len(self.faces)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def label(self, face: Iterable[int]) -> Monomial:
        face = tuple(face)
        if not face:
            return Monomial.one(self.ideal.n)
        return self.labels[face]

    def cells(self, d: int) -> list[Face]:
        if d == -1:
            return [()]
        return sorted(f for f in self.faces if len(f) == d + 1)

    def sorted_faces(self) -> list[Face]:
        return sorted(self.faces, key=face_key)

    def boundary(self, d: int) -> chain.BoundaryMatrix:
        return chain.boundary_matrix(self, d)

    def fvector(self) -> tuple[int, ...]:
        """Face counts from dimension -1 (the empty face) upward."""
        counts = Counter(len(f) for f in self.faces)
        return (1,) + tuple(counts[k] for k in range(1, self.dim + 2))

    def facets(self) -> list[Face]:
        out = []
        for f in self.sorted_faces():
            if not any(len(g) == len(f) + 1 and set(f) < set(g) for g in self.faces):
                out.append(f)
        return sorted(out, key=face_key)

    def cover_pairs(self) -> list[tuple[Face, Face]]:
        """Pairs (sigma, tau) of non-empty faces with sigma a facet of tau."""
        out = []
        for tau in self.sorted_faces():
            if len(tau) < 2:
                continue
            for k in range(len(tau)):
                out.append((tau[:k] + tau[k + 1 :], tau))
        return out

    def subcomplex(self, faces: Iterable[Face]) -> LabeledComplex:
        return LabeledComplex.from_faces(self.ideal, faces)

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.ideal.n,
            "generators": [str(g) for g in self.ideal.generators],
            "faces": [{"vertices": list(f), "label": str(self.labels[f])} for f in self.sorted_faces()],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> LabeledComplex:
        n = data["n"]
        ideal = MonomialIdeal(tuple(parse_monomial(g, n) for g in data["generators"]), n)
        cx = cls.from_faces(ideal, (tuple(f["vertices"]) for f in data["faces"]))
        for f in data["faces"]:
            if str(cx.labels[tuple(f["vertices"])]) != f["label"]:
                raise ValueError(f"label mismatch on face {f['vertices']}")
        return cx


def taylor_complex(ideal: MonomialIdeal, guard: int = DEFAULT_TAYLOR_GUARD) -> LabeledComplex:
    check_guard("max-gens", ideal.r, guard)
    faces = all_faces(ideal.r)
    return LabeledComplex(ideal, frozenset(faces), {f: face_label(ideal, f) for f in faces})


def scarf_complex(ideal: MonomialIdeal, guard: int = DEFAULT_TAYLOR_GUARD) -> LabeledComplex:
    """Taylor faces whose label no other Taylor face shares."""
    taylor = taylor_complex(ideal, guard)
    counts = Counter(taylor.labels.values())
    keep = [f for f in taylor.faces if counts[taylor.labels[f]] == 1]
    try:
        return LabeledComplex.from_faces(ideal, keep)
    except ValueError as e:
        raise AssertionError(f"Scarf faces not downward closed: {e}") from None


def _strand_homology(args) -> tuple[Monomial, tuple[int, ...]]:
    ideal, m = args
    verts = [j for j, g in enumerate(ideal.generators, start=1) if divides(g, m)]
    faces = []
    for k in range(1, len(verts) + 1):
        for f in itertools.combinations(verts, k):
            if face_label(ideal, f) != m:
                faces.append(f)
    strand = LabeledComplex.from_faces(ideal, faces)
    return m, chain.reduced_homology(strand).ranks


def multigraded_betti(ideal: MonomialIdeal, guard: int = DEFAULT_TAYLOR_GUARD) -> dict[tuple[int, Monomial], int]:
    """Nonzero beta_{i,m}(I), computed as reduced H_{i-1} of the Taylor faces strictly below m."""
    check_guard("max-gens", ideal.r, guard)
    labels = {face_label(ideal, f) for f in all_faces(ideal.r)}
    order = sorted(labels, key=lambda m: (m.degree, m.exponents))
    out = {}
    for m, ranks in pmap(_strand_homology, [(ideal, m) for m in order]):
        for k, rk in enumerate(ranks):
            if rk:
                out[(k, m)] = rk
    return out


def total_betti(ideal: MonomialIdeal, guard: int = DEFAULT_TAYLOR_GUARD) -> tuple[int, ...]:
    """(beta_0(I), beta_1(I), ...); prepend 1 for the S/I convention."""
    graded = multigraded_betti(ideal, guard)
    top = max(i for i, _ in graded)
    totals = [0] * (top + 1)
    for (i, _), b in graded.items():
        totals[i] += b
    return tuple(totals)


@dataclass(frozen=True)
class MinimalityResult:
    minimal: bool
    witness: tuple[Face, Face] | None = None
    label: Monomial | None = None

    def __bool__(self):
        return self.minimal


def is_minimal_support(complex) -> MinimalityResult:
    """A supported resolution is minimal iff no cover pair shares a label.

    Works on anything exposing ``cover_pairs()`` and ``label(cell)``.
    """
    for sigma, tau in complex.cover_pairs():
        if complex.label(sigma) == complex.label(tau):
            return MinimalityResult(False, (sigma, tau), complex.label(tau))
    return MinimalityResult(True)
