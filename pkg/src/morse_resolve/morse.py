"""Homogeneous acyclic matchings on Taylor complexes and the Morse complexes they induce.

Faces are sorted tuples of generator indices.  A matching edge ``(tau, sigma)``
pairs a face with one of its facets of equal label; in the matching graph the
edge ``tau -> sigma`` is replaced by ``sigma -> tau``.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Iterator, Sequence

from . import chain
from .chain import CellChain, simplicial_sign
from .errors import check_guard
from .ideals import Face, MonomialIdeal
from .monomials import Monomial, divides
from .taylor import LabeledComplex, face_key, taylor_complex

__all__ = [
    "Enumeration",
    "HomogeneousPair",
    "Matching",
    "MatchingError",
    "MorseComplex",
    "enumerate_maximal_matchings",
    "boundary_squared_defects",
    "count_maximal_matchings",
    "exists_polyhedral_maximal_matching",
    "homogeneous_pairs",
    "is_acyclic",
    "is_maximal",
    "iter_maximal_matchings",
    "minimal_homogeneous_pairs",
    "morse_complex",
    "morse_fvector",
    "strand_defects",
]

DEFAULT_PAIR_GUARD = 64
DEFAULT_ENUM_LIMIT = 10_000
DEFAULT_EXISTS_GUARD = 6

Edge = tuple[Face, Face]


class MatchingError(ValueError):
    pass


def facets_of(face: Face) -> Iterator[tuple[int, Face]]:
    for k in range(len(face)):
        yield k, face[:k] + face[k + 1 :]


def edge_key(edge: Edge):
    # larger cells first: reproduces the M1..M4 numbering used for the six-generator ideal
    tau, sigma = edge
    return (-len(tau), tau, sigma)


@dataclass(frozen=True, order=True)
class HomogeneousPair:
    sigma: Face
    tau: Face

    @property
    def edge(self) -> Edge:
        return (self.tau, self.sigma)

    @property
    def added_vertex(self) -> int:
        (v,) = set(self.tau) - set(self.sigma)
        return v


class Matching:
    """A set of matching edges ``tau -> sigma``, stored canonically."""

    def __init__(self, edges: Iterable[Sequence[Iterable[int]]] = ()):
        canon = set()
        for tau, sigma in edges:
            canon.add((tuple(sorted(tau)), tuple(sorted(sigma))))
        self.edges: tuple[Edge, ...] = tuple(sorted(canon, key=edge_key))
        self.down: dict[Face, Face] = {}
        self.up: dict[Face, Face] = {}
        for tau, sigma in self.edges:
            for f in (tau, sigma):
                if f in self.down or f in self.up:
                    raise MatchingError(f"face {f} occurs in more than one matching edge")
            self.down[tau] = sigma
            self.up[sigma] = tau

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge):
        tau, sigma = edge
        return self.down.get(tuple(sorted(tau))) == tuple(sorted(sigma))

    def __eq__(self, other):
        return isinstance(other, Matching) and self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return "Matching([" + ", ".join(f"{t}->{s}" for t, s in self.edges) + "])"

    def sort_key(self):
        return tuple(edge_key(e) for e in self.edges)

    def matched(self, face: Face) -> bool:
        return face in self.down or face in self.up

    def union(self, edges: Iterable[Edge]) -> Matching:
        return Matching(list(self.edges) + list(edges))

    def to_json(self) -> list[dict[str, list[int]]]:
        return [{"from": list(t), "to": list(s)} for t, s in self.edges]

    @classmethod
    def from_json(cls, data) -> Matching:
        return cls((e["from"], e["to"]) for e in data)


def homogeneous_pairs(taylor: LabeledComplex) -> list[HomogeneousPair]:
    """All codimension-one pairs of non-empty faces with equal labels, sorted."""
    out = []
    for tau in taylor.faces:
        if len(tau) < 2:
            continue
        lab = taylor.labels[tau]
        for _, sigma in facets_of(tau):
            if taylor.labels[sigma] == lab:
                out.append(HomogeneousPair(sigma, tau))
    return sorted(out, key=lambda p: edge_key(p.edge))


def satisfies_minimality(taylor: LabeledComplex, pair: HomogeneousPair) -> bool:
    """No non-empty A in sigma keeps the labels of sigma - A and tau - A equal."""
    sigma, tau = pair.sigma, pair.tau
    for k in range(1, len(sigma) + 1):
        for a in itertools.combinations(sigma, k):
            s = tuple(v for v in sigma if v not in a)
            t = tuple(v for v in tau if v not in a)
            if taylor.label(s) == taylor.label(t):
                return False
    return True


def minimal_homogeneous_pairs(taylor: LabeledComplex) -> list[HomogeneousPair]:
    """Minimal elements of the homogeneous pairs.

    Also confirms that every homogeneous pair is a minimal one extended by a set
    of vertices outside its larger face; a failure raises AssertionError.
    """
    pairs = homogeneous_pairs(taylor)
    minimal = [p for p in pairs if satisfies_minimality(taylor, p)]
    for p in pairs:
        if not any(
            set(m.sigma) <= set(p.sigma)
            and set(m.tau) <= set(p.tau)
            and set(p.sigma) - set(m.sigma) == set(p.tau) - set(m.tau)
            and not (set(p.sigma) - set(m.sigma)) & set(m.tau)
            for m in minimal
        ):
            raise AssertionError(f"homogeneous pair {p} is not generated by a minimal pair")
    return minimal


def validate_matching(taylor: LabeledComplex, matching: Matching):
    for tau, sigma in matching.edges:
        if tau not in taylor.faces or sigma not in taylor.faces:
            raise MatchingError(f"edge {tau}->{sigma} uses a face outside the complex")
        if len(tau) != len(sigma) + 1 or not set(sigma) < set(tau):
            raise MatchingError(f"edge {tau}->{sigma} is not a cover pair")
        if taylor.labels[tau] != taylor.labels[sigma]:
            raise MatchingError(f"edge {tau}->{sigma} is not homogeneous")


def _successors(taylor: LabeledComplex, matching: Matching, face: Face) -> Iterator[Face]:
    partner = matching.down.get(face)
    for _, sub in facets_of(face):
        if sub and sub != partner:
            yield sub
    up = matching.up.get(face)
    if up is not None:
        yield up


@dataclass(frozen=True)
class AcyclicityResult:
    acyclic: bool
    cycle: tuple[Face, ...] = ()

    def __bool__(self):
        return self.acyclic


def is_acyclic(taylor: LabeledComplex, matching: Matching) -> AcyclicityResult:
    """Cycle detection on the modified face graph; a cycle is returned closed (first == last)."""
    validate_matching(taylor, matching)
    white, grey, black = 0, 1, 2
    color = dict.fromkeys(taylor.faces, white)
    for root in taylor.sorted_faces():
        if color[root] != white:
            continue
        color[root] = grey
        path = [root]
        stack = [_successors(taylor, matching, root)]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                color[path.pop()] = black
                stack.pop()
                continue
            if color[nxt] == grey:
                i = path.index(nxt)
                return AcyclicityResult(False, tuple(path[i:]) + (nxt,))
            if color[nxt] == white:
                color[nxt] = grey
                path.append(nxt)
                stack.append(_successors(taylor, matching, nxt))
    return AcyclicityResult(True)


def _closes_cycle(down: dict[Face, Face], up: dict[Face, Face], tau: Face, sigma: Face) -> bool:
    """Would matching tau -> sigma on top of the acyclic ``down``/``up`` create a cycle?

    Equivalent to reaching sigma from tau in the current graph; such a path
    alternates between the two levels of tau and sigma.
    """
    seen = {tau}
    stack = [tau]
    while stack:
        t = stack.pop()
        skip = sigma if t == tau else down.get(t)
        for _, phi in facets_of(t):
            if phi == skip:
                continue
            if phi == sigma:
                return True
            t2 = up.get(phi)
            if t2 is not None and t2 not in seen:
                seen.add(t2)
                stack.append(t2)
    return False


def _class_matchings(pairs: list[HomogeneousPair], limit: int) -> tuple[list[list[Edge]], bool]:
    """Inclusion-maximal acyclic matchings among pairs sharing a single label.

    Backtracking in the given order.  A pair that is skipped while still
    addable must be blocked by the time the leaf is reached; branches where no
    remaining pair could block it are cut.
    """
    n = len(pairs)
    faces_of = [(p.tau, p.sigma) for p in pairs]
    # blockers: pairs sharing a face (conflict) or on the same level (possible cycle)
    last_blocker = []
    for i, p in enumerate(pairs):
        last = -1
        for j, q in enumerate(pairs):
            if j != i and (len(q.tau) == len(p.tau) or set(faces_of[i]) & set(faces_of[j])):
                last = j
        last_blocker.append(last)

    down: dict[Face, Face] = {}
    up: dict[Face, Face] = {}
    chosen: list[Edge] = []
    results: list[list[Edge]] = []
    truncated = False

    def addable(i):
        tau, sigma = faces_of[i]
        if tau in down or tau in up or sigma in down or sigma in up:
            return False
        return not _closes_cycle(down, up, tau, sigma)

    def rec(i, skipped):
        nonlocal truncated
        if truncated:
            return
        live = [j for j in skipped if addable(j)]
        if any(last_blocker[j] < i for j in live):
            return
        if i == n:
            if not live:
                if len(results) >= limit:
                    truncated = True
                    return
                results.append(list(chosen))
            return
        if addable(i):
            tau, sigma = faces_of[i]
            down[tau], up[sigma] = sigma, tau
            chosen.append((tau, sigma))
            rec(i + 1, live)
            chosen.pop()
            del down[tau], up[sigma]
            rec(i + 1, live + [i])
        else:
            rec(i + 1, live)

    rec(0, [])
    return results, truncated


@dataclass
class Enumeration:
    """Maximal matchings in canonical order; ``truncated`` is set when the limit cut the list."""

    matchings: list[Matching] = field(default_factory=list)
    truncated: bool = False

    def __iter__(self):
        return iter(self.matchings)

    def __len__(self):
        return len(self.matchings)

    def __getitem__(self, i):
        return self.matchings[i]


def _matchings_by_label(taylor: LabeledComplex, limit: int, guard: int) -> tuple[list[list[list[Edge]]], bool]:
    pairs = homogeneous_pairs(taylor)
    check_guard("max-pairs", len(pairs), guard)
    by_label: dict[Monomial, list[HomogeneousPair]] = defaultdict(list)
    for p in pairs:
        by_label[taylor.labels[p.tau]].append(p)
    truncated = False
    per_class = []
    for lab in sorted(by_label, key=lambda m: (m.degree, m.exponents)):
        found, cut = _class_matchings(by_label[lab], limit)
        truncated |= cut
        per_class.append(found)
    return per_class, truncated


def iter_maximal_matchings(
    taylor: LabeledComplex,
    class_limit: int = DEFAULT_ENUM_LIMIT,
    guard: int = DEFAULT_PAIR_GUARD,
) -> Iterator[Matching]:
    """Lazily yield maximal homogeneous acyclic matchings (product order, not canonical)."""
    per_class, _ = _matchings_by_label(taylor, class_limit, guard)
    for combo in itertools.product(*per_class):
        yield Matching(e for part in combo for e in part)


def count_maximal_matchings(taylor: LabeledComplex, guard: int = DEFAULT_PAIR_GUARD) -> int:
    per_class, _ = _matchings_by_label(taylor, DEFAULT_ENUM_LIMIT, guard)
    return math.prod(len(c) for c in per_class)


def enumerate_maximal_matchings(
    taylor: LabeledComplex,
    limit: int = DEFAULT_ENUM_LIMIT,
    guard: int = DEFAULT_PAIR_GUARD,
) -> Enumeration:
    """All inclusion-maximal homogeneous acyclic matchings, sorted canonically.

    Conflicts and cycles never mix labels, so the search runs per label and
    the results are combined by Cartesian product.  Past ``limit`` results the
    list is cut (first ``limit`` in product order, then sorted) and flagged.
    """
    per_class, truncated = _matchings_by_label(taylor, limit, guard)
    matchings = []
    for combo in itertools.product(*per_class):
        if len(matchings) >= limit:
            truncated = True
            break
        matchings.append(Matching(e for part in combo for e in part))
    matchings.sort(key=Matching.sort_key)
    return Enumeration(matchings, truncated)


def is_maximal(taylor: LabeledComplex, matching: Matching) -> bool:
    """Can no homogeneous pair be added while keeping the matching acyclic?"""
    if not is_acyclic(taylor, matching):
        return False
    for p in homogeneous_pairs(taylor):
        if matching.matched(p.tau) or matching.matched(p.sigma):
            continue
        if not _closes_cycle(matching.down, matching.up, p.tau, p.sigma):
            return False
    return True


@dataclass(frozen=True, eq=False)
class MorseComplex:
    """Critical cells of a homogeneous acyclic matching with their cover relation.

    ``covers`` holds (sigma, tau) for critical cells one dimension apart joined
    by a gradient path; ``incidence`` carries the signed path count (possibly 0).
    """

    taylor: LabeledComplex
    matching: Matching
    cells_: tuple[Face, ...]
    covers: frozenset[tuple[Face, Face]]
    incidence: dict[tuple[Face, Face], int]
    simplicial: dict[Face, bool]

    @property
    def dim(self) -> int:
        return max((len(c) for c in self.cells_), default=0) - 1

    def cells(self, d: int) -> list[Face]:
        if d == -1:
            return [()]
        return [c for c in self.cells_ if len(c) == d + 1]

    def __contains__(self, cell):
        return tuple(sorted(cell)) in self._cellset

    @cached_property
    def _cellset(self) -> frozenset[Face]:
        return frozenset(self.cells_)

    def label(self, cell: Face) -> Monomial:
        return self.taylor.label(cell)

    def cover_pairs(self) -> list[tuple[Face, Face]]:
        return sorted(self.covers, key=lambda p: (face_key(p[1]), face_key(p[0])))

    def facets(self, cell: Face) -> list[Face]:
        return sorted((s for s, t in self.covers if t == cell), key=face_key)

    def chain(self) -> CellChain:
        cells = {d: self.cells(d) for d in range(-1, self.dim + 1)}
        inc = dict(self.incidence)
        for v in self.cells(0):
            inc[((), v)] = 1
        return CellChain(cells, inc)

    def boundary(self, d: int) -> chain.BoundaryMatrix:
        return self.chain().boundary(d)

    def fvector(self) -> tuple[int, ...]:
        return morse_fvector(self)

    def strand(self, m: Monomial) -> CellChain:
        """Subcomplex of cells whose label divides m."""
        return self.chain().restrict(lambda c: divides(self.label(c), m))

    def lower_set(self, cell: Face) -> frozenset[Face]:
        """The cell and everything below it in the cover order (empty cell excluded)."""
        below = self._below
        out = {cell}
        stack = [cell]
        while stack:
            for s in below.get(stack.pop(), ()):
                if s not in out:
                    out.add(s)
                    stack.append(s)
        return frozenset(out)

    @cached_property
    def _below(self) -> dict[Face, list[Face]]:
        out = defaultdict(list)
        for s, t in self.covers:
            out[t].append(s)
        return out

    def vertex_support(self, cell: Face) -> Face:
        return tuple(sorted(c[0] for c in self.lower_set(cell) if len(c) == 1))

    def to_json(self) -> dict[str, Any]:
        return {
            "generators": [str(g) for g in self.taylor.ideal.generators],
            "n": self.taylor.ideal.n,
            "matching": self.matching.to_json(),
            "cells": [
                {
                    "vertices": list(c),
                    "label": str(self.label(c)),
                    "simplicial": self.simplicial[c],
                    "boundary": [
                        {"cell": list(s), "coefficient": self.incidence[(s, c)]} for s in self.facets(c)
                    ],
                }
                for c in self.cells_
            ],
        }


def _gradient_flow(taylor: LabeledComplex, matching: Matching, critical: frozenset[Face], top: Face, memo: dict):
    """Signed gradient-path counts from ``top`` to critical facets one level down.

    Zero-sum entries are kept: presence in the result means a path exists.
    """
    if top in memo:
        return memo[top]
    out: dict[Face, int] = {}
    skip = matching.down.get(top)
    for k, phi in facets_of(top):
        if not phi or phi == skip:
            continue
        s = -1 if k % 2 else 1
        if phi in critical:
            out[phi] = out.get(phi, 0) + s
            continue
        t2 = matching.up.get(phi)
        if t2 is None:
            continue
        w = -simplicial_sign(t2, phi)
        for c, v in _gradient_flow(taylor, matching, critical, t2, memo).items():
            out[c] = out.get(c, 0) + s * w * v
    memo[top] = out
    return out


def morse_complex(taylor: LabeledComplex, matching: Matching) -> MorseComplex:
    acyc = is_acyclic(taylor, matching)
    if not acyc:
        raise MatchingError(f"matching is not acyclic; cycle {acyc.cycle}")
    critical = frozenset(f for f in taylor.faces if not matching.matched(f))
    cells = tuple(sorted(critical, key=face_key))
    memo: dict[Face, dict[Face, int]] = {}
    covers = set()
    incidence = {}
    for tau in cells:
        if len(tau) < 2:
            continue
        for sigma, coef in _gradient_flow(taylor, matching, critical, tau, memo).items():
            covers.add((sigma, tau))
            incidence[(sigma, tau)] = coef
    simplicial = {}
    for c in cells:
        simplicial[c] = all(
            sub in critical for k in range(1, len(c)) for sub in itertools.combinations(c, k)
        )
    return MorseComplex(taylor, matching, cells, frozenset(covers), incidence, simplicial)


def morse_fvector(morse: MorseComplex) -> tuple[int, ...]:
    """Cell counts from dimension -1 (the empty cell) upward."""
    return (1,) + tuple(len(morse.cells(d)) for d in range(0, morse.dim + 1))


def inherited_cover_violations(morse: MorseComplex) -> list[tuple[Edge, Face, Face]]:
    """Failures of: tau -> sigma matched, omega critical of tau's dimension containing
    sigma, then every critical facet gamma of tau is covered by omega."""
    critical = morse._cellset
    bad = []
    for tau, sigma in morse.matching.edges:
        gammas = [g for _, g in facets_of(tau) if g in critical]
        for omega in morse.cells(len(tau) - 1):
            if set(sigma) < set(omega):
                for g in gammas:
                    if (g, omega) not in morse.covers:
                        bad.append(((tau, sigma), omega, g))
    return bad


def simplex_cover_violations(morse: MorseComplex) -> list[Face]:
    """Cells with every subface critical whose covers are not exactly their facets."""
    bad = []
    for c in morse.cells_:
        if len(c) < 2 or not morse.simplicial[c]:
            continue
        if set(morse.facets(c)) != {f for _, f in facets_of(c)}:
            bad.append(c)
    return bad


def boundary_squared_defects(complex) -> list[int]:
    """Dimensions d where boundary(d) @ boundary(d + 1) is nonzero."""
    bad = []
    for d in range(0, complex.dim):
        if complex.boundary(d).compose(complex.boundary(d + 1)):
            bad.append(d)
    return bad


def strand_defects(morse: MorseComplex) -> list[tuple[Monomial, tuple[int, ...]]]:
    """Multidegrees m whose strand (cells with label dividing m) is not acyclic.

    Empty exactly when the Morse complex supports a resolution of the ideal.
    """
    bad = []
    base = morse.chain()
    for m in sorted(set(morse.taylor.labels.values()), key=lambda m: (m.degree, m.exponents)):
        prof = chain.reduced_homology(base.restrict(lambda c, m=m: divides(morse.label(c), m)))
        if not prof.is_acyclic():
            bad.append((m, prof.ranks))
    return bad


def matching_graph_dot(taylor: LabeledComplex, matching: Matching, name: str = "matching") -> str:
    """DOT digraph of the modified face graph; matched edges point up and are highlighted."""
    def node(f):
        return '"' + ",".join(map(str, f)) + '"'

    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for f in taylor.sorted_faces():
        style = "" if matching.matched(f) else ", style=filled, fillcolor=lightgrey"
        lines.append(f'  {node(f)} [label="{{{",".join(map(str, f))}}}\\n{taylor.labels[f]}"{style}];')
    for tau in taylor.sorted_faces():
        for _, sigma in facets_of(tau):
            if not sigma:
                continue
            if matching.down.get(tau) == sigma:
                lines.append(f"  {node(sigma)} -> {node(tau)} [color=red, penwidth=2];")
            else:
                lines.append(f"  {node(tau)} -> {node(sigma)} [color=gray50];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def morse_hasse_dot(morse: MorseComplex, name: str = "morse") -> str:
    """DOT Hasse diagram of the Morse complex; non-simplicial cells are outlined in red."""
    def node(f):
        return '"' + ",".join(map(str, f)) + '"'

    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for c in morse.cells_:
        extra = "" if morse.simplicial[c] else ", color=red"
        lines.append(f'  {node(c)} [label="{{{",".join(map(str, c))}}}_M\\n{morse.label(c)}"{extra}];')
    for s, t in morse.cover_pairs():
        lines.append(f'  {node(s)} -> {node(t)} [arrowhead=none, label="{morse.incidence[(s, t)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ExistsResult:
    exists: bool
    witness: Matching | None
    checked: int
    truncated: bool

    def __bool__(self):
        return self.exists


def exists_polyhedral_maximal_matching(
    ideal: MonomialIdeal,
    guard: int = DEFAULT_EXISTS_GUARD,
    limit: int = DEFAULT_ENUM_LIMIT,
) -> ExistsResult:
    """Search the maximal matchings for one whose Morse complex is polyhedral.

    Matchings are visited lazily in per-label product order and the search
    stops at the first polyhedral one.
    """
    from .polyhedral import check_polyhedral

    check_guard("max-gens", ideal.r, guard)
    taylor = taylor_complex(ideal)
    per_class, truncated = _matchings_by_label(taylor, limit, DEFAULT_PAIR_GUARD)
    checked = 0
    for combo in itertools.product(*per_class):
        m = Matching(e for part in combo for e in part)
        checked += 1
        if check_polyhedral(morse_complex(taylor, m)).status == "polyhedral":
            return ExistsResult(True, m, checked, truncated)
    return ExistsResult(False, None, checked, truncated)
