"""Face-poset tests for whether a Morse complex is a polyhedral cell complex."""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from math import comb
from typing import Any, Sequence

from .ideals import Face
from .morse import MorseComplex
from .taylor import face_key

__all__ = [
    "AttachmentCase",
    "CandidateCheck",
    "MeetResult",
    "PolyhedralVerdict",
    "candidate_3polytope_check",
    "check_polyhedral",
    "h_vector",
    "is_simplex_cell",
    "meet_check",
    "scarf_attachment_cases",
]


@dataclass(frozen=True)
class MeetResult:
    kind: str  # "face" | "multiple_maximal" | "empty"
    cells: tuple[Face, ...] = ()

    @property
    def face(self) -> Face | None:
        return self.cells[0] if self.kind == "face" else None


def _canon(cell) -> Face:
    return tuple(sorted(cell))


def maximal_elements(morse: MorseComplex, cells) -> tuple[Face, ...]:
    cells = set(cells)
    dominated = set()
    for c in cells:
        dominated |= morse.lower_set(c) - {c}
    return tuple(sorted(cells - dominated, key=face_key))


def meet_check(morse: MorseComplex, a, b) -> MeetResult:
    a, b = _canon(a), _canon(b)
    for c in (a, b):
        if c not in morse:
            raise KeyError(f"{c} is not a cell of the Morse complex")
    common = morse.lower_set(a) & morse.lower_set(b)
    if not common:
        return MeetResult("empty")
    top = maximal_elements(morse, common)
    if len(top) == 1:
        return MeetResult("face", top)
    return MeetResult("multiple_maximal", top)


def is_simplex_cell(morse: MorseComplex, cell) -> bool:
    """Is the cell's lower set the Boolean lattice on its vertices?"""
    cell = _canon(cell)
    lower = morse.lower_set(cell)
    support = {c: morse.vertex_support(c) for c in lower}
    verts = support[cell]
    if len(lower) != 2 ** len(verts) - 1:
        return False
    if len(set(support.values())) != len(lower):
        return False
    for c, s in support.items():
        if len(s) != len(c):
            return False
    # order-preserving bijection onto subsets; covers must be exactly the facets of supports
    for c in lower:
        below = {support[s] for s in morse.facets(c)}
        expect = {tuple(v for v in support[c] if v != x) for x in support[c]} if len(c) > 1 else set()
        if below != expect:
            return False
    return True


def h_vector(fvec: Sequence[int]) -> tuple[int, ...]:
    """h-vector of a face vector (f_{-1}, f_0, ..., f_{d-1})."""
    d = len(fvec) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * fvec[i] for i in range(k + 1)) for k in range(d + 1)
    )


@dataclass(frozen=True)
class CandidateCheck:
    ok: bool
    fvector: tuple[int, int, int]
    expected: tuple[int, int]  # (f1, f2) forced by f0
    h_vector: tuple[int, ...]  # of the boundary 2-sphere (1, f0, f1, f2)
    closed_h_vector: tuple[int, ...]  # of (1, f0, f1, f2, 1), the cell counted as a top face
    reasons: tuple[str, ...] = ()

    def __bool__(self):
        return self.ok


def candidate_3polytope_check(f: Sequence[int]) -> CandidateCheck:
    """Can ``f`` be the boundary f-vector of a simplicial 3-polytope?

    Accepts (f0, f1, f2), (1, f0, f1, f2) or (1, f0, f1, f2, 1).  Requires
    f1 = 3 f0 - 6 and f2 = 2 f0 - 4 and a non-negative, symmetric boundary h-vector.
    """
    f = tuple(int(x) for x in f)
    if len(f) == 5 and f[0] == 1 and f[4] == 1:
        f = f[1:4]
    elif len(f) == 4 and f[0] == 1:
        f = f[1:]
    if len(f) != 3 or any(x < 0 for x in f):
        raise ValueError(f"malformed f-vector {f}")
    f0, f1, f2 = f
    expected = (3 * f0 - 6, 2 * f0 - 4)
    h = h_vector((1, f0, f1, f2))
    closed = h_vector((1, f0, f1, f2, 1))
    reasons = []
    if f0 < 4:
        reasons.append(f"a 3-polytope needs at least 4 vertices, got {f0}")
    if (f1, f2) != expected:
        reasons.append(f"Steinitz relations need (f1, f2) = {expected} for f0 = {f0}, got ({f1}, {f2})")
    if any(x < 0 for x in h):
        reasons.append(f"boundary h-vector {h} has negative entries")
    if h != h[::-1]:
        reasons.append(f"boundary h-vector {h} violates Dehn-Sommerville symmetry")
    # negative for every f0 > 4, so it only corroborates an existing rejection
    if reasons and any(x < 0 for x in closed):
        reasons.append(f"h-vector {closed} of the face vector (1, {f0}, {f1}, {f2}, 1) has negative entries")
    return CandidateCheck(not reasons, f, expected, h, closed, tuple(reasons))


@dataclass(frozen=True)
class MeetWitness:
    cell_a: Face
    cell_b: Face
    maximal_common: tuple[Face, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "cellA": list(self.cell_a),
            "cellB": list(self.cell_b),
            "maximal_common": [list(c) for c in self.maximal_common],
        }


@dataclass(frozen=True)
class PolyhedralVerdict:
    status: str  # "polyhedral" | "not_polyhedral" | "inconclusive"
    witnesses: tuple[MeetWitness, ...] = ()
    irregular: tuple[tuple[Face, str], ...] = ()
    uncertified: tuple[Face, ...] = ()

    def witness_for(self, a, b) -> MeetWitness | None:
        key = {_canon(a), _canon(b)}
        return next((w for w in self.witnesses if {w.cell_a, w.cell_b} == key), None)

    def to_json(self) -> dict[str, Any]:
        return {
            "status": self.status,
            "witnesses": [w.to_json() for w in self.witnesses],
            "irregular": [{"cell": list(c), "reason": why} for c, why in self.irregular],
            "uncertified": [list(c) for c in self.uncertified],
        }


def polygon_problem(morse: MorseComplex, cell: Face) -> str | None:
    """Why the 2-cell's boundary is not a single cycle of length >= 3, or None."""
    edges = morse.facets(cell)
    degree = Counter()
    adj = defaultdict(set)
    for e in edges:
        ends = morse.facets(e)
        if len(ends) != 2:
            return f"edge {e} has {len(ends)} end points"
        u, v = ends
        degree[u] += 1
        degree[v] += 1
        adj[u].add(v)
        adj[v].add(u)
    if len(edges) < 3:
        return f"boundary has only {len(edges)} edges"
    if any(k != 2 for k in degree.values()):
        return "boundary is not a cycle (vertex of degree != 2)"
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(degree) or len(degree) != len(edges):
        return "boundary splits into several cycles"
    return None


def sphere_problem(morse: MorseComplex, cell: Face) -> tuple[str | None, tuple[int, int, int], bool]:
    """Check the boundary of a 3-cell is a polygonal 2-sphere.

    Returns (problem or None, boundary f-vector, whether all 2-faces are triangles).
    """
    lower = morse.lower_set(cell) - {cell}
    by_dim = defaultdict(list)
    for c in lower:
        by_dim[len(c) - 1].append(c)
    verts, edges, faces = by_dim[0], by_dim[1], by_dim[2]
    fv = (len(verts), len(edges), len(faces))
    all_triangles = all(len(morse.facets(t)) == 3 for t in faces)
    for t in faces:
        if not is_simplex_cell(morse, t):
            why = polygon_problem(morse, t)
            if why:
                return f"boundary 2-cell {t}: {why}", fv, all_triangles
    edge_use = Counter(e for t in faces for e in morse.facets(t))
    for e in edges:
        if edge_use[e] != 2:
            return f"boundary edge {e} lies in {edge_use[e]} 2-cells", fv, all_triangles
    if fv[0] - fv[1] + fv[2] != 2:
        return f"boundary Euler characteristic {fv[0] - fv[1] + fv[2]} != 2", fv, all_triangles
    # each vertex link must be one cycle
    for v in verts:
        link = defaultdict(set)
        for t in faces:
            inc = [e for e in morse.facets(t) if v in morse.facets(e)]
            if not inc:
                continue
            if len(inc) != 2:
                return f"vertex {v} meets 2-cell {t} in {len(inc)} edges", fv, all_triangles
            a, b = inc
            link[a].add(b)
            link[b].add(a)
        if not link or any(len(n) != 2 for n in link.values()):
            return f"link of vertex {v} is not a cycle", fv, all_triangles
        start = next(iter(link))
        seen = {start}
        stack = [start]
        while stack:
            for w in link[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(link):
            return f"link of vertex {v} is disconnected", fv, all_triangles
    return None, fv, all_triangles


def check_polyhedral(morse: MorseComplex) -> PolyhedralVerdict:
    cells = list(morse.cells_)
    lower = {c: morse.lower_set(c) for c in cells}
    witnesses = []
    for i, a in enumerate(cells):
        for b in cells[i + 1 :]:
            if a in lower[b] or b in lower[a]:
                continue
            common = lower[a] & lower[b]
            if len(common) < 2:
                continue
            top = maximal_elements(morse, common)
            if len(top) > 1:
                witnesses.append(MeetWitness(a, b, top))

    irregular = []
    uncertified = []
    for c in cells:
        if is_simplex_cell(morse, c):
            continue
        d = len(c) - 1
        if d <= 1:
            irregular.append((c, "non-simplex cell of dimension <= 1"))
        elif d == 2:
            why = polygon_problem(morse, c)
            if why:
                irregular.append((c, why))
        elif d == 3:
            why, fv, triangles = sphere_problem(morse, c)
            if why:
                irregular.append((c, why))
            elif triangles:
                res = candidate_3polytope_check(fv)
                if not res.ok:
                    irregular.append((c, "; ".join(res.reasons)))
        else:
            uncertified.append(c)

    if witnesses or irregular:
        status = "not_polyhedral"
    elif uncertified:
        status = "inconclusive"
    else:
        status = "polyhedral"
    return PolyhedralVerdict(status, tuple(witnesses), tuple(irregular), tuple(uncertified))


@dataclass(frozen=True)
class AttachmentCase:
    vertices: Face
    boundary_fvector: tuple[int, int, int]
    missing: tuple[Face, ...]  # boundary faces a simplex would need but the Scarf complex lacks
    check: CandidateCheck | None
    feasible: bool


def scarf_attachment_cases(scarf, label) -> list[AttachmentCase]:
    """Can one 3-polytope labeled ``label`` be glued onto ``scarf`` as a polyhedral complex?

    Each candidate vertex set V (|V| >= 4, lcm over V equal to ``label``) is
    tested under the requirement that the new cell meets the simplicial Scarf
    complex in its faces: the boundary is then the Scarf complex restricted
    to V, and must be a simplicial 3-polytope boundary.
    """
    ideal = scarf.ideal
    verts = [i for i, g in enumerate(ideal.generators, start=1) if g.divides(label)]
    out = []
    for k in range(4, len(verts) + 1):
        for vs in itertools.combinations(verts, k):
            if ideal.label(vs) != label:
                continue
            if k == 4:
                need = list(itertools.combinations(vs, 3))
                missing = tuple(t for t in need if t not in scarf.faces)
                fv = (4, 6, 4)
                out.append(AttachmentCase(vs, fv, missing, None, not missing))
                continue
            sub = [f for f in scarf.faces if set(f) <= set(vs)]
            cnt = Counter(len(f) for f in sub)
            fv = (cnt[1], cnt[2], cnt[3])
            res = candidate_3polytope_check(fv)
            out.append(AttachmentCase(vs, fv, (), res, res.ok))
    return out
