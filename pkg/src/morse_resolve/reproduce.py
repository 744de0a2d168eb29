"""Golden checks: each claim recomputes a published value and compares exactly."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import golden
from .chain import reduced_homology
from .ideals import random_ideal
from .monomials import parse_monomial
from .morse import (
    boundary_squared_defects,
    enumerate_maximal_matchings,
    exists_polyhedral_maximal_matching,
    homogeneous_pairs,
    inherited_cover_violations,
    minimal_homogeneous_pairs,
    morse_complex,
    simplex_cover_violations,
    strand_defects,
)
from .polyhedral import candidate_3polytope_check, check_polyhedral, is_simplex_cell, scarf_attachment_cases
from .taylor import is_minimal_support, multigraded_betti, scarf_complex, taylor_complex, total_betti

RANDOM4_SEED = 20240401
RANDOM4_COUNT = 200
STRUCTURE_SEED = 20240402
STRUCTURE_COUNT = 100
STRUCTURE_ENUM_LIMIT = 12


@dataclass(frozen=True)
class ClaimResult:
    key: str
    title: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  [{self.key}] {self.title}: {self.detail}"


def _result(key, title, facts: list[tuple[str, object, object]]) -> ClaimResult:
    bad = [(what, got, want) for what, got, want in facts if got != want]
    if bad:
        detail = "; ".join(f"{what}: got {got!r}, expected {want!r}" for what, got, want in bad)
        return ClaimResult(key, title, False, detail)
    return ClaimResult(key, title, True, ", ".join(what for what, _, _ in facts))


def claim_xyz_betti() -> ClaimResult:
    b = total_betti(golden.xyz_squared())
    return _result("1", "(x,y,z)^2 Betti numbers", [("beta_1(I) = 8", b[1], 8), ("beta_2(I) = 3", b[2], 3)])


def claim_xyz_scarf() -> ClaimResult:
    sc = scarf_complex(golden.xyz_squared())
    return _result(
        "2",
        "(x,y,z)^2 Scarf complex",
        [
            ("f-vector (1,6,6)", sc.fvector(), (1, 6, 6)),
            ("facets form the outer 6-cycle", sorted(sc.facets()), golden.XYZ_HEXAGON),
            ("reduced H_1 rank 1, others 0", reduced_homology(sc).ranks, (0, 0, 1)),
        ],
    )


def claim_xyz_m1() -> ClaimResult:
    taylor = taylor_complex(golden.xyz_squared())
    x = morse_complex(taylor, golden.XYZ_M1)
    non_simplex = [c for c in x.cells_ if not is_simplex_cell(x, c)]
    return _result(
        "3",
        "(x,y,z)^2 Morse complex of M1",
        [
            ("f-vector (6,8,3)", x.fvector()[1:], (6, 8, 3)),
            ("single non-simplex cell {4,5,6}", non_simplex, [golden.XYZ_SQUARE_CELL]),
            ("its boundary edges", x.facets(golden.XYZ_SQUARE_CELL), golden.XYZ_SQUARE_BOUNDARY),
            ("verdict polyhedral", check_polyhedral(x).status, "polyhedral"),
            ("minimal", is_minimal_support(x).minimal, True),
        ],
    )


def claim_six_scarf() -> ClaimResult:
    sc = scarf_complex(golden.six_gen())
    return _result(
        "4",
        "six-generator Scarf complex",
        [
            ("facets", sorted(sc.facets()), sorted(golden.SIX_SCARF_FACETS)),
            ("f-vector (1,6,15,17,6)", sc.fvector(), golden.SIX_SCARF_FVECTOR),
            ("reduced H_2 rank 1, others 0", reduced_homology(sc).ranks, golden.SIX_SCARF_HOMOLOGY),
        ],
    )


def claim_six_betti() -> ClaimResult:
    ideal = golden.six_gen()
    graded = multigraded_betti(ideal)
    scarf_labels = set(scarf_complex(ideal).labels.values())
    extra = {k: v for k, v in graded.items() if k[1] not in scarf_labels}
    m = parse_monomial(golden.SIX_EXTRA_LABEL, ideal.n)
    return _result(
        "5",
        "six-generator Betti numbers",
        [
            ("total Betti of S/I (1,6,15,17,7)", (1,) + total_betti(ideal), golden.SIX_BETTI_SI),
            ("only non-Scarf multidegree x1...x11 at i=3 once", extra, {(3, m): 1}),
        ],
    )


def claim_six_minimal_pairs() -> ClaimResult:
    pairs = minimal_homogeneous_pairs(taylor_complex(golden.six_gen()))
    return _result(
        "6",
        "six-generator minimal homogeneous pairs",
        [("four minimal pairs", {(p.sigma, p.tau) for p in pairs}, set(golden.SIX_MINIMAL_PAIRS))],
    )


def _six_enumeration():
    taylor = taylor_complex(golden.six_gen())
    return taylor, enumerate_maximal_matchings(taylor)


def claim_six_matchings() -> ClaimResult:
    ideal = golden.six_gen()
    taylor, found = _six_enumeration()
    scarf = set(scarf_complex(ideal).faces)
    allowed = {frozenset(scarf | {golden.TAU}), frozenset(scarf | {golden.TAU_PRIME})}
    m0 = set(golden.SIX_M0)
    return _result(
        "7",
        "six-generator maximal matchings",
        [
            ("exactly 4, not truncated", (len(found), found.truncated), (4, False)),
            ("equal to M1..M4 in order", list(found), list(golden.SIX_MATCHINGS.values())),
            ("each contains M0", all(m0 <= set(m.edges) for m in found), True),
            ("each f-vector (6,15,17,7)", {morse_complex(taylor, m).fvector()[1:] for m in found}, {(6, 15, 17, 7)}),
            (
                "critical cells are Scarf plus {1,2,3,5} or {2,3,4,5}",
                all(frozenset(morse_complex(taylor, m).cells_) in allowed for m in found),
                True,
            ),
        ],
    )


def claim_six_not_polyhedral() -> ClaimResult:
    taylor, found = _six_enumeration()
    facts = []
    for name, m in zip(golden.SIX_MATCHINGS, found):
        x = morse_complex(taylor, m)
        verdict = check_polyhedral(x)
        extra = golden.TAU if golden.TAU in x else golden.TAU_PRIME
        a, b, want = golden.SIX_WITNESSES[extra]
        w = verdict.witness_for(a, b)
        facts.append((f"{name} not_polyhedral", verdict.status, "not_polyhedral"))
        facts.append((f"{name} witness {a} vs {b}", set(w.maximal_common) if w else None, want))
    return _result("8", "six-generator Morse complexes are not polyhedral", facts)


def claim_polytope_obstructions() -> ClaimResult:
    res = candidate_3polytope_check(golden.FIVE_VERTEX_FVECTOR)
    ideal = golden.six_gen()
    cases = scarf_attachment_cases(scarf_complex(ideal), parse_monomial(golden.SIX_EXTRA_LABEL, ideal.n))
    return _result(
        "9",
        "3-polytope obstructions for f-vector (5,10,8)",
        [
            ("rejected", res.ok, False),
            ("f0=5 forces (f1,f2)=(9,6)", res.expected, (9, 6)),
            ("Steinitz relations violated", any("Steinitz" in r for r in res.reasons), True),
            ("h-vector of (1,5,10,8,1) has negative entries", min(res.closed_h_vector) < 0, True),
            ("boundary h-vector is not symmetric", res.h_vector != res.h_vector[::-1], True),
            ("candidate vertex sets", [c.vertices for c in cases], [(1, 2, 3, 5), (2, 3, 4, 5), (1, 2, 3, 4, 5)]),
            ("missing Scarf triangles", [c.missing for c in cases[:2]], [((1, 2, 3),), ((2, 4, 5),)]),
            ("five-vertex boundary f-vector", cases[2].boundary_fvector, golden.FIVE_VERTEX_FVECTOR),
            ("no attachment feasible", [c.feasible for c in cases], [False, False, False]),
        ],
    )


def random_four_generator_ideals(seed: int = RANDOM4_SEED, count: int = RANDOM4_COUNT):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_ideal(4, rng.randint(2, 6), rng, max_exp=3)


def random_small_ideals(seed: int = STRUCTURE_SEED, count: int = STRUCTURE_COUNT):
    rng = random.Random(seed)
    for _ in range(count):
        r = rng.randint(1, 5)
        # two variables with exponents <= 3 allow at most 4 minimal generators
        n = rng.randint(1 if r == 1 else 2 if r <= 4 else 3, 5)
        yield random_ideal(r, n, rng, max_exp=3)


def claim_four_generators(seed: int = RANDOM4_SEED, count: int = RANDOM4_COUNT) -> ClaimResult:
    failures = []
    for ideal in random_four_generator_ideals(seed, count):
        res = exists_polyhedral_maximal_matching(ideal)
        if not res.exists:
            failures.append(str(ideal))
    return _result(
        "10",
        f"{count} random 4-generator ideals have a polyhedral maximal matching",
        [("ideals without one", failures, [])],
    )


def structure_failures(ideal, enum_limit: int = STRUCTURE_ENUM_LIMIT) -> list[str]:
    taylor = taylor_complex(ideal)
    scarf = set(scarf_complex(ideal).faces)
    out = []
    # a Scarf face in no homogeneous pair is critical for every matching, enumerated or not
    for p in homogeneous_pairs(taylor):
        if p.sigma in scarf or p.tau in scarf:
            out.append(f"{ideal}: Scarf face in homogeneous pair {p}")
    for m in enumerate_maximal_matchings(taylor, limit=enum_limit):
        x = morse_complex(taylor, m)
        tag = f"{ideal} {m!r}"
        if boundary_squared_defects(x):
            out.append(f"{tag}: boundary squared nonzero")
        if strand_defects(x):
            out.append(f"{tag}: strand not acyclic")
        if not scarf <= set(x.cells_):
            out.append(f"{tag}: Scarf face not critical")
        if inherited_cover_violations(x) or simplex_cover_violations(x):
            out.append(f"{tag}: cover inheritance violated")
    return out


def claim_structure(seed: int = STRUCTURE_SEED, count: int = STRUCTURE_COUNT) -> ClaimResult:
    failures = []
    for ideal in random_small_ideals(seed, count):
        failures.extend(structure_failures(ideal))
    return _result(
        "11",
        f"structural invariants on {count} random ideals with r <= 5",
        [("violations", failures, [])],
    )


CLAIMS: list[Callable[[], ClaimResult]] = [
    claim_xyz_betti,
    claim_xyz_scarf,
    claim_xyz_m1,
    claim_six_scarf,
    claim_six_betti,
    claim_six_minimal_pairs,
    claim_six_matchings,
    claim_six_not_polyhedral,
    claim_polytope_obstructions,
    claim_four_generators,
    claim_structure,
]


def run_all() -> list[ClaimResult]:
    return [c() for c in CLAIMS]
