import pytest
from hypothesis import given, settings

import oracles
from morse_resolve import golden
from morse_resolve.monomials import parse_monomial
from morse_resolve.morse import Matching, enumerate_maximal_matchings, morse_complex
from morse_resolve.polyhedral import (
    candidate_3polytope_check,
    check_polyhedral,
    h_vector,
    is_simplex_cell,
    meet_check,
    polygon_problem,
    scarf_attachment_cases,
)
from morse_resolve.taylor import scarf_complex, taylor_complex
from strategies import ideals


@pytest.fixture(scope="module")
def six_morse(six_taylor):
    return {name: morse_complex(six_taylor, m) for name, m in golden.SIX_MATCHINGS.items()}


def _closure(x, cell):
    below = {}
    for s, t in x.covers:
        below.setdefault(t, []).append(s)
    seen, stack = {cell}, [cell]
    while stack:
        for s in below.get(stack.pop(), ()):
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return seen


def test_meet_witnesses_from_example(six_morse):
    for name in ("M2", "M4"):
        res = meet_check(six_morse[name], (1, 2, 3, 5), (1, 4, 5, 6))
        assert res.kind == "multiple_maximal"
        assert set(res.cells) == {(1, 5), (1, 4)}
    for name in ("M1", "M3"):
        res = meet_check(six_morse[name], (2, 3, 4, 5), (1, 3, 4, 6))
        assert res.kind == "multiple_maximal"
        assert set(res.cells) == {(3, 4), (1, 4)}


def test_meet_reflexive_and_empty(six_morse):
    x = six_morse["M1"]
    for c in x.cells_:
        assert meet_check(x, c, c).face == c
    assert meet_check(x, (1,), (2,)).kind == "empty"
    with pytest.raises(KeyError):
        meet_check(x, (1, 2, 3, 5), (1,))  # {1,2,3,5} is matched under M1


def test_simplex_cells(six, six_morse, xyz_taylor):
    scarf = scarf_complex(six).faces
    for x in six_morse.values():
        for c in scarf:
            assert is_simplex_cell(x, c)
    x = morse_complex(xyz_taylor, golden.XYZ_M1)
    assert not is_simplex_cell(x, (4, 5, 6))
    assert is_simplex_cell(x, (3,))


def test_h_vector():
    assert h_vector((1, 4, 6, 4)) == (1, 1, 1, 1)
    assert h_vector((1, 5, 10, 8)) == (1, 2, 3, 2)
    assert h_vector((1, 5, 10, 8, 1)) == (1, 1, 1, -1, -1)


def test_candidate_check_five_vertices():
    res = candidate_3polytope_check((5, 10, 8))
    assert not res
    assert res.expected == (9, 6)
    assert any("Steinitz" in r for r in res.reasons)
    assert any(x < 0 for x in res.closed_h_vector)
    assert candidate_3polytope_check((1, 5, 10, 8, 1)) == res
    assert candidate_3polytope_check((1, 5, 9, 6))
    assert candidate_3polytope_check((4, 6, 4))


def test_candidate_check_malformed():
    with pytest.raises(ValueError):
        candidate_3polytope_check((4, 6))
    with pytest.raises(ValueError):
        candidate_3polytope_check((4, -6, 4))


@pytest.mark.parametrize("f0", range(4, 12))
def test_steinitz_family_accepted(f0):
    res = candidate_3polytope_check((f0, 3 * f0 - 6, 2 * f0 - 4))
    assert res.ok and res.h_vector == res.h_vector[::-1]


def test_six_verdicts(six_morse):
    for name, x in six_morse.items():
        v = check_polyhedral(x)
        assert v.status == "not_polyhedral", name
        extra = golden.TAU if golden.TAU in x else golden.TAU_PRIME
        a, b, want = golden.SIX_WITNESSES[extra]
        assert set(v.witness_for(a, b).maximal_common) == want


def test_witnesses_are_sound(six_morse):
    for x in six_morse.values():
        for w in check_polyhedral(x).witnesses:
            common = _closure(x, w.cell_a) & _closure(x, w.cell_b)
            tops = [c for c in common if not any(c != d and c in _closure(x, d) for d in common)]
            assert len(tops) >= 2
            assert set(tops) == set(w.maximal_common)


def test_xyz_verdicts(xyz_taylor):
    assert check_polyhedral(morse_complex(xyz_taylor, golden.XYZ_M1)).status == "polyhedral"
    assert check_polyhedral(morse_complex(xyz_taylor, Matching())).status == "polyhedral"


def test_square_is_single_cycle(xyz_taylor):
    x = morse_complex(xyz_taylor, golden.XYZ_M1)
    assert polygon_problem(x, (4, 5, 6)) is None


def test_verdict_json(six_morse):
    data = check_polyhedral(six_morse["M2"]).to_json()
    assert data["status"] == "not_polyhedral"
    assert {"cellA": [1, 2, 3, 5], "cellB": [1, 4, 5, 6], "maximal_common": [[1, 4], [1, 5]]} in data["witnesses"]


def test_attachment_cases(six):
    label = parse_monomial(golden.SIX_EXTRA_LABEL, 12)
    cases = scarf_attachment_cases(scarf_complex(six), label)
    assert [c.vertices for c in cases] == [(1, 2, 3, 5), (2, 3, 4, 5), (1, 2, 3, 4, 5)]
    assert cases[0].missing == ((1, 2, 3),)
    assert cases[1].missing == ((2, 4, 5),)
    assert cases[2].boundary_fvector == (5, 10, 8)
    assert not any(c.feasible for c in cases)


@settings(max_examples=40, deadline=None)
@given(ideals(max_gens=5))
def test_simplicial_outputs_match_oracle(ideal):
    tc = taylor_complex(ideal)
    for m in enumerate_maximal_matchings(tc, limit=6):
        x = morse_complex(tc, m)
        v = check_polyhedral(x)
        for w in v.witnesses:
            assert len(w.maximal_common) >= 2
        if all(x.simplicial.values()):
            expect = "polyhedral" if oracles.simplicial_polyhedral(x.cells_) else "not_polyhedral"
            assert v.status == expect
        for c in x.cells_:
            if len(c) == 3 and not is_simplex_cell(x, c) and polygon_problem(x, c) is None:
                edges = x.facets(c)
                verts = {v for e in edges for v in x.facets(e)}
                assert len(edges) == len(verts) >= 3
