from collections import Counter

import pytest
from hypothesis import given, settings

import oracles
from conftest import exponents
from morse_resolve import golden
from morse_resolve.errors import GuardError
from morse_resolve.ideals import minimalize
from morse_resolve.monomials import Monomial, parse_monomial
from morse_resolve.morse import morse_complex
from morse_resolve.taylor import (
    LabeledComplex,
    is_minimal_support,
    multigraded_betti,
    scarf_complex,
    taylor_complex,
    total_betti,
)
from strategies import ideals


def test_taylor_sizes(six, xyz):
    tc = taylor_complex(six)
    assert len(tc) == 63
    assert tc.label((1, 2, 3, 4, 5, 6)) == Monomial((1,) * 12)
    assert taylor_complex(xyz).fvector() == (1, 6, 15, 20, 15, 6, 1)


def test_single_generator():
    ideal = minimalize([Monomial((1, 2))])
    tc = taylor_complex(ideal)
    assert tc.fvector() == (1, 1)
    assert total_betti(ideal) == (1,)


def test_taylor_guard(six):
    with pytest.raises(GuardError):
        taylor_complex(six, guard=4)


def test_six_scarf(six):
    sc = scarf_complex(six)
    assert sorted(sc.facets()) == sorted(golden.SIX_SCARF_FACETS)
    assert sc.fvector() == (1, 6, 15, 17, 6)


def test_xyz_scarf_is_hexagon(xyz):
    sc = scarf_complex(xyz)
    assert sorted(sc.facets()) == golden.XYZ_HEXAGON
    assert sc.fvector() == (1, 6, 6)


def test_scarf_labels_unique(six, xyz):
    for ideal in (six, xyz):
        counts = Counter(oracles.labels(exponents(ideal)).values())
        for f, lab in scarf_complex(ideal).labels.items():
            assert counts[lab.exponents] == 1, f


def test_six_betti(six):
    graded = multigraded_betti(six)
    m = parse_monomial(golden.SIX_EXTRA_LABEL, 12)
    assert graded[(3, m)] == 1
    assert total_betti(six) == (6, 15, 17, 7)
    for j, g in enumerate(six.generators):
        assert graded[(0, g)] == 1


def test_xyz_betti(xyz):
    graded = multigraded_betti(xyz)
    assert graded[(1, Monomial((1, 1, 1)))] == 2
    assert total_betti(xyz) == (6, 8, 3)


def test_minimality_examples(six, xyz, xyz_taylor):
    delta = LabeledComplex.from_facets(xyz, golden.DELTA_FACETS)
    res = is_minimal_support(delta)
    assert not res
    sigma, tau = res.witness
    assert res.label == Monomial((1, 1, 1))
    assert len(tau) == len(sigma) + 1 and set(sigma) < set(tau)
    assert delta.label(sigma) == delta.label(tau)
    assert is_minimal_support(scarf_complex(six))
    assert is_minimal_support(morse_complex(xyz_taylor, golden.XYZ_M1))


def test_json_roundtrip(six):
    sc = scarf_complex(six)
    data = sc.to_json()
    assert data["faces"][0] == {"vertices": [1], "label": "x3*x4*x5*x6*x7"}
    assert LabeledComplex.from_json(data) == sc


def test_from_faces_requires_closure(xyz):
    with pytest.raises(ValueError):
        LabeledComplex.from_faces(xyz, [(1, 2)])


def _oracle_betti(ideal):
    """beta_{i,m} by the strictly-below strand, computed with sympy ranks on raw exponents."""
    lab = oracles.labels(exponents(ideal))
    out = {}
    for m in set(lab.values()):
        below = [f for f, l in lab.items() if l != m and all(a <= b for a, b in zip(l, m))]
        for k, r in enumerate(oracles.reduced_betti(below)):
            if r:
                out[(k, m)] = r
    return out


@settings(max_examples=20, deadline=None)
@given(ideals(max_gens=5))
def test_betti_matches_oracle(ideal):
    ours = {(i, m.exponents): b for (i, m), b in multigraded_betti(ideal).items()}
    assert ours == _oracle_betti(ideal)


@settings(max_examples=20, deadline=None)
@given(ideals(max_gens=5))
def test_betti_euler_identity(ideal):
    """sum_i (-1)^i beta_{i,m} equals the signed count of Taylor faces labeled m."""
    graded = multigraded_betti(ideal)
    signed = Counter()
    for f, lab in oracles.labels(exponents(ideal)).items():
        signed[lab] += (-1) ** (len(f) - 1)
    alt = Counter()
    for (i, m), b in graded.items():
        alt[m.exponents] += (-1) ** i * b
    assert {k: v for k, v in signed.items() if v} == {k: v for k, v in alt.items() if v}


@settings(max_examples=30, deadline=None)
@given(ideals(max_gens=5))
def test_scarf_is_closed_subcomplex(ideal):
    tc = taylor_complex(ideal)
    sc = scarf_complex(ideal)
    assert sc.faces <= tc.faces
    assert is_minimal_support(sc)
