import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from morse_resolve.chain import (
    BoundaryMatrix,
    CellChain,
    boundary_matrix,
    rational_rank,
    reduced_homology,
    simplicial_sign,
)
from morse_resolve.errors import GuardError
from morse_resolve.golden import XYZ_HEXAGON
from morse_resolve.taylor import LabeledComplex, scarf_complex

# frozen from oracles.sympy_rank / smith_rank / gf2_rank
HEXAGON_D1_RANK = 5
XYZ_TAYLOR_D2_RANK = 10


def test_edge_column(xyz):
    cx = LabeledComplex.from_facets(xyz, [(1, 2)])
    b = boundary_matrix(cx, 1)
    assert b.rows == ((1,), (2,))
    assert b.to_dense() == [[-1], [1]]
    aug = boundary_matrix(cx, 0)
    assert aug.to_dense() == [[1, 1]]
    assert aug.compose(b) == {}


def test_sign_convention():
    assert simplicial_sign((1, 2, 3), (2, 3)) == 1
    assert simplicial_sign((1, 2, 3), (1, 3)) == -1
    assert simplicial_sign((1, 2, 3), (1, 2)) == 1
    with pytest.raises(ValueError):
        simplicial_sign((1, 2), (3,))


def test_hexagon_rank(xyz):
    hexagon = LabeledComplex.from_facets(xyz, XYZ_HEXAGON)
    dense = boundary_matrix(hexagon, 1).to_dense()
    assert oracles.sympy_rank(dense) == HEXAGON_D1_RANK
    assert rational_rank(boundary_matrix(hexagon, 1)) == HEXAGON_D1_RANK


def test_taylor_rank_and_composition(xyz_taylor):
    d2 = boundary_matrix(xyz_taylor, 2)
    assert d2.shape == (15, 20)
    assert oracles.smith_rank(d2.to_dense()) == XYZ_TAYLOR_D2_RANK
    assert rational_rank(d2) == XYZ_TAYLOR_D2_RANK
    for d in range(0, xyz_taylor.dim):
        assert boundary_matrix(xyz_taylor, d).compose(boundary_matrix(xyz_taylor, d + 1)) == {}


def test_boundary_out_of_range(xyz_taylor):
    with pytest.raises(ValueError):
        boundary_matrix(xyz_taylor, 6)
    with pytest.raises(ValueError):
        boundary_matrix(xyz_taylor, -1)


def test_rank_trivial():
    assert rational_rank([[0, 0], [0, 0]]) == 0
    assert rational_rank([[1 if i == j else 0 for j in range(5)] for i in range(5)]) == 5
    assert rational_rank([]) == 0
    assert rational_rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1


def test_homology_examples(six, xyz, xyz_taylor):
    assert reduced_homology(scarf_complex(six)).ranks == (0, 0, 0, 1, 0)
    assert reduced_homology(xyz_taylor).is_acyclic()
    prof = reduced_homology(scarf_complex(xyz))
    assert prof.ranks == (0, 0, 1)
    assert prof.rank(1) == 1 and prof.rank(7) == 0 and prof.nonzero() == {1: 1}


def test_homology_guard(xyz_taylor):
    with pytest.raises(GuardError):
        reduced_homology(xyz_taylor, guard=10)


def test_boundary_json_roundtrip(xyz_taylor):
    b = boundary_matrix(xyz_taylor, 2)
    assert BoundaryMatrix.from_json(b.to_json()) == b


def test_cellchain_restrict():
    cc = CellChain({0: [(1,), (2,)], 1: [(1, 2)]}, {((1,), (1, 2)): -1, ((2,), (1, 2)): 1, ((), (1,)): 1, ((), (2,)): 1})
    assert reduced_homology(cc).is_acyclic()
    two_points = cc.restrict(lambda c: len(c) == 1)
    assert reduced_homology(two_points).ranks == (0, 1)


int_matrices = st.integers(1, 6).flatmap(
    lambda r: st.lists(st.lists(st.integers(-3, 3), min_size=r, max_size=r), min_size=1, max_size=6)
)


@given(int_matrices)
def test_rank_matches_sympy(rows):
    assert rational_rank(rows) == oracles.sympy_rank(rows)


@st.composite
def simplicial_complexes(draw):
    """Downward closures of a few random faces on <= 6 vertices (<= 12 cells per dimension kept small)."""
    nv = draw(st.integers(1, 6))
    tops = draw(st.lists(st.sets(st.integers(1, nv), min_size=1, max_size=4), min_size=1, max_size=5))
    faces = set()
    for t in tops:
        t = tuple(sorted(t))
        for k in range(1, len(t) + 1):
            faces.update(itertools.combinations(t, k))
    return faces


@settings(max_examples=60)
@given(simplicial_complexes())
def test_homology_matches_smith_oracle(faces):
    cx = LabeledComplex.from_faces(_dummy_ideal(), faces)
    ours = reduced_homology(cx).ranks
    assert ours == oracles.reduced_betti(faces, rank=oracles.smith_rank)
    # characteristic 2 agrees for these small torsion-free complexes
    assert ours == oracles.reduced_betti(faces, rank=oracles.gf2_rank)


@settings(max_examples=60)
@given(simplicial_complexes())
def test_euler_characteristic(faces):
    cx = LabeledComplex.from_faces(_dummy_ideal(), faces)
    prof = reduced_homology(cx)
    f = cx.fvector()
    euler = sum((-1) ** (k - 1) * c for k, c in enumerate(f))
    assert euler == sum((-1) ** (k - 1) * r for k, r in enumerate(prof.ranks))
    assert all(r >= 0 for r in prof.ranks)
    for d in range(0, cx.dim):
        assert cx.boundary(d).compose(cx.boundary(d + 1)) == {}


def _dummy_ideal():
    from morse_resolve.ideals import MonomialIdeal
    from morse_resolve.monomials import Monomial

    return MonomialIdeal(tuple(Monomial.from_support([i], 6) for i in range(1, 7)), 6)
