"""Reference ideals, matchings and expected values used by ``reproduce-paper``.

The ideal texts are identical to the files under ``fixtures/``; they are kept
here as well so the package works without a source checkout.
"""

from __future__ import annotations

from .ideals import MonomialIdeal, parse_ideal
from .morse import Matching

SIX_GEN_TEXT = """\
n=12
x3*x4*x5*x6*x7
x2*x3*x10*x11
x1*x6*x9
x1*x2*x4*x5*x6*x10
x4*x7*x8*x10
x2*x5*x12
"""

XYZ_SQUARED_TEXT = """\
# (x, y, z)^2 with x = x1, y = x2, z = x3
n=3
x1^2
x1*x2
x2^2
x2*x3
x3^2
x1*x3
"""


def six_gen() -> MonomialIdeal:
    return parse_ideal(SIX_GEN_TEXT)


def xyz_squared() -> MonomialIdeal:
    return parse_ideal(XYZ_SQUARED_TEXT)


# --- (x, y, z)^2 -------------------------------------------------------------

XYZ_HEXAGON = [(1, 2), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6)]

# hexagon, the three central edges and the four triangles
DELTA_FACETS = [(2, 4, 6), (1, 2, 6), (2, 3, 4), (4, 5, 6)]

_M_EDGES = [
    ((1, 2, 3), (1, 3)), ((1, 2, 4), (1, 4)), ((1, 5, 6), (1, 5)),
    ((2, 4, 5), (2, 5)), ((3, 4, 5), (3, 5)), ((2, 3, 6), (3, 6)),
    ((1, 2, 5, 6), (1, 2, 5)), ((1, 2, 3, 4), (1, 3, 4)), ((1, 2, 3, 5), (1, 3, 5)),
    ((1, 2, 3, 6), (1, 3, 6)), ((1, 4, 5, 6), (1, 4, 5)), ((1, 2, 4, 6), (1, 4, 6)),
    ((2, 3, 4, 5), (2, 3, 5)), ((2, 4, 5, 6), (2, 5, 6)), ((2, 3, 4, 6), (3, 4, 6)),
    ((3, 4, 5, 6), (3, 5, 6)),
    ((1, 2, 4, 5, 6), (1, 2, 4, 5)), ((1, 2, 3, 4, 5), (1, 3, 4, 5)),
    ((1, 2, 3, 4, 6), (1, 3, 4, 6)), ((1, 2, 3, 5, 6), (1, 3, 5, 6)),
    ((2, 3, 4, 5, 6), (2, 3, 5, 6)),
    ((1, 2, 3, 4, 5, 6), (1, 3, 4, 5, 6)),
]

# matching whose Morse complex is the simplicial complex DELTA
XYZ_M = Matching(_M_EDGES)
XYZ_M1 = XYZ_M.union([((2, 4, 6), (4, 6))])
XYZ_SQUARE_CELL = (4, 5, 6)
XYZ_SQUARE_BOUNDARY = [(2, 4), (2, 6), (4, 5), (5, 6)]

# --- six-generator ideal ------------------------------------------------------

SIX_SCARF_FACETS = [
    (1, 4, 5, 6), (2, 3, 5), (1, 2, 4, 6), (1, 3, 4, 5),
    (2, 3, 4, 6), (1, 3, 4, 6), (1, 2, 5, 6),
]
SIX_SCARF_FVECTOR = (1, 6, 15, 17, 6)
SIX_SCARF_HOMOLOGY = (0, 0, 0, 1, 0)  # reduced ranks in degrees -1..3
SIX_BETTI_SI = (1, 6, 15, 17, 7)
SIX_EXTRA_LABEL = "x1*x2*x3*x4*x5*x6*x7*x8*x9*x10*x11"

SIX_MINIMAL_PAIRS = [
    ((1, 2, 3), (1, 2, 3, 4)),
    ((2, 4, 5), (1, 2, 4, 5)),
    ((3, 5, 6), (3, 4, 5, 6)),
    ((2, 3, 5, 6), (1, 2, 3, 5, 6)),
]

_G = (1, 2, 3, 4, 5, 6)


def _minus(*drop: int) -> tuple[int, ...]:
    return tuple(v for v in _G if v not in drop)


SIX_M0 = [
    (_minus(5, 6), _minus(4, 5, 6)),
    (_minus(5), _minus(4, 5)),
    (_minus(3, 6), _minus(1, 3, 6)),
    (_minus(3), _minus(1, 3)),
    (_minus(1, 2), _minus(1, 2, 4)),
    (_minus(2), _minus(2, 4)),
]

SIX_COMPLETIONS = {
    "M1": [(_G, _minus(4)), (_minus(1), _minus(1, 4)), (_minus(6), _minus(4, 6))],
    "M2": [(_G, _minus(4)), (_minus(1), _minus(1, 4)), (_minus(6), _minus(1, 6))],
    "M3": [(_G, _minus(1)), (_minus(4), _minus(1, 4)), (_minus(6), _minus(4, 6))],
    "M4": [(_G, _minus(1)), (_minus(4), _minus(1, 4)), (_minus(6), _minus(1, 6))],
}

SIX_MATCHINGS = {name: Matching(SIX_M0 + extra) for name, extra in SIX_COMPLETIONS.items()}

TAU = (1, 2, 3, 5)
TAU_PRIME = (2, 3, 4, 5)

# extra critical 3-cell -> (cell pair, expected maximal common cells)
SIX_WITNESSES = {
    TAU: ((1, 2, 3, 5), (1, 4, 5, 6), {(1, 5), (1, 4)}),
    TAU_PRIME: ((2, 3, 4, 5), (1, 3, 4, 6), {(3, 4), (1, 4)}),
}

# triangles under {1,2,3,5} when it is the extra cell
SIX_TAU_TRIANGLES = {(2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 5), (1, 3, 5), (2, 3, 5)}

# boundary f-vector considered for a 3-cell on five vertices
FIVE_VERTEX_FVECTOR = (5, 10, 8)
