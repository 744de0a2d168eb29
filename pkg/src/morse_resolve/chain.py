"""Exact chain-complex linear algebra over the rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Hashable, Sequence

from .errors import check_guard

__all__ = [
    "BoundaryMatrix",
    "CellChain",
    "HomologyProfile",
    "boundary_matrix",
    "rational_rank",
    "reduced_homology",
    "simplicial_sign",
]

DEFAULT_CELL_GUARD = 2**20


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse matrix of the boundary map from ``cols`` (d-cells) to ``rows`` ((d-1)-cells)."""

    rows: tuple[Hashable, ...]
    cols: tuple[Hashable, ...]
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> dict[int, int]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def compose(self, other: BoundaryMatrix) -> dict[tuple[int, int], int]:
        """Nonzero entries of ``self @ other``; requires ``self.cols == other.rows``."""
        if self.cols != other.rows:
            raise ValueError("matrices are not composable")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], int] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return {key: v for key, v in out.items() if v}

    def to_json(self) -> dict[str, Any]:
        def enc(cell):
            return list(cell) if isinstance(cell, tuple) else cell

        return {
            "rows": [enc(c) for c in self.rows],
            "cols": [enc(c) for c in self.cols],
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> BoundaryMatrix:
        return cls(
            tuple(tuple(c) for c in data["rows"]),
            tuple(tuple(c) for c in data["cols"]),
            {(i, j): v for i, j, v in data["entries"]},
        )


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks, ``ranks[k]`` being the rank in degree ``k - 1``."""

    ranks: tuple[int, ...]

    def rank(self, d: int) -> int:
        k = d + 1
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    @property
    def top_dim(self) -> int:
        return len(self.ranks) - 2

    def is_acyclic(self) -> bool:
        return not any(self.ranks)

    def nonzero(self) -> dict[int, int]:
        return {k - 1: r for k, r in enumerate(self.ranks) if r}


class CellChain:
    """A finite chain complex given by cells per dimension and signed incidences.

    ``incidence[(sigma, tau)]`` is the coefficient of ``sigma`` in the boundary of
    ``tau``.  Dimension -1 holds the single empty cell ``()``.
    """

    def __init__(self, cells_by_dim: dict[int, Sequence[Hashable]], incidence: dict[tuple[Hashable, Hashable], int]):
        self._cells = {d: tuple(cs) for d, cs in cells_by_dim.items()}
        self._cells.setdefault(-1, ((),))
        self.incidence = incidence

    @property
    def dim(self) -> int:
        return max((d for d, cs in self._cells.items() if cs), default=-1)

    def cells(self, d: int) -> list:
        return list(self._cells.get(d, ()))

    def boundary(self, d: int) -> BoundaryMatrix:
        rows = tuple(self.cells(d - 1))
        cols = tuple(self.cells(d))
        rix = {c: i for i, c in enumerate(rows)}
        cix = {c: j for j, c in enumerate(cols)}
        entries = {}
        for (s, t), v in self.incidence.items():
            if v and s in rix and t in cix:
                entries[(rix[s], cix[t])] = v
        return BoundaryMatrix(rows, cols, entries)

    def restrict(self, keep) -> CellChain:
        """Subcomplex on cells satisfying ``keep``; the empty cell is always kept."""
        cells = {d: [c for c in cs if d == -1 or keep(c)] for d, cs in self._cells.items()}
        kept = {c for cs in cells.values() for c in cs}
        inc = {k: v for k, v in self.incidence.items() if k[0] in kept and k[1] in kept}
        return CellChain(cells, inc)


def simplicial_sign(face: Sequence[int], facet: Sequence[int]) -> int:
    """(-1)^k where ``facet`` is ``face`` with its k-th smallest vertex removed."""
    for k, v in enumerate(face):
        if v not in facet:
            if tuple(facet) == tuple(face[:k]) + tuple(face[k + 1 :]):
                return -1 if k % 2 else 1
            break
    raise ValueError(f"{facet} is not a facet of {face}")


def boundary_matrix(complex, d: int) -> BoundaryMatrix:
    """Simplicial boundary of a complex whose cells are sorted vertex tuples.

    ``d = 0`` gives the augmentation onto the empty face.
    """
    if not 0 <= d <= complex.dim:
        raise ValueError(f"dimension {d} out of range [0, {complex.dim}]")
    cols = tuple(complex.cells(d))
    rows = tuple(complex.cells(d - 1))
    index = {c: i for i, c in enumerate(rows)}
    entries = {}
    for j, face in enumerate(cols):
        for k in range(len(face)):
            sub = face[:k] + face[k + 1 :]
            entries[(index[sub], j)] = -1 if k % 2 else 1
    return BoundaryMatrix(rows, cols, entries)


def _integer_rows(matrix) -> list[list[int]]:
    if isinstance(matrix, BoundaryMatrix):
        rows = matrix.to_dense()
    else:
        rows = [list(r) for r in matrix]
    out = []
    for row in rows:
        if any(isinstance(v, Fraction) for v in row):
            den = math.lcm(*(Fraction(v).denominator for v in row))
            row = [int(Fraction(v) * den) for v in row]
        out.append([int(v) for v in row])
    return out


def rational_rank(matrix) -> int:
    """Rank over Q by Bareiss fraction-free elimination.

    Accepts a BoundaryMatrix or a dense sequence of rows with int/Fraction entries.
    """
    a = [row for row in _integer_rows(matrix) if any(row)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        prow = a[rank]
        for i in range(rank + 1, nrows):
            row = a[i]
            f = row[col]
            for j in range(col + 1, ncols):
                # exact: Sylvester's identity
                row[j] = (row[j] * p - f * prow[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def reduced_homology(complex, guard: int = DEFAULT_CELL_GUARD) -> HomologyProfile:
    """Reduced rational homology of anything exposing ``dim``, ``cells(d)`` and ``boundary(d)``.

    ``cells(-1)`` must be the single empty cell.
    """
    top = complex.dim
    counts = {d: len(complex.cells(d)) for d in range(-1, top + 1)}
    check_guard("max-cells", sum(counts.values()), guard)
    ranks_of = {d: rational_rank(complex.boundary(d)) for d in range(0, top + 1)}
    out = []
    for d in range(-1, top + 1):
        out.append(counts[d] - ranks_of.get(d, 0) - ranks_of.get(d + 1, 0))
    return HomologyProfile(tuple(out))
