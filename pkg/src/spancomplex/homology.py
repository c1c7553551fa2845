"""Simplicial chain complex of the spanning complex, over the integers.

Faces are graded by dimension, ordered by a fixed global edge order; the
boundary maps are the usual signed incidence matrices.  Betti numbers
are ranks of homology over the rationals, computed with exact integer
elimination (no floating point), which is all the alternating-sum
identities here require.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import NotUnicyclicError
from .fvector import DEFAULT_BUDGET, require_budget
from .multigraph import Multigraph, edge_endpoint_indices, recognize_unicyclic

Face = tuple[str, ...]


@dataclass(frozen=True)
class GradedFaces:
    """Faces per dimension, each face a tuple sorted by the global order."""

    edge_order: tuple[str, ...]
    grades: tuple[tuple[Face, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.grades) - 1

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(gr) for gr in self.grades)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Signed incidence matrix from grade i to grade i-1.

    Rows follow the (i-1)-face order, columns the i-face order; entries
    are -1, 0 or +1.
    """

    i: int
    n_rows: int
    n_cols: int
    rows: tuple[tuple[int, ...], ...]

    def coordinate_triples(self) -> list[str]:
        """Non-zero entries as "row col value" lines, row-major."""
        return [
            f"{r} {c} {val}"
            for r, row in enumerate(self.rows)
            for c, val in enumerate(row)
            if val
        ]


@dataclass(frozen=True)
class BettiProfile:
    """Homology ranks beta_0..beta_d plus the boundary ranks they came from.

    ``boundary_ranks[i]`` is rank of the i-th boundary map; index 0 is the
    zero map to the trivial group, so it is always 0.
    """

    ranks: tuple[int, ...]
    boundary_ranks: tuple[int, ...]


def canonical_edge_order(g: Multigraph) -> tuple[str, ...]:
    """Global vertex order of the complex: the canonical layout order when
    the graph is uni-cyclic, input edge order otherwise."""
    try:
        return recognize_unicyclic(g).edge_order()
    except NotUnicyclicError:
        return g.edge_ids()


def graded_faces(
    g: Multigraph, budget: int = DEFAULT_BUDGET, edge_order: tuple[str, ...] | None = None
) -> GradedFaces:
    """Enumerate all faces (forests), grouped and ordered by dimension."""
    require_budget(g.n_edges, budget, "graded face enumeration")
    if edge_order is None:
        edge_order = canonical_edge_order(g)
    pos = {e: i for i, e in enumerate(edge_order)}
    ids = g.edge_ids()
    us, vs = edge_endpoint_indices(g)

    by_card: dict[int, list[tuple[int, ...]]] = {}
    for mask in kernels.forest_masks(g.n_edges, us, vs, g.n_vertices):
        face = sorted(pos[ids[i]] for i in range(g.n_edges) if mask >> i & 1)
        by_card.setdefault(len(face), []).append(tuple(face))
    grades = []
    for card in range(1, max(by_card) + 1):
        faces = sorted(by_card.get(card, []))
        grades.append(tuple(tuple(edge_order[i] for i in f) for f in faces))
    return GradedFaces(edge_order=tuple(edge_order), grades=tuple(grades))


def boundary_matrix(faces: GradedFaces, i: int) -> BoundaryMatrix:
    """The i-th boundary map: each i-face maps to the alternating sum of
    its (i-1)-subfaces, signs by position of the omitted vertex."""
    if not 1 <= i <= faces.dim:
        raise ValueError(f"boundary index {i} out of range 1..{faces.dim}")
    row_index = {f: r for r, f in enumerate(faces.grades[i - 1])}
    n_rows = len(faces.grades[i - 1])
    cols = faces.grades[i]
    rows = [[0] * len(cols) for _ in range(n_rows)]
    for c, face in enumerate(cols):
        for p in range(len(face)):
            sub = face[:p] + face[p + 1 :]
            rows[row_index[sub]][c] = -1 if p % 2 else 1
    return BoundaryMatrix(
        i=i, n_rows=n_rows, n_cols=len(cols), rows=tuple(tuple(r) for r in rows)
    )


def matrix_rank_exact(m) -> int:
    """Exact rank over the rationals; accepts a BoundaryMatrix or rows."""
    rows = m.rows if isinstance(m, BoundaryMatrix) else m
    return kernels.matrix_rank(rows)


def betti_numbers(
    g: Multigraph, budget: int = DEFAULT_BUDGET, edge_order: tuple[str, ...] | None = None
) -> BettiProfile:
    """Betti numbers beta_i = nullity(d_i) - rank(d_{i+1}) for i = 0..d.

    The 0-th boundary map is zero, so nullity(d_0) = f_0 and beta_0
    counts connected components of the complex.
    """
    faces = graded_faces(g, budget=budget, edge_order=edge_order)
    return betti_from_faces(faces)


def betti_from_faces(faces: GradedFaces) -> BettiProfile:
    d = faces.dim
    sizes = faces.sizes()
    boundary_ranks = [0] * (d + 1)
    for i in range(1, d + 1):
        boundary_ranks[i] = matrix_rank_exact(boundary_matrix(faces, i))
    ranks = []
    for i in range(d + 1):
        nullity = sizes[i] - boundary_ranks[i]
        rank_next = boundary_ranks[i + 1] if i + 1 <= d else 0
        ranks.append(nullity - rank_next)
    return BettiProfile(ranks=tuple(ranks), boundary_ranks=tuple(boundary_ranks))


def euler_from_betti(b: BettiProfile) -> int:
    """Alternating sum of the Betti numbers."""
    return sum((-1) ** i * r for i, r in enumerate(b.ranks))
