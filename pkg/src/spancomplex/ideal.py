"""Facet ideal, minimal vertex covers and primary decomposition.

Vertices of the complex are the edges of the multigraph, so a vertex
cover is an edge set meeting every spanning tree.  The facet ideal has
one squarefree monomial generator per facet; its minimal primes are in
bijection with the minimal vertex covers, which gives the primary
decomposition combinatorially.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError
from .multigraph import UnicyclicLayout
from .spanning import Facet

DEFAULT_MAX_FACETS = 4096


@dataclass(frozen=True, order=True)
class VertexCover:
    """An inclusion-minimal edge set meeting every facet."""

    edge_ids: tuple[str, ...]

    @staticmethod
    def of(ids) -> "VertexCover":
        return VertexCover(tuple(sorted(ids)))


@dataclass(frozen=True)
class MonomialIdealView:
    """Rendering-oriented view of the facet ideal.

    ``generators`` holds one sorted edge-id tuple per facet;
    ``components`` one per minimal prime (= minimal vertex cover).
    Either may be empty when only the other side was computed.
    """

    generators: tuple[tuple[str, ...], ...] = ()
    components: tuple[tuple[str, ...], ...] = ()

    def render_generators(self) -> str:
        mons = ["".join(_variable(e) for e in gen) for gen in self.generators]
        return "⟨" + ", ".join(mons) + "⟩"

    def render_decomposition(self) -> str:
        primes = ["(" + ",".join(_variable(e) for e in comp) + ")" for comp in self.components]
        return " ∩ ".join(primes)

    def to_json_dict(self) -> dict:
        return {
            "generators": [list(g) for g in self.generators],
            "components": [list(c) for c in self.components],
        }


def _variable(edge_id: str) -> str:
    return "x_{%s}" % edge_id


def _cover_sort_key(c: VertexCover):
    return (len(c.edge_ids), c.edge_ids)


def minimal_vertex_covers_generic(facets, max_facets: int = DEFAULT_MAX_FACETS) -> list[VertexCover]:
    """All minimal transversals of the facet hypergraph, exactly.

    Incremental construction: fold facets one at a time into an antichain
    of minimal partial transversals, pruning non-minimal candidates at
    each step.  Every result is re-verified by the element-dropping
    minimality check.
    """
    facets = sorted(facets)
    if not facets:
        raise ValueError("facet set is empty")
    if len(facets) > max_facets:
        raise BudgetExceededError("minimal vertex covers", len(facets), max_facets, unit="facets")

    universe = sorted({e for f in facets for e in f.edge_ids})
    index = {e: i for i, e in enumerate(universe)}
    facet_masks = [sum(1 << index[e] for e in f.edge_ids) for f in facets]

    transversals = [0]
    for fmask in facet_masks:
        hit = []
        grown = []
        for t in transversals:
            if t & fmask:
                hit.append(t)
            else:
                bits = fmask
                while bits:
                    low = bits & -bits
                    grown.append(t | low)
                    bits ^= low
        # keep only minimal sets: drop anything containing another candidate
        merged = sorted(set(hit + grown), key=lambda t: (t.bit_count(), t))
        kept: list[int] = []
        for t in merged:
            if not any(k & t == k for k in kept):
                kept.append(t)
        transversals = kept

    covers = [
        VertexCover.of(universe[i] for i in range(len(universe)) if t >> i & 1)
        for t in transversals
    ]
    for c in covers:
        _assert_minimal_cover(c, facets)
    return sorted(covers, key=_cover_sort_key)


def _assert_minimal_cover(cover: VertexCover, facets) -> None:
    ids = set(cover.edge_ids)
    if not all(ids & set(f.edge_ids) for f in facets):
        raise AssertionError(f"{cover} does not cover every facet")
    for e in cover.edge_ids:
        rest = ids - {e}
        if all(rest & set(f.edge_ids) for f in facets):
            raise AssertionError(f"{cover} is not minimal: {e} is redundant")


def minimal_vertex_covers_closed_form(layout: UnicyclicLayout) -> list[VertexCover]:
    """Minimal vertex covers of a uni-cyclic layout, by family.

    Five families, each emitted only when its index range is non-empty:
    every single edge outside the cycle on its own; a full multiple cycle
    class plus one single cycle edge; a pair of single cycle edges; a
    pair of full multiple cycle classes; a full multiple class outside
    the cycle.
    """
    singles = [c.members[0] for c in layout.single_cycle_classes]
    multis = [c.members for c in layout.multiple_cycle_classes]
    covers: set[tuple[str, ...]] = set()

    for e in layout.outside_single_edges:
        covers.add((e,))
    for cls in multis:
        for s in singles:
            covers.add(tuple(sorted(cls + (s,))))
    for s, t in combinations(singles, 2):
        covers.add(tuple(sorted((s, t))))
    for cls_a, cls_b in combinations(multis, 2):
        covers.add(tuple(sorted(cls_a + cls_b)))
    for cls in layout.outside_multiple_classes:
        covers.add(tuple(sorted(cls.members)))

    return sorted((VertexCover(c) for c in covers), key=_cover_sort_key)


def facet_ideal(facets) -> MonomialIdealView:
    """One squarefree monomial generator per facet, in canonical order."""
    facets = sorted(facets)
    if not facets:
        raise ValueError("facet set is empty")
    return MonomialIdealView(generators=tuple(f.edge_ids for f in facets))


def primary_decomposition(covers) -> MonomialIdealView:
    """One prime component per minimal vertex cover."""
    ordered = sorted(covers, key=_cover_sort_key)
    return MonomialIdealView(components=tuple(c.edge_ids for c in ordered))


def monomial_divisible_by_some_generator(edge_subset, view: MonomialIdealView) -> bool:
    """Squarefree membership test: some generator divides prod(x_e, e in subset)."""
    s = set(edge_subset)
    return any(set(gen) <= s for gen in view.generators)
