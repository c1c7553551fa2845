#!/usr/bin/env python3
"""Compare the compiled kernels against the pure Python reference.

Times forest enumeration and exact boundary-matrix rank on instances
large enough for the difference to matter, after checking that both
backends return identical results.

Run: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from spancomplex import build_multigraph
from spancomplex.homology import boundary_matrix, graded_faces
from spancomplex.kernels import pyref
from spancomplex.multigraph import edge_endpoint_indices

try:
    from spancomplex.kernels import _corex
except ImportError:
    _corex = None


def forest_instance():
    """6-cycle with twelve pendant edges: about 258k forests."""
    verts = [f"v{i}" for i in range(6)]
    edges = [(f"c{i}", (verts[i], verts[(i + 1) % 6])) for i in range(6)]
    for a in range(12):
        anchor = verts[a % 6]
        leaf = f"u{a}"
        verts.append(leaf)
        edges.append((f"p{a}", (anchor, leaf)))
    return build_multigraph(verts, edges)


def rank_instance():
    """Densest 12-edge uni-cyclic layout: 2016 faces across 9 grades."""
    verts = [f"v{i}" for i in range(6)]
    edges = [(f"c{i}", (verts[i], verts[(i + 1) % 6])) for i in range(6)]
    for a in range(3):
        verts.append(f"u{a}")
        edges.append((f"p{a}", (verts[a], f"u{a}")))
    verts.append("w0")
    for k in range(3):
        edges.append((f"b0_{k}", ("v0", "w0")))
    return build_multigraph(verts, edges)


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_forests():
    g = forest_instance()
    us, vs = edge_endpoint_indices(g)
    pure, t_pure = timed(pyref.forest_masks, g.n_edges, us, vs, g.n_vertices)
    row = {"kernel": f"forest_masks ({len(pure)} forests, {g.n_edges} edges)",
           "pure": t_pure, "compiled": None}
    if _corex is not None:
        fast, t_fast = timed(_corex.forest_masks, g.n_edges, us, vs, g.n_vertices)
        assert fast == pure
        row["compiled"] = t_fast
    return [row]


def bench_ranks():
    g = rank_instance()
    faces = graded_faces(g, budget=g.n_edges)
    rows = []
    for i in range(1, faces.dim + 1):
        bm = boundary_matrix(faces, i)
        if bm.n_rows * bm.n_cols < 10_000:
            continue
        pure, t_pure = timed(pyref.matrix_rank, [list(r) for r in bm.rows])
        row = {"kernel": f"matrix_rank d{i} ({bm.n_rows}x{bm.n_cols}, rank {pure})",
               "pure": t_pure, "compiled": None}
        if _corex is not None:
            arr = np.array(bm.rows, dtype=np.int64)
            fast, t_fast = timed(_corex.matrix_rank, arr)
            assert fast == pure
            row["compiled"] = t_fast
        rows.append(row)
    return rows


def main():
    print(f"compiled kernel available: {_corex is not None}")
    rows = bench_forests() + bench_ranks()
    width = max(len(r["kernel"]) for r in rows)
    header = f"{'kernel':<{width}}  {'pure (s)':>10}  {'compiled (s)':>13}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for r in rows:
        if r["compiled"] is None:
            print(f"{r['kernel']:<{width}}  {r['pure']:>10.4f}  {'-':>13}  {'-':>8}")
        else:
            speedup = r["pure"] / r["compiled"] if r["compiled"] > 0 else float("inf")
            print(
                f"{r['kernel']:<{width}}  {r['pure']:>10.4f}  "
                f"{r['compiled']:>13.4f}  {speedup:>7.1f}x"
            )


if __name__ == "__main__":
    main()
