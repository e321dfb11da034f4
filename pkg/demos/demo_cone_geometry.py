#!/usr/bin/env python3
"""The integral geometry of a flow cone.

A cone is cut out of the conserved nonnegative flows on a complete digraph
by weight rows; its disc vectors (integral members with strongly connected
support) generate the polyhedron whose boundary computes scl.  Essential
disc vectors are the ones no decomposition can spare; extremal points are
stricter still.
"""

from sclflow import (
    cone_spec,
    enumerate_disc_vectors,
    extremal_rays,
    is_essential,
    is_extremal,
    abstract_graph,
)

print(__doc__)

spec = cone_spec(3, [[2, -1, -1]])
print(f"cone rows: {spec.rows}\n")

discs = enumerate_disc_vectors(spec, 2)
print(f"{len(discs)} disc vectors with outflow at most 2; a few of them:")
for d in discs[:4]:
    print(f"  {d.entries}")
print()

ess = [d for d in discs if is_essential(spec, d)]
extr = [d for d in discs if is_extremal(spec, d, n_max=2).is_extremal]
print(f"essential: {len(ess)}   extremal (certified to N=2): {len(extr)}")
print("every extremal point is essential:",
      all(is_essential(spec, d) for d in extr))
example = next(d for d in ess if not is_extremal(spec, d, n_max=2).is_extremal)
print(f"an essential vector that is not extremal: {example.entries}")
print("  (twice this vector splits into two distinct cone members)\n")

rays = extremal_rays(spec)
print(f"{len(rays)} extremal rays; their abstract support shapes:")
for r in rays:
    g = abstract_graph(r.support_graph())
    print(f"  {r.entries} -> {g.vertex_count} vertices, edges {g.edges}")
