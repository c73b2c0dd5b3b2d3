#!/usr/bin/env python3
"""The same edge rule works on richer state spaces: 2x2 matrix rings,
polynomial quotient rings, and bit vectors driven by elementary cellular
automata.  For CA rule pairs (a, b) the connected region of the 256x256
parameter square forms a striking boolean image.
"""

from pathlib import Path

from ringgraphs.graphs import build_graph
from ringgraphs.maps import MapFamily, MatQuad, PowerPlus, preset
from ringgraphs.metrics import components
from ringgraphs.spaces import Mat2, UpperTri2
from ringgraphs.survey import ca_mandelbrot, grid_of, to_pbm

print("x^2 on upper triangular 2x2 matrices over Z_5:")
g = build_graph(MapFamily((PowerPlus(2, 0),), UpperTri2(5)))
print(f"  {g.vertex_count} vertices, {components(g)[0]} components")

print()
print("x^2 + A on the full matrix ring M(2, Z_5), A = [[1,2],[2,4]]:")
g = build_graph(MapFamily((MatQuad((1, 2, 2, 4)),), Mat2(5)))
print(f"  {g.vertex_count} vertices, {components(g)[0]} components")
print("  (no constant A makes this single quadratic map connect the ring)")

print()
print("three maps on the polynomial quotient Z_4[x]/(x^6):")
g = build_graph(preset("polyring", 4, k=6))
print(f"  {g.vertex_count} vertices, {g.edge_count} edges, "
      f"{components(g)[0]} components")

print()
print("cellular-automaton rule pairs on 6-bit vectors (width 9 in the")
print("full-size runs; 6 keeps this demo quick):")
result = ca_mandelbrot(6)
grid = grid_of(result)
print(f"  connected pairs: {int(grid.sum())} of {grid.size}")
out = Path("ca_grid_width6.pbm")
out.write_text(to_pbm(result), encoding="utf-8")
print(f"  bitmap written to {out}")
