#!/usr/bin/env python3
"""The squaring map x -> x^2 on the nonzero residues mod n yields a
connected graph only in rare cases: n = 2 or n a prime of the form
2^(2^k) + 1.  On the full ring the same graphs carry an integer invariant,
vertices - edges + triangles, since one map can never build a tetrahedron.
"""

from ringgraphs.graphs import build_graph
from ringgraphs.maps import MapFamily, PowerPlus
from ringgraphs.metrics import components, euler_characteristic, k4_free
from ringgraphs.numtheory import is_fermat_prime
from ringgraphs.spaces import Zn, ZnNonzero
from ringgraphs.survey import euler_sequence

print("connectivity of x^2 on the nonzero residues:")
for n in (2, 3, 5, 7, 17, 59, 127, 257):
    g = build_graph(MapFamily((PowerPlus(2, 0),), ZnNonzero(n)))
    count = components(g)[0]
    tag = "special prime" if (n == 2 or is_fermat_prime(n)) else ""
    print(f"  n={n:4d}: {count} component(s) {tag}")

print()
print("characteristic sequence (n = 1..23):", euler_sequence(23))

print()
print("tetrahedron-free check and invariant at a few n:")
for n in (59, 101, 127):
    g = build_graph(MapFamily((PowerPlus(2, 0),), Zn(n)))
    assert k4_free(g)
    print(
        f"  n={n}: v={g.vertex_count} e={g.edge_count} "
        f"chi={euler_characteristic(g)}"
    )
