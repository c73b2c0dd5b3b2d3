#!/usr/bin/env python3
"""A single affine map x -> ax+b on Z_n generates a graph: join x with its
image.  For which n is that graph connected?  The answer is governed by
smooth numbers - integers whose prime factors come from a fixed set.

This script sweeps the connectivity locus for several (a, b) pairs and
matches each against the predicted smooth or double-smooth sequence.
"""

from ringgraphs.maps import parse_maps
from ringgraphs.numtheory import double_smooth_set, smooth_set
from ringgraphs.survey import connectivity_locus

LIMIT = 120

# The doubling map connects Z_n exactly when n is a power of two.
locus = connectivity_locus(parse_maps("2x"), "zn", range(1, LIMIT + 1))
print("2x connected on:", locus.connected_params())
print("powers of two:  ", smooth_set({2}, LIMIT).members)
print()

# 3x+1 lands on the double {3}-smooth numbers: powers of 3 and their doubles.
locus = connectivity_locus(parse_maps("3x+1"), "zn", range(1, LIMIT + 1))
print("3x+1 connected on:   ", locus.connected_params())
print("double {3}-smooth:   ", double_smooth_set({3}, LIMIT).members)
print()

# 5x+1 mixes the primes of a and a-1.
locus = connectivity_locus(parse_maps("5x+1"), "zn", range(1, LIMIT + 1))
print("5x+1 connected on:   ", locus.connected_params())
print("{2,5}-smooth numbers:", smooth_set({2, 5}, LIMIT).members)
print()

# A containment that holds for every b: whenever ax+b connects Z_n, every
# prime factor of n divides a or a-1.
for a, b in ((7, 3), (6, 4), (4, 2)):
    locus = connectivity_locus(parse_maps(f"{a}x+{b}"), "zn", range(1, LIMIT + 1))
    print(f"{a}x+{b}: connected n = {locus.connected_params()}")
