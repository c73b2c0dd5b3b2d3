"""Shared brute-force oracles, all independent of the library internals they
are used to check."""

from __future__ import annotations

from collections import deque
from itertools import combinations

import pytest

from ringgraphs import maps, spaces
from ringgraphs.graphs import SimpleGraph


def naive_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def naive_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_divisor_sum_proper(x: int) -> int:
    return sum(d for d in range(1, x) if x % d == 0)


def naive_order(a: int, p: int) -> int:
    v, k = a % p, 1
    while v != 1:
        v = v * a % p
        k += 1
    return k


def naive_smooth_members(primes: set[int], limit: int) -> list[int]:
    out = []
    for n in range(1, limit + 1):
        m = n
        for p in primes:
            while m % p == 0:
                m //= p
        if m == 1:
            out.append(n)
    return out


def brute_edges(family: maps.MapFamily) -> set[tuple[int, int]]:
    """Edge set via single-state application over the full enumeration."""
    edges = set()
    for s in family.space.enumerate():
        i = spaces.index_of(s)
        for m in family.maps:
            t = maps.apply(m, s)
            if t is None:
                continue
            j = spaces.index_of(t)
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return edges


def graph_edges(g: SimpleGraph) -> set[tuple[int, int]]:
    us, vs = g.edge_arrays()
    return {(int(u), int(v)) for u, v in zip(us, vs)}


def brute_triangles(g: SimpleGraph) -> int:
    adj = [set(g.neighbor_array(v).tolist()) for v in range(g.vertex_count)]
    count = 0
    for u, v, w in combinations(range(g.vertex_count), 3):
        if v in adj[u] and w in adj[u] and w in adj[v]:
            count += 1
    return count


def bfs_distances(g: SimpleGraph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbor_array(u):
            v = int(v)
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@pytest.fixture(scope="session")
def triangle_graph():
    from ringgraphs.graphs import graph_from_edges

    return graph_from_edges(3, [0, 0, 1], [1, 2, 2])
