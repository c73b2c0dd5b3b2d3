import json
import math

import numpy as np
import pytest

from ringgraphs import metrics
from ringgraphs.graphs import build_graph, graph_from_edges
from ringgraphs.maps import Affine, MapFamily, PowerPlus, preset
from ringgraphs.spaces import Zn
from ringgraphs.unionfind import UnionFind

from conftest import bfs_distances, brute_triangles


def path3():
    return graph_from_edges(3, [0, 1], [1, 2])


def star4():
    return graph_from_edges(4, [0, 0, 0], [1, 2, 3])


def test_component_examples(triangle_graph):
    g16 = build_graph(MapFamily((PowerPlus(2, 0),), Zn(16)))
    assert metrics.components(g16)[0] == 2  # evens and odds
    g8 = build_graph(MapFamily((Affine(2, 0),), Zn(8)))
    assert metrics.components(g8)[0] == 1
    g11 = build_graph(MapFamily((PowerPlus(5, 0),), Zn(11)))
    assert metrics.components(g11)[0] == 3


def test_diameter_examples(triangle_graph):
    assert metrics.diameter(triangle_graph) == 1
    assert metrics.diameter(path3()) == 2


def test_mean_path_length_examples(triangle_graph):
    assert metrics.mean_path_length(triangle_graph) == 1.0
    assert metrics.mean_path_length(path3()) == pytest.approx(4 / 3)
    lonely = graph_from_edges(1, [], [])
    assert metrics.mean_path_length(lonely) is None


def test_clustering_examples(triangle_graph):
    assert metrics.clustering(triangle_graph) == (1.0, 1.0)
    assert metrics.clustering(star4()) == (0.0, 0.0)


def test_lambda_coefficient():
    assert metrics.lambda_coefficient(1.0, 1 / math.e) == pytest.approx(1.0)
    assert metrics.lambda_coefficient(5.8, 0.00074) == pytest.approx(0.8045, abs=5e-4)
    assert metrics.lambda_coefficient(2.0, 0.0) is None
    assert metrics.lambda_coefficient(2.0, 1.0) is None
    assert metrics.lambda_coefficient(2.0, 1.5) is None


def test_triangle_examples():
    assert metrics.triangle_count(build_graph(preset("collatz", 113))) == 4
    assert metrics.triangle_count(build_graph(preset("collatz", 13))) == 6
    g127 = build_graph(MapFamily((PowerPlus(2, 0),), Zn(127)))
    assert metrics.triangle_count(g127) == 2


def test_euler_characteristic_examples(triangle_graph):
    single_edge = graph_from_edges(2, [0], [1])
    assert metrics.euler_characteristic(single_edge) == 1
    assert metrics.euler_characteristic(triangle_graph) == 1


def test_k4_free(triangle_graph):
    assert metrics.k4_free(triangle_graph)
    k4 = graph_from_edges(4, [0, 0, 0, 1, 1, 2], [1, 2, 3, 2, 3, 3])
    assert not metrics.k4_free(k4)
    g127 = build_graph(MapFamily((PowerPlus(2, 0),), Zn(127)))
    assert metrics.k4_free(g127)


def test_degree_stats(triangle_graph):
    mean, hist = metrics.degree_stats(triangle_graph)
    assert mean == 2.0
    assert hist == (0, 0, 3)
    g = build_graph(preset("collatz", 100))
    mean, _ = metrics.degree_stats(g)
    assert mean <= 4.0  # two maps contribute at most one image each


def test_full_report_k3(triangle_graph):
    rep = metrics.full_report(triangle_graph)
    assert rep.euler_char == 1
    assert rep.mu == 1.0
    assert rep.nu_local == 1.0
    assert rep.lam is None  # nu = 1 leaves lambda undefined
    assert rep.components == 1
    assert rep.component_sizes == (3,)
    assert rep.sampled_sources is None


def test_full_report_two_disjoint_edges():
    g = graph_from_edges(4, [0, 2], [1, 3])
    rep = metrics.full_report(g)
    assert rep.components == 2
    assert rep.diameter == 1
    assert rep.mu == 1.0


def test_report_json_keys(triangle_graph):
    doc = json.loads(metrics.full_report(triangle_graph).to_json())
    assert list(doc) == [
        "vertices", "edges", "components", "diameter", "mu", "nu_local",
        "nu_transitivity", "lambda", "triangles", "euler_char", "mean_degree",
        "sampled_sources",
    ]
    assert doc["lambda"] is None
    assert doc["euler_char"] == 1


def test_transitivity_bound_and_euler_identity():
    for fam in (preset("collatz", 60), preset("fermat", 47), preset("dickson+", 90)):
        g = build_graph(fam)
        tri = metrics.triangle_count(g)
        deg = g.degrees().astype(np.int64)
        triples = int((deg * (deg - 1) // 2).sum())
        assert 3 * tri <= triples
        us, vs = g.edge_arrays()
        assert metrics.euler_characteristic(g) == g.vertex_count - len(us) + tri


def test_mu_at_most_diameter():
    for fam in (preset("collatz", 101), preset("pierpont", 37)):
        g = build_graph(fam)
        assert metrics.mean_path_length(g) <= metrics.diameter(g)


def test_components_match_union_find():
    # dual oracle: scipy-backed labels vs hand-rolled union-find
    for n in (13, 59, 100, 257, 500):
        for name in ("collatz", "fermat", "dickson"):
            g = build_graph(preset(name, n))
            count, labels = metrics.components(g)
            uf = UnionFind(g.vertex_count)
            us, vs = g.edge_arrays()
            for u, v in zip(us, vs):
                uf.union(int(u), int(v))
            assert uf.count == count
            roots = uf.labels()
            pairing = {}
            for lab, root in zip(labels, roots):
                assert pairing.setdefault(int(lab), root) == root


def test_triangles_match_brute_force():
    for fam in (
        preset("collatz", 97),
        preset("fermat", 127),
        preset("pierpont", 50),
        preset("dickson+", 80),
    ):
        g = build_graph(fam)
        assert g.vertex_count <= 200
        assert metrics.triangle_count(g) == brute_triangles(g)


def test_distances_match_bfs_oracle():
    g = build_graph(preset("collatz", 61))
    dists = [bfs_distances(g, s) for s in range(g.vertex_count)]
    diam = max(max(d.values()) for d in dists)
    total = sum(sum(d.values()) for d in dists)
    pairs = sum(len(d) - 1 for d in dists)
    assert metrics.diameter(g) == diam
    assert metrics.mean_path_length(g) == pytest.approx(total / pairs)


def test_cycle_graphs_have_uniform_eccentricity():
    for n in (5, 8, 13):
        g = build_graph(MapFamily((Affine(1, 1),), Zn(n)))
        eccs = {max(bfs_distances(g, s).values()) for s in range(n)}
        assert len(eccs) == 1
        assert metrics.diameter(g) == n // 2


def test_empty_graph_edge_cases():
    g = graph_from_edges(1, [], [])
    rep = metrics.full_report(g)
    assert rep.components == 1
    assert rep.diameter == 0
    assert rep.mu is None
    assert rep.triangles == 0


def test_sampled_distance_scan(monkeypatch):
    # force the huge-graph sampling path on a small connected graph
    g = build_graph(preset("collatz", 300))
    exact = metrics.full_report(g)
    monkeypatch.setattr(metrics, "EXACT_BFS_LIMIT", 64)
    monkeypatch.setattr(metrics, "SAMPLE_SOURCES", 48)
    sampled = metrics.full_report(g, sample_seed=5)
    assert sampled.sampled_sources == 48
    assert sampled.diameter <= exact.diameter  # sampled max is a lower bound
    assert abs(sampled.mu - exact.mu) < 0.5
    again = metrics.full_report(g, sample_seed=5)
    assert again.mu == sampled.mu and again.diameter == sampled.diameter
    other = metrics.full_report(g, sample_seed=6)
    assert other.sampled_sources == 48
