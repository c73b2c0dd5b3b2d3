import numpy as np
import pytest

from ringgraphs import graphs, maps, metrics, spaces
from ringgraphs.graphs import (
    GraphSpec,
    build_graph,
    export_dot,
    export_edge_list,
    graph_from_edges,
    neighbors,
)
from ringgraphs.maps import Affine, MapFamily, PowerPlus, preset
from ringgraphs.spaces import Zn

from conftest import brute_edges, graph_edges


def test_doubling_on_z4():
    g = build_graph(MapFamily((Affine(2, 0),), Zn(4)))
    assert graph_edges(g) == {(0, 2), (1, 2), (2, 3)}
    assert metrics.is_connected(g)


def test_doubling_on_z6_components():
    g = build_graph(MapFamily((Affine(2, 0),), Zn(6)))
    _, labels = metrics.components(g)
    comps = {}
    for v, lab in enumerate(labels):
        comps.setdefault(int(lab), set()).add(v)
    assert sorted(comps.values(), key=len) == [{0, 3}, {1, 2, 4, 5}]


def test_neighbors():
    g = build_graph(MapFamily((Affine(2, 0),), Zn(4)))
    assert neighbors(g, 2) == [0, 1, 3]
    single = graph_from_edges(1, [], [])
    assert neighbors(single, 0) == []
    k3 = graph_from_edges(3, [0, 0, 1], [1, 2, 2])
    assert neighbors(k3, 0) == [1, 2]
    with pytest.raises(ValueError):
        neighbors(k3, 3)


def test_export_edge_list():
    k3 = graph_from_edges(3, [0, 0, 1], [1, 2, 2])
    assert export_edge_list(k3) == "0 1\n0 2\n1 2\n"
    empty = graph_from_edges(2, [], [])
    assert export_edge_list(empty) == ""
    g = build_graph(MapFamily((Affine(2, 0),), Zn(4)))
    assert export_edge_list(g) == "0 2\n1 2\n2 3\n"


def test_export_dot():
    k3 = graph_from_edges(3, [0, 0, 1], [1, 2, 2])
    doc = export_dot(k3)
    assert doc.startswith("graph G {")
    assert doc.count(" -- ") == 3
    g = build_graph(MapFamily((Affine(2, 0),), Zn(4)))
    doc4 = export_dot(g, labels=[str(s.payload) for s in Zn(4).enumerate()])
    assert doc4.count("label=") == 4
    assert doc4.count(" -- ") == 3
    assert export_dot(g) == export_dot(g)  # byte determinism
    assert export_edge_list(g) == export_edge_list(g)


def test_graph_spec_wiring():
    fam = preset("collatz", 13)
    spec = GraphSpec.of(fam)
    assert spec.provenance == "2x,3x+1"
    assert graph_edges(build_graph(spec)) == graph_edges(build_graph(fam))
    with pytest.raises(ValueError):
        GraphSpec(Zn(14), fam, "mismatch")


def test_loops_dropped_and_images_deduplicated():
    # x -> x is all self-loops; the doubled map below hits targets twice
    g = build_graph(MapFamily((Affine(1, 0),), Zn(9)))
    assert g.edge_count == 0
    g2 = build_graph(MapFamily((Affine(2, 0), Affine(2, 0)), Zn(9)))
    g1 = build_graph(MapFamily((Affine(2, 0),), Zn(9)))
    assert graph_edges(g2) == graph_edges(g1)


@pytest.mark.parametrize(
    "family",
    [
        preset("collatz", 40),
        preset("fermat", 59),
        preset("pierpont", 37),
        preset("dickson", 60),
        preset("dickson+", 60),
        preset("polyring", 3, k=4),
        MapFamily((maps.Exp(2),), Zn(33)),
        MapFamily((maps.CARule(30), maps.CARule(110)), spaces.BitVec(6)),
        MapFamily((maps.MatQuad((1, 2, 2, 4)),), spaces.Mat2(3)),
        MapFamily((maps.PowerPlus(2, 0),), spaces.UpperTri2(4)),
        MapFamily((maps.Perm(3), maps.Perm(8)), Zn(26)),
        MapFamily((maps.WSMap(0.4, 1),), Zn(30)),
        MapFamily((maps.PowerPlus(2, 0),), spaces.ZnUnits(24)),
        MapFamily((maps.PowerPlus(3, 0),), spaces.ZnFromTwo(14)),
    ],
)
def test_build_matches_pointwise_construction(family):
    # dual route: vectorized builder vs single-state application
    g = build_graph(family)
    assert graph_edges(g) == brute_edges(family)


def test_adjacency_invariants_on_sample():
    for fam in (preset("collatz", 97), preset("fermat", 101), preset("dickson+", 80)):
        g = build_graph(fam)
        # symmetry, no loops, sorted unique rows, edge count bound
        assert g.edge_count <= len(fam.maps) * g.vertex_count
        total = 0
        for v in range(g.vertex_count):
            row = g.neighbor_array(v)
            assert (np.diff(row) > 0).all()
            assert v not in row
            total += len(row)
            for u in row:
                assert v in g.neighbor_array(int(u))
        assert total == 2 * g.edge_count


def test_build_is_map_order_invariant():
    fam = preset("collatz", 113)
    shuffled = MapFamily(tuple(reversed(fam.maps)), fam.space)
    assert graph_edges(build_graph(fam)) == graph_edges(build_graph(shuffled))


def test_single_map_graphs_have_no_tetrahedron():
    for n in range(2, 1001, 97):
        g = build_graph(MapFamily((PowerPlus(2, 0),), Zn(n)))
        assert metrics.k4_free(g)
    for fam in (preset("dickson", 300), MapFamily((Affine(3, 1),), Zn(500))):
        assert metrics.k4_free(build_graph(fam))
