import pytest

import nfcgraph as nfc


def two_triangles():
    return nfc.disjoint_union(nfc.cycle_graph(3), nfc.cycle_graph(3))


def test_graph_roundtrip():
    g = nfc.parse_graph("3 3\n0 1\n1 2\n0 2\n")
    assert g.n == 3 and g.m == 3
    assert nfc.parse_graph(nfc.serialize_graph(g)).edges == g.edges


def test_parse_rejects_self_loop():
    with pytest.raises(ValueError):
        nfc.parse_graph("2 1\n0 0\n")


def test_components_and_deletion():
    g = two_triangles()
    assert nfc.components(g) == [[0, 1, 2], [3, 4, 5]]
    sub, mapping = nfc.delete_vertices(g, [0])
    assert sub.n == 5
    assert mapping == [-1, 0, 1, 2, 3, 4]
    assert nfc.count_odd_components(g, []) == 2


def test_matching():
    assert len(nfc.max_matching(nfc.path_graph(4))) == 2
    assert not nfc.has_perfect_matching(two_triangles())
    nf = nfc.find_near_factor(nfc.path_graph(3))
    assert nf is not None and len(nf.matching) == 1
    assert nfc.find_near_factor(nfc.cycle_graph(4)) is None


def test_criticality_fixture():
    verdict = nfc.is_nfc_by_theorem(two_triangles())
    assert verdict["holds"]
    assert verdict["witness"]["tag"] == "two-factor-critical-components"
    assert nfc.is_nfc_by_definition(two_triangles())["holds"]

    k1 = nfc.is_nfc_by_definition(nfc.empty_graph(1))
    assert not k1["holds"]
    assert k1["witness"] == {"type": "failing-vertex", "v": 0}


def test_tutte_witness():
    tw = nfc.tutte_witness(nfc.star_graph(4))
    assert tw.s == [0] and tw.odd_count == 3
    assert nfc.tutte_witness(nfc.complete_graph(4)) is None


def test_oracle_agreement():
    g = nfc.random_graph(9, 0.4, 7)
    assert len(nfc.max_matching(g)) == nfc.oracle_max_matching_size(g)


def test_verify_small():
    reports = nfc.verify_theorems(3)
    assert [r["nfc_count"] for r in reports] == [1, 0, 2, 0]
    assert all(r["mismatches"] == [] for r in reports)
