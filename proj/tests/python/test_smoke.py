import pytest

import parhom


def test_graph_round_trip():
    g = parhom.parse_graph("3 2\n0 1\n1 2\n")
    assert g.order() == 3
    assert g.edges() == [(0, 1), (1, 2)]
    assert parhom.parse_graph(parhom.serialize_graph(g)) == g


def test_classify_reference_graphs():
    assert parhom.classify(parhom.named_graph("nine-cycle-threefold"))["verdict"] == "ParityPComplete"
    easy = parhom.classify(parhom.named_graph("twelve-cycle-fourfold"))
    assert easy["verdict"] == "PolynomialTime"
    assert easy["witness"] is None


def test_gadget_verifies():
    spider = parhom.named_graph("spider")
    g = parhom.find_hardness_gadget(spider)
    assert len(g["O"]) % 2 == 1
    assert parhom.verify_gadget_text(spider, parhom.gadget_text(spider)) == []


def test_counts_are_python_ints():
    k2 = parhom.Graph.from_edges(2, [(0, 1)])
    c = parhom.count_homs(parhom.Graph(10), k2)
    assert c == 2**10
    assert parhom.count_homs(k2, k2, {0: [0]}) == 1
    assert parhom.walk_count(k2, 0, 1, 3) == 1


def test_reduction_congruence():
    p3 = parhom.Graph.from_edges(3, [(0, 1), (1, 2)])
    source, pinned = parhom.verify_reduction(p3, parhom.named_graph("spider"))
    assert source == pinned


def test_errors_map_to_exceptions():
    with pytest.raises(parhom.ParseError):
        parhom.parse_graph("2 1\n0 7\n")
    k4 = parhom.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(parhom.PreconditionError):
        parhom.classify(k4)
    assert issubclass(parhom.BudgetError, parhom.Error)


def test_selfcheck_subset():
    ok, text = parhom.selfcheck(seed=3, only=[7, 10])
    assert ok
    assert text.count("\n") == 2
