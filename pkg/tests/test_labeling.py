"""Weight computation, local antimagic verification, certificates."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimagic.graphs import Graph, corona, cycle, friendship_corona, null_graph
from antimagic.labeling import (Certificate, GraphMismatchError,
                                InvalidLabelingError, color_count,
                                is_local_antimagic, make_certificate,
                                validate_labeling, verify_certificate,
                                weights)


def star(k):
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def test_star_weights():
    g = star(3)
    w = weights(g, [1, 2, 3])
    assert w[0] == 6
    assert sorted(w[1:]) == [1, 2, 3]


def test_single_edge_always_violates():
    g = Graph(2, [(0, 1)])
    verdict = is_local_antimagic(g, [1])
    assert not verdict.ok
    assert verdict.witness == 0


def test_triangle_all_labelings_work():
    g = cycle(3)
    verdict = is_local_antimagic(g, [1, 2, 3])
    assert verdict.ok
    assert color_count(g, [1, 2, 3]) == 3
    assert sorted(weights(g, [1, 2, 3])) == [3, 4, 5]


def test_violation_reports_lowest_edge():
    g = Graph(4, [(0, 1), (2, 3)])
    verdict = is_local_antimagic(g, [1, 2])
    assert not verdict.ok
    assert verdict.witness == 0  # both edges tie; the first one is reported
    w = weights(g, [1, 2])
    assert w[0] == w[1]


def test_bijectivity_validation():
    g = cycle(3)
    with pytest.raises(InvalidLabelingError) as err:
        validate_labeling(g, [1, 1, 2])
    assert err.value.bad_label == 1
    with pytest.raises(InvalidLabelingError) as err:
        validate_labeling(g, [1, 2, 4])
    assert err.value.bad_label == 4
    with pytest.raises(InvalidLabelingError):
        validate_labeling(g, [1, 2])  # wrong length


@st.composite
def graph_and_labeling(draw):
    n = draw(st.integers(2, 5))
    m = draw(st.integers(1, 3))
    g = friendship_corona(n, m)
    perm = draw(st.permutations(list(range(1, g.q + 1))))
    return g, perm


@given(graph_and_labeling())
@settings(max_examples=60, deadline=None)
def test_weight_conservation(case):
    g, labels = case
    w = weights(g, labels)
    assert sum(w) == g.q * (g.q + 1)


@given(graph_and_labeling())
@settings(max_examples=30, deadline=None)
def test_verifier_is_pure(case):
    g, labels = case
    first = is_local_antimagic(g, labels)
    second = is_local_antimagic(g, labels)
    assert first == second
    if not first.ok:
        a, b = g.edges[first.witness]
        w = weights(g, labels)
        assert w[a] == w[b]


def test_certificate_round_trip():
    g = corona(cycle(3), null_graph(1))
    labels = [2, 5, 3, 6, 4, 1]
    cert = make_certificate(g, labels)
    assert verify_certificate(cert, g) is True
    doc = cert.to_doc()
    again = Certificate.from_doc(doc)
    assert again == cert
    assert verify_certificate(again, g) is True


def test_certificate_detects_tampering():
    g = corona(cycle(3), null_graph(1))
    cert = make_certificate(g, [2, 5, 3, 6, 4, 1])
    doc = cert.to_doc()
    doc["labels"] = list(doc["labels"])
    doc["labels"][0], doc["labels"][1] = doc["labels"][1], doc["labels"][0]
    assert verify_certificate(Certificate.from_doc(doc), g) is False


def test_certificate_wrong_graph():
    g = corona(cycle(3), null_graph(1))
    cert = make_certificate(g, [2, 5, 3, 6, 4, 1])
    with pytest.raises(GraphMismatchError):
        verify_certificate(cert, cycle(3))


def test_color_count_bounds():
    g = friendship_corona(2, 1)
    labels = list(range(1, g.q + 1))
    assert 1 <= color_count(g, labels) <= g.p
