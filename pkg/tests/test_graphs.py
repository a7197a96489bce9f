import json
import math

import numpy as np
import pytest
from hypothesis import given, settings

from magcurv.errors import ParseError, ValidationError
from magcurv.graphs import (diameter, from_edge_list, is_connected, load_graph,
                            random_magnetic_graph, signature_status)

from .conftest import graph_strategy

T3_DOC = json.dumps({
    "ell": 2, "num_vertices": 3,
    "edges": [{"u": 0, "v": 1, "w": 1.0, "s": 0},
              {"u": 1, "v": 2, "w": 1.0, "s": 0},
              {"u": 0, "v": 2, "w": 1.0, "s": 1}],
})


def test_load_t3_degrees():
    g = load_graph(T3_DOC)
    assert g.num_vertices == 3 and g.ell == 2
    np.testing.assert_allclose(g.degrees, [2.0, 2.0, 2.0])


def test_load_rejects_negative_weight():
    doc = json.loads(T3_DOC)
    doc["edges"][0]["w"] = -1.0
    with pytest.raises(ValidationError):
        load_graph(json.dumps(doc))


def test_load_rejects_exponent_out_of_range():
    doc = json.loads(T3_DOC)
    doc["edges"][0]["s"] = 2
    with pytest.raises(ValidationError):
        load_graph(json.dumps(doc))


def test_load_rejects_loop_duplicate_isolated():
    with pytest.raises(ValidationError):
        from_edge_list(2, 1, [(0, 0, 1.0, 0)])
    with pytest.raises(ValidationError):
        from_edge_list(2, 1, [(0, 1, 1.0, 0), (1, 0, 2.0, 0)])
    with pytest.raises(ValidationError):
        from_edge_list(3, 1, [(0, 1, 1.0, 0)])  # vertex 2 isolated


def test_load_rejects_malformed_documents():
    with pytest.raises(ParseError):
        load_graph("not json {")
    with pytest.raises(ParseError):
        load_graph(json.dumps({"bad": 1}))
    with pytest.raises(ParseError):
        load_graph(json.dumps({"ell": 2, "num_vertices": 2,
                               "edges": [{"u": 0, "v": 1, "w": 1.0}]}))


def test_document_round_trip(t3):
    again = load_graph(t3.dumps())
    assert again.edges == t3.edges
    assert again.ell == t3.ell and again.num_vertices == t3.num_vertices


def test_diameter_examples(t3):
    assert diameter(t3) == 1
    c4 = from_edge_list(4, 1, [(0, 1, 1.0, 0), (1, 2, 1.0, 0),
                               (2, 3, 1.0, 0), (0, 3, 1.0, 0)])
    assert diameter(c4) == 2
    two_edges = from_edge_list(4, 1, [(0, 1, 1.0, 0), (2, 3, 1.0, 0)])
    assert diameter(two_edges) == math.inf
    assert not is_connected(two_edges)


def test_signature_status_examples(t3, b3, c4sigma):
    assert signature_status(b3) == (True, False)
    assert signature_status(t3) == (False, True)
    assert signature_status(c4sigma) == (False, True)


def test_reverse_orientation_exponent(t3):
    # orientation 2 -> 0 must carry (ell - s) mod ell of orientation 0 -> 2
    star = dict((y, s) for y, _, s in t3.neighbors(2))
    assert star[0] == (t3.ell - 1) % t3.ell


@given(graph_strategy())
@settings(max_examples=60, deadline=None)
def test_handshake_identity(g):
    total_w = sum(e.w for e in g.edges)
    assert abs(g.degrees.sum() - 2.0 * total_w) <= 1e-12 * max(1.0, 2.0 * total_w)


@given(graph_strategy())
@settings(max_examples=60, deadline=None)
def test_signature_status_relabeling_invariant(g):
    rng = np.random.default_rng(7)
    perm = rng.permutation(g.num_vertices)
    edges = [(int(perm[e.u]), int(perm[e.v]), e.w, e.s) for e in g.edges]
    relabeled = from_edge_list(g.num_vertices, g.ell, edges)
    assert signature_status(relabeled) == signature_status(g)


def test_random_graph_is_connected_and_deterministic():
    a = random_magnetic_graph(9, 0.2, 3, seed=11)
    b = random_magnetic_graph(9, 0.2, 3, seed=11)
    assert a.edges == b.edges
    assert is_connected(a)
    assert all(0 <= e.s < 3 for e in a.edges)


def test_random_graph_rejects_bad_args():
    with pytest.raises(ValidationError):
        random_magnetic_graph(1, 0.5, 2, seed=0)
    with pytest.raises(ValidationError):
        random_magnetic_graph(4, 1.5, 2, seed=0)
