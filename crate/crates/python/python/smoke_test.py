"""Smoke test for the orientkit extension module."""

import json

import orientkit
from orientkit import Graph


def main():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    d = orientkit.recognize(c4)
    assert d is not None and d.is_one_perfect()
    assert json.loads(d.to_json()) == {"n": 4, "arcs": [[0, 1], [3, 0], [1, 2], [2, 3]]}

    domino = Graph.named("domino")
    assert orientkit.recognize(domino) is None
    assert orientkit.recognize(domino, brute=True) is None
    assert not orientkit.is_1po(Graph.from_graph6(domino.to_graph6()))

    assert orientkit.product("strong", Graph.named("K2"), Graph.named("K2")) == Graph.named("K4")

    v = orientkit.decide("strong", Graph.named("P3"), Graph.named("raft:2"))
    assert v.is_1po and v.condition == "strong (ii)"
    assert v.certificate.is_one_perfect()

    v = orientkit.decide("direct", Graph.named("P4"), Graph.named("P4"))
    assert not v.is_1po and v.witness_pattern == "domino"

    assert orientkit.orient_p3_strong_raft(7).is_one_perfect()
    assert orientkit.classify_co_chain(Graph.named("raft:3")) == "raft:3"

    try:
        Graph(3, [(0, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("loop accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
