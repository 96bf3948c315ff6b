"""Shared fixtures and the brute-force reference oracle.

The oracle enumerates all q! bijections, so it is only usable for q <= 7;
the solver tests and the acceptance suite compare against it on small
graphs.  The f2.O1 exact solve is session-scoped because several tests
(solver behavior, acceptance budget) want the same, fairly expensive result.
"""

from __future__ import annotations

import itertools

import pytest

from antimagic import Graph, SearchConfig, exact_chi_la, friendship_corona


def naive_exact_chi_la(g: Graph) -> int:
    """Minimum color count over all q! labelings by full enumeration."""
    if g.q > 7:
        raise ValueError("naive oracle limited to q <= 7")
    best = None
    edges = g.edges
    for perm in itertools.permutations(range(1, g.q + 1)):
        weights = [0] * g.p
        for (a, b), lab in zip(edges, perm):
            weights[a] += lab
            weights[b] += lab
        if any(weights[a] == weights[b] for a, b in edges):
            continue
        colors = len(set(weights))
        if best is None or colors < best:
            best = colors
    if best is None:
        raise ValueError("graph admits no local antimagic labeling")
    return best


@pytest.fixture(scope="session")
def f2_graph() -> Graph:
    return friendship_corona(2, 1)


@pytest.fixture(scope="session")
def f2_exact_outcome(f2_graph):
    """Full exact solve of f2.O1 (the costly shared computation)."""
    return exact_chi_la(f2_graph, SearchConfig())
