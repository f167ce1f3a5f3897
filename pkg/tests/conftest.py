"""Shared fixtures: small graph builders and independent brute-force oracles.

The oracles deliberately avoid the library's vectorized kernels: plain dict
BFS and explicit path enumeration, so they can argue with the real
implementations.
"""

from collections import deque
from itertools import combinations, permutations

import numpy as np
import pytest

import netelast as ne


# -- builders -----------------------------------------------------------------


def path_graph(n):
    g = ne.Graph(n)
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def cycle_graph(n):
    g = ne.Graph(n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
    return g


def star_graph(n):
    """Hub 0 plus n-1 leaves."""
    g = ne.Graph(n)
    for i in range(1, n):
        g.add_edge(0, i)
    return g


def wheel_graph(n):
    """Hub 0 plus an (n-1)-cycle rim."""
    g = star_graph(n)
    for i in range(1, n):
        g.add_edge(i, i % (n - 1) + 1)
    return g


def graph_from_edges(n, edges):
    return ne.Graph.from_edges(n, edges)


def random_connected_graph(rng, n, p=0.5):
    """Uniform G(n, p) conditioned on connectivity."""
    while True:
        g = ne.Graph(n)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    g.add_edge(u, v)
        if len(ne.connected_components(g)) == 1:
            return g


# the three fixed evaluation networks: nested robustness, wide separations
def fixed_test_networks():
    return {
        "clique": ne.gen_mesh(7),
        "wheel": wheel_graph(7),
        "star": star_graph(7),
    }


# -- oracles ------------------------------------------------------------------


def bfs_distances(adj, source):
    dist = {source: 0}
    q = deque([source])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def all_shortest_paths(adj, s, t):
    """Every shortest s-t path, by backward walk over BFS distances."""
    dist = bfs_distances(adj, s)
    if t not in dist:
        return []
    paths = []

    def walk(v, tail):
        if v == s:
            paths.append([s] + tail)
            return
        for u in adj[v]:
            if u in dist and dist[u] == dist[v] - 1:
                walk(u, [v] + tail)

    walk(t, [])
    return paths


def betweenness_oracle(g):
    """Exhaustive shortest-path enumeration over unordered pairs."""
    nodes = g.nodes
    adj = {v: g.neighbors(v) for v in nodes}
    bc = {v: 0.0 for v in nodes}
    for s, t in combinations(nodes, 2):
        paths = all_shortest_paths(adj, s, t)
        if not paths:
            continue
        for v in nodes:
            if v not in (s, t):
                bc[v] += sum(v in p for p in paths) / len(paths)
    return bc


def homogeneous_oracle(g):
    """Dict-based reimplementation of the homogeneous engine for tiny graphs:
    smallest-id predecessors, per-arc path counts, uniform rate."""
    nodes = g.nodes
    adj = {v: g.neighbors(v) for v in nodes}
    util = {}
    pairs = 0
    for s in nodes:
        dist = bfs_distances(adj, s)
        pred = {}
        for v in sorted(dist):
            if v == s:
                continue
            pred[v] = min(u for u in adj[v] if u in dist and dist[u] == dist[v] - 1)
        for v in pred:
            pairs += 1
            w = v
            while w != s:
                arc = (pred[w], w)
                util[arc] = util.get(arc, 0) + 1
                w = pred[w]
    if not util:
        return 0.0
    return pairs / max(util.values())


def canonical_relabel(g):
    """Brute-force canonical form for tiny graphs: the labeling that
    minimizes the sorted edge list over all permutations."""
    nodes = g.nodes
    n = len(nodes)
    assert n <= 7, "factorial canonicalization only for tiny graphs"
    best = None
    for perm in permutations(range(n)):
        mapping = dict(zip(nodes, perm))
        edges = sorted(
            tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges()
        )
        if best is None or edges < best:
            best = edges
    out = ne.Graph(n)
    for u, v in best:
        out.add_edge(u, v)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
