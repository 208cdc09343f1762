import numpy as np

from netfractal.graphs import Graph


def random_connected_graph(rng: np.random.Generator, n: int, extra_edges: int = 0) -> Graph:
    """Random spanning tree over a shuffled order plus optional extra edges."""
    order = rng.permutation(n).tolist()
    edges: set[tuple[int, int]] = set()
    for i in range(1, n):
        parent = order[int(rng.integers(0, i))]
        child = order[i]
        edges.add((min(parent, child), max(parent, child)))
    for _ in range(extra_edges):
        u = int(rng.integers(0, n))
        v = int(rng.integers(0, n))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)
