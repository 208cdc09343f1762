"""Undirected unweighted graphs: parsing, BFS hop distances, components."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

import numpy as np

# Sentinel hop count for unreachable nodes. Strictly greater than any
# possible diameter (diameter < node count <= 2**31 - 1) and equal to the
# int32 maximum so distance matrices stay in one integer domain.
UNREACHABLE: int = 2**31 - 1


class GraphParseError(ValueError):
    """Malformed edge-list or Pajek input."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation requires a connected graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected unweighted graph with dense integer node ids.

    ``adjacency[i]`` is the sorted tuple of neighbors of node ``i``;
    ``labels[i]`` is the original text label of node ``i``. Instances are
    immutable and safe to share across workers.
    """

    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: "list[tuple[int, int]] | set[tuple[int, int]]",
        labels: "list[str] | tuple[str, ...] | None" = None,
    ) -> "Graph":
        """Build a normalized graph: self-loops dropped, duplicates collapsed.

        Edge endpoints must lie in ``0..node_count-1``.
        """
        neighbor_sets: list[set[int]] = [set() for _ in range(node_count)]
        for i, j in edges:
            if not (0 <= i < node_count and 0 <= j < node_count):
                raise ValueError(f"edge ({i},{j}) out of range for {node_count} nodes")
            if i == j:
                continue
            neighbor_sets[i].add(j)
            neighbor_sets[j].add(i)
        if labels is None:
            labels = [str(i) for i in range(node_count)]
        if len(labels) != node_count:
            raise ValueError("label count does not match node count")
        return cls(
            adjacency=tuple(tuple(sorted(s)) for s in neighbor_sets),
            labels=tuple(labels),
        )

    def validate(self) -> None:
        """Check structural invariants; raises ValueError on violation."""
        n = self.node_count
        if len(self.labels) != n:
            raise ValueError("label count does not match node count")
        for i, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"adjacency of node {i} not sorted/deduplicated")
            for j in nbrs:
                if not 0 <= j < n:
                    raise ValueError(f"neighbor {j} of node {i} out of range")
                if j == i:
                    raise ValueError(f"self-loop at node {i}")
                if i not in self.adjacency[j]:
                    raise ValueError(f"asymmetric edge ({i},{j})")


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path hop counts of a connected graph."""

    dist: np.ndarray  # (n, n) int32, symmetric, zero diagonal
    diameter: int

    def __post_init__(self) -> None:
        self.dist.setflags(write=False)

    @property
    def n(self) -> int:
        return self.dist.shape[0]


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated edge pairs, one edge per line.

    Lines starting with '#' and blank lines are ignored. Node labels are
    assigned dense ids in order of first appearance; duplicate edges are
    collapsed and self-loops dropped.
    """
    ids: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    saw_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(
                f"line {lineno}: expected 2 node tokens, got {len(tokens)}"
            )
        saw_data = True
        u = ids.setdefault(tokens[0], len(ids))
        v = ids.setdefault(tokens[1], len(ids))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    if not saw_data:
        raise GraphParseError("no edges in input")
    labels = [""] * len(ids)
    for token, idx in ids.items():
        labels[idx] = token
    return Graph.from_edges(len(ids), edges, labels)


_VERTEX_LINE = re.compile(r'^(\d+)(?:\s+(?:"([^"]*)"|(\S+)))?')


def parse_pajek(text: str) -> Graph:
    """Parse the Pajek subset: *Vertices N, optional labeled vertex lines,
    then *Edges / *Arcs pair sections (case-insensitive keywords).

    Arcs are symmetrized; the node count comes from the header, so isolated
    vertices are retained. Columns after an edge pair (e.g. weights) are
    ignored. Unrecognized ``*`` sections are skipped.
    """
    n: int | None = None
    labels: dict[int, str] = {}
    edges: set[tuple[int, int]] = set()
    section = ""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("*"):
            keyword = line.split()[0].lower()
            if keyword == "*vertices":
                parts = line.split()
                if len(parts) < 2 or not parts[1].isdigit():
                    raise GraphParseError(f"line {lineno}: malformed *Vertices header")
                n = int(parts[1])
                section = "vertices"
            elif keyword in ("*edges", "*arcs"):
                if n is None:
                    raise GraphParseError(
                        f"line {lineno}: {keyword} section before *Vertices header"
                    )
                section = "edges"
            else:
                section = "skip"
            continue
        if section == "vertices":
            match = _VERTEX_LINE.match(line)
            if match is None:
                raise GraphParseError(f"line {lineno}: malformed vertex line")
            idx = int(match.group(1))
            if n is None or not 1 <= idx <= n:
                raise GraphParseError(f"line {lineno}: vertex index {idx} out of 1..{n}")
            label = match.group(2) if match.group(2) is not None else match.group(3)
            if label is not None:
                labels[idx - 1] = label
        elif section == "edges":
            parts = line.split()
            if len(parts) < 2:
                raise GraphParseError(f"line {lineno}: expected an edge pair")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError as exc:
                raise GraphParseError(f"line {lineno}: non-integer edge endpoint") from exc
            assert n is not None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(
                    f"line {lineno}: edge endpoint out of 1..{n}"
                )
            if u != v:
                edges.add((min(u, v) - 1, max(u, v) - 1))
        elif section == "skip":
            continue
        else:
            raise GraphParseError(f"line {lineno}: content before *Vertices header")
    if n is None:
        raise GraphParseError("missing *Vertices header")
    label_list = [labels.get(i, str(i + 1)) for i in range(n)]
    return Graph.from_edges(n, edges, label_list)


def bfs_distances(graph: Graph, source: int) -> list[int]:
    """Hop counts from ``source`` to every node; UNREACHABLE where no path."""
    n = graph.node_count
    if not 0 <= source < n:
        raise ValueError(f"source {source} out of range 0..{n - 1}")
    dist = [UNREACHABLE] * n
    dist[source] = 0
    queue = deque([source])
    adjacency = graph.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


def all_pairs_distances(graph: Graph) -> DistanceMatrix:
    """Full hop-count matrix via one BFS per node. Requires a connected graph."""
    n = graph.node_count
    if n == 0:
        raise ValueError("graph has no nodes")
    dist = np.empty((n, n), dtype=np.int32)
    for source in range(n):
        row = bfs_distances(graph, source)
        if UNREACHABLE in row:
            raise DisconnectedGraphError(
                "graph is disconnected; extract largest_connected_component first"
            )
        dist[source] = row
    return DistanceMatrix(dist=dist, diameter=int(dist.max()))


def connected_components(graph: Graph) -> list[list[int]]:
    """Connected components as sorted id lists, ordered by smallest member."""
    n = graph.node_count
    seen = [False] * n
    components: list[list[int]] = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        component = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    component.append(v)
                    queue.append(v)
        components.append(sorted(component))
    return components


def is_connected(graph: Graph) -> bool:
    if graph.node_count == 0:
        return False
    return len(connected_components(graph)) == 1


def largest_connected_component(graph: Graph) -> Graph:
    """Induced subgraph on the largest component, relabeled to dense ids.

    Ties between equal-sized components go to the one containing the
    smallest original id. Original labels are preserved.
    """
    if graph.node_count == 0:
        raise ValueError("graph has no nodes")
    components = connected_components(graph)
    best = max(components, key=lambda c: (len(c), -c[0]))
    remap = {old: new for new, old in enumerate(best)}
    edges = {
        (remap[u], remap[v])
        for u in best
        for v in graph.adjacency[u]
        if u < v
    }
    labels = [graph.labels[old] for old in best]
    return Graph.from_edges(len(best), edges, labels)
