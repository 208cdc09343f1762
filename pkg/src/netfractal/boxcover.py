"""Box covering by greedy coloring of the distance-threshold auxiliary graph.

A box of size ``l_B`` is a node set whose pairwise hop distances are all
strictly below ``l_B``. Valid coverings correspond one-to-one to proper
colorings of the auxiliary graph that links every pair at distance >= l_B,
so the minimum box count is approximated by greedy coloring over several
randomized node orders.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import DistanceMatrix, Graph, all_pairs_distances

_U64 = 0xFFFFFFFFFFFFFFFF

#: Default number of randomized greedy trials per box size.
DEFAULT_TRIALS = 10


@dataclass(frozen=True)
class BoxCovering:
    """A partition of all nodes into boxes for one box size.

    ``boxes`` are ordered by greedy color index, each box sorted by node id;
    ``box_of[i]`` is the box index of node ``i``.
    """

    l_B: int
    boxes: tuple[tuple[int, ...], ...]
    box_of: tuple[int, ...]
    trials_used: int
    seed: int

    @property
    def n(self) -> int:
        return len(self.box_of)

    @property
    def n_boxes(self) -> int:
        return len(self.boxes)


@dataclass(frozen=True)
class CoveringProfile:
    """Coverings for consecutive box sizes, box counts non-increasing.

    ``l_max`` is the network diameter plus one, the smallest box size at
    which a single box covers everything. ``repaired_levels`` lists the box
    sizes at which a smaller covering from a previous level was carried
    forward because greedy regressed.
    """

    coverings: tuple[BoxCovering, ...]
    n: int
    l_max: int
    repaired_levels: tuple[int, ...] = ()

    def box_counts(self) -> list[tuple[int, int]]:
        return [(c.l_B, c.n_boxes) for c in self.coverings]


def auxiliary_graph(dist: DistanceMatrix, l_B: int) -> Graph:
    """Graph on the same nodes with an edge wherever hop distance >= l_B."""
    if l_B < 1:
        raise ValueError("l_B must be >= 1")
    n = dist.n
    adjacency = tuple(
        tuple(np.nonzero(dist.dist[i] >= l_B)[0].tolist()) for i in range(n)
    )
    return Graph(adjacency=adjacency, labels=tuple(str(i) for i in range(n)))


def greedy_coloring(graph: Graph, order: Sequence[int]) -> list[int]:
    """Color nodes in the given order, each taking the smallest color not
    already used by a colored neighbor. Returns the color of every node."""
    n = graph.node_count
    if len(order) != n or set(order) != set(range(n)):
        raise ValueError("order is not a permutation of the node ids")
    colors = [-1] * n
    for u in order:
        taken = {colors[v] for v in graph.adjacency[u] if colors[v] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[u] = c
    return colors


def trial_rng(seed: int, l_B: int, trial: int) -> np.random.Generator:
    """Deterministic per-trial generator: PCG64 seeded from the SeedSequence
    of (seed, l_B, trial), so trials and box sizes can run in any order."""
    entropy = (seed & _U64, int(l_B), int(trial))
    return np.random.default_rng(np.random.SeedSequence(entropy))


def _color_by_distance(
    dist: np.ndarray, l_B: int, order: np.ndarray
) -> tuple[np.ndarray, int]:
    """Greedy coloring of the auxiliary graph read directly off the distance
    matrix. Output is identical to greedy_coloring(auxiliary_graph(...))."""
    n = dist.shape[0]
    colors = np.full(n, -1, dtype=np.int64)
    # Window of size n_colors+1 always contains a free color.
    used = np.zeros(n + 1, dtype=bool)
    n_colors = 0
    for u in order:
        neighbor_colors = colors[dist[u] >= l_B]
        neighbor_colors = neighbor_colors[neighbor_colors >= 0]
        window = used[: n_colors + 1]
        window[:] = False
        window[neighbor_colors] = True
        c = int(np.argmin(window))
        colors[u] = c
        if c == n_colors:
            n_colors += 1
    return colors, n_colors


def _covering_from_colors(
    colors: np.ndarray, n_colors: int, l_B: int, trials: int, seed: int
) -> BoxCovering:
    boxes = tuple(
        tuple(np.nonzero(colors == c)[0].tolist()) for c in range(n_colors)
    )
    return BoxCovering(
        l_B=l_B,
        boxes=boxes,
        box_of=tuple(int(c) for c in colors),
        trials_used=trials,
        seed=seed,
    )


def box_cover(
    dist: DistanceMatrix,
    l_B: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 42,
) -> BoxCovering:
    """Best covering over ``trials`` randomized greedy colorings.

    Each trial colors the auxiliary graph in an independently seeded random
    node order; the covering with the fewest boxes wins, ties going to the
    earliest trial. Deterministic for a given (dist, l_B, trials, seed).
    """
    if l_B < 1:
        raise ValueError("l_B must be >= 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = dist.n
    best: tuple[np.ndarray, int] | None = None
    for trial in range(trials):
        order = trial_rng(seed, l_B, trial).permutation(n)
        colors, n_colors = _color_by_distance(dist.dist, l_B, order)
        if best is None or n_colors < best[1]:
            best = (colors, n_colors)
    assert best is not None
    return _covering_from_colors(best[0], best[1], l_B, trials, seed)


def covering_profile(
    graph: Graph,
    l_min: int = 1,
    l_max: int | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 42,
    *,
    dist: DistanceMatrix | None = None,
) -> CoveringProfile:
    """Coverings for every box size in [l_min, l_max].

    ``l_max`` defaults to diameter + 1. Because any covering valid at l_B
    stays valid at l_B + 1, a greedy regression is repaired by carrying the
    smaller covering forward, which keeps box counts non-increasing.
    """
    if l_min < 1:
        raise ValueError("l_min must be >= 1")
    if dist is None:
        dist = all_pairs_distances(graph)
    resolved_l_max = dist.diameter + 1 if l_max is None else l_max
    if l_min > resolved_l_max:
        raise ValueError(f"l_min {l_min} exceeds l_max {resolved_l_max}")
    coverings: list[BoxCovering] = []
    repaired: list[int] = []
    for l_B in range(l_min, resolved_l_max + 1):
        covering = box_cover(dist, l_B, trials, seed)
        if coverings and coverings[-1].n_boxes < covering.n_boxes:
            covering = dataclasses.replace(coverings[-1], l_B=l_B)
            repaired.append(l_B)
        coverings.append(covering)
    return CoveringProfile(
        coverings=tuple(coverings),
        n=dist.n,
        l_max=dist.diameter + 1,
        repaired_levels=tuple(repaired),
    )


def brute_force_cover(dist: DistanceMatrix, l_B: int) -> BoxCovering:
    """Exact minimum covering by dynamic programming over node subsets.

    Exponential in the node count; refuses more than 12 nodes. Intended as
    a test oracle for the greedy heuristic.
    """
    n = dist.n
    if n > 12:
        raise ValueError(f"brute_force_cover supports at most 12 nodes, got {n}")
    if l_B < 1:
        raise ValueError("l_B must be >= 1")
    d = dist.dist.tolist()
    # compat[v]: bitmask of nodes that may share a box with v (incl. v).
    compat = [0] * n
    for v in range(n):
        mask = 0
        row = d[v]
        for u in range(n):
            if row[u] < l_B:
                mask |= 1 << u
        compat[v] = mask
    size = 1 << n
    valid = bytearray(size)
    valid[0] = 1
    for s in range(1, size):
        v = (s & -s).bit_length() - 1
        rest = s ^ (1 << v)
        valid[s] = 1 if valid[rest] and (rest & compat[v]) == rest else 0
    inf = n + 1
    dp = [inf] * size
    dp[0] = 0
    choice = [0] * size
    for s in range(1, size):
        v = (s & -s).bit_length() - 1
        vbit = 1 << v
        candidates = s & compat[v]
        best, best_box = inf, vbit
        sub = candidates
        while sub:
            if sub & vbit and valid[sub]:
                cost = dp[s ^ sub] + 1
                if cost < best:
                    best, best_box = cost, sub
            sub = (sub - 1) & candidates
        dp[s] = best
        choice[s] = best_box
    remaining = size - 1
    boxes: list[tuple[int, ...]] = []
    while remaining:
        box = choice[remaining]
        boxes.append(tuple(v for v in range(n) if box >> v & 1))
        remaining ^= box
    boxes.sort(key=lambda b: b[0])
    box_of = [0] * n
    for idx, box in enumerate(boxes):
        for v in box:
            box_of[v] = idx
    return BoxCovering(
        l_B=l_B,
        boxes=tuple(boxes),
        box_of=tuple(box_of),
        trials_used=1,
        seed=0,
    )


def assert_valid_covering(covering: BoxCovering, dist: DistanceMatrix) -> None:
    """Raise if the covering is not a valid partition into boxes."""
    n = dist.n
    if covering.n != n:
        raise AssertionError("covering size does not match distance matrix")
    seen: set[int] = set()
    for idx, box in enumerate(covering.boxes):
        if not box:
            raise AssertionError(f"box {idx} is empty")
        for v in box:
            if covering.box_of[v] != idx:
                raise AssertionError(f"box_of inconsistent at node {v}")
            if v in seen:
                raise AssertionError(f"node {v} appears in two boxes")
            seen.add(v)
        for i in box:
            for j in box:
                if dist.dist[i, j] >= covering.l_B:
                    raise AssertionError(
                        f"nodes {i},{j} at distance {dist.dist[i, j]} "
                        f"share a box of size {covering.l_B}"
                    )
    if len(seen) != n:
        raise AssertionError("boxes do not cover all nodes")
