"""Deterministic synthetic graphs with known dimensional behavior.

Random graphs use NumPy's PCG64 generator, so a fixture is identical for a
given seed on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, is_connected

MODELS = ("path", "cycle", "grid", "star", "complete", "er_random")

_ER_MAX_RETRIES = 100


class GenerationError(RuntimeError):
    """A random model failed to produce a usable graph."""


@dataclass(frozen=True)
class GeneratorSpec:
    model: str
    params: tuple[float, ...]
    seed: int = 42


def _labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], _labels(n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(n, edges, _labels(n))


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols lattice; node r*cols + c sits at (r, c)."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs rows >= 1 and cols >= 1")
    n = rows * cols
    edges = []
    for r in range(rows):
        for c in range(cols):
            u = r * cols + c
            if c + 1 < cols:
                edges.append((u, u + 1))
            if r + 1 < rows:
                edges.append((u, u + cols))
    return Graph.from_edges(n, edges, _labels(n))


def star_graph(n: int) -> Graph:
    """Node v0 connected to every other node."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)], _labels(n))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete needs n >= 1")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edges(n, edges, _labels(n))


def er_graph(n: int, p: float, seed: int = 42) -> Graph:
    """Erdos-Renyi G(n, p), redrawn until connected.

    Draws are consumed from one PCG64 stream, so the result is a pure
    function of (n, p, seed). Fails after 100 unconnected draws.
    """
    if n < 1:
        raise ValueError("er_random needs n >= 1")
    if not 0.0 < p <= 1.0:
        raise ValueError("er_random needs probability in (0, 1]")
    rng = np.random.default_rng(np.random.SeedSequence(seed & 0xFFFFFFFFFFFFFFFF))
    iu, ju = np.triu_indices(n, k=1)
    for _ in range(_ER_MAX_RETRIES):
        mask = rng.random(iu.size) < p
        edges = list(zip(iu[mask].tolist(), ju[mask].tolist()))
        graph = Graph.from_edges(n, edges, _labels(n))
        if is_connected(graph):
            return graph
    raise GenerationError(
        f"er_random(n={n}, p={p}) not connected after {_ER_MAX_RETRIES} draws"
    )


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by a GeneratorSpec."""
    model = spec.model
    params = spec.params
    if model == "path":
        _require_params(model, params, 1)
        return path_graph(_as_int(params[0]))
    if model == "cycle":
        _require_params(model, params, 1)
        return cycle_graph(_as_int(params[0]))
    if model == "grid":
        _require_params(model, params, 2)
        return grid_graph(_as_int(params[0]), _as_int(params[1]))
    if model == "star":
        _require_params(model, params, 1)
        return star_graph(_as_int(params[0]))
    if model == "complete":
        _require_params(model, params, 1)
        return complete_graph(_as_int(params[0]))
    if model == "er_random":
        _require_params(model, params, 2)
        return er_graph(_as_int(params[0]), float(params[1]), spec.seed)
    raise ValueError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")


def _require_params(model: str, params: tuple[float, ...], count: int) -> None:
    if len(params) != count:
        raise ValueError(f"model {model!r} takes {count} parameter(s), got {len(params)}")


def _as_int(x: float) -> int:
    if float(x) != int(x):
        raise ValueError(f"expected an integer parameter, got {x}")
    return int(x)
