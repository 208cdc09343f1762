"""End-to-end pipeline and report serialization.

This is the service layer shared by the HTTP API and the CLI: parse ->
largest component -> distances -> covering profile -> entropies ->
dimension estimates, assembled into one report structure. Reports are
plain dicts so they serialize identically everywhere; JSON carries floats
at 17 significant digits, CSV at 6.
"""

from __future__ import annotations

import json
import math
from typing import Sequence

from .boxcover import box_cover, covering_profile
from .dimension import q_sweep
from .generators import GeneratorSpec, generate
from .graphs import (
    DisconnectedGraphError,
    Graph,
    all_pairs_distances,
    connected_components,
    largest_connected_component,
    parse_edge_list,
    parse_pajek,
)
from .qentropy import box_probabilities, tsallis_entropy


class AnalysisError(RuntimeError):
    """The input parsed but cannot be analyzed as requested."""


def detect_format(text: str) -> str:
    """Pajek files start with a '*' section header; everything else is an
    edge list."""
    return "pajek" if text.lstrip().startswith("*") else "edgelist"


def parse_graph(text: str, fmt: str = "auto") -> tuple[Graph, str]:
    used = detect_format(text) if fmt == "auto" else fmt
    if used == "pajek":
        return parse_pajek(text), used
    if used == "edgelist":
        return parse_edge_list(text), used
    raise ValueError(f"unknown input format {fmt!r}")


def reduce_to_component(graph: Graph, strict: bool = False) -> tuple[Graph, str | None]:
    """Return a connected graph to analyze, plus a note when it is a proper
    component of the input. Strict mode refuses disconnected input."""
    if graph.node_count == 0:
        raise AnalysisError("graph has no nodes")
    n_components = len(connected_components(graph))
    if n_components == 1:
        return graph, None
    if strict:
        raise DisconnectedGraphError(
            f"graph has {n_components} components (strict mode refuses reduction)"
        )
    component = largest_connected_component(graph)
    note = (
        f"analyzed largest connected component: {component.node_count} of "
        f"{graph.node_count} nodes, {component.edge_count} of "
        f"{graph.edge_count} edges"
    )
    return component, note


def _q_key(q: float) -> str:
    return format(float(q), ".12g")


def run_analysis(
    text: str,
    *,
    fmt: str = "auto",
    q_values: Sequence[float],
    trials: int = 10,
    seed: int = 42,
    mode: str = "slope",
    l_min: int | None = None,
    l_max: int | None = None,
    strict: bool = False,
    source: str | None = None,
) -> tuple[dict, list[str]]:
    """Full pipeline on graph text; returns (report, diagnostics).

    ``l_min``/``l_max`` of None mean the defaults (1 and diameter + 1).
    Diagnostics are side notes for the error channel and never enter the
    report payload beyond the component note in the input metadata.
    """
    graph, used_fmt = parse_graph(text, fmt)
    component, note = reduce_to_component(graph, strict)
    dm = all_pairs_distances(component)
    profile_l_min = 1 if l_min is None else l_min
    resolved_l_max = dm.diameter + 1 if l_max is None else l_max
    if profile_l_min > resolved_l_max:
        raise AnalysisError(
            f"l_min {profile_l_min} exceeds the largest box size {resolved_l_max}"
        )
    profile = covering_profile(
        component, profile_l_min, resolved_l_max, trials, seed, dist=dm
    )
    fit_range = (
        None if l_min is None and l_max is None else (profile_l_min, resolved_l_max)
    )
    estimates = q_sweep(profile, list(q_values), mode, fit_range)

    single = len(q_values) == 1
    profile_rows = []
    for covering in profile.coverings:
        p = box_probabilities(covering, component.node_count)
        ln_l = math.log(covering.l_B)
        entropies = {q: tsallis_entropy(p, q) for q in q_values}
        ratios = {
            q: (entropies[q] / ln_l if covering.l_B >= 2 else None)
            for q in q_values
        }
        row: dict = {
            "l": covering.l_B,
            "ln_l": ln_l,
            "n_boxes": covering.n_boxes,
        }
        if single:
            q0 = q_values[0]
            row["S_q"] = entropies[q0]
            row["pointwise_ratio"] = ratios[q0]
        else:
            row["S_q"] = {_q_key(q): entropies[q] for q in q_values}
            row["pointwise_ratio"] = {_q_key(q): ratios[q] for q in q_values}
        profile_rows.append(row)

    report = {
        "input": {
            "file": source,
            "format": used_fmt,
            "nodes": component.node_count,
            "edges": component.edge_count,
            "diameter": dm.diameter,
            "component_note": note,
        },
        "settings": {
            "q_list": [float(q) for q in q_values],
            "trials": trials,
            "seed": seed,
            "mode": mode,
            "l_min": profile_l_min,
            "l_max": resolved_l_max,
            "strict": strict,
        },
        "profile": profile_rows,
        "estimates": [
            {
                "q": e.q,
                "dimension": e.dimension,
                "slope": e.slope,
                "intercept": e.intercept,
                "r2": e.r_squared,
                "mode": e.mode,
            }
            for e in estimates
        ],
    }
    diagnostics = []
    if note:
        diagnostics.append(note)
    for level in profile.repaired_levels:
        diagnostics.append(
            f"box-count monotonicity repaired at l_B = {level} "
            f"(reused the smaller covering from the previous size)"
        )
    return report, diagnostics


def run_cover(
    text: str,
    *,
    fmt: str = "auto",
    l_B: int,
    trials: int = 10,
    seed: int = 42,
    strict: bool = False,
    source: str | None = None,
) -> tuple[dict, list[str]]:
    """Single box covering of the largest component at one box size."""
    graph, used_fmt = parse_graph(text, fmt)
    component, note = reduce_to_component(graph, strict)
    dm = all_pairs_distances(component)
    covering = box_cover(dm, l_B, trials, seed)
    result = {
        "file": source,
        "format": used_fmt,
        "nodes": component.node_count,
        "diameter": dm.diameter,
        "l_B": l_B,
        "n_boxes": covering.n_boxes,
        "boxes": [[component.labels[v] for v in box] for box in covering.boxes],
        "trials": trials,
        "seed": seed,
    }
    return result, [note] if note else []


def run_generate(model: str, params: Sequence[float], seed: int = 42) -> Graph:
    return generate(GeneratorSpec(model=model, params=tuple(params), seed=seed))


def graph_to_edge_list(graph: Graph) -> str:
    """Serialize as the edge-list format: one 'label label' line per edge."""
    lines = []
    for u in range(graph.node_count):
        for v in graph.adjacency[u]:
            if u < v:
                lines.append(f"{graph.labels[u]} {graph.labels[v]}")
    return "\n".join(lines) + ("\n" if lines else "")


# --- serialization -------------------------------------------------------

def _format_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def _write_json(obj, out: list[str], level: int, indent: int) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        pad = " " * (indent * level)
        child_pad = " " * (indent * (level + 1))
        out.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            out.append(child_pad + json.dumps(str(key)) + ": ")
            _write_json(value, out, level + 1, indent)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        pad = " " * (indent * level)
        child_pad = " " * (indent * (level + 1))
        out.append("[\n")
        for i, value in enumerate(obj):
            out.append(child_pad)
            _write_json(value, out, level + 1, indent)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def report_to_json(report: dict) -> str:
    """Deterministic JSON with floats at 17 significant digits."""
    out: list[str] = []
    _write_json(report, out, 0, indent=2)
    out.append("\n")
    return "".join(out)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def report_to_csv(report: dict) -> str:
    """Profile table followed by a blank line and the estimates table.

    Single-q reports use the plain profile header; multi-q sweeps prepend a
    q column and stack one block of rows per q.
    """
    profile = report["profile"]
    lines: list[str] = []
    multi = bool(profile) and isinstance(profile[0]["S_q"], dict)
    if multi:
        lines.append("q,l,ln_l,n_boxes,S_q,pointwise_ratio")
        for q in report["settings"]["q_list"]:
            key = _q_key(q)
            for row in profile:
                lines.append(
                    ",".join(
                        [
                            _csv_cell(float(q)),
                            _csv_cell(row["l"]),
                            _csv_cell(row["ln_l"]),
                            _csv_cell(row["n_boxes"]),
                            _csv_cell(row["S_q"][key]),
                            _csv_cell(row["pointwise_ratio"][key]),
                        ]
                    )
                )
    else:
        lines.append("l,ln_l,n_boxes,S_q,pointwise_ratio")
        for row in profile:
            lines.append(
                ",".join(
                    [
                        _csv_cell(row["l"]),
                        _csv_cell(row["ln_l"]),
                        _csv_cell(row["n_boxes"]),
                        _csv_cell(row["S_q"]),
                        _csv_cell(row["pointwise_ratio"]),
                    ]
                )
            )
    lines.append("")
    lines.append("q,dimension,slope,intercept,r2,mode")
    for est in report["estimates"]:
        lines.append(
            ",".join(
                [
                    _csv_cell(est["q"]),
                    _csv_cell(est["dimension"]),
                    _csv_cell(est["slope"]),
                    _csv_cell(est["intercept"]),
                    _csv_cell(est["r2"]),
                    str(est["mode"]),
                ]
            )
        )
    return "\n".join(lines) + "\n"
