"""Graph file formats: JSON and a plain edge list with an ``# n=`` header."""

from __future__ import annotations

import json

from .graphs import DoubleOddLabel, Graph


def graph_to_dict(g: Graph) -> dict:
    labels = None
    if g.labels is not None:
        labels = [{"subset": lab.subset, "parity": lab.parity} for lab in g.labels]
    return {"n": g.n, "edges": [list(e) for e in g.edges()], "labels": labels}


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), sort_keys=True) + "\n"


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    labels = data.get("labels")
    if labels is not None:
        labels = [DoubleOddLabel(int(x["subset"]), x.get("parity")) for x in labels]
    return Graph.from_edges(int(data["n"]), data["edges"], labels)


def graph_to_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n}"] + [f"{u} {w}" for u, w in g.edges()]
    return "\n".join(lines) + "\n"


def graph_from_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n="):
                n = int(body[2:])
            continue
        u, w = line.split()
        edges.append((int(u), int(w)))
    if n is None:
        raise ValueError("edge list is missing its '# n=<n>' header")
    return Graph.from_edges(n, edges)
