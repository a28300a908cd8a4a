"""Plain-text edge lists.

Format: optional '#' comment lines, then a header line "n m", then m
lines "u v" with 0-based endpoints.  The writer emits edges in
lexicographic order with LF line endings, so equal graphs serialize to
identical bytes.
"""

from __future__ import annotations

from .graphs import Graph, from_edges


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line {lines[0]!r}, want 'n m'")
    n, m = (int(tok) for tok in header)
    if len(lines) - 1 != m:
        raise ValueError(f"header claims {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
    g = from_edges(n, edges)
    if g.edge_count != m:
        raise ValueError("duplicate edges in edge list")
    return g


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.edge_count}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g))
