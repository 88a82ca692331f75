"""Graphviz emission for Hasse diagrams (bottom-to-top)."""
from __future__ import annotations

from collections import defaultdict
from typing import Sequence


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_to_dot(labels: Sequence[str], covers: Sequence[tuple[int, int]],
                 name: str = "hasse", ranks: Sequence[int] | None = None) -> str:
    """Render cover relations ``(lower, upper)`` as a DOT digraph.

    Nodes sharing a rank are pinned to the same row.
    """
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for k, lab in enumerate(labels):
        lines.append(f"  n{k} [label={_quote(lab)}];")
    if ranks is not None:
        rows: dict[int, list[int]] = defaultdict(list)
        for k, r in enumerate(ranks):
            rows[r].append(k)
        for r in sorted(rows):
            lines.append("  { rank=same; " + " ".join(f"n{k};" for k in rows[r]) + " }")
    for lo, hi in sorted(covers):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
