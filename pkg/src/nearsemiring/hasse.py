"""Hasse diagrams as DOT text: covering edges only, bottom-up rank direction."""

from __future__ import annotations

from typing import Callable, Sequence


def covering_pairs(count: int, below: Callable[[int, int], bool]) -> list[tuple[int, int]]:
    """Transitive reduction of a finite order given by a strict-or-equal test."""
    out = []
    for i in range(count):
        for j in range(count):
            if i == j or not below(i, j):
                continue
            if not any(m != i and m != j and below(i, m) and below(m, j)
                       for m in range(count)):
                out.append((i, j))
    return out


def hasse_dot(name: str, labels: Sequence[str],
              below: Callable[[int, int], bool]) -> str:
    """DOT digraph of the covering relation, nodes in the given stable order."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, label in enumerate(labels):
        safe = label.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{i} [label="{safe}"];')
    for i, j in covering_pairs(len(labels), below):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
