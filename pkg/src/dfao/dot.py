"""Graphviz rendering of machines."""

from __future__ import annotations

from .automaton import Dfao
from .opacity import PathWitness


def _escape(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(d: Dfao, witness: PathWitness | None = None) -> str:
    """DOT text for a machine, deterministic for a given input.

    Nodes are labeled name/output and the initial state gets an arrow from
    a point-shaped marker.  Parallel edges are merged into one arrow with
    a comma-joined digit list.  When a witness is given, the edges its
    path takes are drawn separately in red.
    """
    a = d.automaton
    witness_edges: set[tuple[int, int, int]] = set()
    if witness is not None:
        witness_edges = set(a.run_path(witness.word).edges)

    lines = ["digraph dfao {", "  rankdir=LR;", "  start [shape=point];"]
    for i, name in enumerate(a.states):
        label = _escape(f"{name}/{d.output[i]}")
        lines.append(f'  s{i} [shape=circle, label="{label}"];')
    lines.append(f"  start -> s{a.initial};")

    n = len(a.states)
    for src in range(n):
        plain: dict[int, list[int]] = {}
        marked: dict[int, list[int]] = {}
        for digit, dst in enumerate(a.transition[src]):
            bucket = marked if (src, digit, dst) in witness_edges else plain
            bucket.setdefault(dst, []).append(digit)
        for dst in range(n):
            if dst in plain:
                label = ",".join(str(dig) for dig in plain[dst])
                lines.append(f'  s{src} -> s{dst} [label="{label}"];')
            if dst in marked:
                label = ",".join(str(dig) for dig in marked[dst])
                lines.append(
                    f'  s{src} -> s{dst} [label="{label}", color=red, penwidth=2];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
