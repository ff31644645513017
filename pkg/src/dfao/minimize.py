"""Collapse indistinguishable states into the canonical minimal machine.

Two states are indistinguishable when every word read from them produces
the same output trace.  The coarsest such partition is computed by
successive refinement: start from output classes and split blocks until
every pair of block mates sends each digit into a common block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .automaton import Automaton, Dfao, canonicalize


@dataclass(frozen=True)
class Partition:
    """Assignment of each state index to a block id.

    Blocks are numbered by their smallest member, so the numbering is
    deterministic for a given machine.
    """

    block_of: tuple[int, ...]
    n_blocks: int

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Members of each block, in block order."""
        members: list[list[int]] = [[] for _ in range(self.n_blocks)]
        for s, b in enumerate(self.block_of):
            members[b].append(s)
        return tuple(tuple(m) for m in members)


@dataclass(frozen=True)
class FactorMap:
    """A structure-preserving onto map between machines.

    assignment[s] is the target state for source state s.  It commutes
    with the transitions, maps initial to initial and preserves outputs;
    the test suite checks these laws hold for every map built here.
    """

    source: Dfao
    target: Dfao
    assignment: tuple[int, ...]


def _renumber(keys: Sequence[Hashable]) -> list[int]:
    # ids by first appearance, so block b's smallest member appears first
    ids: dict[Hashable, int] = {}
    out = []
    for key in keys:
        if key not in ids:
            ids[key] = len(ids)
        out.append(ids[key])
    return out


def moore_partition(d: Dfao) -> Partition:
    """Coarsest partition where mates share an output and, digit by digit,
    successors in a common block."""
    a = d.automaton
    n = len(a.states)
    block = _renumber(d.output)
    while True:
        signature = [
            (block[s], *(block[a.transition[s][dig]] for dig in range(a.k)))
            for s in range(n)
        ]
        refined = _renumber(signature)
        if max(refined) == max(block):
            return Partition(tuple(refined), max(refined) + 1)
        block = refined


def is_minimal(d: Dfao) -> bool:
    """True when no two states are indistinguishable."""
    return moore_partition(d).n_blocks == len(d.states)


def minimize(d: Dfao) -> FactorMap:
    """Quotient by indistinguishability, relabeled canonically.

    The target generates the same sequence as the source, has no two
    indistinguishable states, and is the unique smallest such machine up
    to renaming; since it is returned in canonical form, equal targets
    mean isomorphic minimizations.
    """
    part = moore_partition(d)
    a = d.automaton
    rep: dict[int, int] = {}
    for s, b in enumerate(part.block_of):
        rep.setdefault(b, s)
    m = part.n_blocks
    quotient = Dfao(
        Automaton(
            a.k,
            tuple(f"b{b}" for b in range(m)),
            part.block_of[a.initial],
            tuple(
                tuple(part.block_of[a.transition[rep[b]][dig]] for dig in range(a.k))
                for b in range(m)
            ),
        ),
        tuple(d.output[rep[b]] for b in range(m)),
    )
    target, relabel = canonicalize(quotient)
    assignment = tuple(relabel[part.block_of[s]] for s in range(len(a.states)))
    return FactorMap(d, target, assignment)


def intrinsic_automaton(d: Dfao) -> FactorMap:
    """The canonical smallest machine for d's sequence among machines whose
    initial state absorbs the digit 0.

    Equivalent to `minimize(d.normalize_zero())`; the factor map's source
    is the zero-normalized machine.  Opacity of a sequence is defined on
    this target.
    """
    return minimize(d.normalize_zero())
