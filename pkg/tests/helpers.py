"""Shared fixtures: random machine generators and exhaustive reference
searches used to cross-check the structural algorithms."""

from __future__ import annotations

import itertools
import random

from dfao.automaton import Automaton, Dfao, RawDfao, validate
from dfao.dyadic import ZERO, DyadicDistance, pow2inv


def random_dfao(
    rng: random.Random,
    k: int | None = None,
    max_states: int = 5,
    output_alphabet: tuple[str, ...] = ("0", "1", "2"),
) -> Dfao:
    """Uniform random complete machine, pruned to its accessible part.

    k defaults to a coin flip between 2 and 3.  The result has between 1
    and max_states states, always accessible.
    """
    if k is None:
        k = rng.choice((2, 3))
    n = rng.randint(1, max_states)
    names = tuple(f"q{i}" for i in range(n))
    edges = tuple(
        (names[s], d, names[rng.randrange(n)]) for s in range(n) for d in range(k)
    )
    outputs = tuple((name, rng.choice(output_alphabet)) for name in names)
    dfao, _pruned = validate(RawDfao(k, names, names[0], edges, outputs))
    return dfao


def split_state(rng: random.Random, d: Dfao) -> Dfao:
    """Equivalent machine with one state duplicated.

    A random state is copied (same row, same output) and a random
    non-empty subset of its incoming edges is redirected to the copy.
    The sequence and the word-for-word readout are unchanged.
    """
    a = d.automaton
    n = len(a.states)
    # pick a state that has at least one incoming edge to redirect
    targets = sorted({t for row in a.transition for t in row})
    victim = rng.choice(targets)
    incoming = [
        (src, dig)
        for src in range(n)
        for dig in range(a.k)
        if a.transition[src][dig] == victim
    ]
    subset_size = rng.randint(1, len(incoming))
    chosen = set(rng.sample(incoming, subset_size))

    copy_name = a.states[victim] + "c"
    while copy_name in a.states:
        copy_name += "c"
    names = a.states + (copy_name,)
    copy_index = n
    rows = [list(row) for row in a.transition]
    rows.append(list(a.transition[victim]))  # the copy behaves identically
    for src, dig in chosen:
        rows[src][dig] = copy_index
    edges = tuple(
        (names[s], dig, names[rows[s][dig]])
        for s in range(n + 1)
        for dig in range(a.k)
    )
    outputs = tuple(
        (names[s], (d.output + (d.output[victim],))[s]) for s in range(n + 1)
    )
    dfao, _pruned = validate(RawDfao(a.k, names, names[a.initial], edges, outputs))
    return dfao


def all_words(k: int, length: int):
    """Every digit word of exactly this length, lexicographic order."""
    return itertools.product(range(k), repeat=length)


def find_clash(a: Automaton, word) -> tuple[int, int, int] | None:
    """(collide_state, pos_a, pos_b) for the word's first label clash on
    its path, or None when the path is homogeneous.  Straight from the
    definition, used to cross-check the BFS-based search."""
    word = tuple(word)
    s = a.initial
    first: dict[int, tuple[int, int]] = {}  # state -> (first label, position)
    for j, dig in enumerate(word):
        s = a.transition[s][dig]
        if s in first:
            label, pos = first[s]
            if label != dig:
                return s, pos, j
        else:
            first[s] = (dig, j)
    return None


def exhaustive_shortest_clash(a: Automaton, max_len: int):
    """Lexicographically smallest shortest clashing word up to max_len,
    with the same (collide, pos_a, pos_b) convention as the analyzer:
    pos_b is the final edge and pos_a the first earlier entry of the
    colliding state under a different label."""
    for m in range(1, max_len + 1):
        for word in all_words(a.k, m):
            hit = find_clash(a, word)
            if hit is not None:
                collide, _pos_a, pos_b = hit
                run = a.run_path(word)
                b = len(word) - 1
                assert pos_b == b, "a first clash before the last edge means a shorter word clashes"
                a_pos = next(
                    j
                    for j in range(b)
                    if run.vertices[j + 1] == collide and word[j] != word[b]
                )
                return word, collide, a_pos, b
    return None


def pure_python_inf(a: Automaton, word) -> DyadicDistance:
    """inf over relabelings of the prefix distance, without numpy.

    Independent of dfao.oracle: enumerates assignments with itertools and
    compares digit by digit.
    """
    word = tuple(word)
    if not word:
        return ZERO
    path = []
    s = a.initial
    for dig in word:
        s = a.transition[s][dig]
        path.append(s)
    best = None  # None = not seen; "zero" handled by early return
    for assignment in itertools.product(range(a.k), repeat=len(a.states)):
        readback = tuple(assignment[s] for s in path)
        if readback == word:
            return ZERO
        miss = next(i for i in range(len(word)) if readback[i] != word[i])
        if best is None or miss > best:
            best = miss
    return pow2inv(best)
