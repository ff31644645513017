"""Exact opacity of a machine, read off the label structure of its graph.

Opacity asks how well the digits fed into a machine can be recovered by
just watching which states it visits.  Relabel each state with a digit of
your choosing; running a word through the machine then reads back some
digit word.  The recovery error for one input word is measured in the
prefix metric (2**-i where i is the first position the readback misses),
the relabeling is chosen to minimize that error, and the opacity of the
machine is the worst case over all input words.

Call a path label-consistent, or homogeneous, when every state it visits
is entered along that path by edges of a single digit only.  A
homogeneous path can be read back perfectly: label each visited state
with its unique entering digit.  Conversely, if a word's path enters some
state first with digit x and later with digit y != x, no relabeling can
be right at both positions.  Hence:

* If every word traces a homogeneous path, the opacity is zero (the
  machine is transparent).
* Otherwise let n be the length of the shortest word whose path clashes.
  Minimality puts the clash on the final edge, so the best relabeling
  first misses at position n-1 and the word costs 2**-(n-1).  No word
  can cost more: a word whose best relabeling misses earlier, at
  position h-1 < n-1, clashes within its first h < n edges, and that
  prefix would be a shorter clashing word.  So the opacity is exactly
  2**-(n-1).

Finding n needs no word search.  A clashing word of minimal length n
splits at its clash state s into an entry path from the initial state
whose final edge carries some digit x, followed by a loop from s back to
s whose final edge carries a digit y != x; conversely every entry+loop
concatenation of that shape clashes.  Both halves are shortest-path
problems, so n is the minimum of entry(s, x) + loop(s, y) over all states
s and ordered digit pairs x != y, computed from breadth-first distances.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .automaton import Automaton, Dfao, Word
from .dyadic import ZERO, DyadicDistance, pow2inv
from .minimize import intrinsic_automaton

# Largest possible opacity, attained by the one-state machine of any radix.
MAX_OPACITY = Fraction(1, 2)


class Classification(Enum):
    TRANSPARENT = "TRANSPARENT"
    OPAQUE = "OPAQUE"
    INTERMEDIATE = "INTERMEDIATE"


@dataclass(frozen=True)
class Opacity:
    """Opacity value: zero, or 2**-(witness_length - 1).

    witness_length is the length of the shortest clashing word (always
    >= 2 when present); None means the machine is transparent.
    """

    witness_length: int | None

    def __post_init__(self):
        if self.witness_length is not None and self.witness_length < 2:
            raise ValueError(f"witness length must be >= 2, got {self.witness_length}")

    @property
    def is_transparent(self) -> bool:
        return self.witness_length is None

    @property
    def is_opaque(self) -> bool:
        """True at the maximum value 1/2."""
        return self.witness_length == 2

    def as_dyadic(self) -> DyadicDistance:
        if self.witness_length is None:
            return ZERO
        return pow2inv(self.witness_length - 1)

    def as_fraction(self) -> Fraction:
        return self.as_dyadic().as_fraction()

    def __str__(self) -> str:
        return str(self.as_fraction())


@dataclass(frozen=True)
class StateHomogeneity:
    """Whole-graph verdict for one state.

    homogeneous is True when all in-edges of the state carry one digit;
    `label` is that digit, or None for a state with no in-edges at all
    (only the initial state can be one, and it counts as homogeneous).
    """

    homogeneous: bool
    label: int | None


@dataclass(frozen=True)
class PathWitness:
    """A shortest clashing word and where it clashes.

    The path of `word` enters `collide_state` on edge position_a with one
    digit and on edge position_b with a different digit, and position_b is
    the final edge.
    """

    word: Word
    collide_state: int
    position_a: int
    position_b: int


@dataclass(frozen=True)
class AnalysisReport:
    """Opacity analysis of the sequence generated by a machine.

    All fields describe the intrinsic machine (the canonical minimal
    zero-normalized form), which is included as `intrinsic`.
    """

    opacity: Opacity
    complexity: Fraction
    classification: Classification
    witness: PathWitness | None
    state_homogeneity: tuple[StateHomogeneity, ...]
    strictly_accessible: bool
    states_count: int
    k: int
    intrinsic: Dfao


def _bfs_distances(a: Automaton, start: int) -> list[int | None]:
    dist: list[int | None] = [None] * len(a.states)
    dist[start] = 0
    queue = deque([start])
    while queue:
        s = queue.popleft()
        base = dist[s]
        for t in a.transition[s]:
            if dist[t] is None:
                dist[t] = base + 1
                queue.append(t)
    return dist


def _sources_by_label(a: Automaton) -> list[list[list[int]]]:
    """sources[s][d] lists the states with an edge into s labeled d."""
    sources: list[list[list[int]]] = [
        [[] for _ in range(a.k)] for _ in range(len(a.states))
    ]
    for s, row in enumerate(a.transition):
        for dig, t in enumerate(row):
            sources[t][dig].append(s)
    return sources


def state_homogeneity(a: Automaton) -> tuple[StateHomogeneity, ...]:
    """Whole-graph in-edge verdict for every state, in state order."""
    sources = _sources_by_label(a)
    verdicts = []
    for s in range(len(a.states)):
        labels = [dig for dig in range(a.k) if sources[s][dig]]
        if len(labels) > 1:
            verdicts.append(StateHomogeneity(False, None))
        elif labels:
            verdicts.append(StateHomogeneity(True, labels[0]))
        else:
            verdicts.append(StateHomogeneity(True, None))
    return tuple(verdicts)


def is_homogeneous_automaton(a: Automaton) -> bool:
    """True when every state passes the whole-graph in-edge test.

    Homogeneous machines are always transparent.  The converse holds on
    strictly accessible machines but not in general: a clash also needs a
    loop back to the inhomogeneous state.
    """
    return all(v.homogeneous for v in state_homogeneity(a))


def entry_distance(a: Automaton, s: int, digit: int) -> int | None:
    """Length of a shortest path from the initial state whose final edge
    enters s carrying `digit`; None when s has no such in-edge."""
    a._check_digit(digit)
    dist = _bfs_distances(a, a.initial)
    best = None
    for r in range(len(a.states)):
        if a.transition[r][digit] == s and dist[r] is not None:
            if best is None or dist[r] < best:
                best = dist[r]
    return None if best is None else best + 1


def return_distance(a: Automaton, s: int, digit: int) -> int | None:
    """Length of a shortest loop from s back to s whose final edge carries
    `digit`; None when no in-edge source of that digit is reachable from s."""
    a._check_digit(digit)
    dist = _bfs_distances(a, s)
    best = None
    for r in range(len(a.states)):
        if a.transition[r][digit] == s and dist[r] is not None:
            if best is None or dist[r] < best:
                best = dist[r]
    return None if best is None else best + 1


def _exact_length_lexmin_words(
    a: Automaton, start: int, max_len: int
) -> list[list[Word | None]]:
    """table[m][s]: lexicographically smallest length-m word from start to s,
    or None when s is not reachable in exactly m steps."""
    n = len(a.states)
    table: list[list[Word | None]] = [[None] * n for _ in range(max_len + 1)]
    table[0][start] = ()
    for m in range(1, max_len + 1):
        prev = table[m - 1]
        cur = table[m]
        for r in range(n):
            w = prev[r]
            if w is None:
                continue
            for dig, t in enumerate(a.transition[r]):
                cand = w + (dig,)
                if cur[t] is None or cand < cur[t]:
                    cur[t] = cand
    return table


def shortest_inhomogeneous_path(a: Automaton) -> PathWitness | None:
    """Shortest clashing word, or None when the machine is transparent.

    Among all shortest clashing words the lexicographically smallest is
    returned.  Minimal clashing words are exactly the entry+loop
    concatenations described in the module docstring, so scanning every
    split of the minimal length over exact-length lexicographic tables
    covers all of them.
    """
    n, k = len(a.states), a.k
    dist0 = _bfs_distances(a, a.initial)
    sources = _sources_by_label(a)

    entry: list[list[int | None]] = [[None] * k for _ in range(n)]
    for s in range(n):
        for dig in range(k):
            ds = [dist0[r] for r in sources[s][dig] if dist0[r] is not None]
            if ds:
                entry[s][dig] = 1 + min(ds)

    # Loop distances only matter at states with two distinct entering
    # digits; anything else can never host a clash.
    loop: list[list[int | None]] = [[None] * k for _ in range(n)]
    best_total: int | None = None
    for s in range(n):
        digs = [dig for dig in range(k) if entry[s][dig] is not None]
        if len(digs) < 2:
            continue
        dist_s = _bfs_distances(a, s)
        for dig in range(k):
            ds = [dist_s[r] for r in sources[s][dig] if dist_s[r] is not None]
            if ds:
                loop[s][dig] = 1 + min(ds)
        for d1 in digs:
            for d2 in range(k):
                if d2 == d1 or loop[s][d2] is None:
                    continue
                total = entry[s][d1] + loop[s][d2]
                if best_total is None or total < best_total:
                    best_total = total
    if best_total is None:
        return None

    length = best_total
    from_initial = _exact_length_lexmin_words(a, a.initial, length - 1)
    best_word: Word | None = None
    for s in range(n):
        digs = [dig for dig in range(k) if entry[s][dig] is not None]
        if len(digs) < 2:
            continue
        mins = [
            entry[s][d1] + loop[s][d2]
            for d1 in digs
            for d2 in range(k)
            if d2 != d1 and loop[s][d2] is not None
        ]
        if not mins or min(mins) > length:
            continue
        from_s = _exact_length_lexmin_words(a, s, length - 1)
        for m1 in range(1, length):
            m2 = length - m1
            for d1 in range(k):
                heads = [
                    from_initial[m1 - 1][r] + (d1,)
                    for r in sources[s][d1]
                    if from_initial[m1 - 1][r] is not None
                ]
                if not heads:
                    continue
                head = min(heads)
                for d2 in range(k):
                    if d2 == d1:
                        continue
                    tails = [
                        from_s[m2 - 1][r] + (d2,)
                        for r in sources[s][d2]
                        if from_s[m2 - 1][r] is not None
                    ]
                    if not tails:
                        continue
                    cand = head + min(tails)
                    if best_word is None or cand < best_word:
                        best_word = cand

    assert best_word is not None and len(best_word) == length
    run = a.run_path(best_word)
    collide = run.vertices[-1]
    b = length - 1
    a_pos = next(
        j
        for j in range(b)
        if run.vertices[j + 1] == collide and best_word[j] != best_word[b]
    )
    return PathWitness(best_word, collide, a_pos, b)


def compute_opacity(a: Automaton) -> Opacity:
    """Exact opacity from the shortest clashing word."""
    witness = shortest_inhomogeneous_path(a)
    return Opacity(None if witness is None else len(witness.word))


def is_opaque_quick(a: Automaton) -> bool:
    """Constant-size test for maximal opacity: some pair of distinct digits
    x, y with step(initial, x) == step(initial, xy); equivalently a length-2
    clash, i.e. the first step on x lands on a state with a y self-loop."""
    i0 = a.initial
    for x in range(a.k):
        s = a.transition[i0][x]
        for y in range(a.k):
            if y != x and a.transition[s][y] == s:
                return True
    return False


def longest_homogeneous_prefix(a: Automaton, word: Iterable[int]) -> int:
    """Number of edges in the longest prefix of the word's path on which
    every visited state is entered by a single digit only.

    The best relabeling of the states reads the word back correctly for
    exactly this many positions, so the word's floor distance over all
    relabelings is 2**-(this value), or zero when it equals the length.
    """
    word = tuple(word)
    first_label: dict[int, int] = {}
    s = a.initial
    for j, d in enumerate(word):
        a._check_digit(d)
        s = a.transition[s][d]
        prev = first_label.setdefault(s, d)
        if prev != d:
            return j
    return len(word)


def analyze_sequence(d: Dfao) -> AnalysisReport:
    """Full opacity report for the sequence generated by a machine.

    The machine is zero-normalized and minimized first; opacity of a
    sequence is by definition the opacity of that intrinsic machine.
    The complexity field rescales opacity by its maximum 1/2, giving a
    value in [0, 1].
    """
    fm = intrinsic_automaton(d)
    target = fm.target
    a = target.automaton
    witness = shortest_inhomogeneous_path(a)
    opacity = Opacity(None if witness is None else len(witness.word))
    if opacity.is_transparent:
        classification = Classification.TRANSPARENT
    elif opacity.is_opaque:
        classification = Classification.OPAQUE
    else:
        classification = Classification.INTERMEDIATE
    return AnalysisReport(
        opacity=opacity,
        complexity=opacity.as_fraction() / MAX_OPACITY,
        classification=classification,
        witness=witness,
        state_homogeneity=state_homogeneity(a),
        strictly_accessible=a.is_strictly_accessible(),
        states_count=len(a.states),
        k=a.k,
        intrinsic=target,
    )
