"""Complete deterministic automata over digit alphabets, with per-state output.

A machine here reads base-k digits (most significant first) and has a
total transition table: every state consumes every digit, and there is no
acceptance.  Attaching an output token to each state turns the machine
into a transducer; feeding it the digits of n and reading the output of
the state it lands on yields term n of the sequence the machine defines.

Everything is an immutable value.  Operations never mutate their inputs
and are safe to call from multiple threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadRadix,
    DigitOutOfRange,
    DuplicateState,
    DuplicateTransition,
    MissingOutput,
    MissingTransition,
    NoStates,
    RadixMismatch,
    UnknownState,
)

Word = tuple[int, ...]


def _check_token(kind: str, token: str) -> None:
    # Tokens must survive the whitespace-delimited text format round trip.
    if not token or "#" in token or any(c.isspace() for c in token):
        raise ValueError(
            f"{kind} {token!r} must be non-empty and free of whitespace and '#'"
        )


def digits_msb(n: int, k: int) -> Word:
    """Base-k digits of n, most significant first.  n = 0 gives ()."""
    if k < 2:
        raise BadRadix(f"radix must be >= 2, got {k}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    digits = []
    while n:
        n, r = divmod(n, k)
        digits.append(r)
    return tuple(reversed(digits))


@dataclass(frozen=True)
class PathRun:
    """Trace of a word: vertices visited and edges taken, in order.

    vertices[0] is the initial state and len(vertices) == len(word) + 1.
    Each edge is a (source, digit, target) triple.
    """

    word: Word
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class Automaton:
    """A total deterministic transition system over digits 0 .. k-1.

    transition[s][d] is the state reached from state s on digit d.  States
    are referred to by index; `states` holds their display names.  Every
    state is expected to be reachable from `initial`; use `validate` to
    build machines from untrusted descriptions, which prunes the rest.
    """

    k: int
    states: tuple[str, ...]
    initial: int
    transition: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 2:
            raise BadRadix(f"radix must be >= 2, got {self.k}")
        n = len(self.states)
        if n == 0:
            raise NoStates("a machine needs at least one state")
        if len(set(self.states)) != n:
            raise DuplicateState("state names must be distinct")
        for name in self.states:
            _check_token("state name", name)
        if not 0 <= self.initial < n:
            raise UnknownState(f"initial state index {self.initial} out of range")
        if len(self.transition) != n:
            raise MissingTransition(
                f"transition table has {len(self.transition)} rows for {n} states"
            )
        for s, row in enumerate(self.transition):
            if len(row) != self.k:
                raise MissingTransition(
                    f"state {self.states[s]!r} defines {len(row)} of {self.k} digits"
                )
            for t in row:
                if not 0 <= t < n:
                    raise UnknownState(f"transition target index {t} out of range")

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.states)}

    def index(self, name: str) -> int:
        """State index for a display name."""
        try:
            return self._name_index[name]
        except KeyError:
            raise UnknownState(f"no state named {name!r}") from None

    def _check_digit(self, d: int) -> None:
        if not 0 <= d < self.k:
            raise DigitOutOfRange(f"digit {d} out of range for k={self.k}")

    def step(self, s: int, word: Iterable[int]) -> int:
        """State reached from s after reading `word` digit by digit."""
        if not 0 <= s < len(self.states):
            raise UnknownState(f"state index {s} out of range")
        for d in word:
            self._check_digit(d)
            s = self.transition[s][d]
        return s

    def run_path(self, word: Iterable[int]) -> PathRun:
        """Full trace of `word` from the initial state."""
        word = tuple(word)
        vertices = [self.initial]
        edges = []
        s = self.initial
        for d in word:
            self._check_digit(d)
            t = self.transition[s][d]
            edges.append((s, d, t))
            vertices.append(t)
            s = t
        return PathRun(word, tuple(vertices), tuple(edges))

    def is_strictly_accessible(self) -> bool:
        """True when every state can be reached from every other state."""
        n = len(self.states)
        forward = _reachable(self.transition, self.initial)
        if len(forward) != n:
            return False
        # With full forward reachability, strong connectivity reduces to
        # the initial state being reachable from everywhere.
        back = [[] for _ in range(n)]
        for s, row in enumerate(self.transition):
            for t in row:
                back[t].append(s)
        seen = {self.initial}
        queue = deque(seen)
        while queue:
            s = queue.popleft()
            for r in back[s]:
                if r not in seen:
                    seen.add(r)
                    queue.append(r)
        return len(seen) == n


def _reachable(rows: Sequence[Sequence[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for t in rows[s]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


@dataclass(frozen=True)
class Dfao:
    """An automaton plus one output token per state."""

    automaton: Automaton
    output: tuple[str, ...]

    def __post_init__(self):
        if len(self.output) != len(self.automaton.states):
            raise MissingOutput(
                f"{len(self.output)} outputs for {len(self.automaton.states)} states"
            )
        for token in self.output:
            _check_token("output token", token)

    @property
    def k(self) -> int:
        return self.automaton.k

    @property
    def states(self) -> tuple[str, ...]:
        return self.automaton.states

    @property
    def initial(self) -> int:
        return self.automaton.initial

    def output_of(self, name: str) -> str:
        return self.output[self.automaton.index(name)]

    def generate(self, n_terms: int) -> tuple[str, ...]:
        """First n_terms of the sequence: term n is the output of the state
        reached on the base-k digits of n (term 0 reads the initial state)."""
        a = self.automaton
        return tuple(
            self.output[a.step(a.initial, digits_msb(n, a.k))] for n in range(n_terms)
        )

    def normalize_zero(self) -> Dfao:
        """Make digit 0 loop on the initial state, preserving the sequence.

        A machine ignores leading zeros exactly when its initial state
        absorbs 0.  If it already does, the machine is returned unchanged.
        Otherwise a fresh initial state is prepended that loops on 0 and
        copies the old initial state's other transitions and output, and
        any state left unreachable is dropped.
        """
        a = self.automaton
        if a.transition[a.initial][0] == a.initial:
            return self
        fresh = a.states[a.initial] + "'"
        while fresh in a.states:
            fresh += "'"
        states = (fresh,) + a.states
        first = (0,) + tuple(a.transition[a.initial][d] + 1 for d in range(1, a.k))
        rows = [first] + [tuple(t + 1 for t in row) for row in a.transition]
        outputs = (self.output[a.initial],) + self.output
        dfao, _ = _prune(a.k, states, 0, rows, outputs)
        return dfao

    def canonical_form(self) -> Dfao:
        """Relabeled copy whose description is identical for all isomorphs."""
        return canonicalize(self)[0]


@dataclass(frozen=True)
class RawDfao:
    """Unchecked machine description, e.g. fresh out of the .aut parser.

    outputs is either a tuple of (state, token) pairs covering every state,
    or None, meaning each state outputs its own name.
    """

    k: int
    states: tuple[str, ...]
    initial: str
    edges: tuple[tuple[str, int, str], ...]
    outputs: tuple[tuple[str, str], ...] | None = None


def validate(raw: RawDfao) -> tuple[Dfao, tuple[str, ...]]:
    """Check a raw description, prune unreachable states, build the machine.

    Returns the machine together with the names of any pruned states (in
    declaration order) so callers can surface a warning.  State order of
    the result is the declaration order restricted to survivors.
    """
    if raw.k < 2:
        raise BadRadix(f"radix must be >= 2, got {raw.k}")
    if not raw.states:
        raise NoStates("a machine needs at least one state")
    index: dict[str, int] = {}
    for name in raw.states:
        if name in index:
            raise DuplicateState(f"state {name!r} declared twice")
        index[name] = len(index)
    if raw.initial not in index:
        raise UnknownState(f"initial state {raw.initial!r} is not declared")

    n = len(raw.states)
    table: list[list[int | None]] = [[None] * raw.k for _ in range(n)]
    for src, digit, dst in raw.edges:
        if src not in index:
            raise UnknownState(f"edge source {src!r} is not declared")
        if dst not in index:
            raise UnknownState(f"edge target {dst!r} is not declared")
        if not 0 <= digit < raw.k:
            raise DigitOutOfRange(f"digit {digit} out of range for k={raw.k}")
        if table[index[src]][digit] is not None:
            raise DuplicateTransition(f"edge {src} {digit} ... defined twice")
        table[index[src]][digit] = index[dst]
    for s in range(n):
        for d in range(raw.k):
            if table[s][d] is None:
                raise MissingTransition(
                    f"no edge for state {raw.states[s]!r} on digit {d}"
                )

    if raw.outputs is None:
        outputs = list(raw.states)
    else:
        by_state: dict[str, str] = {}
        for name, token in raw.outputs:
            if name not in index:
                raise UnknownState(f"output for undeclared state {name!r}")
            if name in by_state:
                raise DuplicateState(f"output for state {name!r} given twice")
            by_state[name] = token
        missing = [name for name in raw.states if name not in by_state]
        if missing:
            raise MissingOutput(
                "outputs must cover every state or be omitted entirely; "
                f"missing: {', '.join(missing)}"
            )
        outputs = [by_state[name] for name in raw.states]

    rows = [tuple(t for t in row if t is not None) for row in table]
    return _prune(raw.k, raw.states, index[raw.initial], rows, outputs)


def _prune(
    k: int,
    states: Sequence[str],
    initial: int,
    rows: Sequence[Sequence[int]],
    outputs: Sequence[str],
) -> tuple[Dfao, tuple[str, ...]]:
    """Drop states unreachable from `initial`, keeping declaration order."""
    reach = _reachable(rows, initial)
    if len(reach) == len(states):
        automaton = Automaton(k, tuple(states), initial, tuple(tuple(r) for r in rows))
        return Dfao(automaton, tuple(outputs)), ()
    keep = [i for i in range(len(states)) if i in reach]
    remap = {old: new for new, old in enumerate(keep)}
    automaton = Automaton(
        k,
        tuple(states[i] for i in keep),
        remap[initial],
        tuple(tuple(remap[t] for t in rows[i]) for i in keep),
    )
    pruned = tuple(states[i] for i in range(len(states)) if i not in reach)
    return Dfao(automaton, tuple(outputs[i] for i in keep)), pruned


def make_dfao(
    k: int,
    transitions: Mapping[str, Sequence[str]],
    initial: str,
    outputs: Mapping[str, str] | None = None,
) -> Dfao:
    """Convenience builder: transitions[name] lists the k successors of
    `name` in digit order.  Unreachable states are pruned silently."""
    names = tuple(transitions)
    edges = tuple(
        (src, digit, dst)
        for src, row in transitions.items()
        for digit, dst in enumerate(row)
    )
    out = None if outputs is None else tuple(outputs.items())
    dfao, _ = validate(RawDfao(k, names, initial, edges, out))
    return dfao


def are_equivalent(d1: Dfao, d2: Dfao) -> bool:
    """Whether the two machines read out the same token on every word.

    Breadth-first search over reachable state pairs of the product,
    comparing outputs at each pair.  The initial pair is included, so the
    machines must also agree on term 0 of their sequences.
    """
    if d1.k != d2.k:
        raise RadixMismatch(f"cannot compare machines over k={d1.k} and k={d2.k}")
    a1, a2 = d1.automaton, d2.automaton
    start = (a1.initial, a2.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        s1, s2 = queue.popleft()
        if d1.output[s1] != d2.output[s2]:
            return False
        for d in range(a1.k):
            pair = (a1.transition[s1][d], a2.transition[s2][d])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


def _canonical_name(i: int) -> str:
    return chr(ord("A") + i) if i < 26 else f"s{i}"


def canonicalize(d: Dfao) -> tuple[Dfao, tuple[int, ...]]:
    """Relabel states in breadth-first discovery order, digits ascending.

    Returns the relabeled machine and the index map old -> new.  Isomorphic
    machines canonicalize to identical descriptions, whatever their state
    names or listing order, so equality of canonical forms decides
    isomorphism.
    """
    a = d.automaton
    n = len(a.states)
    order = [a.initial]
    seen = {a.initial}
    for s in order:  # grows while iterating; append order is BFS order
        for dig in range(a.k):
            t = a.transition[s][dig]
            if t not in seen:
                seen.add(t)
                order.append(t)
    if len(order) != n:
        raise UnknownState("canonical form needs every state reachable")
    relabel = [0] * n
    for new, old in enumerate(order):
        relabel[old] = new
    automaton = Automaton(
        a.k,
        tuple(_canonical_name(i) for i in range(n)),
        0,
        tuple(tuple(relabel[a.transition[old][dig]] for dig in range(a.k)) for old in order),
    )
    return Dfao(automaton, tuple(d.output[old] for old in order)), tuple(relabel)
