"""Line-oriented text format for machines (.aut).

    # Thue-Morse
    k 2
    states A B
    initial A
    output A 0
    output B 1
    edge A 0 A
    edge A 1 B
    edge B 0 B
    edge B 1 A

Tokens are whitespace-separated and `#` starts a comment anywhere on a
line.  Directives may appear in any order.  `output` lines either cover
every state or are omitted entirely, in which case each state outputs
its own name.  Serialization is canonical: parse(serialize(d)) == d, and
serializing the same machine twice gives identical bytes.
"""

from __future__ import annotations

from .automaton import Dfao, RawDfao, validate
from .errors import (
    AutSyntaxError,
    BadRadix,
    DigitOutOfRange,
    DuplicateState,
    DuplicateTransition,
    UnknownState,
)


def _int_token(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise AutSyntaxError(f"{what} must be an integer, got {token!r}", line) from None


def parse_raw(text: str) -> RawDfao:
    """Tokenize .aut text into an unchecked description.

    Syntax problems (unknown directives, bad arity, duplicate or missing
    directives, unknown names, digits out of range, duplicate edges) are
    reported with their line numbers.  Completeness of the transition
    table and output coverage are left to `validate`.
    """
    k: int | None = None
    k_line = 0
    states: tuple[str, ...] | None = None
    initial: str | None = None
    outputs: list[tuple[str, str]] = []
    output_lines: dict[str, int] = {}
    edges: list[tuple[str, int, str]] = []
    edge_lines: list[int] = []
    last_line = 0

    for lineno, line in enumerate(text.splitlines(), 1):
        last_line = lineno
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        directive, args = tokens[0], tokens[1:]
        if directive == "k":
            if k is not None:
                raise AutSyntaxError("duplicate k directive", lineno)
            if len(args) != 1:
                raise AutSyntaxError("k takes exactly one value", lineno)
            k = _int_token(args[0], "k", lineno)
            k_line = lineno
        elif directive == "states":
            if states is not None:
                raise AutSyntaxError("duplicate states directive", lineno)
            if not args:
                raise AutSyntaxError("states needs at least one name", lineno)
            if len(set(args)) != len(args):
                raise DuplicateState(f"line {lineno}: repeated state name")
            states = tuple(args)
        elif directive == "initial":
            if initial is not None:
                raise AutSyntaxError("duplicate initial directive", lineno)
            if len(args) != 1:
                raise AutSyntaxError("initial takes exactly one state", lineno)
            initial = args[0]
        elif directive == "output":
            if len(args) != 2:
                raise AutSyntaxError("output takes a state and a token", lineno)
            name, token = args
            if name in output_lines:
                raise DuplicateState(
                    f"line {lineno}: output for state {name!r} already given "
                    f"on line {output_lines[name]}"
                )
            output_lines[name] = lineno
            outputs.append((name, token))
        elif directive == "edge":
            if len(args) != 3:
                raise AutSyntaxError("edge takes source, digit, target", lineno)
            src, digit_token, dst = args
            digit = _int_token(digit_token, "edge digit", lineno)
            edges.append((src, digit, dst))
            edge_lines.append(lineno)
        else:
            raise AutSyntaxError(f"unknown directive {directive!r}", lineno)

    if k is None:
        raise AutSyntaxError("missing k directive", last_line or None)
    if states is None:
        raise AutSyntaxError("missing states directive", last_line or None)
    if initial is None:
        raise AutSyntaxError("missing initial directive", last_line or None)

    # Re-run the name and range checks here so the errors carry lines.
    if k < 2:
        raise BadRadix(f"line {k_line}: radix must be >= 2, got {k}")
    declared = set(states)
    if initial not in declared:
        raise UnknownState(f"initial state {initial!r} is not declared")
    for name, _token in outputs:
        if name not in declared:
            line = output_lines[name]
            raise UnknownState(f"line {line}: output for undeclared state {name!r}")
    seen_edges: dict[tuple[str, int], int] = {}
    for (src, digit, dst), lineno in zip(edges, edge_lines):
        if src not in declared:
            raise UnknownState(f"line {lineno}: edge source {src!r} is not declared")
        if dst not in declared:
            raise UnknownState(f"line {lineno}: edge target {dst!r} is not declared")
        if not 0 <= digit < k:
            raise DigitOutOfRange(
                f"line {lineno}: digit {digit} out of range for k={k}"
            )
        if (src, digit) in seen_edges:
            raise DuplicateTransition(
                f"line {lineno}: edge {src} {digit} ... already defined "
                f"on line {seen_edges[(src, digit)]}"
            )
        seen_edges[(src, digit)] = lineno

    return RawDfao(
        k,
        states,
        initial,
        tuple(edges),
        tuple(outputs) if outputs else None,
    )


def parse(text: str) -> Dfao:
    """Parse and validate .aut text; unreachable states are pruned silently.

    Use `parse_raw` plus `validate` to also learn which states were pruned.
    """
    dfao, _pruned = validate(parse_raw(text))
    return dfao


def serialize(d: Dfao) -> str:
    """Canonical .aut text for a machine.

    Output lines are omitted when every state outputs its own name, which
    is exactly the parser's default.
    """
    a = d.automaton
    lines = [
        f"k {a.k}",
        "states " + " ".join(a.states),
        f"initial {a.states[a.initial]}",
    ]
    if d.output != a.states:
        lines.extend(
            f"output {name} {token}" for name, token in zip(a.states, d.output)
        )
    for s, row in enumerate(a.transition):
        lines.extend(
            f"edge {a.states[s]} {digit} {a.states[t]}" for digit, t in enumerate(row)
        )
    return "\n".join(lines) + "\n"
