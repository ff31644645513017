"""Bundled example machines with known opacity values and sequences.

Each entry records the expected analysis results (golden values) so the
whole pipeline can be checked in one sweep: structural analysis, the
brute-force oracle, and, where an independent closed form exists, the
generated sequence itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .automaton import Dfao, make_dfao
from .dyadic import ZERO, DyadicDistance, pow2inv
from .errors import NoRecurrence, UnknownCorpusName
from .opacity import AnalysisReport, Classification, analyze_sequence
from .oracle import brute_force_opacity, oracle_bound


def one_state(k: int = 2) -> Dfao:
    """Single state absorbing every digit: the constant sequence machine.

    Maximally opaque for every radix: after any first digit the machine
    sits in a state that loops on all the others.
    """
    return make_dfao(k, {"A": ("A",) * k}, "A", {"A": "0"})


def identity2() -> Dfao:
    """Two states echoing the last binary digit read; generates 0 1 0 1 ..."""
    return make_dfao(
        2,
        {"A": ("A", "B"), "B": ("A", "B")},
        "A",
        {"A": "0", "B": "1"},
    )


def thue_morse() -> Dfao:
    """Parity of ones in the binary expansion."""
    return make_dfao(
        2,
        {"A": ("A", "B"), "B": ("B", "A")},
        "A",
        {"A": "0", "B": "1"},
    )


def period_doubling() -> Dfao:
    """Parity of the 2-adic valuation of n + 1."""
    return make_dfao(
        2,
        {"A": ("A", "B"), "B": ("A", "A")},
        "A",
        {"A": "0", "B": "1"},
    )


def golay_shapiro() -> Dfao:
    """Sign sequence tracking pairs of adjacent ones in binary; values +-1."""
    return make_dfao(
        2,
        {"A": ("A", "B"), "B": ("A", "C"), "C": ("D", "B"), "D": ("D", "C")},
        "A",
        {"A": "1", "B": "1", "C": "-1", "D": "-1"},
    )


def paperfolding() -> Dfao:
    """Regular paperfolding sequence (creases of repeated halving); +-1."""
    return make_dfao(
        2,
        {"A": ("A", "B"), "B": ("A", "C"), "C": ("D", "C"), "D": ("D", "B")},
        "A",
        {"A": "1", "B": "1", "C": "-1", "D": "-1"},
    )


def baum_sweet() -> Dfao:
    """1 when the binary expansion has no odd-length block of zeros, else 0."""
    return make_dfao(
        2,
        {"A": ("A", "B"), "B": ("C", "B"), "C": ("B", "D"), "D": ("D", "D")},
        "A",
        {"A": "1", "B": "1", "C": "0", "D": "0"},
    )


def hanoi() -> Dfao:
    """Move sequence of the optimal three-peg tower transfer, six move types."""
    return make_dfao(
        2,
        {
            "A": ("A", "D"),
            "B": ("A", "C"),
            "C": ("E", "B"),
            "D": ("E", "A"),
            "E": ("C", "F"),
            "F": ("C", "E"),
        },
        "A",
        {
            "A": "a",
            "B": "a_bar",
            "C": "c",
            "D": "c_bar",
            "E": "b",
            "F": "b_bar",
        },
    )


def ternary_digit_sum() -> Dfao:
    """Running sum of ternary digits, reduced mod 3."""
    return make_dfao(
        3,
        {"A": ("A", "B", "C"), "B": ("B", "C", "A"), "C": ("C", "A", "B")},
        "A",
        {"A": "0", "B": "1", "C": "2"},
    )


@dataclass(frozen=True)
class CorpusEntry:
    """One bundled machine with its expected analysis results.

    witness_length is checked only when not None; transparent entries have
    no witness at all.
    """

    name: str
    builder: Callable[[], Dfao]
    opacity: DyadicDistance
    complexity: Fraction
    classification: Classification
    states: int
    witness_length: int | None
    note: str


ENTRIES: tuple[CorpusEntry, ...] = (
    CorpusEntry(
        "one_state",
        one_state,
        pow2inv(1),
        Fraction(1),
        Classification.OPAQUE,
        1,
        2,
        "constant sequence; the smallest machine there is",
    ),
    CorpusEntry(
        "identity2",
        identity2,
        ZERO,
        Fraction(0),
        Classification.TRANSPARENT,
        2,
        None,
        "echoes its input bit; output is purely 2-periodic",
    ),
    CorpusEntry(
        "thue_morse",
        thue_morse,
        pow2inv(1),
        Fraction(1),
        Classification.OPAQUE,
        2,
        2,
        "binary digit-sum parity",
    ),
    CorpusEntry(
        "period_doubling",
        period_doubling,
        pow2inv(2),
        Fraction(1, 2),
        Classification.INTERMEDIATE,
        2,
        3,
        "parity of the 2-adic valuation of n + 1",
    ),
    CorpusEntry(
        "golay_shapiro",
        golay_shapiro,
        ZERO,
        Fraction(0),
        Classification.TRANSPARENT,
        4,
        None,
        "counts adjacent 11 pairs in binary, as a sign",
    ),
    CorpusEntry(
        "paperfolding",
        paperfolding,
        ZERO,
        Fraction(0),
        Classification.TRANSPARENT,
        4,
        None,
        "crease directions of repeatedly folded paper",
    ),
    CorpusEntry(
        "baum_sweet",
        baum_sweet,
        pow2inv(2),
        Fraction(1, 2),
        Classification.INTERMEDIATE,
        4,
        3,
        "zero-block structure of the binary expansion",
    ),
    CorpusEntry(
        "hanoi",
        hanoi,
        pow2inv(2),
        Fraction(1, 2),
        Classification.INTERMEDIATE,
        6,
        3,
        "optimal tower-transfer move sequence",
    ),
    CorpusEntry(
        "ternary_digit_sum",
        ternary_digit_sum,
        pow2inv(1),
        Fraction(1),
        Classification.OPAQUE,
        3,
        2,
        "ternary digit sum mod 3",
    ),
)

_BY_NAME = {entry.name: entry for entry in ENTRIES}


def entry(name: str) -> CorpusEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownCorpusName(
            f"no bundled machine named {name!r}; have: {', '.join(_BY_NAME)}"
        ) from None


def build(name: str) -> Dfao:
    """Build a bundled machine by name."""
    return entry(name).builder()


def names() -> tuple[str, ...]:
    return tuple(_BY_NAME)


# Independent term evaluators.  Each one computes the sequence from its
# own recurrence or closed form, never through a machine, so agreement
# with Dfao.generate is a real check.


def _thue_morse_terms(n_terms: int) -> list[str]:
    # u(0) = 0, u(2n) = u(n), u(2n+1) = 1 - u(n)
    u = [0] * max(n_terms, 1)
    for n in range(1, n_terms):
        u[n] = u[n // 2] if n % 2 == 0 else 1 - u[n // 2]
    return [str(u[n]) for n in range(n_terms)]


def _period_doubling_terms(n_terms: int) -> list[str]:
    # u(n) = (exponent of 2 in n + 1) mod 2
    out = []
    for n in range(n_terms):
        m = n + 1
        val = (m & -m).bit_length() - 1
        out.append(str(val % 2))
    return out


def _golay_shapiro_terms(n_terms: int) -> list[str]:
    # u(0) = 1, u(2n) = u(n), u(4n+1) = u(n), u(4n+3) = -u(2n+1)
    u = [0] * max(n_terms, 1)
    u[0] = 1
    for n in range(1, n_terms):
        if n % 2 == 0:
            u[n] = u[n // 2]
        elif n % 4 == 1:
            u[n] = u[n // 4]
        else:
            u[n] = -u[(n - 1) // 2]
    return [str(u[n]) for n in range(n_terms)]


def _paperfolding_terms(n_terms: int) -> list[str]:
    # u(2**a * (2m+1)) = (-1)**m; that covers every n >= 1, and term 0 is
    # pinned to 1 by the machine's initial output.
    out = ["1"]
    for n in range(1, n_terms):
        a = (n & -n).bit_length() - 1
        m = (n >> a) >> 1
        out.append("1" if m % 2 == 0 else "-1")
    return out[:n_terms]


def _baum_sweet_terms(n_terms: int) -> list[str]:
    # u(0) = 1, u(2n+1) = u(n), u(4n) = u(n), u(4n+2) = 0
    u = [0] * max(n_terms, 1)
    u[0] = 1
    for n in range(1, n_terms):
        if n % 2 == 1:
            u[n] = u[(n - 1) // 2]
        elif n % 4 == 0:
            u[n] = u[n // 4]
        else:
            u[n] = 0
    return [str(u[n]) for n in range(n_terms)]


def _ternary_digit_sum_terms(n_terms: int) -> list[str]:
    out = []
    for n in range(n_terms):
        total = 0
        while n:
            n, r = divmod(n, 3)
            total += r
        out.append(str(total % 3))
    return out


_REFERENCES: dict[str, Callable[[int], list[str]]] = {
    "thue_morse": _thue_morse_terms,
    "period_doubling": _period_doubling_terms,
    "golay_shapiro": _golay_shapiro_terms,
    "paperfolding": _paperfolding_terms,
    "baum_sweet": _baum_sweet_terms,
    "ternary_digit_sum": _ternary_digit_sum_terms,
}


def sequence_checks(name: str, n_terms: int) -> bool:
    """Compare the machine's first n_terms against the bundled independent
    evaluator.  Raises NoRecurrence for entries without one (one_state,
    identity2, hanoi)."""
    ent = entry(name)
    reference = _REFERENCES.get(name)
    if reference is None:
        raise NoRecurrence(f"no independent evaluator bundled for {name!r}")
    return list(ent.builder().generate(n_terms)) == reference(n_terms)


@dataclass(frozen=True)
class RowResult:
    """Outcome of checking one corpus entry against its golden values."""

    entry: CorpusEntry
    report: AnalysisReport
    oracle_length: int
    oracle_value: DyadicDistance
    sequence_ok: bool | None  # None when no independent evaluator exists

    @property
    def analysis_ok(self) -> bool:
        e, r = self.entry, self.report
        witness_ok = (
            e.witness_length is None
            or (r.witness is not None and len(r.witness.word) == e.witness_length)
        )
        return (
            r.opacity.as_dyadic() == e.opacity
            and r.complexity == e.complexity
            and r.classification == e.classification
            and r.states_count == e.states
            and witness_ok
        )

    @property
    def oracle_ok(self) -> bool:
        return self.oracle_value == self.entry.opacity

    @property
    def passed(self) -> bool:
        return self.analysis_ok and self.oracle_ok and self.sequence_ok is not False


def evaluate_entry(ent: CorpusEntry, sequence_terms: int = 1000) -> RowResult:
    """Run analysis, oracle and sequence comparison for one entry."""
    dfao = ent.builder()
    report = analyze_sequence(dfao)
    bound = oracle_bound(report.intrinsic.automaton)
    value = brute_force_opacity(report.intrinsic.automaton, bound)
    if ent.name in _REFERENCES:
        seq_ok: bool | None = sequence_checks(ent.name, sequence_terms)
    else:
        seq_ok = None
    return RowResult(ent, report, bound, value, seq_ok)


def evaluate_all(sequence_terms: int = 1000) -> tuple[RowResult, ...]:
    return tuple(evaluate_entry(ent, sequence_terms) for ent in ENTRIES)
