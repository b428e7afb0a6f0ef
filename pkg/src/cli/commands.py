"""
commands.py

One function per `hbraid` sub-command. Each takes already-validated
arguments, does the work through src.core and returns a Verdict; printing
and exit codes are handled by main.py.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Optional

from src.core.artin_rep import (
    braid_equal,
    braid_order,
    classicality_obstruction,
    phi,
    torsion_obstruction,
)
from src.core.braid_words import (
    delete_strands,
    format_braid,
    parse_braid,
    permutation_of,
    restrict_to_cycle,
)
from src.core.reduced_free_group import format_group_word, magnus, parse_group_word
from src.core.verifier import fuzz_suite, torsion_check


class Outcome(str, Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not-equal"
    HOLDS = "holds"
    FAILS = "fails"
    REPORT = "report"


# equal/holds/report -> 0, not-equal/fails -> 1; usage errors are 2.
EXIT_CODES = {
    Outcome.EQUAL: 0,
    Outcome.HOLDS: 0,
    Outcome.REPORT: 0,
    Outcome.NOT_EQUAL: 1,
    Outcome.FAILS: 1,
}

DEFAULT_ORDER_BOUND = 24


@dataclass
class Verdict:
    command: str
    outcome: Outcome
    payload: Dict[str, object] = field(default_factory=dict)
    summary: str = ""

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.outcome]

    def to_json(self) -> Dict[str, object]:
        return {"command": self.command, "outcome": self.outcome.value, **self.payload}


def cmd_equal(n: int, word_a: str, word_b: str) -> Verdict:
    a = parse_braid(word_a, n)
    b = parse_braid(word_b, n)
    verdict = braid_equal(a, b)
    payload: Dict[str, object] = {"n": n, "a": format_braid(a), "b": format_braid(b)}
    if verdict:
        return Verdict("equal", Outcome.EQUAL, payload, "equal: equal")
    payload["certificate"] = verdict.certificate()
    return Verdict(
        "equal", Outcome.NOT_EQUAL, payload,
        f"equal: not-equal (separated at x{verdict.index})",
    )


def cmd_artin(n: int, word: str) -> Verdict:
    w = parse_braid(word, n)
    image = phi(w)
    payload = {**image.to_json(), "permutation": list(permutation_of(w).images)}
    return Verdict("artin", Outcome.REPORT, payload, f"artin: {len(w)} letters on {n} strands")


def cmd_magnus(n: int, group_word: str) -> Verdict:
    w = parse_group_word(group_word, n)
    poly = magnus(w)
    payload = {"n": n, "word": format_group_word(w), "terms": poly.to_json()}
    return Verdict("magnus", Outcome.REPORT, payload, f"magnus: {poly}")


def cmd_obstruction(n: int, word: str) -> Verdict:
    w = parse_braid(word, n)
    holds, witness = classicality_obstruction(w)
    f_value, moves = torsion_obstruction(w)
    payload = {
        "n": n,
        "word": format_braid(w),
        "f_value": str(f_value),
        "lambda_moves_it": moves,
        "classical_obstruction_holds": holds,
        "witness": format_group_word(witness),
    }
    outcome = Outcome.HOLDS if holds else Outcome.FAILS
    summary = (
        f"obstruction: classicality {'holds' if holds else 'fails'}, "
        f"F = {f_value}, lambda moves it: {moves}"
    )
    return Verdict("obstruction", outcome, payload, summary)


def cmd_torsion_check(p: int, trials: int, max_len: int, seed: int) -> Verdict:
    report = torsion_check(p, trials, max_len, seed)
    outcome = Outcome.HOLDS if report["holds"] else Outcome.FAILS
    summary = f"torsion-check: {report['passed']}/{trials} passed on p={p}"
    return Verdict("torsion-check", outcome, report, summary)


def cmd_fuzz(n: int, trials: int, seed: int, max_len: int = 10) -> Verdict:
    report = fuzz_suite(n, trials, seed, max_len)
    outcome = Outcome.HOLDS if report["holds"] else Outcome.FAILS
    rows = ", ".join(
        f"{row['property']} {row['passed']}/{row['checks']}" for row in report["properties"]
    )
    return Verdict("fuzz", outcome, report, f"fuzz: {rows}")


def cmd_delete(
    n: int,
    word: str,
    keep: Optional[Iterable[int]] = None,
    cycle_of: Optional[int] = None,
) -> Verdict:
    """Delete strands by an explicit keep set, or keep the cycle through `cycle_of`."""
    w = parse_braid(word, n)
    if cycle_of is not None:
        if not 1 <= cycle_of <= n:
            raise ValueError(f"Component {cycle_of} out of range for {n} strands")
        keep = sorted(permutation_of(w).cycle_of(cycle_of))
        result = restrict_to_cycle(w, cycle_of)
    elif keep is not None:
        keep = sorted(set(keep))
        result = delete_strands(w, keep)
    else:
        raise ValueError("delete needs a keep set or a cycle start")
    payload = {"n": n, "keep": keep, "strands": result.strands, "word": format_braid(result)}
    return Verdict("delete", Outcome.REPORT, payload, f"delete: '{format_braid(result)}'")


def cmd_order(n: int, word: str, bound: Optional[int] = None) -> Verdict:
    w = parse_braid(word, n)
    perm = permutation_of(w)
    if bound is None:
        bound = DEFAULT_ORDER_BOUND
    order = braid_order(w, bound)
    payload = {
        "n": n,
        "word": format_braid(w),
        "order": order,
        "bound": bound,
        "permutation": list(perm.images),
    }
    summary = f"order: {order if order is not None else f'none up to {bound}'}"
    return Verdict("order", Outcome.REPORT, payload, summary)
