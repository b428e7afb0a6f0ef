"""
verifier.py

Randomized verification drivers.

- torsion_check: replays the torsion-freeness argument on random welded
  braids. For every beta on p strands, u = phi(beta)(x_1 ... x_p) must have
  F(M(u)) = 1 and must be moved by phi(lambda_p); equivalently
  beta^-1 lambda_p beta never passes the classicality condition.
- fuzz_suite: the invariant suites (homomorphism, move invariance,
  F-invariance, conjugacy shape) on random inputs.

Both return plain dict reports. Trial k draws its inputs from
derive_seed(seed, k), so a report only depends on its arguments, and
individual trials can be replayed (or spread over workers) independently.
"""

from __future__ import annotations

import hashlib
import logging
import random
from typing import Dict, List

from src.core.artin_rep import (
    endo_compose,
    endo_equal,
    generator_conjugacy_check,
    lambda_conjugate_report,
    phi,
    phi_generator,
    torsion_obstruction,
)
from src.core.braid_words import (
    Alphabet,
    Move,
    alphabet_letters,
    applicable_moves,
    apply_move,
    compose,
    format_braid,
    random_word,
)
from src.core.reduced_algebra import coefficient_sum_top
from src.core.reduced_free_group import format_group_word, magnus, random_group_word


def derive_seed(master: int, trial: int, label: str = "") -> int:
    """Deterministic per-trial seed (64 bits of SHA-256)."""
    digest = hashlib.sha256(f"{master}:{label}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def torsion_check(
    p: int,
    trials: int,
    max_len: int = 12,
    seed: int = 0,
) -> Dict[str, object]:
    """
    Run `trials` random welded braids of length <= max_len on p strands
    through the torsion obstruction.

    Returns:
        dict with p, trials, max_len, seed, passed, failed, holds and the
        list of counterexamples (word, f_value, lambda_moves_it, ...).
    """
    if p < 2:
        raise ValueError(f"torsion-check needs p >= 2, got {p}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if max_len < 0:
        raise ValueError(f"max_len must be >= 0, got {max_len}")
    if not is_prime(p):
        logging.warning("p = %s is not prime; running the check anyway.", p)

    logging.info("Torsion check: p=%s, trials=%s, max_len=%s, seed=%s.",
                 p, trials, max_len, seed)
    counterexamples: List[Dict[str, object]] = []
    passed = 0
    for trial in range(trials):
        rng = random.Random(derive_seed(seed, trial, "torsion"))
        length = rng.randint(0, max_len)
        beta = random_word(p, length, Alphabet.WELDED, rng.getrandbits(64))
        f_value, moves = torsion_obstruction(beta)
        report = lambda_conjugate_report(beta)
        ok = (
            f_value == 1
            and moves
            and not report["classical_condition_holds"]
            and report["consistent"]
        )
        if ok:
            passed += 1
        else:
            logging.warning("Counterexample at trial %s: '%s'.", trial, format_braid(beta))
            counterexamples.append({
                "trial": trial,
                "word": format_braid(beta),
                "f_value": str(f_value),
                "lambda_moves_it": moves,
                "classical_condition_holds": report["classical_condition_holds"],
            })
        if (trial + 1) % 100 == 0:
            logging.debug("Torsion check: %s/%s trials done.", trial + 1, trials)

    failed = trials - passed
    logging.info("Torsion check finished: %s passed, %s failed.", passed, failed)
    return {
        "p": p,
        "trials": trials,
        "max_len": max_len,
        "seed": seed,
        "passed": passed,
        "failed": failed,
        "holds": failed == 0,
        "counterexamples": counterexamples,
    }


def _row(name: str) -> Dict[str, object]:
    return {"property": name, "checks": 0, "passed": 0, "failed": 0, "counterexample": None}


def _record(row: Dict[str, object], ok: bool, example: str) -> None:
    row["checks"] += 1
    if ok:
        row["passed"] += 1
    else:
        row["failed"] += 1
        if row["counterexample"] is None:
            row["counterexample"] = example
            logging.warning("Property '%s' failed on %s.", row["property"], example)


def fuzz_suite(
    n: int,
    trials: int,
    seed: int = 0,
    max_len: int = 10,
) -> Dict[str, object]:
    """
    Run the property suites on random inputs.

    Properties:
        homomorphism:    phi(ab) = phi(a) o phi(b)
        move_invariance: phi is unchanged by every applicable move (and by
                         one random insertion) on a random word
        f_invariance:    F(M(phi(g)(x))) = F(M(x)) for every generator g
        conjugacy_shape: phi(w)(x_i) has degree-1 part X_{pi^-1(i)}
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    logging.info("Fuzz suite: n=%s, trials=%s, seed=%s.", n, trials, seed)

    rows = {
        name: _row(name)
        for name in ("homomorphism", "move_invariance", "f_invariance", "conjugacy_shape")
    }
    letters = alphabet_letters(n, Alphabet.WELDED)

    for trial in range(trials):
        rng = random.Random(derive_seed(seed, trial, "fuzz"))

        # homomorphism
        a = random_word(n, rng.randint(0, max_len), Alphabet.WELDED, rng.getrandbits(64))
        b = random_word(n, rng.randint(0, max_len), Alphabet.WELDED, rng.getrandbits(64))
        ok = endo_equal(phi(compose(a, b)), endo_compose(phi(a), phi(b)))
        _record(rows["homomorphism"], ok, f"a='{format_braid(a)}', b='{format_braid(b)}'")

        # move invariance
        w = random_word(n, rng.randint(0, max_len), Alphabet.WELDED, rng.getrandbits(64))
        image = phi(w)
        for move, site in applicable_moves(w):
            ok = endo_equal(image, phi(apply_move(w, move, site)))
            _record(rows["move_invariance"], ok,
                    f"w='{format_braid(w)}', move={move.value}, site={site}")
        if n >= 2:
            move = rng.choice((Move.CANCEL_INSERT, Move.VIRTUAL_R2_INSERT))
            site = rng.randint(1, len(w) + 1)
            index = rng.randint(1, n - 1)
            moved = apply_move(w, move, site, index=index, sign=rng.choice((1, -1)))
            _record(rows["move_invariance"], endo_equal(image, phi(moved)),
                    f"w='{format_braid(w)}', move={move.value}, site={site}")

        # F-invariance
        x = random_group_word(n, rng.randint(0, 8), rng.getrandbits(64))
        expected = coefficient_sum_top(magnus(x))
        for g in letters:
            ok = coefficient_sum_top(magnus(phi_generator(g, n)(x))) == expected
            _record(rows["f_invariance"], ok, f"g={g}, x='{format_group_word(x)}'")

        # conjugacy shape
        _record(rows["conjugacy_shape"], generator_conjugacy_check(w),
                f"w='{format_braid(w)}'")

        if (trial + 1) % 10 == 0:
            logging.debug("Fuzz suite: %s/%s trials done.", trial + 1, trials)

    results = list(rows.values())
    holds = all(row["failed"] == 0 for row in results)
    logging.info("Fuzz suite finished: %s.", "all passing" if holds else "FAILURES")
    return {"n": n, "trials": trials, "seed": seed, "holds": holds, "properties": results}
