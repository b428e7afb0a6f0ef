"""
reduced_free_group.py

Words in the reduced free group RF_n and the reduced Magnus expansion.

RF_n is generated by x_1, ..., x_n subject to [w x_i w^-1, x_i] = 1 for every
word w and every i. Elements are kept as plain (unnormalized) words; there is
no normal form here. Equality of two words is decided by comparing their
reduced Magnus expansions M(x_i) = 1 + X_i in A_n.

Injectivity caveat
------------------
`rf_equal` returning True means "equal Magnus images". Reading that as
equality in RF_n relies on the reduced Magnus expansion being injective on
RF_n, a classical result (Milnor / Habegger-Lin) that is not re-proved here.
`relation_closure_check` is the desk-scale sanity check of the other
direction: inserting defining relators never changes the image.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.errors import BraidSyntaxError, StrandMismatchError
from src.core.reduced_algebra import ReducedPolynomial, monomial_key, poly_one

Letter = Tuple[int, int]

_TOKEN = re.compile(r"\S+")
_GROUP_LETTER = re.compile(r"x([0-9]+)(')?")


@dataclass(frozen=True)
class GroupWord:
    """A word in x_1..x_n and their inverses; letters are (index, sign)."""

    strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for index, sign in letters:
            if not 1 <= index <= self.strands:
                raise ValueError(
                    f"Generator x{index} out of range for n={self.strands}"
                )
            if sign not in (1, -1):
                raise ValueError(f"Letter sign must be +1 or -1, got {sign}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if other.strands != self.strands:
            raise StrandMismatchError(self.strands, other.strands)
        return GroupWord(self.strands, self.letters + other.letters)

    def __invert__(self) -> "GroupWord":
        return word_inverse(self)

    def __str__(self) -> str:
        return format_group_word(self)


def parse_group_word(text: str, strands: int) -> GroupWord:
    """
    Parse whitespace-separated `x<k>` / `x<k>'` tokens.

    Raises:
        BraidSyntaxError: unknown token or index out of range.
    """
    letters: List[Letter] = []
    for match in _TOKEN.finditer(text):
        token = match.group(0)
        parsed = _GROUP_LETTER.fullmatch(token)
        if parsed is None:
            raise BraidSyntaxError(f"Invalid group letter '{token}'", text, match.start())
        index = int(parsed.group(1))
        if not 1 <= index <= strands:
            raise BraidSyntaxError(
                f"Generator x{index} out of range for n={strands}", text, match.start()
            )
        letters.append((index, -1 if parsed.group(2) else 1))
    return GroupWord(strands, tuple(letters))


def format_group_word(w: GroupWord) -> str:
    return " ".join(f"x{i}" + ("'" if s < 0 else "") for i, s in w.letters)


def identity_word(n: int) -> GroupWord:
    return GroupWord(n, ())


def generator(i: int, n: int) -> GroupWord:
    return GroupWord(n, ((i, 1),))


def word_product(*words: GroupWord) -> GroupWord:
    if not words:
        raise ValueError("word_product needs at least one word")
    result = words[0]
    for w in words[1:]:
        result = result * w
    return result


def product_of_generators(n: int) -> GroupWord:
    """x_1 x_2 ... x_n."""
    return GroupWord(n, tuple((i, 1) for i in range(1, n + 1)))


def word_inverse(w: GroupWord) -> GroupWord:
    return GroupWord(w.strands, tuple((i, -s) for i, s in reversed(w.letters)))


def conjugate(w: GroupWord, by: GroupWord) -> GroupWord:
    """by * w * by^-1."""
    return word_product(by, w, word_inverse(by))


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    """[a, b] = a b a^-1 b^-1."""
    return word_product(a, b, word_inverse(a), word_inverse(b))


def relation_word(omega: GroupWord, i: int) -> GroupWord:
    """Defining relator [omega x_i omega^-1, x_i] of RF_n."""
    x = generator(i, omega.strands)
    return commutator(conjugate(x, omega), x)


def free_reduce(w: GroupWord) -> GroupWord:
    """Cancel adjacent x x^-1 pairs until none is left."""
    stack: List[Letter] = []
    for index, sign in w.letters:
        if stack and stack[-1][0] == index and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((index, sign))
    return GroupWord(w.strands, tuple(stack))


def exponent_sums(w: GroupWord) -> List[int]:
    """e_i = signed count of x_i in w, for i = 1..n."""
    sums = [0] * w.strands
    for index, sign in w.letters:
        sums[index - 1] += sign
    return sums


def substitute(
    w: GroupWord,
    images: Sequence[GroupWord],
    reduce: bool = True,
) -> GroupWord:
    """
    Replace x_i by images[i-1] and x_i^-1 by its inverse.

    The result lives on the strand count of the images. It is freely
    reduced unless `reduce` is False.

    Raises:
        KeyError: a letter of w has no image.
    """
    if images:
        target = images[0].strands
        for image in images:
            if image.strands != target:
                raise StrandMismatchError(target, image.strands)
    else:
        target = w.strands
    inverses: Dict[int, Tuple[Letter, ...]] = {}
    letters: List[Letter] = []
    for index, sign in w.letters:
        if index > len(images):
            raise KeyError(f"No image for generator x{index}")
        if sign > 0:
            letters.extend(images[index - 1].letters)
        else:
            if index not in inverses:
                inverses[index] = word_inverse(images[index - 1]).letters
            letters.extend(inverses[index])
    result = GroupWord(target, tuple(letters))
    return free_reduce(result) if reduce else result


def magnus(w: GroupWord) -> ReducedPolynomial:
    """Reduced Magnus expansion: product of (1 + X_i) or (1 - X_i) per letter."""
    result = poly_one(w.strands)
    for index, sign in w.letters:
        result = result.mul_linear(index, sign)
    return result


def rf_equal(a: GroupWord, b: GroupWord) -> bool:
    """Equality in RF_n through the reduced Magnus expansion."""
    if a.strands != b.strands:
        raise StrandMismatchError(a.strands, b.strands)
    return magnus(a) == magnus(b)


def magnus_certificate(
    a: ReducedPolynomial,
    b: ReducedPolynomial,
) -> Optional[Dict[str, object]]:
    """
    First monomial (canonical order) on which two expansions differ, with
    both coefficients; None when they are equal.
    """
    if a == b:
        return None
    monomials = set(m for m, _ in a.terms()) | set(m for m, _ in b.terms())
    for monomial in sorted(monomials, key=monomial_key):
        ca, cb = a.coefficient(monomial), b.coefficient(monomial)
        if ca != cb:
            return {"monomial": list(monomial), "left": str(ca), "right": str(cb)}
    raise RuntimeError("Polynomials differ but no differing monomial was found")


def random_group_word(n: int, length: int, seed: int) -> GroupWord:
    """Uniform i.i.d. letters x_i^{+-1}; deterministic for a fixed seed."""
    if n < 1:
        return identity_word(n)
    rng = random.Random(seed)
    return GroupWord(
        n,
        tuple((rng.randint(1, n), rng.choice((1, -1))) for _ in range(length)),
    )


def _all_reduced_words(n: int, max_len: int) -> Iterable[GroupWord]:
    letters = [(i, s) for i in range(1, n + 1) for s in (1, -1)]
    for length in range(max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            if any(a[0] == b[0] and a[1] == -b[1] for a, b in zip(combo, combo[1:])):
                continue
            yield GroupWord(n, combo)


def relation_closure_check(
    n: int = 3,
    max_len: int = 4,
    max_omega: int = 1,
) -> Dict[str, object]:
    """
    Insert every defining relator [w x_i w^-1, x_i] with |w| <= max_omega at
    every position of every reduced word of length <= max_len, and check
    the Magnus image never changes. Each expansion is computed from scratch.

    Returns a report dict with counts and the list of failing
    (word, relator, position) triples (empty when all checks pass).
    """
    relators = [
        relation_word(omega, i)
        for omega in _all_reduced_words(n, max_omega)
        for i in range(1, n + 1)
    ]
    failures: List[Dict[str, object]] = []
    words = 0
    checks = 0
    for u in _all_reduced_words(n, max_len):
        words += 1
        expected = magnus(u)
        for relator in relators:
            for cut in range(len(u) + 1):
                checks += 1
                inserted = GroupWord(
                    n, u.letters[:cut] + relator.letters + u.letters[cut:]
                )
                if magnus(inserted) != expected:
                    failures.append({
                        "word": format_group_word(u),
                        "relator": format_group_word(relator),
                        "position": cut,
                    })
    return {
        "n": n,
        "words": words,
        "relators": len(relators),
        "checks": checks,
        "failures": failures,
    }
