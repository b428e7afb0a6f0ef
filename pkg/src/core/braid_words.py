"""
braid_words.py

Welded braid words on n strands.

A word is a sequence of letters read left to right, which is top to bottom
when the diagrams are stacked: the word ab is a stacked on top of b. Letters
are the Artin generators sigma_i^{+-1} (classical crossings) and the virtual
generators rho_i (virtual crossings, involutions, so they carry no sign).

Words are never normalized. Two words are the same braid when their Artin
images agree (see artin_rep.braid_equal); the rewriting moves below only
produce other words for the same braid.

Key components:
- GeneratorLetter / BraidWord: immutable letter and word types.
- parse_braid / format_braid: the `s1 s2' r1` grammar.
- lambda_braid, chi, warrow_product: named braids.
- Move / apply_move / applicable_moves: word-level welded isotopy moves.
- delete_strands / restrict_to_cycle: forgetting components.
- random_word: seeded fuzz input.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from src.core.errors import (
    BraidSyntaxError,
    MoveNotApplicableError,
    NotAdmissibleError,
    StrandMismatchError,
)
from src.core.permutation import Permutation


class Kind(str, Enum):
    CLASSICAL = "classical"
    VIRTUAL = "virtual"


class Alphabet(str, Enum):
    CLASSICAL = "classical"
    VIRTUAL = "virtual"
    WELDED = "welded"


class Move(str, Enum):
    CANCEL = "cancel"                        # s_i s_i' -> 1
    CANCEL_INSERT = "cancel-insert"          # 1 -> s_i s_i'
    VIRTUAL_R2 = "virtual-r2"                # r_i r_i -> 1
    VIRTUAL_R2_INSERT = "virtual-r2-insert"  # 1 -> r_i r_i
    FAR_COMMUTE = "far-commute"              # a b -> b a, |i - j| >= 2
    BRAID = "braid"                          # s_i s_j s_i -> s_j s_i s_j
    VIRTUAL_BRAID = "virtual-braid"          # r_i r_j r_i -> r_j r_i r_j
    MIXED = "mixed"                          # r_i r_i+1 s_i <-> s_i+1 r_i r_i+1
    OC = "oc"                                # r_i s_i+1 s_i <-> s_i+1 s_i r_i+1


INSERTION_MOVES = (Move.CANCEL_INSERT, Move.VIRTUAL_R2_INSERT)
REWRITING_MOVES = tuple(m for m in Move if m not in INSERTION_MOVES)

# Number of letters each rewriting move reads.
MOVE_WIDTH = {
    Move.CANCEL: 2,
    Move.VIRTUAL_R2: 2,
    Move.FAR_COMMUTE: 2,
    Move.BRAID: 3,
    Move.VIRTUAL_BRAID: 3,
    Move.MIXED: 3,
    Move.OC: 3,
}


@dataclass(frozen=True)
class GeneratorLetter:
    """sigma_index^sign (classical) or rho_index (virtual, sign always +1)."""

    kind: Kind
    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.index < 1:
            raise ValueError(f"Generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"Letter sign must be +1 or -1, got {self.sign}")
        if self.kind is Kind.VIRTUAL and self.sign != 1:
            # rho_i is an involution
            object.__setattr__(self, "sign", 1)

    @property
    def is_virtual(self) -> bool:
        return self.kind is Kind.VIRTUAL

    def inverse(self) -> "GeneratorLetter":
        if self.is_virtual:
            return self
        return GeneratorLetter(self.kind, self.index, -self.sign)

    def __str__(self) -> str:
        if self.is_virtual:
            return f"r{self.index}"
        return f"s{self.index}" + ("'" if self.sign < 0 else "")


def sigma(i: int, sign: int = 1) -> GeneratorLetter:
    return GeneratorLetter(Kind.CLASSICAL, i, sign)


def rho(i: int) -> GeneratorLetter:
    return GeneratorLetter(Kind.VIRTUAL, i)


@dataclass(frozen=True)
class BraidWord:
    """A braid word on `strands` strands; the empty word is the trivial braid."""

    strands: int
    letters: Tuple[GeneratorLetter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"Strand count must be >= 1, got {self.strands}")
        letters = tuple(self.letters)
        for letter in letters:
            if letter.index >= self.strands:
                raise ValueError(
                    f"Letter {letter} needs more than {self.strands} strands"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[GeneratorLetter]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __pow__(self, k: int) -> "BraidWord":
        return power(self, k)

    def __invert__(self) -> "BraidWord":
        return invert_word(self)

    def __str__(self) -> str:
        return format_braid(self)


# -----------------------------------------------------------------------------
# Grammar
# -----------------------------------------------------------------------------
_TOKEN = re.compile(r"\S+")
_BRAID_LETTER = re.compile(r"([sr])([0-9]+)(')?")


def parse_braid(text: str, strands: int) -> BraidWord:
    """
    Parse whitespace-separated `s<k>`, `s<k>'`, `r<k>` tokens. An apostrophe
    on `r<k>` is accepted and dropped.

    Raises:
        BraidSyntaxError: unknown token, or index >= strands.
    """
    if strands < 1:
        raise ValueError(f"Strand count must be >= 1, got {strands}")
    letters: List[GeneratorLetter] = []
    for match in _TOKEN.finditer(text):
        token = match.group(0)
        parsed = _BRAID_LETTER.fullmatch(token)
        if parsed is None:
            raise BraidSyntaxError(f"Invalid braid letter '{token}'", text, match.start())
        index = int(parsed.group(2))
        if not 1 <= index < strands:
            raise BraidSyntaxError(
                f"Generator index {index} out of range for {strands} strands",
                text,
                match.start(),
            )
        if parsed.group(1) == "r":
            letters.append(rho(index))
        else:
            letters.append(sigma(index, -1 if parsed.group(3) else 1))
    return BraidWord(strands, tuple(letters))


def format_braid(w: BraidWord) -> str:
    return " ".join(str(letter) for letter in w.letters)


# -----------------------------------------------------------------------------
# Group operations
# -----------------------------------------------------------------------------
def trivial(n: int) -> BraidWord:
    return BraidWord(n, ())


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Stack a on top of b."""
    if a.strands != b.strands:
        raise StrandMismatchError(a.strands, b.strands)
    return BraidWord(a.strands, a.letters + b.letters)


def invert_word(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(x.inverse() for x in reversed(w.letters)))


def power(w: BraidWord, k: int) -> BraidWord:
    base = w if k >= 0 else invert_word(w)
    return BraidWord(w.strands, base.letters * abs(k))


def permutation_of(w: BraidWord) -> Permutation:
    """
    pi(w): component i ends at position pi(w)(i). Follows
    pi(ab) = pi(b) o pi(a).
    """
    # position -> component currently there
    occupant = list(range(1, w.strands + 1))
    for letter in w.letters:
        i = letter.index
        occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
    images = [0] * w.strands
    for position, component in enumerate(occupant, start=1):
        images[component - 1] = position
    return Permutation(tuple(images))


def is_classical(w: BraidWord) -> bool:
    return not any(letter.is_virtual for letter in w.letters)


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()


# -----------------------------------------------------------------------------
# Named braids
# -----------------------------------------------------------------------------
def lambda_braid(n: int) -> BraidWord:
    """lambda_n = rho_1 rho_2 ... rho_{n-1}; permutation tau_n."""
    return BraidWord(n, tuple(rho(i) for i in range(1, n)))


def chi(i: int, j: int, n: int) -> BraidWord:
    """
    Pure generator chi_ij, whose Artin image conjugates x_i by x_j:

        i < j:  rho_i ... rho_{j-2} sigma_{j-1} rho_{j-1} ... rho_i
        j < i:  rho_{i-1} ... rho_j sigma_j rho_{j+1} ... rho_{i-1}
    """
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"chi needs 1 <= i != j <= n, got i={i}, j={j}, n={n}")
    if i < j:
        letters = (
            [rho(k) for k in range(i, j - 1)]
            + [sigma(j - 1)]
            + [rho(k) for k in range(j - 1, i - 1, -1)]
        )
    else:
        letters = (
            [rho(k) for k in range(i - 1, j - 1, -1)]
            + [sigma(j)]
            + [rho(k) for k in range(j + 1, i)]
        )
    return BraidWord(n, tuple(letters))


def warrow_product(
    arrows: Sequence[Tuple[int, int, int]],
    n: int,
) -> BraidWord:
    """
    Product of degree-1 w-arrow surgeries, in order. An arrow
    (tail, head, sign) contributes chi(head, tail)^sign: its Artin image
    conjugates x_head by x_tail.
    """
    letters: List[GeneratorLetter] = []
    for arrow in arrows:
        try:
            tail, head, sign = arrow
        except (TypeError, ValueError):
            raise ValueError(f"Malformed w-arrow {arrow!r}")
        if sign not in (1, -1):
            raise ValueError(f"w-arrow sign must be +1 or -1, got {sign}")
        if tail == head or not (1 <= tail <= n and 1 <= head <= n):
            raise ValueError(f"Malformed w-arrow tail={tail}, head={head} for n={n}")
        letters.extend(power(chi(head, tail, n), sign).letters)
    return BraidWord(n, tuple(letters))


# -----------------------------------------------------------------------------
# Moves
# -----------------------------------------------------------------------------
def _is_sigma(x: GeneratorLetter, index: int, sign: Optional[int] = None) -> bool:
    return (not x.is_virtual and x.index == index
            and (sign is None or x.sign == sign))


def _is_rho(x: GeneratorLetter, index: int) -> bool:
    return x.is_virtual and x.index == index


def _rewrite(
    move: Move,
    window: Sequence[GeneratorLetter],
) -> Optional[Tuple[GeneratorLetter, ...]]:
    """Replacement for `window`, or None if `move` does not match it."""
    if move is Move.CANCEL:
        a, b = window
        if not a.is_virtual and not b.is_virtual and a.index == b.index and a.sign == -b.sign:
            return ()
        return None

    if move is Move.VIRTUAL_R2:
        a, b = window
        if a.is_virtual and b.is_virtual and a.index == b.index:
            return ()
        return None

    if move is Move.FAR_COMMUTE:
        a, b = window
        if abs(a.index - b.index) >= 2:
            return (b, a)
        return None

    a, b, c = window
    if move is Move.BRAID:
        if (a == c and not a.is_virtual and not b.is_virtual
                and a.sign == b.sign and abs(a.index - b.index) == 1):
            return (b, a, b)
        return None

    if move is Move.VIRTUAL_BRAID:
        if a == c and a.is_virtual and b.is_virtual and abs(a.index - b.index) == 1:
            return (b, a, b)
        return None

    if move is Move.MIXED:
        # r_i r_i+1 s_i^e -> s_i+1^e r_i r_i+1
        i = a.index
        if a.is_virtual and _is_rho(b, i + 1) and _is_sigma(c, i):
            return (sigma(i + 1, c.sign), rho(i), rho(i + 1))
        # s_i+1^e r_i r_i+1 -> r_i r_i+1 s_i^e
        i = b.index
        if _is_sigma(a, i + 1) and b.is_virtual and _is_rho(c, i + 1):
            return (rho(i), rho(i + 1), sigma(i, a.sign))
        return None

    if move is Move.OC:
        # r_i s_i+1 s_i -> s_i+1 s_i r_i+1
        i = a.index
        if a.is_virtual and _is_sigma(b, i + 1, 1) and _is_sigma(c, i, 1):
            return (sigma(i + 1), sigma(i), rho(i + 1))
        # s_i+1 s_i r_i+1 -> r_i s_i+1 s_i
        i = b.index
        if _is_sigma(a, i + 1, 1) and _is_sigma(b, i, 1) and _is_rho(c, i + 1):
            return (rho(i), sigma(i + 1), sigma(i))
        # s_i' s_i+1' r_i -> r_i+1 s_i' s_i+1'
        i = a.index
        if _is_sigma(a, i, -1) and _is_sigma(b, i + 1, -1) and _is_rho(c, i):
            return (rho(i + 1), sigma(i, -1), sigma(i + 1, -1))
        # r_i+1 s_i' s_i+1' -> s_i' s_i+1' r_i
        i = b.index
        if _is_rho(a, i + 1) and _is_sigma(b, i, -1) and _is_sigma(c, i + 1, -1):
            return (sigma(i, -1), sigma(i + 1, -1), rho(i))
        return None

    raise ValueError(f"Unsupported rewriting move: {move}")


def apply_move(
    w: BraidWord,
    move: Move | str,
    site: int,
    index: int = 1,
    sign: int = 1,
) -> BraidWord:
    """
    Apply a welded isotopy move at 1-based letter position `site`.

    Rewriting moves replace the letters starting at `site`. Insertion moves
    insert before `site` (site = len(w) + 1 appends); `index` picks the
    generator and `sign` the first letter of the inserted cancelling pair.

    Raises:
        MoveNotApplicableError: the pattern does not match at `site`.
    """
    move = Move(move)
    letters = w.letters

    if move in INSERTION_MOVES:
        if not 1 <= site <= len(letters) + 1:
            raise MoveNotApplicableError(
                f"Insertion site {site} out of range for a word of length {len(letters)}"
            )
        if not 1 <= index < w.strands:
            raise MoveNotApplicableError(
                f"Generator index {index} out of range for {w.strands} strands"
            )
        if move is Move.CANCEL_INSERT:
            pair = (sigma(index, sign), sigma(index, -sign))
        else:
            pair = (rho(index), rho(index))
        return BraidWord(w.strands, letters[:site - 1] + pair + letters[site - 1:])

    width = MOVE_WIDTH[move]
    if not 1 <= site <= len(letters) - width + 1:
        raise MoveNotApplicableError(
            f"Move '{move.value}' needs {width} letters at site {site}; "
            f"word has {len(letters)}"
        )
    start = site - 1
    replacement = _rewrite(move, letters[start:start + width])
    if replacement is None:
        window = " ".join(str(x) for x in letters[start:start + width])
        raise MoveNotApplicableError(
            f"Move '{move.value}' does not apply to '{window}' at site {site}"
        )
    return BraidWord(w.strands, letters[:start] + replacement + letters[start + width:])


def applicable_moves(w: BraidWord) -> List[Tuple[Move, int]]:
    """All (move, site) pairs for which a rewriting move applies."""
    found: List[Tuple[Move, int]] = []
    letters = w.letters
    for move in REWRITING_MOVES:
        width = MOVE_WIDTH[move]
        for start in range(len(letters) - width + 1):
            if _rewrite(move, letters[start:start + width]) is not None:
                found.append((move, start + 1))
    return found


# -----------------------------------------------------------------------------
# Strand deletion
# -----------------------------------------------------------------------------
def delete_strands(w: BraidWord, keep: Iterable[int]) -> BraidWord:
    """
    Keep only the components in `keep`.

    Crossings are followed position by position; a crossing survives when
    both strands involved belong to kept components, and is re-indexed by
    the rank of its left strand among the kept strands at that height.

    Raises:
        NotAdmissibleError: pi(w) does not map `keep` onto itself.
    """
    keep_set: Set[int] = set(keep)
    if not keep_set:
        raise ValueError("At least one component must be kept")
    for label in keep_set:
        if not 1 <= label <= w.strands:
            raise ValueError(f"Component {label} out of range for {w.strands} strands")
    if not permutation_of(w).preserves(keep_set):
        raise NotAdmissibleError(
            f"Components {sorted(keep_set)} are not invariant under {permutation_of(w)}"
        )

    occupant = list(range(1, w.strands + 1))
    letters: List[GeneratorLetter] = []
    for letter in w.letters:
        i = letter.index
        left, right = occupant[i - 1], occupant[i]
        if left in keep_set and right in keep_set:
            rank = sum(1 for c in occupant[:i] if c in keep_set)
            letters.append(GeneratorLetter(letter.kind, rank, letter.sign))
        occupant[i - 1], occupant[i] = right, left
    return BraidWord(len(keep_set), tuple(letters))


def restrict_to_cycle(w: BraidWord, start: int = 1) -> BraidWord:
    """Keep only the components on the cycle of pi(w) through `start`."""
    cycle = permutation_of(w).cycle_of(start)
    return delete_strands(w, cycle)


# -----------------------------------------------------------------------------
# Random words
# -----------------------------------------------------------------------------
def alphabet_letters(n: int, alphabet: Alphabet | str) -> List[GeneratorLetter]:
    alphabet = Alphabet(alphabet)
    letters: List[GeneratorLetter] = []
    if alphabet in (Alphabet.CLASSICAL, Alphabet.WELDED):
        letters += [sigma(i, s) for i in range(1, n) for s in (1, -1)]
    if alphabet in (Alphabet.VIRTUAL, Alphabet.WELDED):
        letters += [rho(i) for i in range(1, n)]
    return letters


def random_word(
    n: int,
    length: int,
    alphabet: Alphabet | str,
    seed: int,
) -> BraidWord:
    """Uniform i.i.d. letters from `alphabet`; deterministic for a fixed seed."""
    if length < 0:
        raise ValueError(f"Word length must be >= 0, got {length}")
    choices = alphabet_letters(n, alphabet)
    if not choices:
        return trivial(n)
    rng = random.Random(seed)
    return BraidWord(n, tuple(rng.choice(choices) for _ in range(length)))
