"""
artin_rep.py

The homotopy welded Artin representation phi: hWB_n -> Aut(RF_n), and the
decisions built on it.

Generators act on x_1..x_n by:

    phi(rho_i):        x_i -> x_{i+1},            x_{i+1} -> x_i
    phi(sigma_i):      x_i -> x_{i+1},            x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    phi(sigma_i^-1):   x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i

and every other generator is fixed.

Conventions
-----------
- phi(ab) = phi(a) o phi(b) with (f o g)(x) = f(g(x)): the last letter of
  a word acts first on a generator.
- Together with pi(ab) = pi(b) o pi(a) (see braid_words.permutation_of),
  phi(w)(x_i) is a conjugate of x_{pi(w)^-1(i)}. With these choices
  pi(lambda_n) = tau_n and phi(lambda_n)(x_n) = x_1 both hold, and
  phi(chi_ij) conjugates x_i by x_j.

phi is injective on hWB_n, so braid_equal is a complete decision procedure
as long as the Magnus comparison in reduced_free_group is (see the caveat
there).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, NamedTuple, Optional, Tuple

from src.core.braid_words import (
    BraidWord,
    GeneratorLetter,
    compose,
    invert_word,
    lambda_braid,
    permutation_of,
)
from src.core.errors import StrandMismatchError
from src.core.permutation import Permutation
from src.core.reduced_algebra import (
    ReducedPolynomial,
    coefficient_sum_top,
    poly_variable,
)
from src.core.reduced_free_group import (
    GroupWord,
    format_group_word,
    generator,
    magnus,
    magnus_certificate,
    product_of_generators,
    rf_equal,
    substitute,
)


@dataclass(frozen=True)
class Endomorphism:
    """Endomorphism of RF_n given by the images of x_1, ..., x_n."""

    strands: int
    images: Tuple[GroupWord, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if len(images) != self.strands:
            raise ValueError(
                f"Expected {self.strands} images, got {len(images)}"
            )
        for image in images:
            if image.strands != self.strands:
                raise StrandMismatchError(self.strands, image.strands)
        object.__setattr__(self, "images", images)

    def __call__(self, word: GroupWord) -> GroupWord:
        """Apply to a word of RF_n."""
        return substitute(word, self.images)

    def __mul__(self, other: "Endomorphism") -> "Endomorphism":
        return endo_compose(self, other)

    def to_json(self) -> Dict[str, object]:
        return {
            "n": self.strands,
            "images": [format_group_word(image) for image in self.images],
        }


def identity_endomorphism(n: int) -> Endomorphism:
    return Endomorphism(n, tuple(generator(i, n) for i in range(1, n + 1)))


@lru_cache(maxsize=1024)
def phi_generator(g: GeneratorLetter, n: int) -> Endomorphism:
    """Tabulated image of a single letter."""
    i = g.index
    if not 1 <= i <= n - 1:
        raise ValueError(f"Generator index {i} out of range for {n} strands")
    images = [generator(k, n) for k in range(1, n + 1)]
    x_i, x_j = (i, 1), (i + 1, 1)
    x_i_inv, x_j_inv = (i, -1), (i + 1, -1)
    if g.is_virtual:
        images[i - 1] = GroupWord(n, (x_j,))
        images[i] = GroupWord(n, (x_i,))
    elif g.sign > 0:
        images[i - 1] = GroupWord(n, (x_j,))
        images[i] = GroupWord(n, (x_j_inv, x_i, x_j))
    else:
        images[i - 1] = GroupWord(n, (x_i, x_j, x_i_inv))
        images[i] = GroupWord(n, (x_i,))
    return Endomorphism(n, tuple(images))


def endo_compose(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """f o g: x -> f(g(x))."""
    if f.strands != g.strands:
        raise StrandMismatchError(f.strands, g.strands)
    return Endomorphism(
        f.strands, tuple(substitute(image, f.images) for image in g.images)
    )


@lru_cache(maxsize=4096)
def phi(w: BraidWord) -> Endomorphism:
    """Artin image of a braid word; phi of the empty word is the identity."""
    result = identity_endomorphism(w.strands)
    for letter in w.letters:
        result = endo_compose(result, phi_generator(letter, w.strands))
    return result


def endo_equal(f: Endomorphism, g: Endomorphism) -> bool:
    if f.strands != g.strands:
        raise StrandMismatchError(f.strands, g.strands)
    return all(rf_equal(a, b) for a, b in zip(f.images, g.images))


def first_difference(
    f: Endomorphism,
    g: Endomorphism,
) -> Optional[Tuple[int, ReducedPolynomial, ReducedPolynomial]]:
    """(i, M(f(x_i)), M(g(x_i))) for the first i where they differ, else None."""
    if f.strands != g.strands:
        raise StrandMismatchError(f.strands, g.strands)
    for i, (a, b) in enumerate(zip(f.images, g.images), start=1):
        ma, mb = magnus(a), magnus(b)
        if ma != mb:
            return i, ma, mb
    return None


@dataclass(frozen=True)
class EqualityVerdict:
    """
    Outcome of braid_equal. Truthy iff the braids are equal; otherwise
    `index` is the first generator x_i whose images are separated and
    `magnus_a` / `magnus_b` are the two expansions.
    """

    equal: bool
    index: Optional[int] = None
    magnus_a: Optional[ReducedPolynomial] = field(default=None, compare=False)
    magnus_b: Optional[ReducedPolynomial] = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.equal

    def certificate(self) -> Optional[Dict[str, object]]:
        if self.equal:
            return None
        return {
            "index": self.index,
            "magnus_a": self.magnus_a.to_json(),
            "magnus_b": self.magnus_b.to_json(),
            "first_difference": magnus_certificate(self.magnus_a, self.magnus_b),
        }


def braid_equal(a: BraidWord, b: BraidWord) -> EqualityVerdict:
    """Decide a = b in hWB_n by comparing Artin images."""
    if a.strands != b.strands:
        raise StrandMismatchError(a.strands, b.strands)
    difference = first_difference(phi(a), phi(b))
    if difference is None:
        return EqualityVerdict(True)
    index, ma, mb = difference
    return EqualityVerdict(False, index, ma, mb)


def braid_order(w: BraidWord, bound: int) -> Optional[int]:
    """Least k in [1, bound] with w^k trivial, or None."""
    target = identity_endomorphism(w.strands)
    step = phi(w)
    current = step
    for k in range(1, bound + 1):
        if endo_equal(current, target):
            return k
        current = endo_compose(current, step)
    return None


def conjugate_braid(w: BraidWord, by: BraidWord) -> BraidWord:
    """by^-1 w by."""
    return compose(compose(invert_word(by), w), by)


# -----------------------------------------------------------------------------
# Obstructions
# -----------------------------------------------------------------------------
class ClassicalityResult(NamedTuple):
    holds: bool
    witness: GroupWord


class TorsionResult(NamedTuple):
    f_value: int
    lambda_moves_it: bool


def classicality_obstruction(w: BraidWord) -> ClassicalityResult:
    """
    Check phi(w)(x_1 ... x_n) = x_1 ... x_n, which every classical braid
    satisfies. holds=False proves w is not classical; holds=True proves
    nothing. The witness is phi(w)(x_1 ... x_n).
    """
    product = product_of_generators(w.strands)
    witness = phi(w)(product)
    return ClassicalityResult(rf_equal(witness, product), witness)


def torsion_obstruction(w: BraidWord) -> TorsionResult:
    """
    With u = phi(w)(x_1 ... x_n): f_value = F(M(u)) and lambda_moves_it
    tells whether phi(lambda_n)(u) differs from u. For n >= 2 the expected
    outcome is always (1, True).
    """
    n = w.strands
    u = phi(w)(product_of_generators(n))
    shifted = phi(lambda_braid(n))(u)
    return TorsionResult(coefficient_sum_top(magnus(u)), not rf_equal(shifted, u))


def conjugacy_shape_holds(f: Endomorphism, perm: Permutation) -> bool:
    """
    True iff for every i the degree-1 part of M(f(x_i)) is exactly
    X_{perm^-1(i)}, as it is for a conjugate of that generator.
    """
    inverse = perm.inverse()
    for i, image in enumerate(f.images, start=1):
        expected = poly_variable(inverse(i), f.strands)
        if magnus(image).homogeneous_part(1) != expected:
            return False
    return True


def generator_conjugacy_check(w: BraidWord) -> bool:
    return conjugacy_shape_holds(phi(w), permutation_of(w))


def lambda_conjugate_report(beta: BraidWord) -> Dict[str, bool]:
    """
    Evaluate both forms of the fixed-point condition for beta^-1 lambda beta:

    - classical_condition_holds: phi(beta^-1 lambda beta) fixes x_1...x_p
    - lambda_fixes: phi(lambda)(phi(beta)(x_1...x_p)) = phi(beta)(x_1...x_p)

    The two are equivalent, and a classical conjugate of lambda would make
    both true.
    """
    p = beta.strands
    lam = lambda_braid(p)
    holds, _ = classicality_obstruction(conjugate_braid(lam, beta))
    u = phi(beta)(product_of_generators(p))
    fixes = rf_equal(phi(lam)(u), u)
    return {
        "classical_condition_holds": holds,
        "lambda_fixes": fixes,
        "consistent": holds == fixes,
    }

