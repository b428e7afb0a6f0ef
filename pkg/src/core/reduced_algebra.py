"""
reduced_algebra.py

Exact arithmetic in the algebra A_n of polynomials in non-commuting variables
X_1, ..., X_n with integer coefficients, in which every monomial containing a
repeated variable is zero.

A monomial is a tuple of pairwise distinct indices, the empty tuple being the
unit. A polynomial is a sparse map monomial -> non-zero int. Python ints are
unbounded, so coefficients never overflow however long the words expanded
through the Magnus map are.

Canonical order (used for output and hashing): by degree, then
lexicographically on the index tuple.
"""

from __future__ import annotations

from math import perm
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from src.core.errors import StrandMismatchError
from src.core.permutation import Permutation

Monomial = Tuple[int, ...]


def monomial_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """Sort key of the canonical term order."""
    return len(monomial), monomial


def monomial_count_bound(n: int) -> int:
    """N(n) = sum_k n!/(n-k)!, the number of square-free monomials."""
    return sum(perm(n, k) for k in range(n + 1))


class ReducedPolynomial:
    """
    An element of A_n. Instances are immutable; every operation returns a
    new polynomial.
    """

    __slots__ = ("_strands", "_terms", "_hash")

    def __init__(
        self,
        strands: int,
        terms: Mapping[Iterable[int], int] | None = None,
    ) -> None:
        if strands < 0:
            raise ValueError(f"Strand count must be >= 0, got {strands}")
        clean: Dict[Monomial, int] = {}
        for monomial, coefficient in (terms or {}).items():
            key = tuple(int(i) for i in monomial)
            if len(set(key)) != len(key):
                # repeated variable, the monomial vanishes
                continue
            for i in key:
                if not 1 <= i <= strands:
                    raise ValueError(
                        f"Variable X_{i} out of range for n={strands}"
                    )
            value = clean.get(key, 0) + int(coefficient)
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self._strands = strands
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, strands: int, terms: Dict[Monomial, int]) -> "ReducedPolynomial":
        """Build from terms already known to be square-free and non-zero."""
        poly = cls.__new__(cls)
        poly._strands = strands
        poly._terms = terms
        poly._hash = None
        return poly

    # -- accessors ---------------------------------------------------------

    @property
    def strands(self) -> int:
        return self._strands

    def coefficient(self, monomial: Iterable[int]) -> int:
        return self._terms.get(tuple(monomial), 0)

    def terms(self) -> Iterator[Tuple[Monomial, int]]:
        """Yield (monomial, coefficient) in canonical order."""
        for monomial in sorted(self._terms, key=monomial_key):
            yield monomial, self._terms[monomial]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Largest monomial length, -1 for the zero polynomial."""
        return max((len(m) for m in self._terms), default=-1)

    def homogeneous_part(self, k: int) -> "ReducedPolynomial":
        return ReducedPolynomial._from_clean(
            self._strands,
            {m: c for m, c in self._terms.items() if len(m) == k},
        )

    # -- ring structure ----------------------------------------------------

    def _check(self, other: "ReducedPolynomial") -> None:
        if other._strands != self._strands:
            raise StrandMismatchError(self._strands, other._strands)

    def _coerce(self, other) -> "ReducedPolynomial":
        if isinstance(other, ReducedPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return poly_constant(other, self._strands)
        return NotImplemented

    def __add__(self, other) -> "ReducedPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            value = terms.get(monomial, 0) + coefficient
            if value:
                terms[monomial] = value
            else:
                del terms[monomial]
        return ReducedPolynomial._from_clean(self._strands, terms)

    __radd__ = __add__

    def __neg__(self) -> "ReducedPolynomial":
        return ReducedPolynomial._from_clean(
            self._strands, {m: -c for m, c in self._terms.items()}
        )

    def __sub__(self, other) -> "ReducedPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "ReducedPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "ReducedPolynomial":
        if isinstance(other, int):
            if other == 0:
                return poly_zero(self._strands)
            return ReducedPolynomial._from_clean(
                self._strands, {m: c * other for m, c in self._terms.items()}
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, int] = {}
        for left, a in self._terms.items():
            used = set(left)
            for right, b in other._terms.items():
                if used.intersection(right):
                    continue
                monomial = left + right
                value = terms.get(monomial, 0) + a * b
                if value:
                    terms[monomial] = value
                else:
                    del terms[monomial]
        return ReducedPolynomial._from_clean(self._strands, terms)

    def __rmul__(self, other) -> "ReducedPolynomial":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def mul_linear(self, index: int, sign: int) -> "ReducedPolynomial":
        """
        Right multiplication by (1 + sign * X_index).

        Equivalent to self * (1 + sign*X_index) but only touches monomials
        that do not already contain X_index.
        """
        if not 1 <= index <= self._strands:
            raise ValueError(f"Variable X_{index} out of range for n={self._strands}")
        terms = dict(self._terms)
        for monomial, coefficient in self._terms.items():
            if index in monomial:
                continue
            extended = monomial + (index,)
            value = terms.get(extended, 0) + sign * coefficient
            if value:
                terms[extended] = value
            else:
                del terms[extended]
        return ReducedPolynomial._from_clean(self._strands, terms)

    # -- comparison and output ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = poly_constant(other, self._strands)
        if not isinstance(other, ReducedPolynomial):
            return NotImplemented
        return self._strands == other._strands and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants compare equal to ints, so they must hash like them
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and () in self._terms:
                self._hash = hash(self._terms[()])
            else:
                self._hash = hash((self._strands, tuple(self.terms())))
        return self._hash

    def to_json(self) -> List[Dict[str, Union[List[int], str]]]:
        """Canonical JSON form: [{"m": [...], "c": "int"}, ...]."""
        return [{"m": list(m), "c": str(c)} for m, c in self.terms()]

    @classmethod
    def from_json(cls, data, strands: int) -> "ReducedPolynomial":
        return cls(strands, {tuple(t["m"]): int(t["c"]) for t in data})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for monomial, coefficient in self.terms():
            name = "".join(f"X{i}" for i in monomial)
            if not name:
                body = str(abs(coefficient))
            elif abs(coefficient) == 1:
                body = name
            else:
                body = f"{abs(coefficient)}{name}"
            sign = "-" if coefficient < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"ReducedPolynomial(n={self._strands}, {self})"


def poly_zero(n: int) -> ReducedPolynomial:
    return ReducedPolynomial._from_clean(n, {})


def poly_constant(value: int, n: int) -> ReducedPolynomial:
    return ReducedPolynomial._from_clean(n, {(): int(value)} if value else {})


def poly_one(n: int) -> ReducedPolynomial:
    return poly_constant(1, n)


def poly_variable(i: int, n: int) -> ReducedPolynomial:
    """The polynomial X_i."""
    return ReducedPolynomial(n, {(i,): 1})


def poly_add(p: ReducedPolynomial, q: ReducedPolynomial) -> ReducedPolynomial:
    if p.strands != q.strands:
        raise StrandMismatchError(p.strands, q.strands)
    return p + q


def poly_mul(p: ReducedPolynomial, q: ReducedPolynomial) -> ReducedPolynomial:
    if p.strands != q.strands:
        raise StrandMismatchError(p.strands, q.strands)
    return p * q


def coefficient_sum_top(p: ReducedPolynomial) -> int:
    """F(p): sum of the coefficients of the monomials of degree n."""
    n = p.strands
    return sum(c for m, c in p.terms() if len(m) == n)


def permute_variables(p: ReducedPolynomial, perm_: Permutation) -> ReducedPolynomial:
    """Replace X_i by X_perm(i) in every monomial."""
    if perm_.size != p.strands:
        raise ValueError(
            f"Permutation on {perm_.size} points applied to A_{p.strands}"
        )
    images = perm_.images
    return ReducedPolynomial._from_clean(
        p.strands,
        {tuple(images[i - 1] for i in m): c for m, c in p.terms()},
    )
