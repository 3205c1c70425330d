"""Finite rational vectors in the lattice Fock module.

A basis vector is a lattice point gamma (no d-component) tensored with a
monomial in the negative Heisenberg modes; the monomial is a sorted tuple of
letters (depth, generator kind, generator index) with depth > 0 standing for
the mode at -depth.

``FockVector`` stores one common positive denominator and integer
coordinates, which keeps the inner loops of operator application and
commutator checks in machine-integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterator, NamedTuple, Tuple

Letter = Tuple[int, int, int]  # (depth > 0, kind, index)


class FockBasisVector(NamedTuple):
    fin: Tuple[int, ...]
    delta: Tuple[int, ...]
    heis: Tuple[Letter, ...]

    def depth(self) -> int:
        return sum(k for k, _, _ in self.heis)


def merge_letters(a: Tuple[Letter, ...], b: Tuple[Letter, ...]) -> Tuple[Letter, ...]:
    return tuple(sorted(a + b))


class FockVector:
    """Immutable finitely-supported rational combination of basis vectors."""

    __slots__ = ("den", "coeffs")

    def __init__(self, den: int = 1, coeffs: Dict[FockBasisVector, int] | None = None):
        if den <= 0:
            raise ValueError("denominator must be positive")
        self.den = den
        self.coeffs = coeffs or {}

    @classmethod
    def zero(cls) -> "FockVector":
        return cls(1, {})

    @classmethod
    def basis(cls, key: FockBasisVector) -> "FockVector":
        return cls(1, {key: 1})

    @classmethod
    def from_terms(cls, terms: Dict[FockBasisVector, Fraction]) -> "FockVector":
        acc = Accumulator()
        for key, c in terms.items():
            c = Fraction(c)
            acc.add(key, c.numerator, c.denominator)
        return acc.finish()

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, key: FockBasisVector) -> Fraction:
        return Fraction(self.coeffs.get(key, 0), self.den)

    def items(self) -> Iterator[tuple]:
        for key, num in self.coeffs.items():
            yield key, Fraction(num, self.den)

    def support(self):
        return self.coeffs.keys()

    def max_depth(self) -> int:
        return max((key.depth() for key in self.coeffs), default=0)

    def __add__(self, other: "FockVector") -> "FockVector":
        acc = Accumulator()
        acc.add_vector(self, 1, 1)
        acc.add_vector(other, 1, 1)
        return acc.finish()

    def __sub__(self, other: "FockVector") -> "FockVector":
        acc = Accumulator()
        acc.add_vector(self, 1, 1)
        acc.add_vector(other, -1, 1)
        return acc.finish()

    def __neg__(self) -> "FockVector":
        return FockVector(self.den, {k: -v for k, v in self.coeffs.items()})

    def scale(self, c) -> "FockVector":
        c = Fraction(c)
        if c == 0 or self.is_zero():
            return FockVector.zero()
        acc = Accumulator()
        acc.add_vector(self, c.numerator, c.denominator)
        return acc.finish()

    def __eq__(self, other):
        return (
            isinstance(other, FockVector)
            and self.den == other.den
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.den, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "FockVector(0)"
        parts = [f"({num}/{self.den})*{key}" for key, num in sorted(self.coeffs.items())]
        return "FockVector(" + " + ".join(parts) + ")"


class Accumulator:
    """Mutable fraction-free sum of (key, num/den) contributions."""

    __slots__ = ("den", "coeffs")

    def __init__(self):
        self.den = 1
        self.coeffs: dict = {}

    def _rescale(self, den: int):
        if den == self.den:
            return 1
        g = gcd(self.den, den)
        factor = den // g
        if factor != 1:
            for k in self.coeffs:
                self.coeffs[k] *= factor
            self.den *= factor
        return self.den // den

    def add(self, key, num: int, den: int):
        if num == 0:
            return
        if den < 0:
            num, den = -num, -den
        mult = self._rescale(den)
        s = self.coeffs.get(key, 0) + num * mult
        if s:
            self.coeffs[key] = s
        elif key in self.coeffs:
            del self.coeffs[key]

    def add_vector(self, vec: FockVector, num: int, den: int):
        if num == 0 or vec.is_zero():
            return
        if den < 0:
            num, den = -num, -den
        total_den = vec.den * den
        mult = self._rescale(total_den) * num
        coeffs = self.coeffs
        for key, val in vec.coeffs.items():
            s = coeffs.get(key, 0) + val * mult
            if s:
                coeffs[key] = s
            elif key in coeffs:
                del coeffs[key]

    def finish(self) -> FockVector:
        if not self.coeffs:
            return FockVector.zero()
        g = self.den
        for v in self.coeffs.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            return FockVector(self.den // g, {k: v // g for k, v in self.coeffs.items()})
        return FockVector(self.den, dict(self.coeffs))
