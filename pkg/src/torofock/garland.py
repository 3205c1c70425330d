"""Garland coefficients of the exponential current series.

P(u) = exp(-sum_{j>=1} h[j] u^j / j) = sum_s p^(s) u^s, where h[j] are
commuting current symbols (a coroot tensored with the j-th power of the loop
variable).  The coefficients are computed by the rational recursion

    s p^(s) = - sum_{j=1}^{s} h[j] p^(s-j),        p^(0) = 1,

obtained from the logarithmic derivative of the defining exponential.  The
symbols are root-agnostic; concrete operators are substituted downstream.
Under h[j] -> p_j (power sums) the series becomes E(-u), so p^(s) maps to
(-1)^s e_s.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional

from .symfun import SymPoly, power_sum


class GarlandPoly:
    """Exact-rational polynomial in commuting symbols h[1], h[2], ...

    Keys are tuples of exponents (exponent of h[1], of h[2], ...) with
    trailing zeros trimmed; the grade of a monomial is sum j * exp_j.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[tuple, Fraction]] = None):
        self.terms = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                self.terms[_trim(k)] = c

    @classmethod
    def one(cls) -> "GarlandPoly":
        return cls({(): Fraction(1)})

    @classmethod
    def symbol(cls, j: int) -> "GarlandPoly":
        if j < 1:
            raise ValueError("current symbols are indexed from 1")
        key = (0,) * (j - 1) + (1,)
        return cls({key: Fraction(1)})

    def __add__(self, other: "GarlandPoly") -> "GarlandPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return GarlandPoly(out)

    def __neg__(self) -> "GarlandPoly":
        return GarlandPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "GarlandPoly") -> "GarlandPoly":
        return self + (-other)

    def scale(self, c) -> "GarlandPoly":
        return GarlandPoly({k: Fraction(c) * v for k, v in self.terms.items()})

    def __mul__(self, other: "GarlandPoly") -> "GarlandPoly":
        out: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                n = max(len(ka), len(kb))
                k = _trim(tuple((ka[i] if i < len(ka) else 0) + (kb[i] if i < len(kb) else 0)
                                for i in range(n)))
                s = out.get(k, Fraction(0)) + ca * cb
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return GarlandPoly(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, GarlandPoly) and self.terms == other.terms

    def __repr__(self):
        def mono(k):
            return "*".join(f"h[{j + 1}]^{e}" for j, e in enumerate(k) if e) or "1"

        return " + ".join(f"({c})*{mono(k)}" for k, c in sorted(self.terms.items())) or "0"

    def grades(self) -> set:
        return {sum((j + 1) * e for j, e in enumerate(k)) for k in self.terms}

    def is_homogeneous(self, grade: int) -> bool:
        return self.grades() <= {grade}


def _trim(k: tuple) -> tuple:
    n = len(k)
    while n and k[n - 1] == 0:
        n -= 1
    return tuple(k[:n])


def garland_coeffs(s_max: int) -> list:
    """p^(0), ..., p^(s_max) via the log-derivative recursion."""
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    out = [GarlandPoly.one()]
    for s in range(1, s_max + 1):
        acc = GarlandPoly()
        for j in range(1, s + 1):
            acc = acc + GarlandPoly.symbol(j) * out[s - j]
        out.append(acc.scale(Fraction(-1, s)))
    return out


def garland_inverse_check(s_max: int) -> bool:
    """P(u) times exp(+sum h[j] u^j / j) is 1 to order s_max (formal inverse)."""
    ps = garland_coeffs(s_max)
    # the inverse series coefficients q^(s) satisfy the same recursion with +h
    qs = [GarlandPoly.one()]
    for s in range(1, s_max + 1):
        acc = GarlandPoly()
        for j in range(1, s + 1):
            acc = acc + GarlandPoly.symbol(j) * qs[s - j]
        qs.append(acc.scale(Fraction(1, s)))
    for n in range(s_max + 1):
        conv = GarlandPoly()
        for s in range(n + 1):
            conv = conv + ps[s] * qs[n - s]
        expected = GarlandPoly.one() if n == 0 else GarlandPoly()
        if conv != expected:
            return False
    return True


def garland_to_symfun(p: GarlandPoly, nvars: int, negate: bool = False) -> SymPoly:
    """Substitute h[j] -> p_j (or -p_j with ``negate``) into a Garland polynomial.

    ``nvars`` below the grade of ``p`` loses faithfulness, so it is rejected.
    """
    grades = p.grades()
    if grades and nvars < max(grades):
        raise ValueError(f"need at least {max(grades)} variables for faithfulness, got {nvars}")
    out = SymPoly(nvars)
    for k, c in p.terms.items():
        term = SymPoly.constant(nvars, 1)
        for j, e in enumerate(k):
            if e:
                base = power_sum(j + 1, nvars)
                if negate:
                    base = -base
                for _ in range(e):
                    term = term * base
        out = out + term.scale(c)
    return out
