"""Sparse truncated multivariate Laurent series with exact rational coefficients.

A :class:`Series` is a finite dictionary mapping monomials to nonzero
``Fraction`` values, together with a per-variable closed exponent window
``{var: (lo, hi)}``.  Every stored monomial lies inside the window; arithmetic
truncates explicitly to the window intersection and never wraps around.

Monomials may carry an optional *weight label*: an integer vector standing
for a formal group-algebra symbol e^wt (finite-weight coordinates in the
fundamental-weight basis).  Labels add under multiplication and are never
expanded into series variables.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

Rational = Union[int, Fraction]


class SeriesError(Exception):
    """Base class for series arithmetic failures."""


class VariableMismatchError(SeriesError):
    def __init__(self, left: Sequence[str], right: Sequence[str]):
        super().__init__(f"variable sets differ: {list(left)} vs {list(right)}")
        self.left = tuple(left)
        self.right = tuple(right)


class OutOfWindowError(SeriesError):
    """A monomial outside the truncation window was queried.

    Distinguishes "truncated away, unknown" from a genuine zero coefficient.
    """


class DivergenceError(SeriesError):
    """A geometric expansion does not terminate inside the window."""


class Monomial:
    """Immutable monomial: exponent map plus optional weight label.

    Zero exponents are never stored.
    """

    __slots__ = ("exponents", "weight", "_hash")

    def __init__(self, exponents: Mapping[str, int], weight: Optional[Sequence[int]] = None):
        exps = tuple(sorted((v, int(e)) for v, e in exponents.items() if e != 0))
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "weight", None if weight is None else tuple(int(w) for w in weight))
        object.__setattr__(self, "_hash", hash((exps, self.weight)))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def exponent(self, var: str) -> int:
        for v, e in self.exponents:
            if v == var:
                return e
        return 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        exps = dict(self.exponents)
        for v, e in other.exponents:
            exps[v] = exps.get(v, 0) + e
        return Monomial(exps, _combine_weights(self.weight, other.weight))

    def __pow__(self, k: int) -> "Monomial":
        if self.weight is not None and k != 1:
            raise SeriesError("cannot raise a weight-labelled monomial to a power")
        return Monomial({v: e * k for v, e in self.exponents}, self.weight if k == 1 else None)

    def drop_weight(self) -> "Monomial":
        return Monomial(dict(self.exponents), None)

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.exponents == other.exponents
            and self.weight == other.weight
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        parts = [f"{v}^{e}" for v, e in self.exponents] or ["1"]
        if self.weight is not None:
            parts.insert(0, f"e[{','.join(map(str, self.weight))}]")
        return "*".join(parts)


def _combine_weights(a: Optional[tuple], b: Optional[tuple]) -> Optional[tuple]:
    if a is None:
        return b
    if b is None:
        return a
    if len(a) != len(b):
        raise SeriesError(f"weight label lengths differ: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


class Series:
    """Windowed sparse series.  Immutable by convention; all ops return new values."""

    __slots__ = ("window", "terms", "labeled")

    def __init__(
        self,
        window: Mapping[str, tuple],
        terms: Optional[Mapping[Monomial, Rational]] = None,
        labeled: bool = False,
    ):
        self.window = {v: (int(lo), int(hi)) for v, (lo, hi) in sorted(window.items())}
        for v, (lo, hi) in self.window.items():
            if lo > hi:
                raise SeriesError(f"empty window for {v}: [{lo}, {hi}]")
        self.labeled = bool(labeled)
        clean: dict = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if not self.in_window(m):
                raise OutOfWindowError(f"term {m} outside window {self.window}")
            if (m.weight is not None) != self.labeled:
                raise SeriesError("weight label present iff the series is labeled")
            clean[m] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, window, labeled: bool = False) -> "Series":
        return cls(window, {}, labeled)

    @classmethod
    def one(cls, window, weight: Optional[Sequence[int]] = None) -> "Series":
        m = Monomial({}, weight)
        return cls(window, {m: Fraction(1)}, labeled=weight is not None)

    @classmethod
    def monomial(cls, window, exponents: Mapping[str, int], coeff: Rational = 1,
                 weight: Optional[Sequence[int]] = None) -> "Series":
        m = Monomial(exponents, weight)
        return cls(window, {m: Fraction(coeff)}, labeled=weight is not None)

    # -- queries ------------------------------------------------------------

    def variables(self) -> tuple:
        return tuple(self.window)

    def in_window(self, m: Monomial) -> bool:
        for v, (lo, hi) in self.window.items():
            if not lo <= m.exponent(v) <= hi:
                return False
        return all(v in self.window for v, _ in m.exponents)

    def coeff(self, m: Monomial) -> Fraction:
        if not self.in_window(m):
            raise OutOfWindowError(f"{m} outside window {self.window}")
        return self.terms.get(m, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Series)
            and self.window == other.window
            and self.labeled == other.labeled
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((tuple(self.window.items()), frozenset(self.terms.items())))

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0], tuple(self.window)))
        body = " + ".join(f"{c}*{m}" for m, c in items) or "0"
        return f"Series({body})"

    # -- arithmetic ---------------------------------------------------------

    def _check_vars(self, other: "Series"):
        if tuple(self.window) != tuple(other.window):
            raise VariableMismatchError(tuple(self.window), tuple(other.window))

    def _merged_window(self, other: "Series") -> dict:
        return {
            v: (max(self.window[v][0], other.window[v][0]), min(self.window[v][1], other.window[v][1]))
            for v in self.window
        }

    def __add__(self, other: "Series") -> "Series":
        self._check_vars(other)
        if self.labeled != other.labeled:
            raise SeriesError("cannot add a labeled series to an unlabeled one")
        window = self._merged_window(other)
        out: dict = {}
        for src in (self.terms, other.terms):
            for m, c in src.items():
                out[m] = out.get(m, Fraction(0)) + c
        probe = Series(window, {}, self.labeled or other.labeled)
        kept = {m: c for m, c in out.items() if c != 0 and probe.in_window(m)}
        return Series(window, kept, self.labeled or other.labeled)

    def __neg__(self) -> "Series":
        return Series(self.window, {m: -c for m, c in self.terms.items()}, self.labeled)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, c: Rational) -> "Series":
        c = Fraction(c)
        if c == 0:
            return Series.zero(self.window, self.labeled)
        return Series(self.window, {m: c * v for m, v in self.terms.items()}, self.labeled)

    def __mul__(self, other: "Series") -> "Series":
        self._check_vars(other)
        window = self._merged_window(other)
        labeled = self.labeled or other.labeled
        probe = Series(window, {}, labeled)
        out: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = ma * mb
                if not probe.in_window(m):
                    continue
                out[m] = out.get(m, Fraction(0)) + ca * cb
        return Series(window, {m: c for m, c in out.items() if c != 0}, labeled)

    def restrict(self, window: Mapping[str, tuple]) -> "Series":
        """Truncate to a smaller window over the same variables."""
        probe = Series(window, {}, self.labeled)
        if tuple(probe.window) != tuple(self.window):
            raise VariableMismatchError(tuple(self.window), tuple(probe.window))
        kept = {m: c for m, c in self.terms.items() if probe.in_window(m)}
        return Series(window, kept, self.labeled)

    def weight_slice(self, weight: Optional[Sequence[int]]) -> "Series":
        """Terms carrying the given weight label, with the label kept."""
        w = None if weight is None else tuple(weight)
        kept = {m: c for m, c in self.terms.items() if m.weight == w}
        return Series(self.window, kept, self.labeled)

    def drop_weights(self) -> "Series":
        """Collapse all weight labels (total-dimension projection)."""
        out: dict = {}
        for m, c in self.terms.items():
            key = m.drop_weight()
            out[key] = out.get(key, Fraction(0)) + c
        return Series(self.window, {m: c for m, c in out.items() if c != 0}, labeled=False)


def _sort_key(m: Monomial, variables: tuple):
    return tuple(m.exponent(v) for v in variables) + ((m.weight or ()),)


def geom_inverse(g: Monomial, window: Mapping[str, tuple]) -> Series:
    """Expansion of 1/(1-g) truncated to ``window``.

    ``g`` must escape the window in some variable so that only finitely many
    powers contribute; ``g = 1`` diverges.
    """
    if g.weight is not None:
        raise SeriesError("geometric generators carry no weight label")
    if not g.exponents:
        raise DivergenceError("cannot expand 1/(1-1)")
    unknown = [v for v, _ in g.exponents if v not in window]
    if unknown:
        raise VariableMismatchError(unknown, tuple(window))
    out = Series(window, {}, False)
    acc: dict = {}
    power = Monomial({})
    while out.in_window(power):
        acc[power] = acc.get(power, Fraction(0)) + 1
        power = power * g
    if not acc:
        # even g^0 = 1 escaped: the window excludes exponent 0 somewhere
        raise DivergenceError(f"window {dict(window)} excludes the constant term")
    return Series(window, acc, False)


def product_formula(generators: Iterable[tuple], window: Mapping[str, tuple]) -> Series:
    """Truncated product of 1/(1-g)^mult over (g, mult) pairs.

    The empty generator list gives the constant series 1.
    """
    out = Series.one(window)
    for g, mult in generators:
        if mult < 0:
            raise SeriesError("multiplicities must be nonnegative")
        factor = geom_inverse(g, window)
        for _ in range(mult):
            out = out * factor
    return out


def coeff(s: Series, m: Monomial) -> Fraction:
    return s.coeff(m)


# -- JSON interchange -------------------------------------------------------

def series_to_json(s: Series) -> str:
    """Byte-stable JSON: terms sorted lexicographically by exponent vector."""
    variables = list(s.window)
    items = sorted(s.terms.items(), key=lambda kv: _sort_key(kv[0], tuple(variables)))
    terms = []
    for m, c in items:
        terms.append(
            {
                "weight": list(m.weight) if m.weight is not None else None,
                "exp": {v: e for v, e in m.exponents},
                "num": c.numerator,
                "den": c.denominator,
            }
        )
    doc = {
        "variables": variables,
        "window": {v: [lo, hi] for v, (lo, hi) in s.window.items()},
        "terms": terms,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def series_from_json(text: str) -> Series:
    doc = json.loads(text)
    window = {v: (lo, hi) for v, (lo, hi) in doc["window"].items()}
    terms: dict = {}
    labeled = any(t["weight"] is not None for t in doc["terms"])
    for t in doc["terms"]:
        m = Monomial(t["exp"], t["weight"])
        terms[m] = Fraction(t["num"], t["den"])
    return Series(window, terms, labeled)
