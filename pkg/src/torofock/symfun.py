"""Symmetric polynomials in N concrete indeterminates, exact arithmetic.

Everything is represented faithfully at finite N (N at least the degree in
play), not as abstract inverse-limit elements: the elementary/complete/power
sum bases, the Newton recurrences relating them, the partition-sum expansions
of the generating functions E and H, multiset Hilbert series for symmetric
tensor powers, and the power-sum block insertions used by the highest-weight
algebra model.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from .series import Monomial, Series


# -- partitions ---------------------------------------------------------------

def partitions(n: int, max_part: Optional[int] = None) -> Iterator[tuple]:
    """Weakly decreasing tuples of positive integers summing to n."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


class Partition:
    """A partition with its standard combinatorial attributes."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        self.parts = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(
            tuple(sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1))
        )

    def z(self) -> int:
        """z_lambda = prod_i i^{m_i} m_i!, the centralizer order."""
        out = 1
        for i in set(self.parts):
            m = self.multiplicity(i)
            out *= i**m
            for k in range(2, m + 1):
                out *= k
        return out

    def sign(self) -> int:
        """epsilon_lambda = (-1)^(size - length)."""
        return -1 if (self.size - self.length) % 2 else 1

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


# -- polynomials in N variables ------------------------------------------------

class SymPoly:
    """Sparse polynomial in x_1..x_N; symmetry is a property, not an assumption."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Dict[tuple, object]] = None):
        self.nvars = int(nvars)
        self.terms = {}
        for k, c in (terms or {}).items():
            if c != 0:
                self.terms[k] = c

    @classmethod
    def constant(cls, nvars: int, c) -> "SymPoly":
        return cls(nvars, {(0,) * nvars: c})

    def __add__(self, other: "SymPoly") -> "SymPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return SymPoly(self.nvars, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, c) -> "SymPoly":
        if c == 0:
            return SymPoly(self.nvars)
        return SymPoly(self.nvars, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        small, big = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        out: dict = {}
        n = self.nvars
        for ka, ca in small.terms.items():
            for kb, cb in big.terms.items():
                k = tuple(ka[i] + kb[i] for i in range(n))
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return SymPoly(self.nvars, out)

    def __pow__(self, k: int) -> "SymPoly":
        out = SymPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, SymPoly)
            and self.nvars == other.nvars
            and all(Fraction(c) == Fraction(other.terms.get(k, 0)) for k, c in self.terms.items())
            and all(k in self.terms for k in other.terms)
        )

    def __hash__(self):
        return hash((self.nvars, frozenset((k, Fraction(c)) for k, c in self.terms.items())))

    def is_symmetric(self) -> bool:
        """Invariance under every adjacent transposition of variable indices."""
        for i in range(self.nvars - 1):
            for k, c in self.terms.items():
                swapped = list(k)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if Fraction(self.terms.get(tuple(swapped), 0)) != Fraction(c):
                    return False
        return True

    def __repr__(self):
        return f"SymPoly(nvars={self.nvars}, {len(self.terms)} terms)"


def elementary(r: int, nvars: int) -> SymPoly:
    """e_r in nvars variables; zero for r > nvars."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r > nvars:
        return SymPoly(nvars)
    terms = {}
    for subset in itertools.combinations(range(nvars), r):
        key = [0] * nvars
        for i in subset:
            key[i] = 1
        terms[tuple(key)] = 1
    return SymPoly(nvars, terms)


def complete(r: int, nvars: int) -> SymPoly:
    """h_r: the sum of all degree-r monomials."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    terms = {}
    for combo in itertools.combinations_with_replacement(range(nvars), r):
        key = [0] * nvars
        for i in combo:
            key[i] += 1
        terms[tuple(key)] = 1
    return SymPoly(nvars, terms)


def power_sum(r: int, nvars: int) -> SymPoly:
    """p_r = sum x_i^r; p_0 is the constant nvars."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return SymPoly.constant(nvars, nvars)
    terms = {}
    for i in range(nvars):
        key = [0] * nvars
        key[i] = r
        terms[tuple(key)] = 1
    return SymPoly(nvars, terms)


def power_sum_product(parts: Sequence[int], nvars: int) -> SymPoly:
    out = SymPoly.constant(nvars, 1)
    for p in parts:
        out = out * power_sum(p, nvars)
    return out


# -- Newton identities and generating-function expansions ----------------------

def newton_e_check(n: int, nvars: int) -> bool:
    """n e_n = sum_{r=1}^{n} (-1)^(r-1) p_r e_{n-r}, checked as polynomials."""
    lhs = elementary(n, nvars).scale(n)
    rhs = SymPoly(nvars)
    for r in range(1, n + 1):
        term = power_sum(r, nvars) * elementary(n - r, nvars)
        rhs = rhs + (term if (r - 1) % 2 == 0 else -term)
    return lhs == rhs


def dominant_keys(n: int, nvars: int) -> list:
    """Weakly decreasing exponent tuples of degree n, padded to nvars.

    A symmetric polynomial is determined by its coefficients there: every
    exponent is a permutation of a dominant one.
    """
    return [
        parts + (0,) * (nvars - len(parts))
        for parts in partitions(n, max_part=None)
        if len(parts) <= nvars
    ]


def product_coeff(a: SymPoly, b: SymPoly, key: tuple):
    """Coefficient of ``key`` in a*b without materializing the product."""
    small, big = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    total = 0
    get = big.terms.get
    for ka, ca in small.terms.items():
        kb = tuple(x - y for x, y in zip(key, ka))
        if any(x < 0 for x in kb):
            continue
        cb = get(kb)
        if cb is not None:
            total += ca * cb
    return total


def _times_complete_coeff(a: SymPoly, key: tuple):
    """Coefficient of ``key`` in a * h_m, where m makes the degrees match.

    Every nonnegative exponent vector of the right degree appears in a
    complete symmetric polynomial with coefficient one, so the convolution
    needs only the constructed terms of ``a``.
    """
    total = 0
    for ka, ca in a.terms.items():
        if all(x >= y for x, y in zip(key, ka)):
            total += ca
    return total


def newton_h_check(n: int, nvars: int) -> bool:
    """n h_n = sum_{r=1}^{n} p_r h_{n-r}.

    Both sides are symmetric, so equality on dominant exponents decides it.
    """
    ps = {r: power_sum(r, nvars) for r in range(1, n + 1)}
    for key in dominant_keys(n, nvars):
        rhs = sum(_times_complete_coeff(ps[r], key) for r in range(1, n + 1))
        if n != rhs:  # the h_n coefficient at a degree-n dominant key is one
            return False
    return True


def eh_alternating_check(n: int, nvars: int) -> bool:
    """sum_{r=0}^{n} (-1)^r e_r h_{n-r} = 0, the coefficient of t^n in E(t)H(-t) = 1.

    Checked on dominant exponents; symmetry carries it to all of them.
    """
    es = {r: elementary(r, nvars) for r in range(n + 1)}
    for key in dominant_keys(n, nvars):
        total = 0
        for r in range(n + 1):
            c = _times_complete_coeff(es[r], key)
            total += c if r % 2 == 0 else -c
        if total != 0:
            return False
    return True


def eh_alternating_check_full(n: int, nvars: int) -> bool:
    """Full-expansion variant of :func:`eh_alternating_check` (cross-check)."""
    acc = SymPoly(nvars)
    for r in range(n + 1):
        term = elementary(r, nvars) * complete(n - r, nvars)
        acc = acc + (term if r % 2 == 0 else -term)
    return acc.is_zero()


def expand_E_minus(order: int, nvars: int) -> list:
    """Coefficients of E(-t) from the partition sum.

    Entry n is sum over partitions of n of (-1)^(length) p_lambda / z_lambda,
    which must equal (-1)^n e_n when nvars >= n.
    """
    out = []
    for n in range(order + 1):
        acc = SymPoly(nvars)
        for parts in partitions(n):
            lam = Partition(parts)
            coeff = Fraction((-1) ** lam.length, lam.z())
            acc = acc + power_sum_product(parts, nvars).scale(coeff)
        out.append(acc)
    return out


def expand_H_partition_sum(order: int, nvars: int) -> list:
    """Coefficients of H(t) = exp(sum p_n t^n / n) as partition sums p_lambda/z_lambda."""
    out = []
    for n in range(order + 1):
        acc = SymPoly(nvars)
        for parts in partitions(n):
            lam = Partition(parts)
            acc = acc + power_sum_product(parts, nvars).scale(Fraction(1, lam.z()))
        out.append(acc)
    return out


# -- Hilbert series of symmetric tensor powers ---------------------------------

def sym_power_hilbert(
    r: int,
    variables: Sequence[str],
    max_deg: Optional[int] = None,
    laurent: bool = False,
    window: Optional[dict] = None,
) -> Series:
    """Graded dimension of the S_r-invariants of an r-fold tensor power.

    The coefficient at a multidegree counts r-element multisets of monomials
    (slots) whose exponent vectors sum to that multidegree.  In the polynomial
    case the window is the box [0, max_deg] per variable; in the Laurent case
    a per-variable window must be supplied and bounds each slot monomial
    (the graded pieces are infinite-dimensional without it).
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    variables = list(variables)
    if laurent:
        if window is None:
            raise ValueError("laurent case needs a per-variable exponent window")
        box = {v: (int(window[v][0]), int(window[v][1])) for v in variables}
    else:
        if max_deg is None:
            raise ValueError("polynomial case needs max_deg")
        box = {v: (0, int(max_deg)) for v in variables}

    ranges = [range(box[v][0], box[v][1] + 1) for v in variables]
    monomials = [m for m in itertools.product(*ranges) if any(m)]

    zero = tuple(0 for _ in variables)
    inside = lambda m: all(box[v][0] <= m[i] <= box[v][1] for i, v in enumerate(variables))
    # Partial sums of up to r windowed slots may leave the window and return
    # (Laurent directions), so prune only to the r-fold loose box.
    loose = [(r * min(box[v][0], 0), r * max(box[v][1], 0)) for v in variables]
    in_loose = lambda m: all(loose[i][0] <= m[i] <= loose[i][1] for i in range(len(m)))
    # dp[k][multidegree]: number of k-multisets of nonzero slots with that sum;
    # an r-multiset pads with copies of the unit monomial.
    dp = [dict() for _ in range(r + 1)]
    dp[0][zero] = 1
    for g in monomials:
        for k in range(1, r + 1):
            # allow any number of copies of g by folding dp[k] back onto itself
            for deg, cnt in list(dp[k - 1].items()):
                total = tuple(deg[i] + g[i] for i in range(len(g)))
                if in_loose(total):
                    dp[k][total] = dp[k].get(total, 0) + cnt
    counts: dict = {}
    for k in range(r + 1):
        for deg, cnt in dp[k].items():
            if inside(deg):
                counts[deg] = counts.get(deg, 0) + cnt
    terms = {
        Monomial({v: deg[i] for i, v in enumerate(variables)}): Fraction(c)
        for deg, c in counts.items()
    }
    return Series(box, terms)


# -- power-sum block insertions -------------------------------------------------

class PhiImage:
    """An element of one symmetric block of a tensor-power algebra.

    The block has ``slots`` tensor factors, each a monomial algebra in
    ``nvars`` variables; terms are keyed by the flattened slot exponent
    matrix.  The images of coroot currents are power-sum-type insertions and
    products of them stay inside the slot-symmetric subalgebra.
    """

    __slots__ = ("block", "slots", "nvars", "terms")

    def __init__(self, block: int, slots: int, nvars: int, terms: Optional[dict] = None):
        self.block = block
        self.slots = slots
        self.nvars = nvars
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, block: int, slots: int, nvars: int) -> "PhiImage":
        return cls(block, slots, nvars)

    def _check(self, other: "PhiImage"):
        if (self.block, self.slots, self.nvars) != (other.block, other.slots, other.nvars):
            raise ValueError("block shapes differ")

    def __add__(self, other: "PhiImage") -> "PhiImage":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return PhiImage(self.block, self.slots, self.nvars, out)

    def __sub__(self, other: "PhiImage") -> "PhiImage":
        return self + other.scale(-1)

    def scale(self, c) -> "PhiImage":
        return PhiImage(self.block, self.slots, self.nvars,
                        {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "PhiImage") -> "PhiImage":
        self._check(other)
        out: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return PhiImage(self.block, self.slots, self.nvars, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, PhiImage)
            and (self.block, self.slots, self.nvars) == (other.block, other.slots, other.nvars)
            and {k: Fraction(c) for k, c in self.terms.items()}
            == {k: Fraction(c) for k, c in other.terms.items()}
        )

    def is_slot_symmetric(self) -> bool:
        for i in range(self.slots - 1):
            for k, c in self.terms.items():
                rows = [list(k[s * self.nvars:(s + 1) * self.nvars]) for s in range(self.slots)]
                rows[i], rows[i + 1] = rows[i + 1], rows[i]
                swapped = tuple(x for row in rows for x in row)
                if Fraction(self.terms.get(swapped, 0)) != Fraction(c):
                    return False
        return True


def phi_generator_image(i: int, a_exponents: Sequence[int], mults: Sequence[int]) -> PhiImage:
    """Image of a coroot current h_i tensor a in block i of the invariant algebra.

    For a block with r_i slots the image is the sum over slots of the
    monomial ``a`` placed in one slot: a power-sum of ``a`` across the
    block.  ``a = 1`` gives the constant r_i, matching the Cartan action by
    the highest weight.  Degree-derivation and torus-central generators map
    to the zero element.
    """
    if not 0 <= i < len(mults):
        raise ValueError(f"block index {i} out of range for {len(mults)} blocks")
    r = int(mults[i])
    m = len(a_exponents)
    if r == 0:
        return PhiImage.zero(i, 0, m)
    a = tuple(int(e) for e in a_exponents)
    if not any(a):
        constant = (0,) * (r * m)
        return PhiImage(i, r, m, {constant: r})
    terms: dict = {}
    for slot in range(r):
        key = [0] * (r * m)
        key[slot * m:(slot + 1) * m] = a
        terms[tuple(key)] = terms.get(tuple(key), 0) + 1
    return PhiImage(i, r, m, terms)


def phi_slot_elementary(i: int, r: int, nvars: int, a_exponents: Sequence[int], k: int) -> PhiImage:
    """e_k of the monomial ``a`` across the r slots of block i (test helper)."""
    a = tuple(int(e) for e in a_exponents)
    terms: dict = {}
    for subset in itertools.combinations(range(r), k):
        key = [0] * (r * nvars)
        for slot in subset:
            key[slot * nvars:(slot + 1) * nvars] = a
        terms[tuple(key)] = terms.get(tuple(key), 0) + 1
    return PhiImage(i, r, nvars, terms)
