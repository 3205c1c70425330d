"""Toroidal algebra elements, the bracket table, and torus automorphisms.

An element is a rational combination of tagged keys:

    ('x', alpha, m)   root vector at torus exponent m in Z^n
    ('h', i, m)       basis coroot current
    ('k', i, m)       central element t^m K_i
    ('d', i)          degree derivation, i = 1..n

Central keys are canonicalized against the relation sum_i m_i t^m K_i = 0 by
eliminating the coordinate at the last torus direction with nonzero exponent,
so equality of combinations is plain dictionary equality.

Root-vector structure constants come from the same sign cocycle that twists
the lattice translations in the Fock module; the bracket-fidelity suite pins
that choice against the module action.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from ..rootsys import RootSystem, invert_matrix
from .lattice import Cocycle, Lattice, LatticeError


class ToroidalElement:
    """Immutable rational combination of tagged basis keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[tuple, Fraction]] = None):
        self.terms = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                self.terms[k] = c

    @classmethod
    def zero(cls) -> "ToroidalElement":
        return cls()

    def __add__(self, other: "ToroidalElement") -> "ToroidalElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return ToroidalElement(out)

    def __sub__(self, other: "ToroidalElement") -> "ToroidalElement":
        return self + other.scale(-1)

    def scale(self, c) -> "ToroidalElement":
        c = Fraction(c)
        return ToroidalElement({k: c * v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ToroidalElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "ToroidalElement(0)"
        return "ToroidalElement(" + " + ".join(
            f"({c})*{k}" for k, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))
        ) + ")"


class ToroidalAlgebra:
    """Element constructors and the Lie bracket for a fixed type and n."""

    def __init__(self, rs: RootSystem, nvars: int):
        if nvars < 2:
            raise LatticeError("need at least two torus variables")
        self.rs = rs
        self.nvars = nvars
        self.lattice = Lattice(rs, nvars)
        self.cocycle = Cocycle(self.lattice)

    # -- constructors -----------------------------------------------------------

    def _check_m(self, m: Sequence[int]) -> tuple:
        m = tuple(int(x) for x in m)
        if len(m) != self.nvars:
            raise ValueError(f"exponent vector must have length {self.nvars}")
        return m

    def x(self, alpha: Sequence[int], m: Sequence[int], coeff=1) -> ToroidalElement:
        alpha = tuple(int(a) for a in alpha)
        if not self.rs.is_root(alpha):
            raise ValueError(f"{alpha} is not a root")
        return ToroidalElement({("x", alpha, self._check_m(m)): Fraction(coeff)})

    def h(self, i: int, m: Sequence[int], coeff=1) -> ToroidalElement:
        if not 0 <= i < self.rs.rank:
            raise ValueError("coroot index out of range")
        return ToroidalElement({("h", i, self._check_m(m)): Fraction(coeff)})

    def h_vec(self, coords: Sequence, m: Sequence[int]) -> ToroidalElement:
        out = ToroidalElement()
        for i, c in enumerate(coords):
            if c:
                out = out + self.h(i, m, c)
        return out

    def k(self, i: int, m: Sequence[int], coeff=1) -> ToroidalElement:
        if not 1 <= i <= self.nvars:
            raise ValueError("central index out of range")
        terms: dict = {}
        self._add_central(terms, i, self._check_m(m), Fraction(coeff))
        return ToroidalElement(terms)

    def d(self, i: int, coeff=1) -> ToroidalElement:
        if not 1 <= i <= self.nvars:
            raise ValueError("derivation index out of range")
        return ToroidalElement({("d", i): Fraction(coeff)})

    def _add_central(self, terms: dict, i: int, m: tuple, coeff: Fraction):
        """Accumulate t^m K_i, reducing modulo sum_j m_j t^m K_j = 0."""
        if coeff == 0:
            return
        jstar = 0
        for j in range(self.nvars, 0, -1):
            if m[j - 1] != 0:
                jstar = j
                break
        if jstar and i == jstar:
            factor = -coeff / m[jstar - 1]
            for r in range(1, self.nvars + 1):
                if r != jstar and m[r - 1] != 0:
                    self._add_central(terms, r, m, factor * m[r - 1])
            return
        key = ("k", i, m)
        s = terms.get(key, Fraction(0)) + coeff
        if s:
            terms[key] = s
        elif key in terms:
            del terms[key]

    # -- bracket ------------------------------------------------------------------

    def structure_sign(self, alpha: tuple, beta: tuple) -> int:
        """Constant in [x_alpha, x_beta] = N x_{alpha+beta}; the module's cocycle."""
        return self.cocycle.value_fin(alpha, beta)

    def bracket(self, a: ToroidalElement, b: ToroidalElement) -> ToroidalElement:
        out: dict = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                self._bracket_keys(out, ka, kb, ca * cb)
        return ToroidalElement(out)

    def _accumulate(self, out: dict, element: ToroidalElement, coeff: Fraction):
        for k, c in element.terms.items():
            s = out.get(k, Fraction(0)) + coeff * c
            if s:
                out[k] = s
            elif k in out:
                del out[k]

    def _bracket_keys(self, out: dict, ka: tuple, kb: tuple, coeff: Fraction):
        ta, tb = ka[0], kb[0]
        if ta == "d" and tb == "d":
            return
        if ta == "d":
            # [d_i, y] = p_i y for y at torus exponent p
            _, i = ka
            p = kb[2]
            if p[i - 1]:
                self._accumulate(out, ToroidalElement({kb: Fraction(1)}), coeff * p[i - 1])
            return
        if tb == "d":
            self._bracket_keys(out, kb, ka, -coeff)
            return
        if ta == "k" or tb == "k":
            return
        p, q = ka[2], kb[2]
        total = tuple(x + y for x, y in zip(p, q))
        if ta == "x" and tb == "x":
            alpha, beta = ka[1], kb[1]
            sigma = tuple(x + y for x, y in zip(alpha, beta))
            if not any(sigma):
                # [x_alpha, x_{-alpha}] = h_alpha + (x_alpha, x_{-alpha}) central
                self._accumulate(out, self.h_vec(alpha, total), coeff)
                central: dict = {}
                for i in range(1, self.nvars + 1):
                    if p[i - 1]:
                        self._add_central(central, i, total, Fraction(p[i - 1]))
                self._accumulate(out, ToroidalElement(central), coeff)
            elif self.rs.is_root(sigma):
                sign = self.structure_sign(alpha, beta)
                self._accumulate(
                    out, ToroidalElement({("x", sigma, total): Fraction(sign)}), coeff
                )
            return
        if ta == "h" and tb == "h":
            i, j = ka[1], kb[1]
            form = self.lattice.form_int[i][j]
            if form:
                central = {}
                for r in range(1, self.nvars + 1):
                    if p[r - 1]:
                        self._add_central(central, r, total, Fraction(form * p[r - 1]))
                self._accumulate(out, ToroidalElement(central), coeff)
            return
        if ta == "h" and tb == "x":
            i, alpha = ka[1], kb[1]
            pairing = sum(
                self.lattice.form_int[i][j] * alpha[j] for j in range(self.rs.rank)
            )
            if pairing:
                self._accumulate(
                    out, ToroidalElement({("x", alpha, total): Fraction(1)}), coeff * pairing
                )
            return
        if ta == "x" and tb == "h":
            self._bracket_keys(out, kb, ka, -coeff)
            return
        raise ValueError(f"unhandled bracket tags {ta!r}, {tb!r}")

    # -- torus automorphisms --------------------------------------------------------

    def gl_automorphism(self, matrix: Sequence[Sequence[int]]):
        """The automorphism attached to an integer matrix of determinant +-1,
        as a reusable callable (the inverse is computed once)."""
        n = self.nvars
        a = [[int(x) for x in row] for row in matrix]
        if len(a) != n or any(len(row) != n for row in a):
            raise ValueError(f"matrix must be {n}x{n}")
        det = _int_det(a)
        if det not in (1, -1):
            raise ValueError(f"determinant must be +-1, got {det}")
        inv = [[Fraction(x) for x in row] for row in invert_matrix(a)]
        return lambda element: self._apply_matrix(a, inv, element)

    def gl_automorphism_apply(self, matrix: Sequence[Sequence[int]], element: ToroidalElement) -> ToroidalElement:
        return self.gl_automorphism(matrix)(element)

    def _apply_matrix(self, a, inv, element: ToroidalElement) -> ToroidalElement:
        n = self.nvars

        def push(m: tuple) -> tuple:
            return tuple(sum(a[i][j] * m[j] for j in range(n)) for i in range(n))

        out: dict = {}
        for key, coeff in element.terms.items():
            tag = key[0]
            if tag == "x":
                _, alpha, m = key
                k2 = ("x", alpha, push(m))
                out[k2] = out.get(k2, Fraction(0)) + coeff
            elif tag == "h":
                _, i, m = key
                k2 = ("h", i, push(m))
                out[k2] = out.get(k2, Fraction(0)) + coeff
            elif tag == "k":
                _, i, m = key
                pm = push(m)
                for r in range(1, n + 1):
                    if a[r - 1][i - 1]:
                        self._add_central(out, r, pm, coeff * a[r - 1][i - 1])
            elif tag == "d":
                _, i = key
                for r in range(1, n + 1):
                    c = inv[i - 1][r - 1]
                    if c:
                        k2 = ("d", r)
                        out[k2] = out.get(k2, Fraction(0)) + coeff * c
            else:
                raise ValueError(f"unknown tag {tag!r}")
        return ToroidalElement({k: c for k, c in out.items() if c != 0})


def section5_matrix(n: int) -> list:
    """The block matrix swapping the first and last torus directions with a sign."""
    a = [[0] * n for _ in range(n)]
    a[0][n - 1] = -1
    a[n - 1][0] = 1
    for i in range(1, n - 1):
        a[i][i] = 1
    return a


def _int_det(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return int(det)
