"""The lattice Fock module and its current-algebra operators.

Vectors live in e^Q tensor S(a_-): a lattice point without d-component
tensored with a polynomial in negative modes.  All operator applications are
exact and finite on finitely-supported vectors: the annihilation exponential
is nilpotent on each basis vector and only finitely many creation orders
contribute to a fixed mode number, so no truncation window enters the
action itself.  Windows appear only when enumerating basis slices for
characters and quantified identity checks.

Mode-number conventions: the operator attached to a root vector at torus
exponent m lowers the energy grading (half the lattice norm plus Heisenberg
depth) by the affine exponent m_n, shifts the delta-degree by the remaining
exponents, and the two degree operators act diagonally: the torus ones by
the delta-coordinates of the lattice point, the affine one by minus the
energy.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..rootsys import RootSystem
from ..series import Monomial, Series
from .lattice import KIND_ALPHA, KIND_DELTA, Cocycle, Lattice, LatticeError, LatticeVector
from .vectors import Accumulator, FockBasisVector, FockVector, merge_letters


class FockSpace:
    """Operator context for a simply-laced root system and n torus variables."""

    def __init__(self, rs: RootSystem, nvars: int):
        if not rs.is_simply_laced():
            raise LatticeError(
                f"Fock construction needs a simply-laced type, got {rs.label}{rs.rank}"
            )
        self.rs = rs
        self.nvars = nvars
        self.lattice = Lattice(rs, nvars)
        self.cocycle = Cocycle(self.lattice)
        self._ann_cache: dict = {}
        self._creation_cache: dict = {}

    # -- basics ---------------------------------------------------------------

    def vacuum_key(self) -> FockBasisVector:
        return FockBasisVector(
            (0,) * self.lattice.l, (0,) * (self.nvars - 1), ()
        )

    def vacuum(self) -> FockVector:
        return FockVector.basis(self.vacuum_key())

    def energy(self, key: FockBasisVector) -> int:
        n2 = self.lattice.norm2_fin(key.fin)
        if n2 % 2:
            raise LatticeError("odd lattice norm on a simply-laced lattice")
        return n2 // 2 + key.depth()

    # -- Heisenberg modes -------------------------------------------------------

    def zero_mode(self, mode: LatticeVector, v: FockVector) -> FockVector:
        """a(0): multiplication by (a, gamma) on each basis term."""
        acc = Accumulator()
        for key, num in v.coeffs.items():
            p = self._pair_state(mode, key)
            if p:
                acc.add(key, num * p, v.den)
        return acc.finish()

    def heisenberg_apply(self, mode: LatticeVector, k: int, v: FockVector) -> FockVector:
        """a(k) for k != 0: creation multiplies, annihilation derives."""
        if k == 0:
            raise ValueError("use zero_mode for k = 0")
        acc = Accumulator()
        if k < 0:
            depth = -k
            gens = self.lattice.generators(mode)
            for key, num in v.coeffs.items():
                for kind, idx, c in gens:
                    letters = merge_letters(key.heis, ((depth, kind, idx),))
                    acc.add(FockBasisVector(key.fin, key.delta, letters), num * c, v.den)
        else:
            for key, num in v.coeffs.items():
                seen = set()
                for letter in key.heis:
                    if letter in seen:
                        continue
                    seen.add(letter)
                    dep, kind, idx = letter
                    if dep != k:
                        continue
                    p = self.lattice.pair_gen(mode, kind, idx)
                    if p == 0:
                        continue
                    mult = key.heis.count(letter)
                    reduced = list(key.heis)
                    reduced.remove(letter)
                    acc.add(
                        FockBasisVector(key.fin, key.delta, tuple(reduced)),
                        num * k * p * mult,
                        v.den,
                    )
        return acc.finish()

    def _pair_state(self, mode: LatticeVector, key: FockBasisVector) -> int:
        total = 0
        for i, a in enumerate(mode.fin):
            if a:
                row = self.lattice.form_int[i]
                total += a * sum(row[j] * b for j, b in enumerate(key.fin) if b)
        total += sum(a * b for a, b in zip(mode.dpart, key.delta))
        return total

    # -- vertex operators --------------------------------------------------------

    def _annihilation_exp(self, alpha: LatticeVector, heis: tuple) -> tuple:
        """exp of the annihilation half on one monomial.

        Returns triples (depth removed, rational coefficient, remaining
        monomial); nilpotency makes the expansion finite.
        """
        cache_key = (alpha, heis)
        hit = self._ann_cache.get(cache_key)
        if hit is not None:
            return hit
        results: dict = {(heis, 0): Fraction(1)}
        level: dict = {(heis, 0): Fraction(1)}
        j = 0
        while level:
            j += 1
            nxt: dict = {}
            for (h, a), c in level.items():
                seen = set()
                for letter in h:
                    if letter in seen:
                        continue
                    seen.add(letter)
                    dep, kind, idx = letter
                    p = self.lattice.pair_gen(alpha, kind, idx)
                    if p == 0:
                        continue
                    mult = h.count(letter)
                    reduced = list(h)
                    reduced.remove(letter)
                    entry = (tuple(reduced), a + dep)
                    nxt[entry] = nxt.get(entry, Fraction(0)) - c * p * mult
            level = {k: val / j for k, val in nxt.items() if val}
            for k, val in level.items():
                results[k] = results.get(k, Fraction(0)) + val
        out = tuple(
            (a, c.numerator, c.denominator, h) for (h, a), c in results.items() if c
        )
        self._ann_cache[cache_key] = out
        return out

    def _creation_term(self, alpha: LatticeVector, order: int) -> dict:
        """Coefficient of z^order in the creation exponential, as letter additions."""
        cache_key = (alpha, order)
        hit = self._creation_cache.get(cache_key)
        if hit is not None:
            return hit
        if order == 0:
            out = {(): (1, 1)}
        else:
            gens = self.lattice.generators(alpha)
            acc: dict = {}
            for k in range(1, order + 1):
                lower = self._creation_term(alpha, order - k)
                for letters, (num, den) in lower.items():
                    c = Fraction(num, den)
                    for kind, idx, g in gens:
                        merged = merge_letters(letters, ((k, kind, idx),))
                        acc[merged] = acc.get(merged, Fraction(0)) + c * g
            out = {
                k: ((v / order).numerator, (v / order).denominator)
                for k, v in acc.items()
                if v
            }
        self._creation_cache[cache_key] = out
        return out

    def vertex_apply(self, alpha: LatticeVector, r: int, v: FockVector) -> FockVector:
        """Mode r of the lattice vertex operator for alpha in Q."""
        if not alpha.in_q():
            raise LatticeError("vertex operators are indexed by Q-vectors")
        n2 = self.lattice.norm2_fin(alpha.fin)
        if n2 % 2:
            raise LatticeError("odd lattice norm on a simply-laced lattice")
        half = n2 // 2
        acc = Accumulator()
        for key, num in v.coeffs.items():
            pair_ag = sum(
                alpha.fin[i] * self.lattice.form_int[i][j] * key.fin[j]
                for i in range(self.lattice.l)
                for j in range(self.lattice.l)
                if alpha.fin[i] and key.fin[j]
            )
            sign = self.cocycle.value_fin(alpha.fin, key.fin)
            new_fin = tuple(a + b for a, b in zip(key.fin, alpha.fin))
            new_delta = tuple(a + b for a, b in zip(key.delta, alpha.delta))
            # z-exponent bookkeeping: half + pair - removed + order = -r
            base = half + pair_ag + r
            for a, ann_num, ann_den, reduced in self._annihilation_exp(alpha, key.heis):
                order = a - base
                if order < 0:
                    continue
                scaled = num * ann_num if sign > 0 else -num * ann_num
                for letters, (cre_num, cre_den) in self._creation_term(alpha, order).items():
                    target = FockBasisVector(new_fin, new_delta, merge_letters(reduced, letters))
                    acc.add(target, scaled * cre_num, v.den * ann_den * cre_den)
        return acc.finish()

    def normal_ordered_apply(
        self, mode: LatticeVector, mbar: Sequence[int], r: int, v: FockVector
    ) -> FockVector:
        """Mode r of the normally ordered product of a current with a delta vertex.

        Creation half of the current sits left of the delta vertex operator,
        annihilation half (including the zero mode) right of it.
        """
        shift = self.lattice.vector(delta=mbar)
        acc = Accumulator()
        maxdep = v.max_depth()
        w = self.zero_mode(mode, v)
        if not w.is_zero():
            acc.add_vector(self.vertex_apply(shift, r, w), 1, 1)
        for s in range(1, maxdep + 1):
            w = self.heisenberg_apply(mode, s, v)
            if w.is_zero():
                continue
            acc.add_vector(self.vertex_apply(shift, r - s, w), 1, 1)
        for k in range(1, maxdep - r + 1):
            u = self.vertex_apply(shift, r + k, v)
            if u.is_zero():
                continue
            acc.add_vector(self.heisenberg_apply(mode, -k, u), 1, 1)
        return acc.finish()

    # -- the toroidal action -----------------------------------------------------

    def toroidal_apply(self, element, v: FockVector) -> FockVector:
        """Action of a toroidal algebra element (a ToroidalElement combination)."""
        n = self.nvars
        acc = Accumulator()
        for key, coeff in element.terms.items():
            coeff = Fraction(coeff)
            tag = key[0]
            if tag == "x":
                _, alpha_fin, m = key
                alpha = self.lattice.vector(fin=alpha_fin, delta=m[: n - 1])
                out = self.vertex_apply(alpha, m[n - 1], v)
            elif tag == "h":
                _, i, m = key
                mode = self.lattice.alpha(i)
                out = self.normal_ordered_apply(mode, m[: n - 1], m[n - 1], v)
            elif tag == "k":
                _, i, m = key
                if i < n:
                    mode = self.lattice.delta_gen(i - 1)
                    out = self.normal_ordered_apply(mode, m[: n - 1], m[n - 1], v)
                else:
                    shift = self.lattice.vector(delta=m[: n - 1])
                    out = self.vertex_apply(shift, m[n - 1], v)
            elif tag == "d":
                _, i = key
                inner = Accumulator()
                if i < n:
                    for bkey, num in v.coeffs.items():
                        val = bkey.delta[i - 1]
                        if val:
                            inner.add(bkey, num * val, v.den)
                else:
                    for bkey, num in v.coeffs.items():
                        val = -self.energy(bkey)
                        if val:
                            inner.add(bkey, num * val, v.den)
                out = inner.finish()
            else:
                raise ValueError(f"unknown toroidal tag {tag!r}")
            if not out.is_zero():
                acc.add_vector(out, coeff.numerator, coeff.denominator)
        return acc.finish()

    def delta_shift(self, vec: FockVector, shift: Sequence[int]) -> FockVector:
        """Translation by a purely isotropic lattice vector (sign-free)."""
        shift = tuple(int(s) for s in shift)
        coeffs = {
            FockBasisVector(key.fin, tuple(a + b for a, b in zip(key.delta, shift)), key.heis): num
            for key, num in vec.coeffs.items()
        }
        return FockVector(vec.den, coeffs)

    # -- basis slices and characters ----------------------------------------------

    def lattice_points(self, max_norm2: int) -> List[tuple]:
        """Finite-lattice vectors with norm at most max_norm2."""
        return self.rs.lattice_points(max_norm2)

    def _heis_monomials(self, depth: int) -> List[tuple]:
        gens = [(KIND_ALPHA, i) for i in range(self.lattice.l)] + [
            (KIND_DELTA, j) for j in range(self.nvars - 1)
        ]
        letters = [
            (d, kind, idx) for d in range(1, depth + 1) for kind, idx in gens
        ]
        out: List[tuple] = []

        def rec(remaining: int, start: int, acc: list):
            if remaining == 0:
                out.append(tuple(sorted(acc)))
                return
            for pos in range(start, len(letters)):
                d = letters[pos][0]
                if d <= remaining:
                    acc.append(letters[pos])
                    rec(remaining - d, pos, acc)
                    acc.pop()

        rec(depth, 0, [])
        return out

    def enumerate_basis(
        self, e_max: int, m_window: Sequence[Tuple[int, int]]
    ) -> List[FockBasisVector]:
        """All basis vectors with energy <= e_max and delta-part in the window."""
        if e_max < 0:
            raise ValueError("e_max must be nonnegative")
        if len(m_window) != self.nvars - 1:
            raise ValueError(f"need {self.nvars - 1} window coordinates")
        heis_by_depth = {d: self._heis_monomials(d) for d in range(0, e_max + 1)}
        deltas = list(
            itertools.product(*[range(lo, hi + 1) for lo, hi in m_window])
        )
        out = []
        for fin in self.lattice_points(2 * e_max):
            base = self.lattice.norm2_fin(fin) // 2
            for depth in range(0, e_max - base + 1):
                for heis in heis_by_depth[depth]:
                    for delta in deltas:
                        out.append(FockBasisVector(fin, delta, heis))
        out.sort(key=lambda k: (self.energy(k), k.delta, k.fin, k.heis))
        return out

    def dimension_table(
        self, e_max: int, m_window: Sequence[Tuple[int, int]]
    ) -> Dict[tuple, int]:
        """Counts keyed by (energy, delta-part)."""
        table: Dict[tuple, int] = {}
        for key in self.enumerate_basis(e_max, m_window):
            slot = (self.energy(key), key.delta)
            table[slot] = table.get(slot, 0) + 1
        return table

    def graded_character(
        self, e_max: int, m_window: Sequence[Tuple[int, int]]
    ) -> Series:
        """Weight-labelled character: q tracks energy, u_i the delta-degrees."""
        window = {"q": (0, e_max)}
        for j, (lo, hi) in enumerate(m_window):
            window[f"u{j + 1}"] = (lo, hi)
        counts: Dict[Monomial, Fraction] = {}
        for key in self.enumerate_basis(e_max, m_window):
            exps = {"q": self.energy(key)}
            for j, m in enumerate(key.delta):
                exps[f"u{j + 1}"] = m
            label = tuple(int(x) for x in self.rs.fundamental_coords(key.fin))
            mono = Monomial(exps, label)
            counts[mono] = counts.get(mono, Fraction(0)) + 1
        return Series(window, counts, labeled=True)
