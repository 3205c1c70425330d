"""Presentation generators realized as toroidal elements, and the pulled-back module.

Generator labels follow the presentation with torus exponents split as
(affine exponent m_1, remaining exponents k_2..k_n).  The affine node's
generators use the highest root:

    e_0(kbar) = f_theta x t_1 t^kbar        f_0(kbar) = e_theta x t_1^{-1} t^kbar
    h_0(kbar) = -h_theta x t^kbar + t^kbar K_1

The module for the relation suites is the Fock module pulled back through
the torus automorphism swapping the first and last variables, so every
presentation-side element is conjugated through that matrix before acting.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..rootsys import RootSystem
from ..fock.space import FockSpace
from ..fock.toroidal import ToroidalAlgebra, ToroidalElement, section5_matrix
from ..fock.vectors import Accumulator, FockBasisVector, FockVector


class VModule:
    """The level-one highest-weight model carrying all relation checks."""

    def __init__(self, rs: RootSystem, nvars: int):
        self.rs = rs
        self.nvars = nvars
        self.alg = ToroidalAlgebra(rs, nvars)
        self.space = FockSpace(rs, nvars)
        self.amat = section5_matrix(nvars)
        self._amap = self.alg.gl_automorphism(self.amat)
        self._conj_cache: Dict[ToroidalElement, ToroidalElement] = {}

    # -- generator dictionary -------------------------------------------------

    def _m(self, m1: int, kbar: Sequence[int]) -> tuple:
        kbar = tuple(int(k) for k in kbar)
        if len(kbar) != self.nvars - 1:
            raise ValueError(f"kbar must have length {self.nvars - 1}")
        return (int(m1),) + kbar

    def e(self, i: int, kbar: Sequence[int]) -> ToroidalElement:
        if i == 0:
            return self.alg.x(tuple(-t for t in self.rs.theta), self._m(1, kbar))
        return self.alg.x(self.rs.simple_roots[i - 1], self._m(0, kbar))

    def f(self, i: int, kbar: Sequence[int]) -> ToroidalElement:
        if i == 0:
            return self.alg.x(self.rs.theta, self._m(-1, kbar))
        return self.alg.x(tuple(-t for t in self.rs.simple_roots[i - 1]), self._m(0, kbar))

    def h(self, i: int, kbar: Sequence[int]) -> ToroidalElement:
        m = self._m(0, kbar)
        if i == 0:
            out = self.alg.h_vec(tuple(-t for t in self.rs.theta), m)
            return out + self.alg.k(1, m)
        return self.alg.h(i - 1, m)

    def delta_central(self, rbar: Sequence[int], sbar: Sequence[int]) -> ToroidalElement:
        """delta_rbar(sbar) = sum_{i=2..n} r_i t^sbar K_i."""
        rbar = tuple(int(r) for r in rbar)
        m = self._m(0, sbar)
        out = ToroidalElement.zero()
        for pos, r in enumerate(rbar):
            if r:
                out = out + self.alg.k(pos + 2, m, r)
        return out

    def d(self, j: int) -> ToroidalElement:
        return self.alg.d(j)

    def central(self, m1: int, abar: Sequence[int], j: int) -> ToroidalElement:
        """t_1^{m1} t^abar K_j."""
        return self.alg.k(j, self._m(m1, abar))

    def cartan_element(self, coords: Sequence, m1: int, kbar: Sequence[int]) -> ToroidalElement:
        return self.alg.h_vec(coords, self._m(m1, kbar))

    # -- affine Cartan data -----------------------------------------------------

    def aff_pairing(self, i: int, j: int) -> int:
        """alpha_j(h_i) for affine node labels 0..l (node 0 carries delta_1 - theta)."""
        rs = self.rs
        theta = rs.theta
        if i == 0 and j == 0:
            return 2
        if i == 0:
            return -int(rs.bilinear(rs.simple_roots[j - 1], theta))
        if j == 0:
            return -int(rs.coroot_pairing(theta, i - 1))
        return int(rs.coroot_pairing(rs.simple_roots[j - 1], i - 1))

    def aff_h_form(self, i: int, j: int) -> int:
        """(h_i, h_j) with h_0 = K_1 - h_theta; the K_1 part pairs to zero."""
        rs = self.rs
        theta = rs.theta
        if i == 0 and j == 0:
            return int(rs.norm2(theta))
        if i == 0:
            return -int(rs.bilinear(theta, rs.simple_roots[j - 1]))
        if j == 0:
            return -int(rs.bilinear(rs.simple_roots[i - 1], theta))
        return int(rs.bilinear(rs.simple_roots[i - 1], rs.simple_roots[j - 1]))

    def lambda0_eigenvalue(self, i: int) -> int:
        """Lambda_0(h_i): one on the affine node, zero on the finite ones."""
        return 1 if i == 0 else 0

    # -- action ------------------------------------------------------------------

    def conjugate(self, element: ToroidalElement) -> ToroidalElement:
        hit = self._conj_cache.get(element)
        if hit is None:
            hit = self._amap(element)
            self._conj_cache[element] = hit
        return hit

    def apply(self, element: ToroidalElement, vec: FockVector) -> FockVector:
        return self.space.toroidal_apply(self.conjugate(element), vec)

    def apply_word(self, elements: Sequence[ToroidalElement], vec: FockVector) -> FockVector:
        """Apply a product of elements, rightmost first."""
        out = vec
        for element in reversed(elements):
            out = self.apply(element, out)
        return out

    def vacuum(self) -> FockVector:
        return self.space.vacuum()

    def basis_slice(self, e_max: int, m_window) -> List[FockBasisVector]:
        return self.space.enumerate_basis(e_max, m_window)


class OpCache:
    """Memoized action of one fixed operator, by basis vector."""

    __slots__ = ("space", "element", "cache")

    def __init__(self, space: FockSpace, element: ToroidalElement):
        self.space = space
        self.element = element
        self.cache: Dict[FockBasisVector, FockVector] = {}

    def on_key(self, key: FockBasisVector) -> FockVector:
        img = self.cache.get(key)
        if img is None:
            img = self.space.toroidal_apply(self.element, FockVector.basis(key))
            self.cache[key] = img
        return img

    def __call__(self, vec: FockVector) -> FockVector:
        if len(vec.coeffs) == 1 and vec.den == 1:
            (key, num), = vec.coeffs.items()
            img = self.on_key(key)
            return img if num == 1 else img.scale(num)
        acc = Accumulator()
        for key, num in vec.coeffs.items():
            acc.add_vector(self.on_key(key), num, vec.den)
        return acc.finish()


def kbar_box(nvars: int, lo: int, hi: int) -> List[tuple]:
    """All integer vectors of length nvars-1 with coordinates in [lo, hi]."""
    return [tuple(k) for k in itertools.product(range(lo, hi + 1), repeat=nvars - 1)]
