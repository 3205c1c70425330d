"""Lattices underlying the Fock construction and the sign cocycle.

The big lattice has basis {alpha_1..alpha_l} (finite root lattice), the
isotropic generators {delta_1..delta_{n-1}}, and their duals {d_1..d_{n-1}}.
The form table is fixed once and consulted everywhere:

    (alpha_i, alpha_j) = finite form,   (delta_i, alpha_j) = 0,
    (delta_i, delta_j) = 0,             (delta_i, d_j) = delta_ij,
    (d_i, d_j) = 0.

Vectors without a d-component form the sublattice Q acting on the Fock
module by lattice translations.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from ..rootsys import RootSystem

KIND_ALPHA = 0
KIND_DELTA = 1
KIND_D = 2


class LatticeError(Exception):
    pass


class LatticeVector:
    """Integer vector: finite part, delta part, d part."""

    __slots__ = ("fin", "delta", "dpart", "_hash")

    def __init__(self, fin: Sequence[int], delta: Sequence[int], dpart: Sequence[int]):
        object.__setattr__(self, "fin", tuple(int(x) for x in fin))
        object.__setattr__(self, "delta", tuple(int(x) for x in delta))
        object.__setattr__(self, "dpart", tuple(int(x) for x in dpart))
        object.__setattr__(self, "_hash", hash((self.fin, self.delta, self.dpart)))

    def __setattr__(self, name, value):
        raise AttributeError("LatticeVector is immutable")

    def in_q(self) -> bool:
        return not any(self.dpart)

    def is_zero(self) -> bool:
        return not (any(self.fin) or any(self.delta) or any(self.dpart))

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(
            tuple(a + b for a, b in zip(self.fin, other.fin)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
            tuple(a + b for a, b in zip(self.dpart, other.dpart)),
        )

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(
            tuple(-a for a in self.fin),
            tuple(-a for a in self.delta),
            tuple(-a for a in self.dpart),
        )

    def __eq__(self, other):
        return (
            isinstance(other, LatticeVector)
            and self.fin == other.fin
            and self.delta == other.delta
            and self.dpart == other.dpart
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"LatticeVector(fin={self.fin}, delta={self.delta}, d={self.dpart})"


class Lattice:
    """The pairing context for a simply-laced root system and n torus variables."""

    def __init__(self, rs: RootSystem, nvars: int):
        if nvars < 2:
            raise LatticeError("need at least two torus variables")
        self.rs = rs
        self.nvars = nvars
        self.l = rs.rank
        # integral on the root lattice for simply-laced normalization
        self.form_int = [
            [int(rs.form_matrix[i][j]) for j in range(self.l)] for i in range(self.l)
        ]

    def zero(self) -> LatticeVector:
        return LatticeVector((0,) * self.l, (0,) * (self.nvars - 1), (0,) * (self.nvars - 1))

    def vector(self, fin=None, delta=None, dpart=None) -> LatticeVector:
        return LatticeVector(
            tuple(fin) if fin is not None else (0,) * self.l,
            tuple(delta) if delta is not None else (0,) * (self.nvars - 1),
            tuple(dpart) if dpart is not None else (0,) * (self.nvars - 1),
        )

    def alpha(self, i: int) -> LatticeVector:
        fin = [0] * self.l
        fin[i] = 1
        return self.vector(fin=fin)

    def delta_gen(self, j: int) -> LatticeVector:
        delta = [0] * (self.nvars - 1)
        delta[j] = 1
        return self.vector(delta=delta)

    def d_gen(self, j: int) -> LatticeVector:
        dpart = [0] * (self.nvars - 1)
        dpart[j] = 1
        return self.vector(dpart=dpart)

    def form(self, u: LatticeVector, v: LatticeVector) -> int:
        total = 0
        for i, a in enumerate(u.fin):
            if a:
                row = self.form_int[i]
                total += a * sum(row[j] * b for j, b in enumerate(v.fin) if b)
        total += sum(a * b for a, b in zip(u.delta, v.dpart))
        total += sum(a * b for a, b in zip(u.dpart, v.delta))
        return total

    def norm2_fin(self, fin: Tuple[int, ...]) -> int:
        total = 0
        for i, a in enumerate(fin):
            if a:
                row = self.form_int[i]
                total += a * sum(row[j] * b for j, b in enumerate(fin) if b)
        return total

    def pair_gen(self, u: LatticeVector, kind: int, idx: int) -> int:
        """(u, g) for a single basis generator g."""
        if kind == KIND_ALPHA:
            return sum(u.fin[j] * self.form_int[j][idx] for j in range(self.l) if u.fin[j])
        if kind == KIND_DELTA:
            return u.dpart[idx]
        if kind == KIND_D:
            return u.delta[idx]
        raise LatticeError(f"unknown generator kind {kind}")

    def generators(self, u: LatticeVector):
        """Nonzero basis coordinates of u as (kind, idx, coeff) triples."""
        out = []
        for i, a in enumerate(u.fin):
            if a:
                out.append((KIND_ALPHA, i, a))
        for j, a in enumerate(u.delta):
            if a:
                out.append((KIND_DELTA, j, a))
        for j, a in enumerate(u.dpart):
            if a:
                out.append((KIND_D, j, a))
        return out


class Cocycle:
    """Sign twist for the lattice translations.

    The bimultiplicative base table on simple roots is

        eps0(alpha_i, alpha_j) = -1 if i = j,
                                  1 if i < j,
                                  (-1)^(alpha_i, alpha_j) if i > j,

    which satisfies eps0(a, b) eps0(b, a) = (-1)^(a, b).  On top of it sits a
    coboundary dressing by eta (eta = -1 exactly on negative roots), making

        eps(a, b) = eps0(a, b) eta(a) eta(b) eta(a + b).

    The dressing keeps the two-cocycle and commutator identities and
    normalizes eps(beta, -beta) = +1 on every root, which is what the
    bracket-fidelity oracle demands of the module action.  A purely
    bimultiplicative table cannot achieve that normalization on every root
    once the rank exceeds one.  Delta and d directions pair trivially.
    """

    def __init__(self, lattice: Lattice):
        self.lattice = lattice
        rs = lattice.rs
        if not rs.is_simply_laced():
            raise LatticeError("the sign cocycle requires a simply-laced root system")
        l = rs.rank
        # parity exponent of eps0 on simple roots
        self.exp0 = [[0] * l for _ in range(l)]
        for i in range(l):
            for j in range(l):
                if i == j:
                    self.exp0[i][j] = 1
                elif i > j:
                    self.exp0[i][j] = int(rs.form_matrix[i][j]) % 2
        self._neg_roots = {r for r in rs._root_set if any(x < 0 for x in r)}

    def eps0(self, a_fin: Tuple[int, ...], b_fin: Tuple[int, ...]) -> int:
        e = 0
        for i, ai in enumerate(a_fin):
            if not ai:
                continue
            row = self.exp0[i]
            e += ai * sum(row[j] * bj for j, bj in enumerate(b_fin) if bj)
        return -1 if e % 2 else 1

    def eta(self, fin: Tuple[int, ...]) -> int:
        return -1 if fin in self._neg_roots else 1

    def value_fin(self, a_fin: Tuple[int, ...], b_fin: Tuple[int, ...]) -> int:
        s = tuple(x + y for x, y in zip(a_fin, b_fin))
        return self.eps0(a_fin, b_fin) * self.eta(a_fin) * self.eta(b_fin) * self.eta(s)

    def value(self, a: LatticeVector, b: LatticeVector) -> int:
        """eps(a, b); only the finite parts matter."""
        return self.value_fin(a.fin, b.fin)
