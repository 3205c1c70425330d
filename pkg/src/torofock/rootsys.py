"""Finite-type root system data for all simple types.

Roots are integer coordinate vectors in the simple-root basis, generated by
reflection closure from the simple roots (no hard-coded root tables beyond
the Cartan matrices).  The invariant bilinear form is normalized so the
highest root theta has (theta, theta) = 2; with the convention

    cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).

Non-simply-laced types are fully constructed here; the Fock-space layer
rejects them at its own boundary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


class RootSystemError(Exception):
    pass


_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def cartan_matrix(label: str, rank: int) -> list:
    """Cartan matrix in the convention cartan[i][j] = <alpha_i, alpha_j^vee>."""
    lo, hi = _RANK_RANGE.get(label, (None, None))
    if lo is None or rank < lo or (hi is not None and rank > hi):
        raise RootSystemError(f"invalid type ({label}, {rank})")
    n = rank
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def chain(pairs):
        for i, j in pairs:
            c[i][j] = -1
            c[j][i] = -1

    if label == "A":
        chain((i, i + 1) for i in range(n - 1))
    elif label == "B":
        chain((i, i + 1) for i in range(n - 1))
        c[n - 2][n - 1] = -2  # alpha_n short
    elif label == "C":
        chain((i, i + 1) for i in range(n - 1))
        c[n - 1][n - 2] = -2  # alpha_n long
    elif label == "D":
        chain((i, i + 1) for i in range(n - 2))
        c[n - 3][n - 1] = -1
        c[n - 1][n - 3] = -1
    elif label == "E":
        # Bourbaki numbering: chain 1-3-4-5-..., node 2 hangs off node 4.
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
        chain(edges)
    elif label == "F":
        chain((i, i + 1) for i in range(3))
        c[1][2] = -2  # alpha_3, alpha_4 short
    elif label == "G":
        c[0][1] = -1
        c[1][0] = -3
    return c


class RootSystem:
    """Simple-root data, positive roots, highest root and the normalized form."""

    def __init__(self, label: str, rank: int):
        self.label = label.upper()
        self.rank = int(rank)
        self.cartan = cartan_matrix(self.label, self.rank)
        self.symmetrizer = self._solve_symmetrizer()
        # form[i][j] = (alpha_i, alpha_j) = cartan[i][j] * d_j
        self.form_matrix = [
            [self.cartan[i][j] * self.symmetrizer[j] for j in range(self.rank)]
            for i in range(self.rank)
        ]
        self.simple_roots = [
            tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)
        ]
        self.positive_roots = self._reflection_closure()
        self.theta = max(self.positive_roots, key=sum)
        self._root_set = set(self.positive_roots) | {
            tuple(-x for x in r) for r in self.positive_roots
        }

    def _solve_symmetrizer(self) -> list:
        """d_i = (alpha_i, alpha_i)/2 with max d_i = 1, so theta is long of norm 2."""
        n = self.rank
        d: list = [None] * n
        d[0] = Fraction(1)
        pending = [0]
        while pending:
            i = pending.pop()
            for j in range(n):
                if i != j and self.cartan[i][j] != 0 and d[j] is None:
                    # symmetry (alpha_i, alpha_j): c[i][j] d_j = c[j][i] d_i
                    d[j] = d[i] * Fraction(self.cartan[j][i], self.cartan[i][j])
                    pending.append(j)
        top = max(d)
        return [x / top for x in d]

    def _reflect(self, beta: tuple, i: int) -> tuple:
        # sigma_i(beta) = beta - <beta, alpha_i^vee> alpha_i
        pairing = sum(beta[j] * self.cartan[j][i] for j in range(self.rank))
        out = list(beta)
        out[i] -= pairing
        return tuple(out)

    def _reflection_closure(self) -> list:
        seen = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            beta = frontier.pop()
            for i in range(self.rank):
                image = self._reflect(beta, i)
                if image not in seen:
                    seen.add(image)
                    frontier.append(image)
        positive = [r for r in seen if all(x >= 0 for x in r)]
        positive.sort(key=lambda r: (sum(r), r))
        return positive

    # -- form and pairings ---------------------------------------------------

    def bilinear(self, x: Sequence, y: Sequence) -> Fraction:
        """(x, y) for vectors in simple-root coordinates."""
        if len(x) != self.rank or len(y) != self.rank:
            raise RootSystemError(
                f"dimension mismatch: rank {self.rank}, got {len(x)} and {len(y)}"
            )
        total = Fraction(0)
        for i in range(self.rank):
            if x[i] == 0:
                continue
            row = self.form_matrix[i]
            total += x[i] * sum(row[j] * y[j] for j in range(self.rank) if y[j] != 0)
        return total

    def norm2(self, x: Sequence) -> Fraction:
        return self.bilinear(x, x)

    def coroot_pairing(self, beta: Sequence, i: int) -> Fraction:
        """<beta, alpha_i^vee> = 2 (beta, alpha_i) / (alpha_i, alpha_i)."""
        return sum(beta[j] * self.cartan[j][i] for j in range(self.rank))

    def is_root(self, beta: Sequence) -> bool:
        return tuple(beta) in self._root_set

    def all_roots(self) -> list:
        return sorted(self._root_set)

    def is_simply_laced(self) -> bool:
        return all(d == 1 for d in self.symmetrizer)

    # -- weight lattice -------------------------------------------------------

    def fundamental_coords(self, beta: Sequence) -> tuple:
        """Root-basis vector expressed in the fundamental-weight basis.

        Coordinate k is <beta, alpha_k^vee>; integral on the root lattice.
        """
        return tuple(self.coroot_pairing(beta, k) for k in range(self.rank))

    def weight_to_root_coords(self, fund: Sequence) -> tuple:
        """Inverse of :meth:`fundamental_coords`; rational in general."""
        inv = invert_matrix([[Fraction(v) for v in row] for row in self.cartan])
        # fund = beta . cartan, so beta = fund . cartan^{-1}
        return tuple(
            sum(Fraction(fund[i]) * inv[i][k] for i in range(self.rank))
            for k in range(self.rank)
        )

    def lattice_points(self, max_norm2) -> list:
        """Root-lattice vectors of norm at most max_norm2, by descent search.

        Any nonzero lattice vector pairs positively with some simple root, so
        subtracting that root does not increase the norm; the orbit search
        from zero through steps of bounded norm is therefore complete.
        """
        zero = (0,) * self.rank
        seen = {zero}
        frontier = [zero]
        while frontier:
            beta = frontier.pop()
            for i in range(self.rank):
                for s in (1, -1):
                    cand = list(beta)
                    cand[i] += s
                    cand = tuple(cand)
                    if cand not in seen and self.norm2(cand) <= max_norm2:
                        seen.add(cand)
                        frontier.append(cand)
        return sorted(seen)


def build_root_system(label: str, rank: int) -> RootSystem:
    return RootSystem(label, rank)


def bilinear(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    return rs.bilinear(x, y)


def is_simply_laced(rs: RootSystem) -> bool:
    return rs.is_simply_laced()


def positive_root_count(label: str, rank: int) -> int:
    """Classical positive-root counts, used as an oracle against the closure."""
    l = rank
    return {
        "A": l * (l + 1) // 2,
        "B": l * l,
        "C": l * l,
        "D": l * (l - 1),
        "E": {6: 36, 7: 63, 8: 120}[l] if l in (6, 7, 8) else 0,
        "F": 24,
        "G": 6,
    }[label.upper()]


def invert_matrix(rows: list) -> list:
    """Exact inverse of a small square matrix over Fraction (Gauss-Jordan)."""
    n = len(rows)
    a = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise RootSystemError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]
