"""Graded characters: enumerated, spanning, and closed-form product shapes.

All character series carry finite-weight labels in fundamental-weight
coordinates; the common highest-weight symbol is factored out, so the label
of a term is the finite part of its weight.  Enumerated tables come from
explicit basis counting in the Fock model; spanning tables multiply the
level-one affine character by the Hilbert series of the free polynomial
algebra on the distinguished negative central generators; closed forms are
built from geometric-series products.  Their pairwise equalities on a
window are the computational content of the character theorems.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..rootsys import RootSystem
from ..series import Monomial, Series, geom_inverse, product_formula
from ..fock.lattice import KIND_ALPHA
from ..fock.space import FockSpace
from .suites import Check


@dataclass
class CharTable:
    """A character series with the provenance of its computation."""

    series: Series
    provenance: str  # enumerated | closed-form | spanning

    def __post_init__(self):
        for mono, c in self.series.terms.items():
            if c.denominator != 1 or c < 0:
                raise ValueError(f"character coefficient at {mono} is not a nonnegative integer: {c}")


def _finite_monomials(depth: int, colors: int) -> List[tuple]:
    """Multisets of colored positive depths summing to ``depth``."""
    letters = [(d, c) for d in range(1, depth + 1) for c in range(colors)]
    out: List[tuple] = []

    def rec(remaining: int, start: int, acc: list):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for pos in range(start, len(letters)):
            d = letters[pos][0]
            if d <= remaining:
                acc.append(letters[pos])
                rec(remaining - d, pos, acc)
                acc.pop()

    rec(depth, 0, [])
    return out


def l_zero_char(rs: RootSystem, e_max: int, var: str = "q") -> CharTable:
    """Enumerated character of the level-one affine module.

    Basis: lattice points beta tensored with monomials in the finite-type
    negative modes; energy is half the norm plus the depth.
    """
    if not rs.is_simply_laced():
        raise ValueError("the level-one lattice model needs a simply-laced type")
    window = {var: (0, e_max)}
    counts: Dict[Monomial, Fraction] = {}
    for beta in rs.lattice_points(2 * e_max):
        half = int(rs.norm2(beta)) // 2
        label = tuple(int(x) for x in rs.fundamental_coords(beta))
        for depth in range(0, e_max - half + 1):
            n_mon = len(_finite_monomials(depth, rs.rank)) if depth else 1
            mono = Monomial({var: half + depth}, label)
            counts[mono] = counts.get(mono, Fraction(0)) + n_mon
    return CharTable(Series(window, counts, labeled=True), "enumerated")


def theta_partition_form(rs: RootSystem, e_max: int, var: str = "q") -> CharTable:
    """Closed form: lattice theta series times the colored partition product."""
    window = {var: (0, e_max)}
    theta_terms: Dict[Monomial, Fraction] = {}
    for beta in rs.lattice_points(2 * e_max):
        half = int(rs.norm2(beta)) // 2
        label = tuple(int(x) for x in rs.fundamental_coords(beta))
        mono = Monomial({var: half}, label)
        theta_terms[mono] = theta_terms.get(mono, Fraction(0)) + 1
    theta = Series(window, theta_terms, labeled=True)
    parts = product_formula(
        [(Monomial({var: k}), rs.rank) for k in range(1, e_max + 1)], window
    )
    return CharTable(theta * parts, "closed-form")


def partition_product(e_max: int, colors: int, var: str = "q") -> Series:
    """prod_{k>0} (1 - var^k)^(-colors), truncated."""
    window = {var: (0, e_max)}
    return product_formula([(Monomial({var: k}), colors) for k in range(1, e_max + 1)], window)


def fock_slice_char(space: FockSpace, e_max: int, mbar: Sequence[int], var: str = "q") -> CharTable:
    """Enumerated character of one fixed torus-degree slice of the Fock module."""
    window = {var: (0, e_max)}
    counts: Dict[Monomial, Fraction] = {}
    for key in space.enumerate_basis(e_max, [(m, m) for m in mbar]):
        label = tuple(int(x) for x in space.rs.fundamental_coords(key.fin))
        mono = Monomial({var: space.energy(key)}, label)
        counts[mono] = counts.get(mono, Fraction(0)) + 1
    return CharTable(Series(window, counts, labeled=True), "enumerated")


def mslice_closed_form(rs: RootSystem, nvars: int, e_max: int, var: str = "q") -> CharTable:
    """Level-one character times the torus-mode partition factor."""
    base = l_zero_char(rs, e_max, var)
    return CharTable(base.series * partition_product(e_max, nvars - 1, var), "closed-form")


def _grid_window(nvars: int, e_max: int, qdeg_max: int) -> dict:
    window = {"q1": (0, e_max)}
    for i in range(2, nvars + 1):
        window[f"q{i}"] = (0, qdeg_max)
    return window


def _embed_l_zero(rs: RootSystem, nvars: int, e_max: int, qdeg_max: int) -> Series:
    base = l_zero_char(rs, e_max, "q1").series
    window = _grid_window(nvars, e_max, qdeg_max)
    terms = {
        Monomial({"q1": m.exponent("q1")}, m.weight): c for m, c in base.terms.items()
    }
    return Series(window, terms, labeled=True)


def spanning_character(
    rs: RootSystem, nvars: int, e_max: int, qdeg_max: Optional[int] = None
) -> CharTable:
    """Upper-bound series: free central generators over the affine character.

    The generator at affine degree m and torus direction i contributes the
    bidegree q_1^m q_i; the full series is their geometric product times the
    enumerated level-one character.
    """
    if qdeg_max is None:
        qdeg_max = e_max
    window = _grid_window(nvars, e_max, qdeg_max)
    gens = [
        (Monomial({"q1": m, f"q{i}": 1}), 1)
        for m in range(1, e_max + 1)
        for i in range(2, nvars + 1)
    ]
    hilbert = product_formula(gens, window)
    return CharTable(_embed_l_zero(rs, nvars, e_max, qdeg_max) * hilbert, "spanning")


def closed_form_product(
    rs: RootSystem, nvars: int, e_max: int, qdeg_max: Optional[int] = None
) -> CharTable:
    """The product form of the local-module character at the highest weight label.

    One partition factor per finite node in the affine direction and one
    geometric factor per free central generator; every term carries the
    zero finite-weight label (the highest-weight symbol itself).
    """
    if qdeg_max is None:
        qdeg_max = e_max
    window = _grid_window(nvars, e_max, qdeg_max)
    gens = [(Monomial({"q1": k}), rs.rank) for k in range(1, e_max + 1)]
    gens += [
        (Monomial({"q1": m, f"q{i}": 1}), 1)
        for m in range(1, e_max + 1)
        for i in range(2, nvars + 1)
    ]
    product = product_formula(gens, window)
    label = Series.one(window, weight=(0,) * rs.rank)
    return CharTable(product * label, "closed-form")


def zhat_hilbert_oracle(nvars: int, e_max: int, qdeg_max: int) -> Series:
    """Multiset-enumeration oracle for the free central Hilbert series."""
    window = _grid_window(nvars, e_max, qdeg_max)
    gens = [(m, i) for m in range(1, e_max + 1) for i in range(2, nvars + 1)]
    counts: Dict[tuple, int] = {(0,) * nvars: 1}
    for m, i in gens:
        # unbounded copies of one generator: fold in ascending multiplicity
        updates = dict(counts)
        frontier = counts
        while frontier:
            nxt: Dict[tuple, int] = {}
            for deg, c in frontier.items():
                d = list(deg)
                d[0] += m
                d[i - 1] += 1
                if d[0] <= e_max and d[i - 1] <= qdeg_max:
                    key = tuple(d)
                    nxt[key] = nxt.get(key, 0) + c
            for key, c in nxt.items():
                updates[key] = updates.get(key, 0) + c
            frontier = nxt
        counts = updates
    terms = {
        Monomial({f"q{i + 1}": deg[i] for i in range(nvars)}): Fraction(c)
        for deg, c in counts.items()
    }
    return Series(window, terms)


def character_compare(a: CharTable, b: CharTable, name: str = "character-compare") -> Check:
    """Equality certificate or the first differing coefficient."""
    sa, sb = a.series, b.series
    if sa.window != sb.window:
        raise ValueError(f"window mismatch: {sa.window} vs {sb.window}")
    if sa == sb:
        return Check(name, True, f"{len(sa.terms)} coefficients agree ({a.provenance} vs {b.provenance})")
    diffs = set(sa.terms) ^ set(sb.terms)
    diffs |= {m for m in set(sa.terms) & set(sb.terms) if sa.terms[m] != sb.terms[m]}
    first = min(diffs, key=lambda m: (tuple(m.exponent(v) for v in sa.window), m.weight or ()))
    return Check(
        name,
        False,
        f"first difference at {first}: {sa.coeff(first)} vs {sb.coeff(first)}",
    )


def character_suite(rs: RootSystem, nvars: int, order: int) -> List[Check]:
    """The character equality chain at the given truncation order."""
    checks: List[Check] = []
    space = FockSpace(rs, nvars)
    enumerated = l_zero_char(rs, order)
    closed = theta_partition_form(rs, order)
    checks.append(character_compare(enumerated, closed, "characters/affine-level-one"))

    slice_closed = mslice_closed_form(rs, nvars, order)
    mbars = [(0,) * (nvars - 1), (1,) + (0,) * (nvars - 2), (-1,) * (nvars - 1)]
    slices = []
    for mbar in mbars:
        got = fock_slice_char(space, order, mbar)
        slices.append(got)
        checks.append(
            character_compare(got, slice_closed, f"characters/fock-slice{mbar}")
        )
    same = all(s.series == slices[0].series for s in slices)
    checks.append(Check("characters/slices-shift-invariant", same, f"{len(mbars)} slices"))

    spanning = spanning_character(rs, nvars, order)
    closed_prod = closed_form_product(rs, nvars, order)
    top_slice = CharTable(
        spanning.series.weight_slice((0,) * rs.rank), "spanning"
    )
    checks.append(character_compare(top_slice, closed_prod, "characters/spanning-vs-product"))

    # the torus-degree-zero slice of the spanning table is the affine character
    window = spanning.series.window
    zero_slice_terms = {
        Monomial({"q1": m.exponent("q1")}, m.weight): c
        for m, c in spanning.series.terms.items()
        if all(m.exponent(f"q{i}") == 0 for i in range(2, nvars + 1))
    }
    zero_slice = Series(window, zero_slice_terms, labeled=True)
    embedded = _embed_l_zero(rs, nvars, order, order)
    checks.append(
        Check(
            "characters/spanning-degree-zero-slice",
            zero_slice == embedded,
            f"{len(zero_slice_terms)} coefficients",
        )
    )

    hilbert_oracle = zhat_hilbert_oracle(nvars, order, order)
    gens = [
        (Monomial({"q1": m, f"q{i}": 1}), 1)
        for m in range(1, order + 1)
        for i in range(2, nvars + 1)
    ]
    hilbert = product_formula(gens, window)
    checks.append(
        Check(
            "characters/central-hilbert-oracle",
            hilbert == hilbert_oracle,
            f"{len(hilbert.terms)} coefficients",
        )
    )
    return checks
