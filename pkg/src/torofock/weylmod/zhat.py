"""Rewriting of negative-degree central words on the highest-weight vector.

A word is a commuting product of factors t_1^{-r} t^abar K_j (r > 0, abar a
nonnegative exponent vector on t_2..t_n, and abar_j >= 1 when j >= 2).
Applied to the highest-weight vector, every word reduces to a rational
combination of monomials in the distinguished generators t_1^{-m} t_i K_1:

  * K-degree one: t_1^{-r} t_j K_j = r t_1^{-r} t_j K_1 holds identically;
  * K-degree >= two: the torus-degree recursion either kills the factor
    (r <= K - 1) or splits it into a K_1-tagged factor of one lower degree
    times a degree-one factor;
  * K_1-tagged factors of degree >= two are redistributed through the
    relation sum_i m_i t^m K_i = 0 and recursed.

Each step strictly lowers the multiset of K-degrees, so rewriting
terminates; factor-selection order must not matter (checked against the
Fock model by the test suites).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Sequence, Tuple

Factor = Tuple[int, tuple, int]  # (r, abar, j): t_1^{-r} t^abar K_j
ZhatWord = Tuple[Tuple[int, int], ...]  # sorted ((m, i), ...):  prod t_1^{-m} t_i K_1


def validate_factor(nvars: int, factor: Factor):
    r, abar, j = factor
    if r <= 0:
        raise ValueError("need a strictly negative t_1 degree")
    if len(abar) != nvars - 1 or any(a < 0 for a in abar):
        raise ValueError("abar must be a nonnegative vector on t_2..t_n")
    if not 1 <= j <= nvars:
        raise ValueError("K-index out of range")
    if j >= 2 and abar[j - 2] < 1:
        raise ValueError("a K_j factor needs t_j-degree at least one")
    if sum(abar) == 0:
        raise ValueError("the torus degree must be positive")


def zhat_reduce(nvars: int, word: Sequence[Factor], pick_last: bool = False) -> Dict[ZhatWord, Fraction]:
    """Reduce a central word on the highest-weight vector to generator monomials.

    Returns a map from sorted generator tuples ((m, i), ...) to rational
    coefficients; the empty dict is the zero vector.  ``pick_last`` switches
    the factor-selection order, which must not change the result.
    """
    for factor in word:
        validate_factor(nvars, factor)
    results: Dict[ZhatWord, Fraction] = {}
    stack = [(Fraction(1), tuple(word), ())]
    while stack:
        coeff, pending, done = stack.pop()
        if not pending:
            key = tuple(sorted(done))
            s = results.get(key, Fraction(0)) + coeff
            if s:
                results[key] = s
            elif key in results:
                del results[key]
            continue
        idx = len(pending) - 1 if pick_last else 0
        r, abar, j = pending[idx]
        rest = pending[:idx] + pending[idx + 1:]
        degree = sum(abar)
        if j == 1:
            if degree == 1:
                i = 2 + abar.index(1)
                stack.append((coeff, rest, done + ((r, i),)))
            else:
                # K_1 at degree >= 2: t_1^{-r} t^abar K_1 = sum_i (a_i / r) ... K_i
                for pos, a in enumerate(abar):
                    if a:
                        stack.append(
                            (coeff * Fraction(a, r), rest + ((r, abar, pos + 2),), done)
                        )
        else:
            if degree == 1:
                stack.append((coeff * r, rest, done + ((r, j),)))
            elif r <= degree - 1:
                continue
            else:
                reduced = tuple(a - (1 if pos == j - 2 else 0) for pos, a in enumerate(abar))
                unit = tuple(1 if pos == j - 2 else 0 for pos in range(nvars - 1))
                for m in range(1, r - (degree - 1) + 1):
                    stack.append(
                        (coeff, rest + ((r - m, reduced, 1), (m, unit, j)), done)
                    )
    return results
