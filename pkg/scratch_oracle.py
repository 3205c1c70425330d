"""Dev oracle: pin the cocycle/structure-constant choices against the module."""
import itertools
from fractions import Fraction

from torofock import build_root_system
from torofock.fock import FockSpace, FockVector, ToroidalAlgebra, ToroidalElement


def commutator_check(space, alg, a, b, keys, verbose=False):
    lhs_fail = []
    br = alg.bracket(a, b)
    for key in keys:
        v = FockVector.basis(key)
        ab = space.toroidal_apply(a, space.toroidal_apply(b, v))
        ba = space.toroidal_apply(b, space.toroidal_apply(a, v))
        direct = space.toroidal_apply(br, v)
        if ab - ba != direct:
            lhs_fail.append((key, ab - ba, direct))
    return lhs_fail


def run(label, rank, nvars, emax=3):
    rs = build_root_system(label, rank)
    space = FockSpace(rs, nvars)
    alg = ToroidalAlgebra(rs, nvars)
    keys = space.enumerate_basis(emax, [(-1, 1)] * (nvars - 1))
    print(f"== {label}{rank} n={nvars}: slice {len(keys)}")

    roots = rs.all_roots()
    n = nvars
    ms = [tuple(m) for m in itertools.product(range(-1, 2), repeat=n)]
    # x-x pairs, all root combos, small exponents
    bad = 0
    for alpha in roots:
        for beta in roots:
            for p in [(0,) * n, (1,) + (0,) * (n - 1), (0,) * (n - 1) + (1,), (1,) * n]:
                for q in [(0,) * n, (0,) * (n - 1) + (-1,)]:
                    a = alg.x(alpha, p)
                    b = alg.x(beta, q)
                    fails = commutator_check(space, alg, a, b, keys[:12])
                    if fails:
                        bad += 1
                        if bad <= 3:
                            print("  xx FAIL", alpha, beta, p, q, fails[0][0])
    print("  x-x failures:", bad)

    # h-x, h-h, k-involving, d-involving
    bad = 0
    for i in range(rank):
        for alpha in roots:
            for p in [(0,) * n, (1,) + (0,) * (n - 1), (0,) * (n - 1) + (1,)]:
                for q in [(0,) * n, (0,) * (n - 1) + (-1,), (-1,) + (0,) * (n - 1)]:
                    fails = commutator_check(space, alg, alg.h(i, p), alg.x(alpha, q), keys[:12])
                    bad += bool(fails)
    print("  h-x failures:", bad)

    bad = 0
    for i in range(rank):
        for j in range(rank):
            for p in [(1,) + (0,) * (n - 1), (0,) * (n - 1) + (2,), (1,) * n]:
                for q in [(0,) * n, tuple(-x for x in p), (0,) * (n - 1) + (-1,)]:
                    fails = commutator_check(space, alg, alg.h(i, p), alg.h(j, q), keys[:12])
                    bad += bool(fails)
    print("  h-h failures:", bad)

    bad = 0
    for i in range(1, n + 1):
        for p in [(1,) + (0,) * (n - 1), (0,) * (n - 1) + (1,), (-1,) + (0,) * (n - 1)]:
            for other in [alg.x(roots[0], (0,) * n), alg.h(0, (0,) * (n - 1) + (1,)),
                          alg.d(1), alg.d(n)]:
                try:
                    kelt = alg.k(i, p)
                except ValueError:
                    continue
                fails = commutator_check(space, alg, kelt, other, keys[:12])
                bad += bool(fails)
    print("  k-* failures:", bad)

    bad = 0
    for i in range(1, n + 1):
        for alpha in roots[:2]:
            for p in ms[:9]:
                fails = commutator_check(space, alg, alg.d(i), alg.x(alpha, p), keys[:12])
                bad += bool(fails)
    print("  d-x failures:", bad)


if __name__ == "__main__":
    run("A", 1, 2)
    run("A", 2, 2, emax=2)
