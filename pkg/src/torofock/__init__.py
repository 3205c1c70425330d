"""torofock: exact-arithmetic toroidal current algebras on a lattice Fock space.

Sparse windowed Laurent series, finite-type root systems, symmetric-function
identities, Garland current polynomials, the lattice vertex-operator module
with its full toroidal action, and the highest-weight relation and graded
character suites built on top of them.
"""

from .garland import GarlandPoly, garland_coeffs, garland_inverse_check, garland_to_symfun
from .rootsys import RootSystem, bilinear, build_root_system, is_simply_laced
from .series import (
    DivergenceError,
    Monomial,
    OutOfWindowError,
    Series,
    SeriesError,
    VariableMismatchError,
    coeff,
    geom_inverse,
    product_formula,
    series_from_json,
    series_to_json,
)
from .symfun import (
    Partition,
    PhiImage,
    SymPoly,
    complete,
    elementary,
    newton_e_check,
    newton_h_check,
    partitions,
    phi_generator_image,
    power_sum,
    sym_power_hilbert,
)

__version__ = "0.1.0"
