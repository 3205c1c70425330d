from .lattice import KIND_ALPHA, KIND_D, KIND_DELTA, Cocycle, Lattice, LatticeError, LatticeVector
from .space import FockSpace
from .toroidal import ToroidalAlgebra, ToroidalElement, section5_matrix
from .vectors import Accumulator, FockBasisVector, FockVector, merge_letters

__all__ = [
    "KIND_ALPHA",
    "KIND_D",
    "KIND_DELTA",
    "Cocycle",
    "Lattice",
    "LatticeError",
    "LatticeVector",
    "FockSpace",
    "ToroidalAlgebra",
    "ToroidalElement",
    "section5_matrix",
    "Accumulator",
    "FockBasisVector",
    "FockVector",
    "merge_letters",
]
