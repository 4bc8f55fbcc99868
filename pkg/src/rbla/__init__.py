"""Exact computations with Rota-Baxter Lie algebras, their bialgebras and L-dendriform structures."""

from .exact import Coproduct, LinearMap, Space, Tensor2, Vector, scalar
from .lie import BilinearForm, BilinearProduct, LieAlgebra, Representation
from .report import CheckReport, StructureError, Violation
from .rota_baxter import RBLieAlgebra, check_admissible, check_rb_operator

__version__ = "0.1.0"
