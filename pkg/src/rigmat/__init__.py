"""Abstract rigidity matroids on the edges of a complete graph."""

from .edges import EdgeSet, hm1_family, hm_family
from .errors import (CapExceeded, GenericityNotCertified, MatroidError, PreconditionNotMet,
                     RigmatError)
from .matroid import Matroid, cycle_matroid, from_bases, from_matrix, restriction, uniform_matroid
from .reports import AxiomReport, Scope
from .rigidity import generic_rigidity_matroid

__version__ = "0.1.0"

__all__ = [
    "AxiomReport", "CapExceeded", "EdgeSet", "GenericityNotCertified", "Matroid", "MatroidError",
    "PreconditionNotMet", "RigmatError", "Scope", "cycle_matroid", "from_bases", "from_matrix",
    "generic_rigidity_matroid", "hm1_family", "hm_family", "restriction", "uniform_matroid",
]
