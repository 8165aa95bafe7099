"""Hall numbers, the periodic Hall algebra and its Lie algebra for root categories of Dynkin quivers."""

from .arith import Rational, VerificationFailure
from .hall import FormalSum, HallAlgebra
from .liealg import ChevalleyOracle, HallLie, StarLie, chevalley_compare
from .linalg import SUPPORTED_Q, EnumerationTooLarge, field
from .quiverrep import Quiver, QuiverError, build_catalog
from .rootcat import ChainMap, IsoLabel, PComplex, RootCategory, cone, is_iso
from .suites import SUITES, run_suite

__all__ = [
    "Rational", "VerificationFailure", "FormalSum", "HallAlgebra", "ChevalleyOracle", "HallLie",
    "StarLie", "chevalley_compare", "SUPPORTED_Q", "EnumerationTooLarge", "field", "Quiver",
    "QuiverError", "build_catalog", "ChainMap", "IsoLabel", "PComplex", "RootCategory", "cone",
    "is_iso", "SUITES", "run_suite",
]
