"""Cayley configuration spaces of 1-dof tree-decomposable planar linkages.

The package computes the set of attainable lengths for a chosen non-edge
of a linkage, organised as oriented intervals per forward construction
type, plus continuous motion paths between configurations, curve
representations over non-edge pairs, and complete Cayley vectors that
pin down a configuration uniquely.
"""

from .graphs import Graph, construction_plan
from .motion import find_paths, sample_motion
from .qim import qim
from .realization import Linkage, realize
from .spaces import CayleySpace, elr, elr_full

__version__ = "0.1.0"

__all__ = [
    "CayleySpace",
    "Graph",
    "Linkage",
    "construction_plan",
    "elr",
    "elr_full",
    "find_paths",
    "qim",
    "realize",
    "sample_motion",
    "__version__",
]
