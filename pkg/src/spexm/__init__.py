"""spexm: spectral extremal checks for graphs of fixed edge count.

Exhaustive isomorph-free verification at desk scale, exact algebraic
certification of equality cases, hill-climbing extremal search, and
counterexample scanners, over bitset graphs with at most 64 vertices.
"""

__version__ = "0.1.0"

from .graphs import Graph, FamilySpec, build_family  # noqa: F401
from .kernel import KERNEL_IMPL  # noqa: F401
