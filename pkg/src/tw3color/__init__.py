"""Certified list edge-coloring and total coloring for tree-width-3 and Halin graphs."""

from .colorings import (ListAssignment, PartialColoring, TotalColoring, TotalListAssignment,
                        bound_plus_lists, make_lists, uniform_lists)
from .decomposition import (SmoothnessReport, TreeDecomposition, decompose_tw3, make_smooth,
                            pivot_node, smoothness_report, verify_td)
from .edge_coloring import EngineStats, ballon_color, color_tw3_edges
from .errors import (ColoringError, InputError, IntegrityError, ListTooShort, NotApplicable,
                     ParseError, ResourceExceeded, Stuck, TooWide)
from .fixtures import fixtures
from .galvin import galvin_color
from .graph import Edge, Graph, edge
from .halin import (CompatiblePair, HalinStructure, color_halin, cubic_halin_3color,
                    find_compatible_pair, generate_halin, halin_delta_choose)
from .oracle import (SearchBudget, SearchResult, chromatic_index, exact_list_edge_color,
                     exact_list_total_color, exact_total_color, verify_edge_coloring,
                     verify_total_coloring)
from .total_coloring import total_bound, total_color_delta_plus_2, total_color_tw3

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
