"""Strong edge-coloring of sparse graphs.

Exact strong chromatic index, constructive colorers for 2-degenerate graphs
and for graphs with Mad < 8/3, exact maximum average degree, structural
classification and discharging ledgers.
"""
from .certify import certify_bound, certify_graph
from .coloring import (PartialColoring, check_sequence, dsatur_color, extend_by_sequence, greedy_bound,
                       greedy_color, is_valid, load_coloring, dump_coloring, multiplicity, verify)
from .density import mad_below, mad_bruteforce, mad_exact, min_potential, potential, supermodularity_residual
from .discharging import audit_final_charges, discharge
from .errors import (BudgetExceeded, EdgeNotFound, GraphFormatError, InvalidParameters, InvalidVertex,
                     InvariantViolation, PreconditionError, SekError, SizeLimitExceeded)
from .exact import chromatic_number_oracle, exact_chi_s
from .generators import GraphFamilySpec, generate
from .graph import (Graph, conflict_graph, core_degrees, core_graph, degeneracy, dump_graph, edge,
                    has_three_regular_subgraph, load_graph, second_neighborhood)
from .mad83 import color_mad83
from .structure import classify, find_reducible_83
from .two_degenerate import color_two_degenerate

__version__ = "0.1.0"
