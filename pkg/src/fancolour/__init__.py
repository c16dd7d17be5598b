"""Constructive list edge colouring with two spare colours per list.

The solver colours the edges of any simple graph from per-edge colour lists
of size at least ``max_degree + 2``, building Vizing-style fans and freeing
colours through validated interchange paths.  Companion modules provide
exhaustive small-graph oracles (chromatic index, 2-improper chromatic index,
matching and total independence numbers), Hall-style counting conditions
with their condition indices, and total colourings from a palette of
``max_degree + 4``.
"""

from .colouring import (PartialEdgeColoring, TotalColoring, Violation,
                        check_edge_colouring, check_total_colouring,
                        colouring_from_json, colouring_to_json)
from .errors import (FancolourError, GuardExceeded, InputError,
                     InvariantViolation, NoInterchangePath, ParseError,
                     SolveFailure)
from .exact import (IndependenceSolver, OracleBudget, OracleOutcome,
                    chromatic_index, improper2_chromatic_index,
                    list_edge_colourable, matching_number,
                    total_independence_number)
from .graphs import (Graph, generate, induced_subgraph, max_degree,
                     parse_graph, serialize_graph, validate_graph)
from .hall import (HallReport, HallViolation, check_hall_edge_condition,
                   check_hall_total_condition, hall_condition_index,
                   hall_condition_index_via_lists, total_hall_condition_number,
                   total_hall_condition_number_via_lists)
from .interchange import (InterchangePath, apply_interchange, arriving_colour,
                          cut_interchange_path, find_interchange_path,
                          path_to_dot, validate_interchange_path)
from .lists import (ListAssignment, TotalListAssignment, greedy_vertex_colouring,
                    lists_from_json, lists_to_json, random_lists,
                    random_total_lists, residual_edge_lists, uniform_lists,
                    uniform_total_lists)
from .solver import (EdgeStats, SolveReport, SolverConfig, colour_edges,
                     extend_one_edge, total_colour, total_colour_lists)

__version__ = "0.1.0"
