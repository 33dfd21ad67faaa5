"""Exact rainbow connection numbers, the G_d(n) construction and t(n, d) on small graphs."""
from ._kernels import BACKEND
from .bounds import (bound_report, eq1_min_max_degree, eval_jarry_laugier, eval_jl_simplified,
                     eval_prop1_lower, eval_prop2_lower, eval_prop3_upper, eval_theorem1,
                     prop2_decomposition_check, sandwich_check)
from .constructions import build_gdn, build_named, color_gdn_cycle
from .enumeration import EnumerationQuery, canonical_form, enumerate_connected, read_graph6_stream
from .extremal import ExtremalResult, compute_tnd, tnd_table
from .graph_core import (Graph, bridge_decomposition, bridges, diameter, from_edge_list, graph6_decode,
                         graph6_encode, max_degree)
from .rainbow_verify import (EdgeColoring, RainbowCertificate, check_certificate, exists_rainbow_path,
                             is_rainbow_connected)
from .rc_solver import RcResult, SearchBudgetExceeded, is_k_rainbow_connectable, rc_exact, rc_lower_bound

__version__ = "0.1.0"
