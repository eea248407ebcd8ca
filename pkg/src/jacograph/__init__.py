"""Linear Jaco graphs: exact construction, parameters, dom-paths, and
sequence conjecture checking."""

from .conjectures import ConjectureReport, run_checks
from .dompath import (DomPath, GeneralGraph, all_minimum_dominating_sets,
                      dominates, minimal_dom_path, primary_dom_path,
                      secondary_dom_path)
from .exact_arith import floor_affine_sqrt5, floor_exp, floor_mul_sqrt5
from .graph_params import (ParamRow, diameter, domination_number,
                           max_degree, max_degree_set, param_row, size,
                           table_rows)
from .jaco_core import JacoGraph, back_degree_formula, build_jaco
from .sequences import SEQUENCE_IDS, seq_prefix, seq_term

__version__ = "0.1.0"

__all__ = [
    "ConjectureReport", "DomPath", "GeneralGraph", "JacoGraph", "ParamRow",
    "SEQUENCE_IDS", "all_minimum_dominating_sets", "back_degree_formula",
    "build_jaco", "diameter", "dominates", "domination_number",
    "floor_affine_sqrt5", "floor_exp", "floor_mul_sqrt5", "max_degree",
    "max_degree_set", "minimal_dom_path", "param_row", "primary_dom_path",
    "run_checks", "secondary_dom_path", "seq_prefix", "seq_term", "size",
    "table_rows",
]
