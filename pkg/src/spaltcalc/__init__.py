"""Graphical calculus for two-block Spaltenstein varieties.

Tableaux, extended cup diagrams, dependence graphs, coloured circle diagrams,
the coloured cobordism functor with its surgery product, and an exact
fixed-point flag oracle that checks the diagrammatic statements.
"""

from .arc_diagrams import (circle_diagram, circle_diagram_plus, cup_diagram,
                           extended_cup_rowstrict, extended_cup_standard,
                           is_empty_intersection)
from .dependence_graphs import (dep_graph_pair, dep_graph_rowstrict,
                                dep_graph_standard, independents)
from .tableaux import (RowStrictTableau, TableauType, enumerate_row_strict,
                       enumerate_standard, parse_tableau, weight_sequence)

__all__ = [
    "RowStrictTableau", "TableauType", "circle_diagram", "circle_diagram_plus",
    "cup_diagram", "dep_graph_pair", "dep_graph_rowstrict", "dep_graph_standard",
    "enumerate_row_strict", "enumerate_standard", "extended_cup_rowstrict",
    "extended_cup_standard", "independents", "is_empty_intersection",
    "parse_tableau", "weight_sequence",
]
