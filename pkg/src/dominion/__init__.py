"""Exact domination number and dominion (number of minimum dominating sets) of small graphs."""
from .classify import ClassFlags, Census, census, classify
from .closed_forms import (
    FamilyValue,
    Status,
    complete_dominion,
    cycle_dominion,
    dominion_bounds,
    iterated_join_dominion,
    join_dominion,
    join_gamma,
    join_lower_bound,
    multipartite_dominion,
    path_dominion,
    star_dominion,
    sun_dominion,
)
from .engine import (
    GammaReport,
    brute_force_dominion,
    closed_neighborhood,
    dominating_sets_of_size,
    domination_number,
    dominion,
    enumerate_gamma_sets,
    is_dominating,
)
from .families import build_family, parse_family
from .formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .graph import (
    Graph,
    VertexSet,
    join,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_empty,
    make_path,
    make_star,
    make_sun,
    members,
    vertex_set,
)

__version__ = "0.1.0"
