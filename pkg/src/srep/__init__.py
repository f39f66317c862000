"""Local orbit types of s-representations of classical symmetric pairs."""
from .cosets import coset_index, coset_reps, embed_subsystem, verify_complete_system
from .liealg import LieAlgebraExpr, canonicalize, isomorphic, parse, render
from .orbits import (
    classify_h_theta, delta_theta, elliptic_orbit_types, local_orbit_types,
)
from .pairs import c_dual, hpis, lookup_pair, parse_selector
from .rootsys import build_root_system, generate_weyl, standard_simple_system
from .satake import recipe_run, recipe_trace, triple_for

__version__ = "0.1.0"
