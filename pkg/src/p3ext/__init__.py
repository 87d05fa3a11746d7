"""Exact constructions of Galois extensions of Q with non-abelian groups of order p^3."""

from .arith import Classification, Group, MapContext
from .config import Settings, load_settings
from .construct import ConstructionError, ConstructionResult, build_construction, kappa_order_check
from .cyclo import Automorphism, CycloElement
from .expr import element_from_text, parse_element
from .fixtures import reproduce
from .ideals import nonpower_witness, splitting_type, ideal_criterion
from .minpoly import irr_alpha_matrix, irr_shortcut_p3, numeric_crosscheck
from .poly import RationalPoly
from .ramify import poly_disc, prime_status, ram_set
from .search import SearchSpec, search
from .stats import galois_stats
from .tower import TowerContext, build_tower

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "Group",
    "MapContext",
    "Settings",
    "load_settings",
    "ConstructionError",
    "ConstructionResult",
    "build_construction",
    "kappa_order_check",
    "Automorphism",
    "CycloElement",
    "element_from_text",
    "parse_element",
    "reproduce",
    "nonpower_witness",
    "splitting_type",
    "ideal_criterion",
    "irr_alpha_matrix",
    "irr_shortcut_p3",
    "numeric_crosscheck",
    "RationalPoly",
    "poly_disc",
    "prime_status",
    "ram_set",
    "SearchSpec",
    "search",
    "galois_stats",
    "TowerContext",
    "build_tower",
]
