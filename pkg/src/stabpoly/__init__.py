"""Exact toolkit for stable set polytopes of (P6,triangle)-free and
(P6,paw)-free graphs: facets, certificates, catalog, composition, and
separation."""

__version__ = "0.1.0"

from .errors import BudgetError, DomainError, StabpolyError
from .graphs import Graph, bits, from_graph6, load_graph, mask_of, to_graph6
from .canon import canonical_form, canonical_key, is_isomorphic
from .linsys import Inequality, LinearSystem
from .polytope import full_facets, is_facet_inducing, stab_facets
from .stable import all_stable_sets, maximal_stable_sets
from .catalog import build_catalog, build_h1, build_h2, build_h3, load_catalog, save_catalog
from .separation import SeparationOracle, membership_oracle, separate
