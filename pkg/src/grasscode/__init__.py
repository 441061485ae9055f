"""Non-degenerate linear codes as vertices of a Grassmann graph.

Finite field tables, exact linear algebra, code enumeration and counts,
the star/top clique structure of the code graph, monomial equivalence and
automorphism group orders.
"""

from .codegraph import (
    CliqueRecord,
    CodeGraph,
    adjacent,
    build_graph,
    classify_maximal_cliques,
    connectivity,
    hyperplane_sections,
    is_maximal_clique,
    line_set,
    section_by_functional,
    star_restricted,
    star_size_formula,
    top_restricted,
)
from .codespace import (
    CoordinateProfile,
    Subspace,
    canonicalize,
    coordinate_profile,
    count_nondegenerate,
    enumerate_codes,
    enumerate_grassmannian,
    gaussian,
    is_nondegenerate,
)
from .equiv import MonomialMap, apply, are_equivalent, induces_automorphism, orbits
from .automorphism import automorphism_group_order
from .gf import Field, frobenius, make_field
from .linalg import contains_vector, intersect_and_sum, rref

__version__ = "0.1.0"
