"""Combinatorics and homology of positive factorizations on the planar pages F_k."""

from .homology import (
    AbelianGroup,
    GroupPresentation,
    IntMatrix,
    abelianization,
    extension_h2,
    fibration_homology,
    open_book_boundary_homology,
    smith_normal_form,
    solve_extension,
    st_star_presentation,
    surface_homology_mod_m,
)
from .invariants import InvariantTable, invariant_table, reference_table
from .mcg import MappingClassRep, compose, equal, hurwitz_move, realize, twist
from .page import (
    CurveClass,
    Factorization,
    Page,
    boundary_factorization,
    boundary_parallel_curve,
    canonical_monodromy,
)
from .search import (
    Configuration,
    ResourceLimitError,
    check_configuration,
    classify,
    enumerate_configurations,
)
from .words import FreeWord

__version__ = "0.1.0"
