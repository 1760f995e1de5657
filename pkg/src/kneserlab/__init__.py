"""kneserlab: Kneser graphs of classical buildings over small prime fields.

Builds the geometric Kneser graphs (projective, flag, and polar types),
extracts apartment subgraphs, decides the unique coclique extension
property exhaustively, certifies the known counterexamples, and
cross-validates the geometry against the Weyl-group coset model.
"""

from .algebra import (
    Form,
    Subspace,
    enumerate_singular_subspaces,
    enumerate_subspaces,
    gaussian_binomial,
    intersect,
    is_totally_singular,
    perp,
    rref,
    sum_spaces,
)
from .buildings import (
    BuildingSpec,
    KneserGraph,
    apartment_graph,
    build_d4_planes,
    build_flag_kneser_A,
    build_graph,
    build_polar_kneser,
    build_projective_kneser,
    g2_points,
    polar_model,
)
from .coclique import (
    UcepReport,
    check_ucep,
    extension_set,
    max_coclique,
    maximal_cocliques_sigma,
    span_check,
)
from .coxeter import (
    ParabolicQuotient,
    WeylGroup,
    check_lifting,
    coset_kneser,
    longest_element,
    phi_map,
    shortest_double_coset,
    weyl_group,
)
from .crossval import cross_validate
from .errors import (
    CrossValidationError,
    DegenerateFormError,
    FixtureIntegrityError,
    KneserlabError,
    SearchBudgetExceeded,
    UsageError,
)
from .exterior import Multivector, plucker, span_membership, wedge
from .fixtures import verify_nonexample
from .matroid import ColumnMatroid, have_disjoint_bases, union_rank

__version__ = "0.1.0"
