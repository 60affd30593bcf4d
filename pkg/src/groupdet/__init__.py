"""Integer group determinants for the non-abelian groups of order 18."""

from .determinant import (
    FactorProfile,
    GroupRingElement,
    UnsupportedGroup,
    det_exact,
    det_via_reduction,
    eval_bivariate,
    factor_profile,
    group_determinant,
    h_reduce,
    regular_matrix,
)
from .eisenstein import Eisenstein, NonRealValue, as_rational_integer
from .groups import GroupSpec, GroupTable, build_group, element_of, get_group, index_of
from .search import BudgetExceeded, SearchConfig, SearchReport, run_search, verify_congruence_lemmas
from .spectrum import (
    MembershipForm,
    NotInSpectrum,
    achieve,
    classify,
    classify_subgroup_spectra,
    family_element,
)

__version__ = "0.1.0"
