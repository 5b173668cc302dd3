"""slackmat: slack matrices, slack ideals and realization-space certificates
for matroids over Q and prime fields."""

from .fields import GF, QQ, FieldError, PrimeField, RationalField, parse_field
from .ring import Poly, PolyRing, TermOrder, UsageError
from .groebner import (Budget, BudgetExceeded, GBReport, Ideal, buchberger,
                       eliminate, is_unit_ideal, normal_form, saturate)
from .hilbert import dimension_and_degree
from .linalg import det_bareiss, sym_det
from .matroid import Matroid, MatroidError, PointConfiguration
from .graph import CycleCapExceeded, NonIncidenceGraph
from .slack import (NumericSlackMatrix, SymbolicSlackMatrix, check_slack,
                    cycle_ideal, cycle_kernel_check, equivalence,
                    non_incidence_graph, projectively_unique, slack_ideal,
                    slack_of_realization, spanning_forest_scaling, symbolic_slack,
                    minor_ideal)
from .grassmann import (MHMatrix, PlueckerRing, grassmannian_ideal, mh_matrix,
                        plucker_ideal, plucker_vector, universal_ideal,
                        universal_projections)
from .certify import (Certificate, StrategyPlan, certify, final_polynomial_search,
                      monomial_certificate, obstruction_polynomials, oracle_search,
                      verify_certificate)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "FieldError", "PrimeField", "RationalField", "parse_field",
    "Poly", "PolyRing", "TermOrder", "UsageError",
    "Budget", "BudgetExceeded", "GBReport", "Ideal", "buchberger", "eliminate",
    "is_unit_ideal", "normal_form", "saturate", "dimension_and_degree",
    "det_bareiss", "sym_det",
    "Matroid", "MatroidError", "PointConfiguration",
    "CycleCapExceeded", "NonIncidenceGraph",
    "NumericSlackMatrix", "SymbolicSlackMatrix", "check_slack", "cycle_ideal",
    "cycle_kernel_check", "equivalence", "non_incidence_graph",
    "projectively_unique", "slack_ideal", "slack_of_realization",
    "spanning_forest_scaling", "symbolic_slack", "minor_ideal",
    "MHMatrix", "PlueckerRing", "grassmannian_ideal", "mh_matrix",
    "plucker_ideal", "plucker_vector", "universal_ideal", "universal_projections",
    "Certificate", "StrategyPlan", "certify", "final_polynomial_search",
    "monomial_certificate", "obstruction_polynomials", "oracle_search",
    "verify_certificate",
]
