"""Brute-force oracles built from explicit matrices and Clifford algebras.

Nothing here uses the closed-form invariants; the point is to check them.
"""
from .clifford import (CliffordElem, clifford_inverse, clifford_product, commutator_value,
                       spin_element_by_solve, spin_element_for)
from .cyclo import CycloField, CycloNum
from .monomial import (MonomialMatrix, Realization, commutation_factor_bruteforce, det_X,
                       standard_division_algebra, tensor_commutation_factor,
                       wedge_commutation_factor)
from .realize import (DEFAULT_MAX_DIM, OracleSkipped, b_oracle, d_inner_oracle, d_outer_oracle,
                      form_congruence_check, half_spin_factors_oracle, natural_factor,
                      natural_module, wedge_factor)

__all__ = [
    "CycloField",
    "CycloNum",
    "MonomialMatrix",
    "Realization",
    "CliffordElem",
    "clifford_product",
    "clifford_inverse",
    "spin_element_for",
    "spin_element_by_solve",
    "commutator_value",
    "standard_division_algebra",
    "commutation_factor_bruteforce",
    "tensor_commutation_factor",
    "wedge_commutation_factor",
    "det_X",
    "DEFAULT_MAX_DIM",
    "OracleSkipped",
    "natural_module",
    "natural_factor",
    "wedge_factor",
    "form_congruence_check",
    "b_oracle",
    "d_inner_oracle",
    "d_outer_oracle",
    "half_spin_factors_oracle",
]
