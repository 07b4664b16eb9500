"""abeliancft: exact arithmetic for abelian number fields.

Conductors, discriminants and ramification of subfields of cyclotomic
fields; quadratic class groups via binary forms with a Dirichlet-sum
oracle; Polya-group orders; the conductor-based divisor bound on class
numbers; and decision certificates for "is the Hilbert class field
abelian over Q".  A compiled kernel handles the hot loops, with a pure
Python fallback selected at import.
"""

from ._kernels import backend
from .abgroup import (
    FiniteAbelianGroup,
    abelian_groups_of_order,
    aut_order,
    cor37_check,
    exponent,
    semidirect_order,
)
from .arith import (
    Factorization,
    crt,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    kronecker_symbol,
    valuation,
)
from .certificates import Certificate
from .cubic import CubicSpec, cubic_discriminant, pht1_check, pht2_check, s3_family_check
from .cyclo import (
    AbelianFieldSpec,
    RamificationProfile,
    conductor,
    conductor_discriminant_oracle,
    cyclotomic_field_spec,
    degree,
    discriminant,
    genus_degree_cyclic,
    is_cyclic,
    is_real,
    parse_field_spec,
    quadratic_field_spec,
    ramification_index,
    ramification_profile,
    real_cyclotomic_field_spec,
    residue_degree,
)
from .quadratic import (
    BinaryQuadraticForm,
    QuadraticFieldData,
    ambiguous_class_count,
    c2_bound_check,
    class_number_dirichlet,
    class_number_imaginary,
    ext2_certify,
    fundamental_discriminant,
    hcf_abelian_quadratic,
    narrow_class_number_real,
    pell_unit,
    polya_order_quadratic,
    quadratic_field_data,
    reduced_imaginary_forms,
)
from .survey import SurveyConfig, SurveyRow, compute_row, run_survey
from .theorems import (
    TBoundBreakdown,
    c1_decision_cyclic,
    certify_nonabelian,
    chabert_polya_cyclic,
    cor32_check,
    n1_bound,
    prime_degree_class_group_predict,
    r_function,
    r_product,
    t_bound,
    t_bound_ell,
    verify_main_bound,
)

__version__ = "0.1.0"
