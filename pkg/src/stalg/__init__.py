"""Exact-arithmetic spacetime algebra Cl(1,3) over C.

Blade-level geometric product with dual-mode scalars (exact complex
rationals or binary64), a faithful 4x4 matrix oracle, projector-driven
spinor decompositions, and plane-wave solution machinery for the Dirac,
Hestenes and even-subalgebra (Joyce) equations.
"""

from .scalars import (
    EXACT,
    FLOAT,
    FLOAT_EPS,
    ComplexScalar,
    ModeMismatchError,
)
from .multivector import (
    Multivector,
    basis_vector,
    blade_key,
    combine,
    even_basis,
    geometric_product,
)
from .matrices import (
    ColumnSpinor,
    Matrix4C,
    alpha_projector_matrix,
    apply_matrix,
    column_extract,
    gamma_matrix,
    represent,
    unrepresent,
)
from .fields import (
    Field,
    FourMomentum,
    PlaneWaveParams,
    PlaneWaveTerm,
    RestSolutions,
    commutant_split,
    conjugate_field,
    degeneracy_conditions,
    dirac_planewave,
    dirac_residual,
    gradient,
    hestenes_residual,
    joyce_amplitude,
    joyce_planewave,
    joyce_planewave_family,
    joyce_residual,
    on_shell_omega,
    planewave_condition,
    planewave_condition_kernel,
    rank,
    rest_solutions,
)
from .spinors import (
    Rotor,
    current_density,
    gauge_transform,
    hestenes_quartet,
    projector_gamma0,
    projector_i12,
    real_even_pair,
    reconstruct_joyce,
    split_right,
)

__version__ = "0.1.0"

__all__ = [
    "EXACT",
    "FLOAT",
    "FLOAT_EPS",
    "ComplexScalar",
    "ModeMismatchError",
    "Multivector",
    "basis_vector",
    "blade_key",
    "combine",
    "even_basis",
    "geometric_product",
    "ColumnSpinor",
    "Matrix4C",
    "alpha_projector_matrix",
    "apply_matrix",
    "column_extract",
    "gamma_matrix",
    "represent",
    "unrepresent",
    "Field",
    "FourMomentum",
    "PlaneWaveParams",
    "PlaneWaveTerm",
    "RestSolutions",
    "commutant_split",
    "conjugate_field",
    "degeneracy_conditions",
    "dirac_planewave",
    "dirac_residual",
    "gradient",
    "hestenes_residual",
    "joyce_amplitude",
    "joyce_planewave",
    "joyce_planewave_family",
    "joyce_residual",
    "on_shell_omega",
    "planewave_condition",
    "planewave_condition_kernel",
    "rank",
    "rest_solutions",
    "Rotor",
    "current_density",
    "gauge_transform",
    "hestenes_quartet",
    "projector_gamma0",
    "projector_i12",
    "real_even_pair",
    "reconstruct_joyce",
    "split_right",
]
