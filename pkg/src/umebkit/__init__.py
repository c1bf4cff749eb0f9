"""Unextendible maximally entangled bases from equiangular projection packings.

Pipeline: validate a prime parameter (numth), build a Hadamard matrix of
order (p+1)/2 (hadamard), assemble p(p+1)/2 equiangular rank-(p-1)/2 real
projections (packing), turn them into trace-orthogonal unitaries with a
common unit phase and certify unextendibility (umeb), and check that the
family realizes the symmetric transpose channel as a uniform unitary
mixture (channels).
"""

__version__ = "0.1.0"

from .channels import (
    DecompositionReport,
    MixedUnitaryDecomposition,
    apply_decomposition,
    choi_of_channel,
    choi_rank,
    swap_matrix,
    umeb_decomposition,
    uniform_weight,
    verify_decomposition,
    wh_plus_apply,
)
from .errors import UmebkitError
from .hadamard import HadamardMatrix, construct, kronecker, paley_one, paley_two, sylvester
from .matcore import (
    Tolerance,
    cj_vectorize,
    frobenius_inner,
    is_unitary,
    numerical_rank,
    sym_antisym_split,
)
from .numth import UmebPrime, is_quadratic_residue, validate_prime
from .packing import (
    EquiangularReport,
    ProjectionFamily,
    beta_lines,
    beta_projections,
    build_residue_family,
    dual_family,
    icosahedron_lines,
    identity_coefficient,
    verify_equiangular,
)
from .umeb import (
    FeasibilityReport,
    UmebCertificate,
    UnitaryFamily,
    build_unitaries,
    certify_umeb,
    cj_states,
    compute_phase,
    feasibility,
    line_feasibility_sweep,
)

__all__ = [
    "DecompositionReport",
    "EquiangularReport",
    "FeasibilityReport",
    "HadamardMatrix",
    "MixedUnitaryDecomposition",
    "ProjectionFamily",
    "Tolerance",
    "UmebCertificate",
    "UmebPrime",
    "UmebkitError",
    "UnitaryFamily",
    "apply_decomposition",
    "beta_lines",
    "beta_projections",
    "build_residue_family",
    "build_unitaries",
    "certify_umeb",
    "choi_of_channel",
    "choi_rank",
    "cj_states",
    "cj_vectorize",
    "compute_phase",
    "construct",
    "dual_family",
    "feasibility",
    "frobenius_inner",
    "icosahedron_lines",
    "identity_coefficient",
    "is_quadratic_residue",
    "is_unitary",
    "kronecker",
    "line_feasibility_sweep",
    "numerical_rank",
    "paley_one",
    "paley_two",
    "swap_matrix",
    "sylvester",
    "sym_antisym_split",
    "umeb_decomposition",
    "uniform_weight",
    "validate_prime",
    "verify_decomposition",
    "verify_equiangular",
    "wh_plus_apply",
]
