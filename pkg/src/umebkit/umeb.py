"""Unextendible maximally entangled bases from equiangular projections.

The pipeline: decide whether a rank/dimension pair admits a common unit
phase z (exact rational feasibility test), build the unitaries
U_i = I - (1 - z) P_i, and certify the resulting family: trace
orthogonality, span of the symmetric matrices, orthogonality of the
antisymmetric complement and odd dimension.  The certificate is the
machine-checkable record that the vectorized family is an unextendible
maximally entangled basis.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .errors import Infeasible, RankOutOfRange
from .matcore import DEFAULT_TOL, Tolerance, cj_vectorize
from .packing import ProjectionFamily


@dataclass(frozen=True)
class FeasibilityReport:
    """Exact real part of the candidate phase and whether |Re z| <= 1."""

    d: int
    r: int
    re_z: Fraction
    feasible: bool
    allowed_d_for_r: frozenset[int]


@dataclass(frozen=True, eq=False)
class UnitaryFamily:
    """Unitaries I - (1-z)P_i sharing one unit-modulus phase z."""

    d: int
    z: complex
    unitaries: tuple[np.ndarray, ...]
    source: ProjectionFamily | None = None

    def __len__(self) -> int:
        return len(self.unitaries)


@dataclass(frozen=True)
class UmebCertificate:
    """Verification record; unextendible_verdict is the conjunction of the
    three structural facts: symmetric span, antisymmetric complement, odd d."""

    d: int
    cardinality: int
    max_unitarity_dev: float
    max_orthogonality_dev: float
    span_rank: int
    symmetric_span: bool
    complement_antisymmetric: bool
    d_odd: bool
    unextendible_verdict: bool
    cj_orthonormality_dev: float

    def to_json(self) -> dict:
        return asdict(self)


def feasibility(d: int, r: int) -> FeasibilityReport:
    """Exact Re(z) = (2r(d+1)(d-r) - d(d+2)(d-1)) / (2r(d+1)(d-r)).

    Feasible iff Re(z) >= -1; the upper bound Re(z) <= 1 always holds for
    1 <= r < d.  The d admitting a solution for fixed r are exactly
    2r-1, 2r, 2r+1.
    """
    if not 1 <= r < d:
        raise RankOutOfRange(f"need 1 <= r < d, got r={r}, d={d}")
    den = 2 * r * (d + 1) * (d - r)
    re_z = Fraction(den - d * (d + 2) * (d - 1), den)
    return FeasibilityReport(
        d=d,
        r=r,
        re_z=re_z,
        feasible=re_z >= -1,
        allowed_d_for_r=frozenset(x for x in (2 * r - 1, 2 * r, 2 * r + 1) if x >= 1),
    )


def compute_phase(d: int, r: int) -> complex:
    """The unit phase with the exact rational real part and Im(z) >= 0."""
    report = feasibility(d, r)
    if not report.feasible:
        raise Infeasible(f"no unit phase exists for d={d}, r={r} (Re z = {report.re_z})")
    re = float(report.re_z)
    im = math.sqrt(max(0.0, float(1 - report.re_z * report.re_z)))
    return complex(re, im)


def build_unitaries(family: ProjectionFamily, z: complex) -> UnitaryFamily:
    """U_i = I - (1-z) P_i; eigenvalue z on range(P_i), 1 on its kernel."""
    eye = np.eye(family.d, dtype=complex)
    unitaries = tuple(eye - (1.0 - z) * np.asarray(p, dtype=complex) for p in family.projections)
    return UnitaryFamily(d=family.d, z=z, unitaries=unitaries, source=family)


def cj_states(uf: UnitaryFamily) -> np.ndarray:
    """Row-stacked normalized vectorizations, one d^2 state per unitary."""
    return np.asarray([cj_vectorize(u) for u in uf.unitaries])


def _antisymmetric_basis_flat(d: int) -> np.ndarray:
    """The d(d-1)/2 matrices (E_ij - E_ji)/sqrt(2), column-stacked as rows."""
    out = []
    for i in range(d):
        for j in range(i + 1, d):
            a = np.zeros((d, d), dtype=complex)
            a[i, j] = 1.0 / math.sqrt(2.0)
            a[j, i] = -1.0 / math.sqrt(2.0)
            out.append(a.flatten(order="F"))
    return np.asarray(out)


def certify_umeb(uf: UnitaryFamily, tol: Tolerance = DEFAULT_TOL) -> UmebCertificate:
    """Fill every certificate field from scratch; failures are verdicts, not errors."""
    d = uf.d
    n = len(uf.unitaries)
    eye = np.eye(d)

    stack = np.asarray([np.asarray(u, dtype=complex) for u in uf.unitaries])
    max_unitarity_dev = float(
        np.max(np.abs(np.einsum("nji,njk->nik", stack.conj(), stack) - eye))
    )
    max_symmetry_dev = float(np.max(np.abs(stack - stack.transpose(0, 2, 1))))

    flat = stack.reshape(n, -1)
    gram = flat.conj() @ flat.T
    if n > 1:
        off_mask = ~np.eye(n, dtype=bool)
        max_orthogonality_dev = float(np.max(np.abs(gram[off_mask])))
    else:
        max_orthogonality_dev = 0.0

    eigs = np.linalg.eigvalsh(gram)
    span_rank = int(np.sum(eigs > tol.rank_eps * eigs[-1])) if eigs[-1] > 0 else 0
    symmetric_span = span_rank == d * (d + 1) // 2 and max_symmetry_dev <= tol.eps

    # project each antisymmetric basis matrix onto span{U_i}: the projection
    # must vanish, leaving the residual with the full norm 1
    anti = _antisymmetric_basis_flat(d)
    overlaps = flat.conj() @ anti.T
    coeffs = np.linalg.lstsq(gram, overlaps, rcond=None)[0]
    projected_norms_sq = np.einsum("nm,nm->m", overlaps.conj(), coeffs).real
    max_projected_norm = float(np.sqrt(max(0.0, np.max(projected_norms_sq))))
    complement_antisymmetric = max_projected_norm <= tol.eps

    cj_orthonormality_dev = float(np.max(np.abs(gram / d - np.eye(n))))

    d_odd = d % 2 == 1
    return UmebCertificate(
        d=d,
        cardinality=n,
        max_unitarity_dev=max_unitarity_dev,
        max_orthogonality_dev=max_orthogonality_dev,
        span_rank=span_rank,
        symmetric_span=symmetric_span,
        complement_antisymmetric=complement_antisymmetric,
        d_odd=d_odd,
        unextendible_verdict=symmetric_span and complement_antisymmetric and d_odd,
        cj_orthonormality_dev=cj_orthonormality_dev,
    )


def line_feasibility_sweep(d_max: int) -> list[FeasibilityReport]:
    """Rank-one feasibility for every d = 2..d_max; feasible only at d = 2, 3."""
    return [feasibility(d, 1) for d in range(2, d_max + 1)]
