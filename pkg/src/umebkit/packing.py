"""Equiangular projection families.

Two sources: the quadratic-residue/Hadamard construction that yields
p(p+1)/2 rank-(p-1)/2 real projections in dimension p (for p = 3 or
p = 7 mod 8), and the six icosahedron diagonals as rank-one projections in
dimension 3.  Also the duality map Q_i = I - P_i and the closed-form common
angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    HadamardOrderMismatch,
    IndexOutOfRange,
    NotOrthogonal,
    RankOutOfRange,
)
from .hadamard import HadamardMatrix
from .matcore import DEFAULT_TOL, Tolerance, matrix_from_json, matrix_to_json
from .numth import UmebPrime


@dataclass(frozen=True, eq=False)
class ProjectionFamily:
    """Same-rank real symmetric projections with a common target angle.

    beta is the exact rational target of tr(P_i P_j) for i != j.  provenance
    holds one (t, shift) pair per projection for residue/Hadamard-built
    families and None otherwise; scale is the off-support coefficient
    (1 + sqrt(p+2))/sqrt(p+1) when applicable.
    """

    d: int
    r: int
    projections: tuple[np.ndarray, ...]
    beta: Fraction
    provenance: tuple[tuple[int, int] | None, ...]
    scale: float | None = None

    def __len__(self) -> int:
        return len(self.projections)


@dataclass(frozen=True)
class EquiangularReport:
    """Deviations of a family from its contract, all as max-abs values."""

    pairs: int
    beta: float
    max_angle_dev: float
    max_idempotency_dev: float
    max_rank_dev: float
    passed: bool


def beta_lines(d: int) -> float:
    """Common angle 1/sqrt(d+2) of a maximal set of real equiangular lines."""
    return 1.0 / math.sqrt(d + 2)


def beta_projections(d: int, r: int) -> Fraction:
    """Exact common trace r(rd + r - 2)/((d+2)(d-1)) of a maximal rank-r family."""
    if not 1 <= r < d:
        raise RankOutOfRange(f"need 1 <= r < d, got r={r}, d={d}")
    return Fraction(r * (r * d + r - 2), (d + 2) * (d - 1))


def off_support_scale(p: int) -> float:
    """The coefficient (1 + sqrt(p+2))/sqrt(p+1) placed on the non-residue index."""
    return (1.0 + math.sqrt(p + 2)) / math.sqrt(p + 1)


def residue_base_vectors(prime: UmebPrime, h: HadamardMatrix, t: int) -> list[np.ndarray]:
    """The (p-1)/2 unnormalized base vectors of the t-th subspace.

    Vector s (s = 1..(p-1)/2) has a 1 at index q_s and h[s, t] * scale at
    index k*q_s mod p, using 0-indexed coordinates; rows 1..(p-1)/2 and
    columns 0..(p-1)/2 of h are consumed.  Each vector has squared norm
    1 + scale^2 and their supports are pairwise disjoint.
    """
    p = prime.p
    half = prime.half
    if h.order != (p + 1) // 2:
        raise HadamardOrderMismatch(f"need Hadamard order {(p + 1) // 2}, got {h.order}")
    if not 0 <= t <= half:
        raise IndexOutOfRange(f"t={t} outside 0..{half}")
    c = off_support_scale(p)
    vectors = []
    for s in range(1, half + 1):
        q = prime.residues[s - 1]
        v = np.zeros(p)
        v[q] = 1.0
        v[prime.k * q % p] = h.entries[s, t] * c
        vectors.append(v)
    return vectors


def cyclic_shift(vectors: list[np.ndarray], x: int) -> list[np.ndarray]:
    """Move entry i of every vector to index (i + x) mod p."""
    return [np.roll(v, x) for v in vectors]


def projection_from_basis(
    vectors: list[np.ndarray], tol: Tolerance = DEFAULT_TOL
) -> np.ndarray:
    """Orthogonal projection onto the span of pairwise-orthogonal vectors."""
    stack = np.asarray(vectors, dtype=float)
    overlap = stack @ stack.T
    off = overlap - np.diag(np.diag(overlap))
    worst = float(np.max(np.abs(off))) if len(vectors) > 1 else 0.0
    if worst > tol.eps * float(np.max(np.diag(overlap))):
        raise NotOrthogonal(f"basis vectors overlap, max inner product {worst:.3e}")
    normalized = stack / np.sqrt(np.diag(overlap))[:, None]
    return normalized.T @ normalized


def build_residue_family(prime: UmebPrime, h: HadamardMatrix) -> ProjectionFamily:
    """All p(p+1)/2 projections: bases t = 0..(p-1)/2, each cyclically shifted p ways.

    Projections are ordered lexicographically in (t, shift) so that exports
    are reproducible.
    """
    p = prime.p
    residue_supports = set(prime.residues) | {prime.k * q % p for q in prime.residues}
    if len(residue_supports) != p - 1:
        raise NotOrthogonal(f"support indices collide for p={p}, k={prime.k}")
    projections = []
    provenance = []
    for t in range((p + 1) // 2):
        base = residue_base_vectors(prime, h, t)
        for shift in range(p):
            projections.append(projection_from_basis(cyclic_shift(base, shift)))
            provenance.append((t, shift))
    return ProjectionFamily(
        d=p,
        r=prime.half,
        projections=tuple(projections),
        beta=beta_projections(p, prime.half),
        provenance=tuple(provenance),
        scale=off_support_scale(p),
    )


def verify_equiangular(
    family: ProjectionFamily, tol: Tolerance = DEFAULT_TOL
) -> EquiangularReport:
    """Check pairwise traces, idempotency and trace-rank of every member."""
    n = len(family.projections)
    beta = float(family.beta)
    stack = np.asarray([np.asarray(p, dtype=complex) for p in family.projections])
    flat = stack.reshape(n, -1)
    overlaps = (flat.conj() @ flat.T).real
    if n > 1:
        off_mask = ~np.eye(n, dtype=bool)
        max_angle_dev = float(np.max(np.abs(overlaps[off_mask] - beta)))
    else:
        max_angle_dev = 0.0
    max_idem_dev = float(np.max(np.abs(np.einsum("nij,njk->nik", stack, stack) - stack)))
    traces = np.einsum("nii->n", stack)
    max_rank_dev = float(np.max(np.abs(traces - family.r)))
    passed = (
        max_angle_dev <= tol.eps
        and max_idem_dev <= tol.eps
        and max_rank_dev <= tol.eps
    )
    return EquiangularReport(
        pairs=n * (n - 1) // 2,
        beta=beta,
        max_angle_dev=max_angle_dev,
        max_idempotency_dev=max_idem_dev,
        max_rank_dev=max_rank_dev,
        passed=passed,
    )


def dual_family(family: ProjectionFamily) -> ProjectionFamily:
    """Complementary projections I - P_i; rank d - r, angle beta + d - 2r."""
    d = family.d
    eye = np.eye(d)
    return ProjectionFamily(
        d=d,
        r=d - family.r,
        projections=tuple(eye - p for p in family.projections),
        beta=family.beta + (d - 2 * family.r),
        provenance=family.provenance,
        scale=family.scale,
    )


def icosahedron_lines() -> ProjectionFamily:
    """Rank-one projections onto the six diagonals of a regular icosahedron.

    Standard golden-ratio coordinates (0, +-1, phi) and cyclic rotations;
    pairwise trace 1/5, matching beta_projections(3, 1).
    """
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    raw = [
        (0.0, 1.0, phi),
        (0.0, -1.0, phi),
        (1.0, phi, 0.0),
        (-1.0, phi, 0.0),
        (phi, 0.0, 1.0),
        (phi, 0.0, -1.0),
    ]
    projections = []
    for coords in raw:
        v = np.array(coords) / math.sqrt(1.0 + phi * phi)
        projections.append(np.outer(v, v))
    return ProjectionFamily(
        d=3,
        r=1,
        projections=tuple(projections),
        beta=Fraction(1, 5),
        provenance=(None,) * 6,
        scale=None,
    )


def identity_coefficient(d: int, r: int, beta: Fraction) -> Fraction:
    """Exact x with x * sum(P_i) = I for a maximal family: (r^2 - d*beta)/(r(r - beta))."""
    return (Fraction(r * r) - d * beta) / (r * (r - beta))


def family_to_json(family: ProjectionFamily) -> dict:
    entries = []
    for proj, prov in zip(family.projections, family.provenance):
        t, shift = prov if prov is not None else (None, None)
        entries.append({"t": t, "shift": shift, "matrix": matrix_to_json(proj)})
    return {
        "d": family.d,
        "r": family.r,
        "beta_num": family.beta.numerator,
        "beta_den": family.beta.denominator,
        "C": family.scale,
        "projections": entries,
    }


def family_from_json(obj: dict) -> ProjectionFamily:
    projections = []
    provenance = []
    for entry in obj["projections"]:
        m = matrix_from_json(entry["matrix"])
        # families are real by contract; keep the real part once that is exact
        projections.append(m.real if np.all(m.imag == 0) else m)
        t, shift = entry.get("t"), entry.get("shift")
        provenance.append((int(t), int(shift)) if t is not None else None)
    scale = obj.get("C")
    return ProjectionFamily(
        d=int(obj["d"]),
        r=int(obj["r"]),
        projections=tuple(projections),
        beta=Fraction(int(obj["beta_num"]), int(obj["beta_den"])),
        provenance=tuple(provenance),
        scale=None if scale is None else float(scale),
    )
