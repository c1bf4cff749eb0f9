"""Number-theoretic parameter validation: primality, residue classes mod 8,
quadratic residues and non-residues modulo a prime."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPrime, OutOfRange, WrongResidueClass


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n); adequate at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_quadratic_residue(a: int, p: int) -> bool:
    """True iff a is a nonzero square modulo the odd prime p (Euler criterion)."""
    if not 1 <= a <= p - 1:
        raise OutOfRange(f"a={a} outside 1..{p - 1}")
    return pow(a, (p - 1) // 2, p) == 1


@dataclass(frozen=True)
class UmebPrime:
    """A validated prime p (p = 3 or p = 7 mod 8) with its residue split.

    residues and nonresidues are each sorted ascending and partition
    {1, ..., p-1}; k is the non-residue used to place the second support
    index of each construction vector.
    """

    p: int
    residues: tuple[int, ...]
    nonresidues: tuple[int, ...]
    k: int

    @property
    def half(self) -> int:
        return (self.p - 1) // 2


def validate_prime(p: int, k: int | None = None) -> UmebPrime:
    """Check p and return it with quadratic residues, non-residues and chosen k.

    k defaults to the smallest non-residue; an explicit k must itself be a
    non-residue mod p.
    """
    if not is_prime(p) or p < 3:
        raise NotPrime(f"p={p} is not a prime >= 3")
    if p != 3 and p % 8 != 7:
        raise WrongResidueClass(
            f"p={p} has p mod 8 = {p % 8}; the construction needs p = 3 or p = 7 (mod 8)"
        )
    residues = tuple(a for a in range(1, p) if is_quadratic_residue(a, p))
    residue_set = set(residues)
    nonresidues = tuple(a for a in range(1, p) if a not in residue_set)
    if k is None:
        k = nonresidues[0]
    elif k not in nonresidues:
        raise OutOfRange(f"k={k} is not a quadratic non-residue modulo {p}")
    return UmebPrime(p=p, residues=residues, nonresidues=nonresidues, k=k)
