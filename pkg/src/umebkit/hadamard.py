"""Hadamard matrix construction and validation.

Supported strategies: Sylvester doubling for powers of two, Paley type I
(order q+1, q prime, q = 3 mod 4), Paley type II (order 2(q+1), q prime,
q = 1 mod 4) and Kronecker products of smaller orders.  Everything is exact
integer arithmetic; a matrix is only ever returned after H @ H.T == n*I has
been checked entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadResidueClass, NotPrime, UnsupportedOrder
from .numth import is_prime


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    """Order-n matrix with entries in {+1, -1} and H @ H.T = n*I exactly."""

    order: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.int64)
        if entries.shape != (self.order, self.order):
            raise UnsupportedOrder(
                f"entries shape {entries.shape} does not match order {self.order}"
            )
        if not np.all(np.abs(entries) == 1):
            raise UnsupportedOrder("entries must all be +1 or -1")
        gram = entries @ entries.T
        if not np.array_equal(gram, self.order * np.eye(self.order, dtype=np.int64)):
            raise UnsupportedOrder(f"H @ H.T != {self.order}*I; not a Hadamard matrix")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)


def _legendre(a: int, q: int) -> int:
    a %= q
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def _jacobsthal(q: int) -> np.ndarray:
    """q x q matrix with entry (i, j) equal to the Legendre symbol of i - j."""
    return np.array(
        [[_legendre(i - j, q) for j in range(q)] for i in range(q)], dtype=np.int64
    )


def sylvester(k: int) -> HadamardMatrix:
    """Order 2^k matrix by iterated doubling of [[1, 1], [1, -1]]."""
    h = np.array([[1]], dtype=np.int64)
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    return HadamardMatrix(order=2**k, entries=h)


def paley_one(q: int) -> HadamardMatrix:
    """Order q+1 matrix from the Jacobsthal matrix of a prime q = 3 (mod 4)."""
    if not is_prime(q):
        raise NotPrime(f"q={q} is not prime")
    if q % 4 != 3:
        raise BadResidueClass(f"Paley I needs q = 3 (mod 4), got q={q}")
    n = q + 1
    h = np.ones((n, n), dtype=np.int64)
    h[1:, 0] = -1
    # core block is I_q + Q; diagonal of the Jacobsthal matrix is 0
    h[1:, 1:] = np.eye(q, dtype=np.int64) + _jacobsthal(q)
    return HadamardMatrix(order=n, entries=h)


def paley_two(q: int) -> HadamardMatrix:
    """Order 2(q+1) matrix from a prime q = 1 (mod 4)."""
    if not is_prime(q):
        raise NotPrime(f"q={q} is not prime")
    if q % 4 != 1:
        raise BadResidueClass(f"Paley II needs q = 1 (mod 4), got q={q}")
    n = q + 1
    s = np.zeros((n, n), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = 1
    s[1:, 1:] = _jacobsthal(q)
    # each +-1 of S becomes +-[[1,1],[1,-1]]; each diagonal 0 becomes [[1,-1],[-1,-1]]
    a = np.array([[1, 1], [1, -1]], dtype=np.int64)
    b = np.array([[1, -1], [-1, -1]], dtype=np.int64)
    h = np.kron(s, a) + np.kron(np.eye(n, dtype=np.int64), b)
    return HadamardMatrix(order=2 * n, entries=h)


def kronecker(a: HadamardMatrix, b: HadamardMatrix) -> HadamardMatrix:
    """Kronecker product; order n_a * n_b."""
    return HadamardMatrix(order=a.order * b.order, entries=np.kron(a.entries, b.entries))


def construct(n: int) -> HadamardMatrix:
    """Build an order-n Hadamard matrix, trying strategies in a fixed order.

    Order of attempts: Sylvester (n a power of two), Paley I (n-1 prime,
    3 mod 4), Paley II (n/2-1 prime, 1 mod 4), then Kronecker factorizations
    n = a*b with the smallest constructible factor a first.  Deterministic:
    the same n always yields the identical matrix.
    """
    if n == 1:
        return sylvester(0)
    if n == 2:
        return sylvester(1)
    if n < 1 or n % 4 != 0:
        raise UnsupportedOrder(f"Hadamard order must be 1, 2 or a multiple of 4, got {n}")
    if n & (n - 1) == 0:
        return sylvester(n.bit_length() - 1)
    if is_prime(n - 1) and (n - 1) % 4 == 3:
        return paley_one(n - 1)
    if n % 2 == 0 and is_prime(n // 2 - 1) and (n // 2 - 1) % 4 == 1:
        return paley_two(n // 2 - 1)
    for a in range(2, n // 2 + 1):
        if n % a != 0:
            continue
        try:
            return kronecker(construct(a), construct(n // a))
        except UnsupportedOrder:
            continue
    raise UnsupportedOrder(f"no construction strategy applies to order {n}")


def hadamard_to_json(h: HadamardMatrix) -> dict:
    return {"order": h.order, "rows": h.entries.tolist()}


def hadamard_from_json(obj: dict) -> HadamardMatrix:
    """Rebuild from {"order": n, "rows": [[+-1, ...], ...]}; re-validates."""
    return HadamardMatrix(order=int(obj["order"]), entries=np.array(obj["rows"]))
