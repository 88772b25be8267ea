"""Dimensions and Euler characteristics of Stiefel manifolds and Grassmannians.

Two independent routes to chi(G_{r,k}): the closed binomial formula, and the
signed Schubert cell count read off the Gaussian binomial [r choose k]_q at
q = -1 (cells of dimension d correspond to the coefficient of q^d).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from operator import add

from .stems import so_fibre_dim

__all__ = [
    "GrassmannData",
    "euler_grassmann",
    "gaussian_binomial",
    "euler_schubert_oracle",
    "stiefel_dims",
    "in_stable_range",
]


@dataclass(frozen=True)
class GrassmannData:
    r: int
    k: int
    m: int  # dim V_{r,k}
    n: int  # dim G_{r,k}
    d: int  # dim SO(k), the fibre dimension
    chi: int  # unoriented Euler characteristic
    stable_range: bool  # m < 2n - 2

    def __post_init__(self):
        assert self.m == self.n + self.d
        assert self.stable_range == (self.m < 2 * self.n - 2)


def _check_range(r: int, k: int):
    if r < 0 or k < 0 or k > r:
        raise ValueError(f"need 0 <= k <= r, got r={r}, k={k}")


def euler_grassmann(r: int, k: int, oriented: bool = False) -> int:
    """Euler characteristic of the Grassmannian of k-planes in R^r.

    Unoriented: 0 when r is even and k odd, else C(r//2, k//2).
    Oriented: the double cover doubles a nonzero value for 0 < k < r; at
    k in {0, r} the space is a point.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    _check_range(r, k)
    chi = 0 if (r % 2 == 0 and k % 2 == 1) else comb(r // 2, k // 2)
    if not oriented:
        return chi
    if k in (0, r):
        return 1
    return 2 * chi


def gaussian_binomial(r: int, k: int) -> list[int]:
    """Coefficients (lowest degree first) of the Gaussian binomial [r choose k]_q.

    Uses [n, j] = [n-1, j-1] + q^j [n-1, j], which needs no division.
    """
    _check_range(r, k)
    # row[j] holds [n, j]_q for the current n
    row: list[list[int]] = [[1]]
    for n in range(1, r + 1):
        new = [[1]]
        for j in range(1, min(n, k) + 1):
            left = row[j - 1]
            right = row[j] if j < len(row) else []
            poly = left + [0] * (len(right) + j - len(left)) if right else list(left)
            poly[j:j + len(right)] = map(add, poly[j:j + len(right)], right)
            new.append(poly)
        row = new
    return row[k]


def euler_schubert_oracle(r: int, k: int) -> int:
    """Alternating count of Schubert cells of G_{r,k}: [r choose k]_q at q = -1."""
    coeffs = gaussian_binomial(r, k)
    return sum(c if d % 2 == 0 else -c for d, c in enumerate(coeffs))


def in_stable_range(r: int, k: int) -> bool:
    """r >= 3k/2 - 1/2 + 3/k, in exact integer form 2kr >= 3k^2 - k + 6."""
    return 2 * k * r >= 3 * k * k - k + 6


def stiefel_dims(r: int, k: int) -> GrassmannData:
    if not 1 <= k < r:
        raise ValueError(f"need 1 <= k < r, got r={r}, k={k}")
    n = k * (r - k)
    d = so_fibre_dim(k)
    m = k * r - k * (k + 1) // 2
    return GrassmannData(
        r=r, k=k, m=m, n=n, d=d,
        chi=euler_grassmann(r, k),
        stable_range=m < 2 * n - 2,
    )
