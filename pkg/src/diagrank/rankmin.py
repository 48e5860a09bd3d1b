"""Minimum rank over all rewrites of the main diagonal.

For a square GF(2) matrix M, the quantity of interest is the smallest
rank achievable by replacing the main-diagonal entries with arbitrary
bits.  This module provides:

* an exact fixed-budget decision (`min_rank_decide`) that runs in
  ~n^(k+4) bit operations for budget k,
* a factor-2 approximation (`min_rank_approx`) in ~n^4,
* an exact search (`min_rank_exact`) iterating the decision,
* a 2^n brute-force oracle (`min_rank_oracle`) for small matrices,
* the always-available n-1 upper bound via an even-row-sum diagonal
  (`upper_bound_even_rows`).

The decision works through the invertible completion M' of M: a
candidate rewrite differing from M' in fewer than n-k diagonal places
cannot reach rank <= k (erasing r diagonal ones lowers the rank by at
most r), so only diagonal flips supported on at most k positions need
to be tried.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .completion import complete_nondegenerate
from .gf2 import DiagonalAssignment, Gf2Matrix, rank_rows

ORACLE_MAX_DIM = 24


class OracleSizeError(ValueError):
    """Brute-force oracle invoked above its dimension guard."""


@dataclass(frozen=True)
class RankBounds:
    """Inclusive lower/upper bracket on the minimum achievable rank."""

    lower: int
    upper: int

    def __post_init__(self):
        if not 0 <= self.lower <= self.upper:
            raise ValueError(f"invalid bounds ({self.lower}, {self.upper})")


@dataclass(frozen=True)
class DecisionOutcome:
    """Result of a budget-k decision.

    ``witness`` is a diagonal achieving rank <= decided_k when the answer
    is yes, and None for a certified no.
    """

    decided_k: int
    witness: DiagonalAssignment | None

    @property
    def is_yes(self) -> bool:
        return self.witness is not None


def min_rank_decide(m: Gf2Matrix, k: int) -> DecisionOutcome:
    """Decide whether some diagonal rewrite of ``m`` has rank <= k.

    Enumerates candidate diagonals through the invertible completion:
    flip sets of at most k diagonal positions, by ascending size and
    lexicographically within a size, so the returned witness is the
    first success in that canonical order.  k >= n is trivially yes.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    n = m.n
    if k >= n:
        return DecisionOutcome(k, m.diagonal())
    completed, _ = complete_nondegenerate(m)
    off = [row & ~(1 << i) for i, row in enumerate(completed.rows)]
    # Candidate diagonal for flip set S: complement of the completed
    # diagonal, flipped back on S.  S = {} is the approximation witness.
    base = completed.diagonal().complement().mask
    for size in range(k + 1):
        for flips in itertools.combinations(range(n), size):
            w = base
            for i in flips:
                w ^= 1 << i
            rows = [off[i] | (w & (1 << i)) for i in range(n)]
            if rank_rows(rows, n, cap=k) <= k:
                return DecisionOutcome(k, DiagonalAssignment(n, w))
    return DecisionOutcome(k, None)


def min_rank_approx(m: Gf2Matrix) -> tuple[RankBounds, DiagonalAssignment]:
    """Bracket the minimum achievable rank within a factor of 2.

    Completes ``m`` to an invertible matrix, erases the completed
    diagonal (adds the identity), and takes that rank as the upper
    bound; no diagonal rewrite can do better than half of it.  The
    returned witness achieves the upper bound exactly.
    """
    completed, d = complete_nondegenerate(m)
    witness = d.complement()
    rows = [row ^ (1 << i) for i, row in enumerate(completed.rows)]
    upper = rank_rows(rows, m.n)
    return RankBounds((upper + 1) // 2, upper), witness


def min_rank_exact(
    m: Gf2Matrix, k_max: int
) -> tuple[int, DiagonalAssignment] | None:
    """Exact minimum achievable rank, searching budgets 0..k_max.

    Returns ``(value, witness)`` or None when every budget up to k_max
    is a certified no (the runtime grows as n^(k+4), so cap with care).
    """
    if k_max < 0:
        raise ValueError("budget cap must be non-negative")
    for k in range(min(k_max, m.n) + 1):
        outcome = min_rank_decide(m, k)
        if outcome.witness is not None:
            return k, outcome.witness
    return None


def min_rank_oracle(m: Gf2Matrix) -> tuple[int, DiagonalAssignment]:
    """Ground truth by exhaustion over all 2^n diagonals (n <= 24).

    Returns the true minimum and the lexicographically least minimizing
    diagonal, reading bit i of the assignment as digit i.
    """
    n = m.n
    if n > ORACLE_MAX_DIM:
        raise OracleSizeError(f"oracle limited to n <= {ORACLE_MAX_DIM}, got {n}")
    off = [row & ~(1 << i) for i, row in enumerate(m.rows)]
    best_rank = n + 1
    best_bits: tuple[int, ...] = ()
    for bits in itertools.product((0, 1), repeat=n):
        rows = [off[i] | (bits[i] << i) for i in range(n)]
        r = rank_rows(rows, n, cap=best_rank - 1)
        if r < best_rank:
            best_rank = r
            best_bits = bits
            if r == 0:
                break
    mask = 0
    for i, b in enumerate(best_bits):
        mask |= b << i
    return best_rank, DiagonalAssignment(n, mask)


def upper_bound_even_rows(m: Gf2Matrix) -> DiagonalAssignment:
    """Diagonal making every row sum even, hence rank <= n - 1.

    Each entry is the XOR of the off-diagonal entries of its row; the
    rewritten matrix annihilates the all-ones vector, so it is
    degenerate.  Defined for n >= 1.
    """
    if m.n == 0:
        raise ValueError("bound requires n >= 1")
    mask = 0
    for i, row in enumerate(m.rows):
        mask |= ((row & ~(1 << i)).bit_count() & 1) << i
    return DiagonalAssignment(m.n, mask)
