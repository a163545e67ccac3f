"""Necessary positivity conditions, packaged as cheap pruning predicates.

Each check here is a necessary condition for a coefficient to be nonzero, so
filtering candidates through them before running the exact (and expensive)
coefficient computation is always sound.  None of them is sufficient: a
candidate that passes may still have coefficient zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partitions import (
    Partition,
    ideal_complement,
    minkowski_sum,
    outer_corners,
    partitions_of,
)
from .quotients import decompose


@dataclass(frozen=True)
class BoundPair:
    """Row bound, column bound, and their intersection (row-wise minimum),
    which is the largest partition contained in both."""

    xi1: Partition
    xi2: Partition
    intersection: Partition

    def to_json_obj(self) -> dict:
        return {
            "xi1": self.xi1.to_list(),
            "xi2": self.xi2.to_list(),
            "intersection": self.intersection.to_list(),
        }


def lr_bound(mus: Sequence[Partition]) -> Partition:
    """Containing shape for the support of a product of Schur functions.

    The Minkowski sum of the factors' outer-corner sets generates an ideal
    whose complement contains the diagram of every partition in
    supp(s_{mu_0} * s_{mu_1} * ...).  Each corner set has a point on each
    axis, so the complement is always a finite partition.
    """
    if not mus:
        raise ValueError("lr_bound requires at least one factor")
    total = outer_corners(mus[0])
    for mu in mus[1:]:
        total = minkowski_sum(total, outer_corners(mu))
    return ideal_complement(total)


def sxp_lower_check(lam: Partition, mu: Partition) -> bool:
    """Necessary for <s_mu, p_n o s_lam> != 0 for any n: [lam] must be
    contained in [mu]."""
    return mu.contains(lam)


def size_row_bound(total: int) -> Partition:
    """Row caps forced by size alone: a partition of ``total`` has r-th row
    of length at most total // r."""
    return Partition(total // r for r in range(1, total + 1))


def _row_caps(n: int, lam: Partition) -> list[int]:
    total = n * lam.size
    caps = []
    tail = lam.size  # |(lam_{r+1}, lam_{r+2}, ...)| with r rows removed
    r = 0
    while True:
        r += 1
        tail -= lam[r - 1]
        cap = (total - tail) // r
        if cap < 1:
            return caps
        caps.append(cap)


def sxp_upper_bound(n: int, lam: Partition) -> BoundPair:
    """Upper bounds on partitions in supp(p_n o s_lam).

    A partition mu there has size n|lam| and contains lam, so its r-th row
    is at most (n|lam| - |tail of lam after row r|) / r; the same argument on
    columns (via the conjugate) gives a second bound, and the support lies
    inside the intersection of the two.
    """
    if n < 1:
        raise ValueError("plethysm exponent n must be >= 1")
    if not lam:
        raise ValueError("sxp_upper_bound requires a non-empty partition")
    xi1 = Partition(_row_caps(n, lam))
    col_caps = _row_caps(n, lam.conjugate())
    xi2 = Partition(col_caps).conjugate()
    inter = Partition(
        min(xi1[i], xi2[i]) for i in range(min(len(xi1), len(xi2)))
    )
    return BoundPair(xi1=xi1, xi2=xi2, intersection=inter)


def plethysm_filter_check(nu: Partition, lam: Partition) -> bool:
    """Necessary for <s_lam, s_mu o s_nu> != 0 for any mu: [nu] must be
    contained in [lam]."""
    return lam.contains(nu)


def _is_single_row(p: Partition) -> bool:
    return len(p) <= 1


def _is_single_column(p: Partition) -> bool:
    return p[0] <= 1


def trivial_sign_multiplicity(mu: Partition, nu: Partition) -> tuple[int, int]:
    """Multiplicities of the full row and the full column in s_mu o s_nu,
    i.e. the coefficients of s_(N) and s_(1^N) with N = |mu|*|nu|.

    The row coefficient is 1 exactly when both mu and nu are single rows.
    The column coefficient is 1 exactly when nu is a single column and mu
    matches the parity of |nu|: a column for odd |nu|, a row for even |nu|
    (even exterior powers compose symmetrically, e.g. Sym^2(Lambda^2)
    contains Lambda^4).  Both are 0 otherwise, and never exceed 1.
    """
    if not mu:
        # s_() o s_nu is the constant 1 and both readings see coefficient 1
        return (1, 1)
    trivial = 1 if _is_single_row(mu) and _is_single_row(nu) else 0
    if _is_single_column(nu):
        wanted = _is_single_column(mu) if nu.size % 2 else _is_single_row(mu)
        sign = 1 if wanted else 0
    else:
        sign = 0
    return (trivial, sign)


def enumerate_candidates(n: int, lam: Partition) -> list[Partition]:
    """Every partition that survives all three necessary conditions for
    membership in supp(p_n o s_lam): right size, contains lam, fits inside
    the upper-bound intersection, and has empty n-core.  Always a superset
    of the true support.

    Checks run cheapest first: size constraints during generation, then the
    two containments, then the core.
    """
    if n < 1:
        raise ValueError("plethysm exponent n must be >= 1")
    if not lam:
        return [Partition()]
    upper = sxp_upper_bound(n, lam).intersection
    out = []
    for mu in partitions_of(n * lam.size, max_part=upper[0], max_length=len(upper)):
        if not mu.contains(lam):
            continue
        if not upper.contains(mu):
            continue
        if decompose(mu, n).core:
            continue
        out.append(mu)
    return out
