"""Equivalence and soundness sweeps.

Each sweep drives the fast path and the brute-force oracle over a degree
range and checks them against each other, together with the pruning filters'
guarantees.  The CLI verify command and the acceptance test suite both call
these; a sweep stops at the first counterexample and reports it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .oracle import oracle_plethysm, oracle_power_plethysm, oracle_product
from .partitions import Partition, all_partitions
from .positivity import (
    lr_bound,
    plethysm_filter_check,
    sxp_lower_check,
    sxp_upper_bound,
    trivial_sign_multiplicity,
)
from .quotients import decompose
from .schur import (
    CharacterCache,
    SchurExpansion,
    schur_plethysm,
    schur_product,
    sxp_plethysm,
)

SXP_MAX_N = 3


@dataclass
class SweepReport:
    scope: str
    cases: int = 0
    counterexample: dict | None = field(default=None)

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _expansion_mismatch(fast: SchurExpansion, slow: SchurExpansion) -> dict | None:
    if fast == slow:
        return None
    diff = {}
    for lam in fast.support() | slow.support():
        a, b = fast.coefficient(lam), slow.coefficient(lam)
        if a != b:
            diff[str(lam.to_list())] = [a, b]
    return {"kind": "oracle mismatch", "diff_fast_vs_oracle": diff}


def check_products(max_degree: int, cache: CharacterCache | None = None) -> SweepReport:
    """schur_product vs oracle_product for all pairs with |mu|+|nu| <= max,
    plus the dominance and Minkowski-corner support bounds."""
    report = SweepReport("lr")
    for a in range(max_degree + 1):
        for mu in all_partitions(a):
            for b in range(max_degree - a + 1):
                for nu in all_partitions(b):
                    report.cases += 1
                    fast = schur_product(
                        SchurExpansion(a, {mu: 1}), SchurExpansion(b, {nu: 1})
                    )
                    bad = _expansion_mismatch(fast, oracle_product(mu, nu, cache))
                    if bad is None:
                        bad = _product_support_violation(mu, nu, fast)
                    if bad is not None:
                        bad["mu"], bad["nu"] = mu.to_list(), nu.to_list()
                        report.counterexample = bad
                        return report
    return report


def _product_support_violation(
    mu: Partition, nu: Partition, product: SchurExpansion
) -> dict | None:
    bound = lr_bound([mu, nu])
    top, bottom = mu + nu, mu.union(nu)
    for lam in product.support():
        if not top.dominates(lam) or not lam.dominates(bottom):
            return {"kind": "dominance bound violated", "lam": lam.to_list()}
        if not bound.contains(lam):
            return {"kind": "minkowski bound violated", "lam": lam.to_list()}
    return None


def check_sxp(max_degree: int, cache: CharacterCache | None = None) -> SweepReport:
    """sxp_plethysm vs the oracle's power-sum route for n <= 3 and result
    degree n|lam| <= max, plus the lower/upper bounds and the empty-core
    property of the support."""
    report = SweepReport("sxp")
    for n in range(1, SXP_MAX_N + 1):
        for size in range(max_degree // n + 1):
            for lam in all_partitions(size):
                report.cases += 1
                fast = sxp_plethysm(n, lam)
                bad = _expansion_mismatch(fast, oracle_power_plethysm(n, lam, cache))
                if bad is None:
                    bad = _sxp_support_violation(n, lam, fast)
                if bad is not None:
                    bad["n"], bad["lam"] = n, lam.to_list()
                    report.counterexample = bad
                    return report
    return report


def _sxp_support_violation(
    n: int, lam: Partition, expansion: SchurExpansion
) -> dict | None:
    upper = sxp_upper_bound(n, lam).intersection if lam else None
    for mu in expansion.support():
        if not sxp_lower_check(lam, mu):
            return {"kind": "lower bound violated", "mu": mu.to_list()}
        if upper is not None and not upper.contains(mu):
            return {"kind": "upper bound violated", "mu": mu.to_list()}
        if decompose(mu, n).core:
            return {"kind": "support has non-empty core", "mu": mu.to_list()}
    return None


def check_plethysm(
    max_degree: int,
    cache: CharacterCache | None = None,
    pinned_statistic: bool = True,
) -> SweepReport:
    """schur_plethysm vs oracle_plethysm for |mu|*|nu| <= max, the diagram
    containment filter on the support, and the closed forms for the extreme
    row/column coefficients.

    With ``pinned_statistic`` the known 231 / 142 / 40 pruning statistic for
    s_{1,1} o s_{4,2,2} is checked as well, regardless of max."""
    report = SweepReport("plethysm")
    pairs = [
        (mu, nu)
        for a in range(max_degree + 1)
        for mu in all_partitions(a)
        for b in range(max_degree + 1)
        for nu in all_partitions(b)
        if a * b <= max_degree
    ]
    for mu, nu in pairs:
        report.cases += 1
        fast = schur_plethysm(mu, nu, cache)
        bad = _expansion_mismatch(fast, oracle_plethysm(mu, nu, cache))
        if bad is None:
            bad = _plethysm_support_violation(mu, nu, fast)
        if bad is not None:
            bad["mu"], bad["nu"] = mu.to_list(), nu.to_list()
            report.counterexample = bad
            return report
    if pinned_statistic:
        report.cases += 1
        stats = plethysm_stats(Partition([1, 1]), Partition([4, 2, 2]), cache)
        if stats != (231, 142, 40):
            report.counterexample = {
                "kind": "pinned statistic mismatch",
                "expected": [231, 142, 40],
                "got": list(stats),
            }
    return report


def _plethysm_support_violation(
    mu: Partition, nu: Partition, expansion: SchurExpansion
) -> dict | None:
    # the containment guarantee concerns compositions with a genuine outer
    # factor; s_() o s_nu is the constant 1 and says nothing about nu
    if mu:
        for lam in expansion.support():
            if not plethysm_filter_check(nu, lam):
                return {"kind": "containment filter violated", "lam": lam.to_list()}
    degree = mu.size * nu.size
    row = Partition([degree]) if degree else Partition()
    column = Partition([1] * degree)
    expected = (expansion.coefficient(row), expansion.coefficient(column))
    if trivial_sign_multiplicity(mu, nu) != expected:
        return {
            "kind": "trivial/sign closed form mismatch",
            "extracted": list(expected),
            "closed_form": list(trivial_sign_multiplicity(mu, nu)),
        }
    return None


def plethysm_stats(
    mu: Partition, nu: Partition, cache: CharacterCache | None = None
) -> tuple[int, int, int]:
    """(number of partitions of |mu||nu|, how many pass the containment
    filter, size of the actual support of s_mu o s_nu)."""
    degree = mu.size * nu.size
    candidates = all_partitions(degree)
    passing = sum(1 for lam in candidates if plethysm_filter_check(nu, lam))
    support = len(schur_plethysm(mu, nu, cache))
    return (len(candidates), passing, support)


def run_scope(
    scope: str, max_degree: int, cache: CharacterCache | None = None
) -> list[SweepReport]:
    if scope == "lr":
        return [check_products(max_degree, cache)]
    if scope == "sxp":
        return [check_sxp(max_degree, cache)]
    if scope == "plethysm":
        return [check_plethysm(max_degree, cache)]
    if scope == "all":
        return [
            check_products(max_degree, cache),
            check_sxp(max_degree, cache),
            check_plethysm(max_degree, cache),
        ]
    raise ValueError(f"unknown scope {scope!r}")
