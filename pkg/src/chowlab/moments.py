"""Moments of the normalized Chow coefficient distribution and the bounds they satisfy.

For a matroid of rank d+1 with Chow polynomial sum a_k x^k, X_M is the random
variable with P(X_M = k) = a_k / H(1). Its mean is d/2 by palindromicity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .chow import chow_via_flags, eulerian_numbers, gamma_vector
from .errors import OddMomentRejected
from .flags import block_sizes, flag_table, jset
from .matroid import Matroid, simplification_is_boolean
from .poly import TruncatedSeries, UniPoly


@dataclass(frozen=True)
class CoeffDistribution:
    weights: tuple
    d: int

    @classmethod
    def from_poly(cls, p: UniPoly, d: int | None = None) -> "CoeffDistribution":
        d = p.degree if d is None else d
        total = sum(p.coeffs)
        return cls(tuple(Fraction(p[k]) / total for k in range(d + 1)), d)

    @property
    def mean(self) -> Fraction:
        return sum((k * w for k, w in enumerate(self.weights)), Fraction(0))


def distribution(m: Matroid) -> CoeffDistribution:
    return CoeffDistribution.from_poly(chow_via_flags(m), m.d)


def central_moment(dist: CoeffDistribution, k: int) -> Fraction:
    c = Fraction(dist.d, 2)
    return sum(((p - c) ** k * w for p, w in enumerate(dist.weights)), Fraction(0))


def factorial_moment(dist: CoeffDistribution, k: int) -> Fraction:
    """E[binom(X, k)]."""
    return sum((comb(p, k) * w for p, w in enumerate(dist.weights)), Fraction(0))


def eulerian_distribution(d: int) -> CoeffDistribution:
    return CoeffDistribution.from_poly(UniPoly(eulerian_numbers(d + 1)), d)


def eulerian_central_moment(d: int, k: int) -> Fraction:
    return central_moment(eulerian_distribution(d), k)


# -- E'_k(d) ---------------------------------------------------------------------


def _sinh_ratio_series(order: int) -> TruncatedSeries:
    """sum_t z^{2t} / (4^t (2t+1)!), i.e. sinh(z/2)/(z/2)."""
    cs = [Fraction(0)] * (order + 1)
    for t in range(order // 2 + 1):
        cs[2 * t] = Fraction(1, 4**t * factorial(2 * t + 1))
    return TruncatedSeries(cs, order)


def e_prime_value(k: int, d: int) -> Fraction:
    """k! [z^k] of the series raised to d+2, for an integer d >= -2."""
    return factorial(k) * (_sinh_ratio_series(k) ** (d + 2))[k]


@lru_cache(maxsize=None)
def e_prime_poly(k: int) -> UniPoly:
    """E'_k as a polynomial in d, interpolated through integer d = 0..k/2 + 1.

    One more point than the degree requires is used, and the result is checked
    to have degree at most k/2, which guards the interpolation.
    """
    if k % 2:
        return UniPoly()
    pts = [(d, e_prime_value(k, d)) for d in range(k // 2 + 2)]
    p = UniPoly.interpolate(pts)
    assert p.degree <= k // 2
    return p


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def e_prime_special_values_check(k: int) -> bool:
    p = e_prime_poly(2 * k)
    return (
        p(-2) == (1 if k == 0 else 0)
        and p(-1) == Fraction(1, (2 * k + 1) * 4**k)
        and p(0) == Fraction(1, (2 * k + 1) * (k + 1))
        and p.leading == Fraction(1, 12**k) * double_factorial(2 * k - 1)
    )


# -- bounds -----------------------------------------------------------------------


def normal_bound(d: int, k: int) -> Fraction:
    if k % 2:
        return Fraction(0)
    return Fraction(d + 2, 12) ** (k // 2) * double_factorial(k - 1)


def binomial_bound(d: int, k: int) -> Fraction:
    """k-th central moment of Binomial(d, 1/2)."""
    c = Fraction(d, 2)
    return sum((comb(d, j) * (j - c) ** k for j in range(d + 1)), Fraction(0)) / 2**d


def naive_lower_bound(d: int, k: int) -> Fraction:
    if k % 2 or k <= 0:
        raise OddMomentRejected(f"the naive bound is stated for even k > 0, got k={k}")
    return Fraction(0) if d % 2 == 0 else Fraction(1, 2**k)


@dataclass(frozen=True)
class BoundComparison:
    name: str
    k: int
    value: Fraction
    holds: bool
    equality: bool


@dataclass
class MomentReport:
    d: int
    central_moments: dict = field(default_factory=dict)
    factorial_moments: dict = field(default_factory=dict)
    bound_comparisons: list = field(default_factory=list)
    equality_diagnosis: str = "not_applicable"

    @property
    def all_hold(self) -> bool:
        return all(b.holds for b in self.bound_comparisons)


def variance_equality_predicate(m: Matroid) -> bool:
    return m.d == 1 or (m.d > 0 and simplification_is_boolean(m))


def diagnose_variance(m: Matroid, variance: Fraction) -> str:
    """Name the equality case of the variance bound, cross-checked against arithmetic."""
    predicted = variance_equality_predicate(m)
    observed = m.d > 0 and variance == Fraction(m.d + 2, 12)
    if predicted != observed:
        raise AssertionError(
            f"variance equality mismatch for {m}: predicate {predicted}, arithmetic {observed}"
        )
    if m.d == 1:
        return "d_equals_1"
    if predicted:
        return "boolean_simplification"
    return "strict" if m.d > 0 else "not_applicable"


def verify_bounds(m: Matroid, k_max: int) -> MomentReport:
    d = m.d
    dist = distribution(m)
    report = MomentReport(d)
    for k in range(k_max + 1):
        report.central_moments[k] = central_moment(dist, k)
        report.factorial_moments[k] = factorial_moment(dist, k)
    for k in range(2, k_max + 1, 2):
        mu = report.central_moments[k]
        lo = naive_lower_bound(d, k)
        nb = normal_bound(d, k)
        bb = binomial_bound(d, k)
        report.bound_comparisons += [
            BoundComparison("naive", k, lo, lo <= mu, lo == mu),
            BoundComparison("normal", k, nb, mu <= nb, mu == nb),
            BoundComparison("binomial", k, bb, mu <= bb, mu == bb),
        ]
    if k_max >= 2:
        report.equality_diagnosis = diagnose_variance(m, report.central_moments[2])
    return report


# -- restatements of the variance bound ---------------------------------------------


def flag_coefficient(J, d: int) -> Fraction:
    ns = block_sizes(J, d)
    return prod(n - 1 for n in ns) * Fraction(sum(n * (n - 3) for n in ns), 2)


def flag_inequality(m: Matroid) -> tuple:
    """(value, holds, equality) for sum_J prod(n_i - 1) sum n_i(n_i - 3)/2 N_J <= 0."""
    d = m.d
    table = flag_table(m)
    value = sum(
        (flag_coefficient(jset(mask), d) * c for mask, c in enumerate(table)), Fraction(0)
    )
    return value, value <= 0, value == 0


def gamma_inequality(m: Matroid) -> tuple:
    """(value, holds, equality) for sum_t 4^-t (d - 3t - 1) gamma_t <= 0."""
    d = m.d
    g = gamma_vector(chow_via_flags(m), d)
    value = sum(
        (Fraction(d - 3 * t - 1, 4**t) * gt for t, gt in enumerate(g.gamma)), Fraction(0)
    )
    return value, value <= 0, value == 0


@dataclass(frozen=True)
class PowerSums:
    W1: Fraction
    W2: Fraction
    W3: Fraction
    bounds_hold: bool


def power_sum_report(m: Matroid) -> PowerSums:
    """Normalized power sums of the negated roots, recovered from the first moments."""
    d = m.d
    var = central_moment(distribution(m), 2)
    w1 = Fraction(d, 2)
    w2 = w1 - var
    w3 = (3 * w2 - w1) / 2
    ok = Fraction(5 * d - 2, 12) <= w2 <= w1 and Fraction(3 * d - 2, 8) <= w3 <= w1
    return PowerSums(w1, w2, w3, ok)


# -- placements of blocks in two lines -------------------------------------------------


def block_placement_count(a: int, b: int, t_list) -> int:
    """Placements of labelled blocks of sizes t_list as runs in two lines of lengths a and b.

    Blocks may not overlap or touch inside a line; the lines do not touch each
    other. Counted by a scan over the concatenated sites.
    """
    sizes = tuple(sorted(t_list))
    if any(t <= 0 for t in sizes):
        raise ValueError("block sizes must be positive")
    length = a + b

    @lru_cache(maxsize=None)
    def count(pos: int, remaining: tuple) -> int:
        if not remaining:
            return 1
        if pos >= length:
            return 0
        total = count(pos + 1, remaining)
        line_end = a if pos < a else length
        for idx, t in enumerate(remaining):
            if idx and remaining[idx - 1] == t:
                continue
            end = pos + t
            if end > line_end:
                continue
            mult = remaining.count(t)
            rest = remaining[:idx] + remaining[idx + 1 :]
            # leave one free site after the block unless the line ends there
            nxt = end if end == line_end else end + 1
            total += mult * count(nxt, rest)
        return total

    return count(0, sizes)


def block_placement_formula(a: int, b: int, t_list) -> int:
    """Closed count: choose which labelled blocks go left, then order each side."""
    ts = list(t_list)
    r = len(ts)

    def line(total: int, k: int, length: int) -> int:
        if k == 0:
            return 1
        free = length - total + 1
        return comb(free, k) if free >= k else 0

    out = 0
    for left in itertools.product((0, 1), repeat=r):
        lt = [t for t, s in zip(ts, left) if s]
        rt = [t for t, s in zip(ts, left) if not s]
        out += (
            factorial(len(lt))
            * factorial(len(rt))
            * line(sum(lt), len(lt), a)
            * line(sum(rt), len(rt), b)
        )
    return out


def raw_moment(dist: CoeffDistribution, k: int) -> Fraction:
    return sum((p**k * w for p, w in enumerate(dist.weights)), Fraction(0))


def split_moment_identity(a: int, b: int, k: int) -> bool:
    """E[X_d^k] = E[(1 + X_a + X_b)^k] for d = a + b + 2, X_a and X_b independent."""
    xd = eulerian_distribution(a + b + 2)
    xa, xb = eulerian_distribution(a), eulerian_distribution(b)
    rhs = sum(
        (
            (1 + i + j) ** k * wi * wj
            for i, wi in enumerate(xa.weights)
            for j, wj in enumerate(xb.weights)
        ),
        Fraction(0),
    )
    return raw_moment(xd, k) == rhs


# -- Boolean sweep --------------------------------------------------------------------------


@dataclass
class SweepResult:
    violations: list
    equalities: list


def boolean_sweep(d_max: int, t_max: int) -> SweepResult:
    """Check E[(X_d - d/2)^{2t}] <= ((d+2)/12)^t (2t-1)!! in integers.

    Multiplying through by (d+1)! 4^t 12^t turns both sides into integers:
    sum_j A(d+1,j)(2j-d)^{2t} 12^t <= (d+2)^t (2t-1)!! (d+1)! 4^t.
    """
    violations, equalities = [], []
    for d in range(d_max + 1):
        row = eulerian_numbers(d + 1)
        fact = factorial(d + 1)
        sq = [(2 * j - d) ** 2 for j in range(d + 1)]
        powers = [1] * (d + 1)
        for t in range(1, t_max + 1):
            powers = [p * s for p, s in zip(powers, sq)]
            lhs = sum(a * p for a, p in zip(row, powers)) * 12**t
            rhs = (d + 2) ** t * double_factorial(2 * t - 1) * fact * 4**t
            if lhs > rhs:
                violations.append((d, t))
            elif lhs == rhs:
                equalities.append((d, t))
    return SweepResult(violations, equalities)
