"""Chern numbers of matroids expressed through flag counts.

The coefficients f_{k,J}(d) and g_{k,J}(d) give c_k alpha^{d-k} and
c_1 c_{k-1} alpha^{d-k} as sum_J coeff * N_J. The recurrences in d, seeded at
k = d, are the reference; the closed forms are checked against them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .chow import chow_via_flags, eulerian_numbers
from .errors import NotAWeakMap, RankTooSmall, Unsupported
from .flags import block_sizes, flag_table, jmask, jset
from .matroid import Matroid, is_weak_map_image
from .moments import central_moment, distribution, e_prime_poly
from .poly import TruncatedSeries


def _within(mask: int, k: int) -> bool:
    return k >= 0 and mask >> k == 0


@lru_cache(maxsize=None)
def f_recursive(k: int, mask: int, d: int) -> int:
    if k < 0 or k > d or not _within(mask, k):
        return 0
    if k == d:
        return prod(n - 1 for n in block_sizes(jset(mask), d))
    return f_recursive(k, mask, d - 1) + f_recursive(k - 1, mask, d - 1)


@lru_cache(maxsize=None)
def g_recursive(k: int, mask: int, d: int) -> int:
    if k < 0 or k > d or not _within(mask, k):
        return 0
    if k == d:
        ns = block_sizes(jset(mask), d)
        s = sum(n * (n - 3) for n in ns) // 2
        return prod(n - 1 for n in ns) * (s + 1)
    return (
        g_recursive(k, mask, d - 1)
        + g_recursive(k - 1, mask, d - 1)
        + f_recursive(k - 1, mask, d - 1)
        + f_recursive(k - 2, mask, d - 1)
    )


def _closed_parts(J, d: int):
    J = tuple(J)
    jm = J[-1] if J else 0
    ns = block_sizes(J, d)[:-1]
    a = prod(n - 1 for n in ns)
    b = Fraction(sum(n * (n - 3) for n in ns), 2)
    return jm, a, b


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def coeff_f(k: int, J, d: int) -> Fraction:
    """A * binom(d - j_m + 1, k - j_m) with A = prod_{i<=m} (n_i - 1)."""
    if not _within(jmask(J), k):
        return Fraction(0)
    jm, a, _ = _closed_parts(J, d)
    return Fraction(a * _binom(d - jm + 1, k - jm))


def coeff_g(k: int, J, d: int) -> Fraction:
    """A (B binom(d-j_m+1, k-j_m) + (d-j_m+1) binom(d-j_m+1, k-j_m-1)), B = sum_{i<=m} n_i(n_i-3)/2."""
    if not _within(jmask(J), k):
        return Fraction(0)
    jm, a, b = _closed_parts(J, d)
    top = d - jm + 1
    return a * (b * _binom(top, k - jm) + top * _binom(top, k - jm - 1))


@dataclass(frozen=True)
class ChernAlphaTable:
    d: int
    f_table: dict
    g_table: dict

    @classmethod
    def build(cls, d: int) -> "ChernAlphaTable":
        f, g = {}, {}
        for k in range(d + 1):
            for mask in range(1 << k):
                f[k, mask] = Fraction(f_recursive(k, mask, d))
                g[k, mask] = Fraction(g_recursive(k, mask, d))
        return cls(d, f, g)


@lru_cache(maxsize=64)
def alpha_table(d: int) -> ChernAlphaTable:
    return ChernAlphaTable.build(d)


def _pair(m: Matroid, coeffs: dict, k: int) -> Fraction:
    table = flag_table(m)
    return sum((coeffs.get((k, mask), 0) * table[mask] for mask in range(1 << k)), Fraction(0))


def chern_alpha(m: Matroid, k: int) -> Fraction:
    """c_k alpha^{d-k}."""
    val = _pair(m, alpha_table(m.d).f_table, k)
    assert val.denominator == 1
    return val


def c1_ck1_alpha(m: Matroid, k: int) -> Fraction:
    """c_1 c_{k-1} alpha^{d-k}."""
    return _pair(m, alpha_table(m.d).g_table, k)


def top_chern(m: Matroid) -> int:
    return int(chern_alpha(m, m.d))


def c1_cdminus1(m: Matroid) -> int:
    val = c1_ck1_alpha(m, m.d)
    assert val.denominator == 1
    return int(val)


def verify_chern_inequality(m: Matroid) -> tuple:
    """(c_1 c_{d-1} - c_d, holds, equality)."""
    lhs = c1_cdminus1(m) - top_chern(m)
    return lhs, lhs <= 0, lhs == 0


def miyaoka_yau_alpha(m: Matroid) -> tuple:
    """((d+2) c_2 - 2d c_1^2) alpha^{d-2}, via the tables and via N_2."""
    d = m.d
    if d < 2:
        raise RankTooSmall("the Miyaoka-Yau alpha number needs d >= 2")
    via_tables = (d + 2) * chern_alpha(m, 2) - 2 * d * c1_ck1_alpha(m, 2)
    n2 = flag_table(m)[jmask([2])]
    via_n2 = (3 * d + 2) * (n2 - comb(d + 1, 2))
    if via_tables != via_n2:
        raise AssertionError(f"Miyaoka-Yau routes disagree: {via_tables} vs {via_n2}")
    return int(via_n2), via_n2 >= 0


def deg_alpha_beta(m: Matroid, k: int) -> int:
    """deg(alpha^{d-k} beta^k) = (-1)^k sum_{J in [k]} (-1)^|J| N_J."""
    table = flag_table(m)
    s = sum((-1) ** bin(mask).count("1") * table[mask] for mask in range(1 << k))
    return (-1) ** k * s


def h_from_moments(m: Matroid, k: int) -> Fraction:
    return top_chern(m) * central_moment(distribution(m), k)


def h2_from_chern(m: Matroid) -> Fraction:
    return Fraction(m.d, 12) * top_chern(m) + Fraction(c1_cdminus1(m), 6)


# -- Todd class ------------------------------------------------------------------------


def todd_rhs(d: int, k: int) -> Fraction:
    """[a^d] (-log(1-a))^{d-k} / (1-a)."""
    order = d
    log_series = TruncatedSeries([0] + [Fraction(1, i) for i in range(1, order + 1)], order)
    geo = TruncatedSeries([1] * (order + 1), order)
    return ((log_series ** (d - k)) * geo)[d]


def todd_lhs(m: Matroid, k: int) -> Fraction:
    if k == 0:
        return Fraction(1)
    if k == 1:
        return chern_alpha(m, 1) / 2
    if k == 2:
        return (c1_ck1_alpha(m, 2) + chern_alpha(m, 2)) / 12
    if k == 3:
        return c1_ck1_alpha(m, 3) / 24
    raise Unsupported("Todd components are only assembled for k <= 3")


def todd_alpha_check(m: Matroid, k: int) -> bool:
    if k > 3:
        raise Unsupported("Todd components are only assembled for k <= 3")
    if k > m.d:
        raise ValueError(f"need k <= d, got k={k}, d={m.d}")
    return todd_lhs(m, k) == todd_rhs(m.d, k)


def weak_map_monotonicity_check(m1: Matroid, m2: Matroid, k: int) -> bool:
    if not is_weak_map_image(m1, m2):
        raise NotAWeakMap("second matroid is not a rank-preserving weak map image of the first")
    return chern_alpha(m1, k) >= chern_alpha(m2, k)


def boolean_chern_alpha(d: int, k: int) -> int:
    return factorial(d + 1) // factorial(d - k + 1)


# -- permutahedral variety ---------------------------------------------------------------


def perm_c1k(d: int, k: int) -> Fraction:
    """c_1^k c_{d-k} of the permutahedral variety of dimension d."""
    return Fraction(comb(2 * k + 2, k + 1), factorial(k + 2)) * factorial(d + 1)


def perm_pk(d: int, k: int) -> Fraction:
    """p_k c_{d-k}, with p_k the k-th power-sum Chern class."""
    inner = Fraction((d - k + 1) * comb(2 * k, k), factorial(k + 1)) - Fraction(
        (d - k) * comb(2 * k + 2, k + 1), factorial(k + 2)
    )
    return (-1) ** (k - 1) * inner * factorial(d + 1)


def perm_ck_primary(d: int, k: int) -> Fraction:
    total = Fraction(0)
    for a in range(min(k, d - k) + 1):
        inner = sum(
            (
                _binom(d - a - j, a - j) * _binom(a - j, j) * Fraction(1, 12**j)
                for j in range(a // 2 + 1)
            ),
            Fraction(0),
        )
        total += (-1) ** a * _binom(d - 2 * a, k - a) * inner
    return total * factorial(d + 1)


def perm_ck_alternative(d: int, k: int) -> Fraction:
    total = sum(
        (
            Fraction(1, 12**j) * _binom(k - j, j) * _binom(d - k - j, j)
            for j in range(min(k, d - k) // 2 + 1)
        ),
        Fraction(0),
    )
    return total * factorial(d + 1)


def perm_ck(d: int, k: int) -> Fraction:
    a, b = perm_ck_primary(d, k), perm_ck_alternative(d, k)
    if a != b:
        raise AssertionError(f"c_k c_(d-k) formulas disagree at d={d}, k={k}")
    return a


def h4_permutahedron(d: int) -> Fraction:
    """h_4 assembled from its Chern-number expansion."""
    cd = factorial(d + 1)
    return (
        Fraction(d * (5 * d - 2), 240) * cd
        + Fraction(5 * d - 2, 60) * perm_c1k(d, 1)
        + (perm_c1k(d, 2) + 3 * perm_ck(d, 2)) / 30
        - perm_pk(d, 3) / 30
    )


def h4_permutahedron_check(d: int) -> bool:
    if d < 4:
        raise ValueError("needs d >= 4")
    return h4_permutahedron(d) == e_prime_poly(4)(d) * factorial(d + 1)


def c_ks_coefficient(k: int, s: int) -> int:
    row = eulerian_numbers(s) if s >= 1 else (1,)
    return sum(row[m] * comb(s - m, k) for m in range(s - k + 1) if m < len(row))


def c_ks_expectation(k: int, s: int) -> Fraction:
    """s! E[binom(s - Y, k)] with Y distributed as A(s, .)/s!."""
    row = eulerian_numbers(s)
    return sum((Fraction(a) * comb(s - m, k) for m, a in enumerate(row)), Fraction(0))


# -- reports -----------------------------------------------------------------------


@dataclass
class ChernReport:
    c_d: int
    c1_cd1: int
    inequality_holds: bool
    equality: bool
    h_values: dict = field(default_factory=dict)
    alpha_rows: dict = field(default_factory=dict)


def chern_report(m: Matroid, k_max: int | None = None) -> ChernReport:
    d = m.d
    cd = top_chern(m)
    assert cd == chow_via_flags(m)(1)
    c1 = c1_cdminus1(m)
    lhs, holds, eq = verify_chern_inequality(m)
    report = ChernReport(cd, c1, holds, eq)
    for k in range(0, 5, 2):
        report.h_values[k] = h_from_moments(m, k)
    my = miyaoka_yau_alpha(m)[0] if d >= 2 else None
    for k in range(min(d, d if k_max is None else k_max) + 1):
        report.alpha_rows[k] = (
            chern_alpha(m, k),
            c1_ck1_alpha(m, k),
            boolean_chern_alpha(d, k),
            my,
        )
    return report


def t_ratio_scan(matroids, k: int) -> Fraction | None:
    """Smallest c_k alpha^{d-k} / (c_1 c_{k-1} alpha^{d-k}) seen over the inputs.

    The denominator can be zero or negative (c_1^2 alpha^{d-2} = (d+1)^2 - N_2),
    and such matroids say nothing about a lower ratio, so they are skipped.
    """
    best = None
    for m in matroids:
        if m.d < k or k < 1:
            continue
        den = c1_ck1_alpha(m, k)
        if den > 0:
            r = chern_alpha(m, k) / den
            best = r if best is None or r < best else best
    return best
