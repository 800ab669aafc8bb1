"""Chow polynomials of matroids, computed from flag counts and by the semi-small recursion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotPalindromic
from .flags import block_sizes, flag_table, jset
from .matroid import Matroid, contract_mask, delete, flats, restrict_mask
from .poly import UniPoly


@lru_cache(maxsize=None)
def eulerian_numbers(n: int) -> tuple:
    """Row (A(n,0), ..., A(n,n-1)) from A(n,m) = (n-m)A(n-1,m-1) + (m+1)A(n-1,m)."""
    if n < 1:
        raise ValueError("Eulerian numbers need n >= 1")
    row = [1]
    for size in range(2, n + 1):
        prev = row + [0]
        row = [
            (size - m) * (prev[m - 1] if m else 0) + (m + 1) * prev[m]
            for m in range(size)
        ]
    return tuple(row)


def eulerian_polynomial(n: int) -> UniPoly:
    return UniPoly(eulerian_numbers(n))


def _block_poly(n: int) -> UniPoly:
    # x + x^2 + ... + x^(n-1); zero for n = 1
    return UniPoly([0] + [1] * (n - 1))


def chow_from_flag_table(table: list, d: int) -> UniPoly:
    total = UniPoly()
    for mask, count in enumerate(table):
        if not count:
            continue
        term = UniPoly([count])
        for n in block_sizes(jset(mask), d):
            term = term * _block_poly(n)
            if term.is_zero():
                break
        total = total + term
    # every surviving term has a factor x from each block; drop one
    assert total[0] == 0
    return UniPoly(total.coeffs[1:])


def chow_via_flags(m: Matroid) -> UniPoly:
    return chow_from_flag_table(flag_table(m), m.d)


def semismall_terms(m: Matroid, i: int) -> list:
    """Flats F with 0 < F < E minus i such that F + i is also a flat."""
    lat = flats(m)
    bit = 1 << i
    out = []
    for f in lat.all_flats():
        if f == 0 or f & bit or f == m.ground & ~bit:
            continue
        if m.is_flat(f | bit):
            out.append(f)
    return out


def chow_via_recursion(m: Matroid, memo: dict | None = None) -> UniPoly:
    """H_M = H_{M minus i} + x * sum over F of H_{M/(F+i)} H_{M|F}, i the smallest non-coloop."""
    if memo is None:
        memo = {}
    key = m.canonical_key()
    hit = memo.get(key)
    if hit is not None:
        return hit
    if m.rank == 1:
        result = UniPoly([1])
    else:
        coloops = m.coloops()
        if coloops == m.ground:
            result = eulerian_polynomial(m.rank)
        else:
            i = next(e for e in range(m.n) if not coloops >> e & 1)
            result = chow_via_recursion(delete(m, i), memo)
            acc = UniPoly()
            for f in semismall_terms(m, i):
                top = chow_via_recursion(contract_mask(m, f | 1 << i), memo)
                bottom = chow_via_recursion(restrict_mask(m, f), memo)
                acc = acc + top * bottom
            result = result + acc.shift(1)
    memo[key] = result
    return result


def chow_polynomial(m: Matroid, cross_check: bool = False) -> UniPoly:
    h = chow_via_flags(m)
    if cross_check:
        other = chow_via_recursion(m)
        if other != h:
            raise AssertionError(f"Chow routes disagree: {h} vs {other}")
    return h


@dataclass(frozen=True)
class GammaVector:
    gamma: tuple
    d: int

    def reconstruct(self) -> UniPoly:
        one_plus_x = UniPoly([1, 1])
        total = UniPoly()
        for t, g in enumerate(self.gamma):
            total = total + (one_plus_x ** (self.d - 2 * t)).shift(t) * g
        return total


def gamma_vector(p: UniPoly, d: int) -> GammaVector:
    if p.degree > d or not p.is_palindromic(d):
        raise NotPalindromic(f"{p} is not palindromic with center {d}/2")
    rest = p
    gamma = []
    one_plus_x = UniPoly([1, 1])
    for t in range(d // 2 + 1):
        g = rest[t]
        gamma.append(g)
        rest = rest - (one_plus_x ** (d - 2 * t)).shift(t) * g
    assert rest.is_zero()
    return GammaVector(tuple(Fraction(g) for g in gamma), d)
