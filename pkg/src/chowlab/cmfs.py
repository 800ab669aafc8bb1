"""Inductive construction of a central moment function sequence from an even series h(z).

At order k the state holds h through z^k and f_i(x) = i! [z^i] h(z)^{x+2} for
i <= k. One step extends h by C/(k+2)! z^{k+2} with C the least rational making
f_{k+2} dominate the Eulerian central moment in every dimension d >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, factorial
from typing import Callable, Sequence

from .errors import NoFiniteC
from .moments import e_prime_poly, eulerian_central_moment
from .poly import TruncatedSeries, UniPoly


def series_coeff_poly(h_coeffs: Sequence, i: int) -> UniPoly:
    """i! [z^i] h(z)^{x+2} as a polynomial in x (degree at most i)."""
    h = TruncatedSeries(h_coeffs, i)
    pts = [(x, factorial(i) * (h ** (x + 2))[i]) for x in range(i + 2)]
    return UniPoly.interpolate(pts)


@dataclass(frozen=True)
class CmfsState:
    k: int
    h_coeffs: tuple
    f_polys: tuple
    C_steps: tuple = field(default=())

    @classmethod
    def initial(cls) -> "CmfsState":
        return cls(0, (Fraction(1),), (UniPoly([1]),))

    def f(self, i: int) -> UniPoly:
        return self.f_polys[i]


def extract_g(state: CmfsState) -> UniPoly:
    """(k+2)! [z^{k+2}] h^{x+2} with h truncated at order k."""
    return series_coeff_poly(list(state.h_coeffs) + [0, 0], state.k + 2)


def cauchy_root_bound(p: UniPoly) -> Fraction:
    """Every real root of p lies in |x| < 1 + max |c_i / c_n|."""
    if p.degree <= 0:
        return Fraction(0)
    lead = abs(p.leading)
    return 1 + max(abs(c) / lead for c in p.coeffs[:-1])


def smallest_C(state: CmfsState, g: UniPoly) -> Fraction:
    """Least C with moment(d, k+2) <= g(d) + C (d+2) for every integer d >= 0.

    The moment agrees with E'_{k+2}(d) once d >= k+1. Past the largest real
    root of g + C(x+2) - E'_{k+2} the sign is that of the leading coefficient,
    so only finitely many d need an exact check. The horizon is grown until
    the Cauchy bound of the current difference polynomial lies inside it.
    """
    kk = state.k + 2
    ep = e_prime_poly(kk)
    gap = ep - g
    if gap.degree > 1 and gap.leading > 0:
        raise NoFiniteC(f"moment of order {kk} outgrows g by degree {gap.degree}")

    def ratio(d: int) -> Fraction:
        return (eulerian_central_moment(d, kk) - g(d)) / (d + 2)

    horizon = kk + 1
    best = max(ratio(d) for d in range(horizon + 1))
    while True:
        delta = g + UniPoly([2, 1]) * best - ep
        if delta.degree >= 1 and delta.leading < 0:
            raise NoFiniteC(f"no finite C at order {kk}")
        bound = max(ceil(cauchy_root_bound(delta)), kk + 1)
        if bound <= horizon:
            return best
        best = max(best, max(ratio(d) for d in range(horizon + 1, bound + 1)))
        horizon = bound


def step(state: CmfsState) -> CmfsState:
    g = extract_g(state)
    c = smallest_C(state, g)
    kk = state.k + 2
    h = list(state.h_coeffs) + [Fraction(0), c / factorial(kk)]
    f_odd = UniPoly()
    f_new = g + UniPoly([2, 1]) * c
    assert f_new == series_coeff_poly(h, kk)
    return CmfsState(kk, tuple(h), state.f_polys + (f_odd, f_new), state.C_steps + (c,))


def build_cmfs(order: int) -> CmfsState:
    if order % 2 or order < 0 or order > 12:
        raise ValueError("order must be an even number in [0, 12]")
    state = CmfsState.initial()
    while state.k < order:
        state = step(state)
    return state


def _as_callable(f) -> Callable:
    return f if callable(f) else (lambda x, c=f: c)


def is_cmfs(f_polys: Sequence, grid: int) -> bool:
    """f_k(a+b+2) >= sum_i binom(k,i) f_i(a) f_{k-i}(b) for all a, b in [0, grid]."""
    fs = [_as_callable(f) for f in f_polys]
    for k in range(len(fs)):
        for a in range(grid + 1):
            for b in range(grid + 1):
                rhs = sum(comb(k, i) * fs[i](a) * fs[k - i](b) for i in range(k + 1))
                if fs[k](a + b + 2) < rhs:
                    return False
    return True


def dominates_moments(state: CmfsState, d_max: int) -> bool:
    """f_k(d) >= Eulerian central moment for even k and d <= d_max, plus leading terms."""
    for k in range(2, state.k + 1, 2):
        f = state.f(k)
        if any(f(d) < eulerian_central_moment(d, k) for d in range(d_max + 1)):
            return False
        if f.degree < k // 2 or f.leading < e_prime_poly(k).leading:
            return False
    return True
