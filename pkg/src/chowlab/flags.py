"""Flag counts N_J, block decompositions, and closed forms for Boolean and PG(d,q).

A rank index set J is a subset of [d] = {1..d}. Tables are keyed by the d-bit
mask with bit ``j-1`` set for each ``j`` in J.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .matroid import Matroid, flats
from .poly import UniPoly


@dataclass(frozen=True)
class RankIndexSet:
    J: tuple
    d: int

    def __post_init__(self):
        J = tuple(self.J)
        if list(J) != sorted(set(J)) or (J and (J[0] < 1 or J[-1] > self.d)):
            raise ValueError(f"J={J} is not a strictly increasing subset of [1..{self.d}]")
        object.__setattr__(self, "J", J)

    @property
    def mask(self) -> int:
        return jmask(self.J)

    @classmethod
    def from_mask(cls, mask: int, d: int) -> "RankIndexSet":
        return cls(jset(mask), d)


def jmask(J) -> int:
    m = 0
    for j in J:
        m |= 1 << (j - 1)
    return m


def jset(mask: int) -> tuple:
    out, j = [], 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def block_sizes(J, d: int) -> tuple:
    """Gaps (n_1..n_{m+1}) of J inside 0 < j_1 < ... < j_m < d+2; they sum to d+2."""
    J = J.J if isinstance(J, RankIndexSet) else tuple(J)
    pts = (0,) + J + (d + 2,)
    return tuple(b - a for a, b in zip(pts, pts[1:]))


def flag_table(m: Matroid) -> list:
    """N_J for every J in [d], as a list indexed by J-mask.

    Chains are counted with a DP over the lattice: chains[F][mask] is the
    number of flags of proper flats with rank set ``mask`` whose top is F.
    """
    d = m.d
    lat = flats(m)
    table = [0] * (1 << d) if d >= 0 else [1]
    table[0] = 1
    proper = [(r, f) for r in range(1, d + 1) for f in lat.flats_by_rank[r]]
    chains: dict = {}
    for r, f in proper:
        here = {1 << (r - 1): 1}
        for r2, g in proper:
            if r2 >= r:
                break
            if g & ~f == 0:
                for mask, c in chains[g].items():
                    key = mask | (1 << (r - 1))
                    here[key] = here.get(key, 0) + c
        chains[f] = here
        for mask, c in here.items():
            table[mask] += c
    return table


def flag_count(m: Matroid, J) -> int:
    mask = J.mask if isinstance(J, RankIndexSet) else jmask(J)
    return flag_table(m)[mask]


def boolean_flag_count(d: int, J) -> int:
    """U_J = N_J(U_{d+1}) = n_{m+1} (d+1)! / prod n_i!."""
    ns = block_sizes(J, d)
    val = Fraction(ns[-1] * factorial(d + 1), prod(factorial(n) for n in ns))
    assert val.denominator == 1
    return val.numerator


def boolean_flag_table(d: int) -> list:
    return [boolean_flag_count(d, jset(mask)) for mask in range(1 << d)]


def gaussian_binomial(mm: int, r: int, q: int) -> int:
    if r < 0 or r > mm:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (mm - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def gaussian_binomial_poly(mm: int, r: int) -> UniPoly:
    """The q-binomial as a polynomial in q, via [m,r] = [m-1,r-1] + q^r [m-1,r]."""
    rows = [[UniPoly([1])]]
    for m_ in range(1, mm + 1):
        prev = rows[-1]
        row = []
        for k in range(m_ + 1):
            left = prev[k - 1] if k >= 1 else UniPoly()
            right = prev[k].shift(k) if k < m_ else UniPoly()
            row.append(left + right)
        rows.append(row)
    return rows[mm][r] if 0 <= r <= mm else UniPoly()


def pg_flag_count(d: int, q: int, J) -> int:
    J = J.J if isinstance(J, RankIndexSet) else tuple(J)
    out, prev = 1, 0
    for j in J:
        out *= gaussian_binomial(d + 1 - prev, j - prev, q)
        prev = j
    return out


def pg_flag_poly(d: int, J) -> UniPoly:
    J = J.J if isinstance(J, RankIndexSet) else tuple(J)
    out, prev = UniPoly([1]), 0
    for j in J:
        out = out * gaussian_binomial_poly(d + 1 - prev, j - prev)
        prev = j
    return out


def pg_flag_table(d: int, q: int) -> list:
    return [pg_flag_count(d, q, jset(mask)) for mask in range(1 << d)]


def pg_flag_degree(d: int, J) -> Fraction:
    J = J.J if isinstance(J, RankIndexSet) else tuple(J)
    pts = (0,) + J + (d + 1,)
    val = Fraction((d + 1) ** 2, 2) - Fraction(sum((b - a) ** 2 for a, b in zip(pts, pts[1:])), 2)
    assert val.denominator == 1
    return val
