"""Exact certificates that the flag inequality is a nonnegative combination of
monotonicity inequalities N_J/U_J <= N_{J'}/U_{J'} over covering pairs J < J'.

In the coordinates y_J = N_J/U_J every generator becomes e_{J'} - e_J, an edge
of the Boolean lattice on [d] pointing upward, and the target becomes the
integer vector w_J = t_J U_J. A combination with multipliers lambda >= 0 is a
flow along upward edges whose net inflow at J is w_J, so feasibility is a
max-flow question. A dense exact simplex gives an independent route for small d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

import networkx as nx

from .errors import DimensionTooLarge
from .flags import block_sizes, boolean_flag_table, jset

DEFAULT_MAX_D = 14


def covering_pairs(d: int) -> list:
    return [
        (mask, mask | 1 << j)
        for mask in range(1 << d)
        for j in range(d)
        if not mask >> j & 1
    ]


def monotonicity_generators(d: int) -> dict:
    """Generator vectors keyed by covering pair; the vector has -1/U_J at J and 1/U_J' at J'."""
    u = boolean_flag_table(d)
    gens = {}
    for lo, hi in covering_pairs(d):
        v = [Fraction(0)] * (1 << d)
        v[lo] = Fraction(-1, u[lo])
        v[hi] = Fraction(1, u[hi])
        gens[lo, hi] = v
    return gens


def target_vector(d: int) -> list:
    out = []
    for mask in range(1 << d):
        ns = block_sizes(jset(mask), d)
        out.append(-prod(n - 1 for n in ns) * Fraction(sum(n * (n - 3) for n in ns), 2))
    return out


@dataclass
class ConeCertificate:
    d: int
    feasible: bool
    multipliers: dict = field(default_factory=dict)
    residual: list = field(default_factory=list)
    dual: list | None = None
    method: str = "flow"


def _residual(d: int, multipliers: dict) -> list:
    u = boolean_flag_table(d)
    res = [-t for t in target_vector(d)]
    for (lo, hi), lam in multipliers.items():
        res[lo] -= lam / u[lo]
        res[hi] += lam / u[hi]
    return res


def _scaled_target(d: int) -> list:
    u = boolean_flag_table(d)
    w = [t * uj for t, uj in zip(target_vector(d), u)]
    assert all(x.denominator == 1 for x in w)
    return [int(x) for x in w]


def _certify_flow(d: int) -> ConeCertificate:
    w = _scaled_target(d)
    size = 1 << d
    if sum(w) != 0:
        # the all-ones vector is up-closed and pairs negatively or positively
        sign = 1 if sum(w) < 0 else -1
        return ConeCertificate(d, False, residual=[], dual=[sign] * size)
    g = nx.DiGraph()
    src, sink = "s", "t"
    g.add_node(src)
    g.add_node(sink)
    need = 0
    for mask, x in enumerate(w):
        if x < 0:
            g.add_edge(src, mask, capacity=-x)
        elif x > 0:
            g.add_edge(mask, sink, capacity=x)
            need += x
    for lo, hi in covering_pairs(d):
        g.add_edge(lo, hi)  # no capacity attribute: unbounded
    value, flow = nx.maximum_flow(g, src, sink)
    if value == need:
        mult = {
            (lo, hi): Fraction(flow[lo][hi])
            for lo, hi in covering_pairs(d)
            if flow[lo][hi]
        }
        return ConeCertificate(d, True, mult, _residual(d, mult), method="flow")
    _, (reach, _) = nx.minimum_cut(g, src, sink)
    dual = [1 if mask in reach else 0 for mask in range(size)]
    return ConeCertificate(d, False, residual=[], dual=dual, method="flow")


# -- exact simplex --------------------------------------------------------------------------


def phase_one_simplex(a_rows: list, b: list) -> list | None:
    """Find x >= 0 with A x = b exactly, or None. Dense tableau, Bland's rule."""
    rows = len(a_rows)
    cols = len(a_rows[0]) if rows else 0
    tab = []
    for i in range(rows):
        r = [Fraction(v) for v in a_rows[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            r = [-v for v in r]
            rhs = -rhs
        art = [Fraction(0)] * rows
        art[i] = Fraction(1)
        tab.append(r + art + [rhs])
    basis = [cols + i for i in range(rows)]
    width = cols + rows
    # objective: minimize the sum of artificials, reduced costs in row form
    obj = [Fraction(0)] * (width + 1)
    for r in tab:
        for j in range(cols):
            obj[j] -= r[j]
        obj[width] -= r[width]
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best, leave = None, None
        for i, r in enumerate(tab):
            if r[enter] > 0:
                ratio = r[width] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return None  # cannot happen for phase one; objective is bounded below
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i, r in enumerate(tab):
            if i != leave and r[enter]:
                f = r[enter]
                tab[i] = [v - f * p for v, p in zip(r, tab[leave])]
        f = obj[enter]
        obj = [v - f * p for v, p in zip(obj, tab[leave])]
        basis[leave] = enter
    if obj[width] != 0:
        return None
    x = [Fraction(0)] * cols
    for i, j in enumerate(basis):
        if j < cols:
            x[j] = tab[i][width]
    return x


def _certify_simplex(d: int) -> ConeCertificate:
    pairs = covering_pairs(d)
    gens = monotonicity_generators(d)
    target = target_vector(d)
    a_rows = [[gens[p][mask] for p in pairs] for mask in range(1 << d)]
    x = phase_one_simplex(a_rows, target)
    if x is None:
        return ConeCertificate(d, False, method="simplex")
    mult = {p: v for p, v in zip(pairs, x) if v}
    return ConeCertificate(d, True, mult, _residual(d, mult), method="simplex")


def certify(d: int, method: str = "flow", max_d: int = DEFAULT_MAX_D) -> ConeCertificate:
    if d < 1:
        raise ValueError("certify needs d >= 1")
    if d > max_d:
        raise DimensionTooLarge(f"d={d} exceeds the cap {max_d}")
    if method == "flow":
        return _certify_flow(d)
    if method == "simplex":
        return _certify_simplex(d)
    raise ValueError(f"unknown method {method!r}")


def verify_certificate(cert: ConeCertificate) -> bool:
    """Recombine the multipliers in flag-count coordinates and compare with the target."""
    if not cert.feasible:
        return False
    valid = set(covering_pairs(cert.d))
    if any(p not in valid or lam < 0 for p, lam in cert.multipliers.items()):
        return False
    total = [Fraction(0)] * (1 << cert.d)
    gens = monotonicity_generators(cert.d)
    for p, lam in cert.multipliers.items():
        for i, v in enumerate(gens[p]):
            total[i] += lam * v
    return total == target_vector(cert.d) and all(r == 0 for r in cert.residual)


def verify_infeasibility(cert: ConeCertificate) -> bool:
    """The dual y must be monotone along every cover and pair negatively with the target."""
    if cert.feasible or cert.dual is None:
        return False
    y = cert.dual
    if any(y[hi] < y[lo] for lo, hi in covering_pairs(cert.d)):
        return False
    w = _scaled_target(cert.d)
    return sum(a * b for a, b in zip(y, w)) < 0
