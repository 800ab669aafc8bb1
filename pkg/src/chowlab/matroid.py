"""Loopless matroids stored as basis families of bitmasks, and their lattices of flats.

Element ``i`` of the ground set corresponds to bit ``1 << i``. Every minor is
relabelled densely to ``0..n'-1``; ``labels[i]`` records which element of the
parent the new element ``i`` came from.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from . import errors
from .gf import GF


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _compress(mask: int, keep: tuple[int, ...]) -> int:
    """Re-index the bits of ``mask`` lying in ``keep`` to consecutive positions."""
    out = 0
    for new, old in enumerate(keep):
        if mask >> old & 1:
            out |= 1 << new
    return out


@dataclass(frozen=True, eq=False)
class Matroid:
    n: int
    bases: frozenset
    rank: int
    labels: tuple = ()
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_key", (self.n, tuple(sorted(self.bases))))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))

    # -- identity ---------------------------------------------------------

    @property
    def d(self) -> int:
        """Degree of the Chow polynomial, rank - 1."""
        return self.rank - 1

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def canonical_key(self) -> tuple:
        """Hashable canonical form: (n, sorted basis bitmasks)."""
        return self._key

    def canonical_bases(self) -> list[list[int]]:
        return sorted(sorted(elements_of(b)) for b in self.bases)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matroid) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, |bases|={len(self.bases)})"

    # -- rank oracle ------------------------------------------------------

    def rank_of(self, s: int) -> int:
        return max((b & s).bit_count() for b in self.bases)

    def is_independent(self, s: int) -> bool:
        k = s.bit_count()
        return any(b & s == s for b in self.bases) if k <= self.rank else False

    def coloops(self) -> int:
        out = self.ground
        for b in self.bases:
            out &= b
        return out

    def is_coloop(self, e: int) -> bool:
        return bool(self.coloops() >> e & 1)

    def closure_mask(self, s: int) -> int:
        # e outside s escapes the closure iff it lies in a basis meeting s maximally
        r = self.rank_of(s)
        escape = 0
        for b in self.bases:
            if (b & s).bit_count() == r:
                escape |= b
        return self.ground & ~(escape & ~s)

    def closure(self, s: Iterable[int]) -> frozenset:
        return frozenset(elements_of(self.closure_mask(mask_of(s))))

    def is_flat(self, s: int) -> bool:
        return self.closure_mask(s) == s


# -- constructors -------------------------------------------------------------


def make_uniform(r: int, n: int) -> Matroid:
    if r <= 0 or r > n:
        raise errors.InvalidParameters(f"uniform matroid needs 0 < r <= n, got r={r}, n={n}")
    bases = frozenset(mask_of(c) for c in itertools.combinations(range(n), r))
    return Matroid(n, bases, r)


def make_boolean(n: int) -> Matroid:
    return make_uniform(n, n)


def projective_points(d: int, q: int) -> list[tuple[int, ...]]:
    """Normalized representatives (first nonzero coordinate 1) of the lines of GF(q)^(d+1)."""
    pts = []
    for v in itertools.product(range(q), repeat=d + 1):
        nz = next((x for x in v if x), None)
        if nz == 1:
            pts.append(v)
    return pts


def make_projective_geometry(d: int, q: int) -> Matroid:
    if d < 1:
        raise errors.InvalidParameters(f"PG(d,q) needs d >= 1, got d={d}")
    field_ = GF(q)  # raises UnsupportedField
    pts = projective_points(d, q)
    bases = frozenset(
        mask_of(c)
        for c in itertools.combinations(range(len(pts)), d + 1)
        if field_.rank([list(pts[i]) for i in c]) == d + 1
    )
    return Matroid(len(pts), bases, d + 1)


def from_bases(n: int, bases: Iterable[Iterable[int]], check_exchange: bool = True) -> Matroid:
    blist = [tuple(sorted(set(b))) for b in bases]
    if not blist:
        raise errors.EmptyBasisList("basis list is empty")
    r = len(blist[0])
    if any(len(b) != r for b in blist):
        raise errors.MixedCardinality("bases have different cardinalities")
    for b in blist:
        if any(e < 0 or e >= n for e in b):
            raise errors.InvalidParameters(f"basis {b} not inside ground set 0..{n - 1}")
    masks = frozenset(mask_of(b) for b in blist)
    union = 0
    for b in masks:
        union |= b
    if union != (1 << n) - 1:
        missing = [e for e in range(n) if not union >> e & 1]
        raise errors.LoopDetected(f"elements {missing} lie in no basis")
    if r == 0:
        raise errors.InvalidParameters("rank-0 matroid has loops")
    if check_exchange:
        _check_exchange(masks)
    return Matroid(n, masks, r)


def _check_exchange(bases: frozenset) -> None:
    for b1 in bases:
        for b2 in bases:
            diff1 = b1 & ~b2
            diff2 = b2 & ~b1
            for x in elements_of(diff1):
                base = b1 & ~(1 << x)
                if not any((base | (1 << y)) in bases for y in elements_of(diff2)):
                    raise errors.ExchangeAxiomViolation(
                        f"no exchange for {elements_of(b1)} -> {elements_of(b2)} at {x}"
                    )


# -- minors -------------------------------------------------------------------


def _relabel(m: Matroid, keep: tuple[int, ...], bases: Iterable[int], rank: int) -> Matroid:
    new_bases = frozenset(_compress(b, keep) for b in bases)
    labels = tuple(m.labels[i] for i in keep)
    return Matroid(len(keep), new_bases, rank, labels)


def delete(m: Matroid, e: int) -> Matroid:
    if m.n <= 1:
        raise errors.EmptyMatroid("deleting the only element leaves an empty matroid")
    keep = tuple(i for i in range(m.n) if i != e)
    bit = 1 << e
    if m.is_coloop(e):
        return _relabel(m, keep, (b & ~bit for b in m.bases), m.rank - 1)
    return _relabel(m, keep, (b for b in m.bases if not b & bit), m.rank)


def contract(m: Matroid, s: Iterable[int]) -> Matroid:
    """Contract by a flat given as elements (a non-flat would create loops)."""
    return contract_mask(m, mask_of(s))


def contract_mask(m: Matroid, smask: int) -> Matroid:
    if not m.is_flat(smask):
        raise errors.ContractByNonFlat(f"{elements_of(smask)} is not a flat")
    if smask == m.ground:
        raise errors.EmptyMatroid("contracting the whole ground set")
    r = m.rank_of(smask)
    keep = tuple(i for i in range(m.n) if not smask >> i & 1)
    bases = (b & ~smask for b in m.bases if (b & smask).bit_count() == r)
    return _relabel(m, keep, bases, m.rank - r)


def restrict(m: Matroid, s: Iterable[int]) -> Matroid:
    return restrict_mask(m, mask_of(s))


def restrict_mask(m: Matroid, smask: int) -> Matroid:
    if smask == 0:
        raise errors.EmptyMatroid("restriction to the empty set")
    r = m.rank_of(smask)
    keep = elements_of(smask)
    bases = (b & smask for b in m.bases if (b & smask).bit_count() == r)
    return _relabel(m, keep, bases, r)


def truncation(m: Matroid) -> Matroid:
    if m.rank < 2:
        raise errors.RankTooSmall("truncation needs rank >= 2")
    bases = set()
    for b in m.bases:
        for e in elements_of(b):
            bases.add(b & ~(1 << e))
    return Matroid(m.n, frozenset(bases), m.rank - 1, m.labels)


def parallel_extension(m: Matroid, e: int) -> Matroid:
    """Add a new element n parallel to e."""
    new = 1 << m.n
    bit = 1 << e
    bases = set(m.bases)
    bases.update((b & ~bit) | new for b in m.bases if b & bit)
    return Matroid(m.n + 1, frozenset(bases), m.rank, m.labels + (m.labels[e],))


def simplification(m: Matroid) -> Matroid:
    """Restrict to one representative (the smallest element) of each rank-1 flat."""
    atoms = {m.closure_mask(1 << e) for e in range(m.n)}
    reps = mask_of(min(elements_of(a)) for a in atoms)
    return restrict_mask(m, reps)


def is_weak_map_image(source: Matroid, target: Matroid) -> bool:
    """Rank-preserving weak map source -> target: same ground set, same rank,
    and every independent set of target independent in source."""
    if source.n != target.n or source.rank != target.rank:
        return False
    return target.bases <= source.bases


# -- lattice of flats ---------------------------------------------------------


@dataclass(frozen=True)
class FlatLattice:
    """Flats grouped by rank 0..rank, with cover relations."""

    flats_by_rank: tuple
    covers: dict

    @property
    def rank(self) -> int:
        return len(self.flats_by_rank) - 1

    @property
    def d(self) -> int:
        return self.rank - 1

    def counts(self) -> list[int]:
        return [len(layer) for layer in self.flats_by_rank]

    def all_flats(self) -> list[int]:
        return [f for layer in self.flats_by_rank for f in layer]

    def rank_of_flat(self) -> dict:
        return {f: r for r, layer in enumerate(self.flats_by_rank) for f in layer}

    def maximal_chains(self) -> int:
        ways = {self.flats_by_rank[0][0]: 1}
        for layer in self.flats_by_rank[:-1]:
            for f in layer:
                for g in self.covers[f]:
                    ways[g] = ways.get(g, 0) + ways[f]
        return ways[self.flats_by_rank[-1][0]]


_lattice_cache: dict = {}


def flats(m: Matroid) -> FlatLattice:
    key = m.canonical_key()
    hit = _lattice_cache.get(key)
    if hit is not None:
        return hit
    layers = [[m.closure_mask(0)]]
    covers: dict = {}
    for _ in range(m.rank):
        nxt: set = set()
        for f in layers[-1]:
            ups = set()
            rest = m.ground & ~f
            while rest:
                low = rest & -rest
                rest ^= low
                g = m.closure_mask(f | low)
                ups.add(g)
                rest &= ~g
            covers[f] = sorted(ups)
            nxt |= ups
        layers.append(sorted(nxt))
    for f in layers[-1]:
        covers[f] = []
    lat = FlatLattice(tuple(tuple(layer) for layer in layers), covers)
    if len(_lattice_cache) > 4096:
        _lattice_cache.clear()
    _lattice_cache[key] = lat
    return lat


def simplification_is_boolean(m: Matroid) -> bool:
    return len(flats(m).flats_by_rank[1]) == m.rank

