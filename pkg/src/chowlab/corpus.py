"""The standard test corpus: small uniform matroids, three projective geometries,
their one-step minors, and parallel extensions of Fano and U_{2,3}."""

from __future__ import annotations

from functools import lru_cache

from . import errors
from .matroid import (
    Matroid,
    contract_mask,
    delete,
    flats,
    make_projective_geometry,
    make_uniform,
    parallel_extension,
)


def base_family() -> list:
    out = [make_uniform(r, n) for n in range(1, 9) for r in range(1, n + 1)]
    out += [make_projective_geometry(2, 2), make_projective_geometry(2, 3), make_projective_geometry(3, 2)]
    return out


def one_step_minors(m: Matroid) -> list:
    out = []
    for e in range(m.n):
        try:
            out.append(delete(m, e))
        except errors.EmptyMatroid:
            pass
    lat = flats(m)
    for f in lat.all_flats():
        if f == 0 or f == m.ground:
            continue
        out.append(contract_mask(m, f))
    return out


def parallel_family() -> list:
    fano = make_projective_geometry(2, 2)
    u23 = make_uniform(2, 3)
    return [
        parallel_extension(fano, 0),
        parallel_extension(parallel_extension(fano, 0), 1),
        parallel_extension(u23, 0),
        parallel_extension(parallel_extension(u23, 0), 0),
        parallel_extension(make_uniform(3, 3), 2),
    ]


def _dedupe(ms) -> list:
    seen, out = set(), []
    for m in ms:
        key = m.canonical_key()
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


@lru_cache(maxsize=1)
def oracle_corpus() -> tuple:
    """Base family together with all single deletions and single-flat contractions."""
    base = base_family()
    ms = list(base)
    for m in base:
        ms += one_step_minors(m)
    return tuple(_dedupe(ms))


@lru_cache(maxsize=1)
def full_corpus() -> tuple:
    return tuple(_dedupe(list(oracle_corpus()) + parallel_family()))


def describe(m: Matroid) -> str:
    return f"n={m.n},r={m.rank},|B|={len(m.bases)}"
