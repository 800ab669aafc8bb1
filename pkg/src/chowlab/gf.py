"""Small finite fields GF(p^k), q <= 16, with elements encoded as integers.

An element of GF(p^k) is the integer whose base-p digits are the coefficients
of its residue polynomial modulo a fixed irreducible polynomial.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import UnsupportedField

# monic irreducible polynomials, low coefficient first, leading 1 omitted
_IRREDUCIBLE = {
    4: (2, (1, 1)),  # x^2 + x + 1
    8: (2, (1, 1, 0)),  # x^3 + x + 1
    9: (3, (1, 0)),  # x^2 + 1
    16: (2, (1, 1, 0, 0)),  # x^4 + x + 1
}
_PRIMES = (2, 3, 5, 7, 11, 13)


def field_params(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise UnsupportedField."""
    if q in _PRIMES:
        return q, 1
    if q in _IRREDUCIBLE:
        p, poly = _IRREDUCIBLE[q]
        return p, len(poly)
    raise UnsupportedField(f"q={q} is not a supported prime power (need q <= 16)")


class GF:
    def __init__(self, q: int):
        self.p, self.k = field_params(q)
        self.q = q
        self._mul = _mul_table(q)
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def add(self, a: int, b: int) -> int:
        p, out, place = self.p, 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a, b, place = a // p, b // p, place * p
        return out

    def neg(self, a: int) -> int:
        p, out, place = self.p, 0, 1
        while a:
            out += ((-(a % p)) % p) * place
            a, place = a // p, place * p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(q)")
        return self._inv[a]

    def rank(self, rows: list[list[int]]) -> int:
        """Rank of a matrix over the field, by row reduction."""
        m = [list(r) for r in rows]
        if not m:
            return 0
        ncols = len(m[0])
        rank = 0
        for col in range(ncols):
            piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = self.inv(m[rank][col])
            m[rank] = [self.mul(inv, v) for v in m[rank]]
            for r in range(len(m)):
                if r != rank and m[r][col]:
                    f = m[r][col]
                    m[r] = [self.sub(v, self.mul(f, w)) for v, w in zip(m[r], m[rank])]
            rank += 1
            if rank == len(m):
                break
        return rank


@lru_cache(maxsize=None)
def _mul_table(q: int) -> tuple[tuple[int, ...], ...]:
    p, k = field_params(q)
    if k == 1:
        return tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
    _, red = _IRREDUCIBLE[q]

    def digits(a):
        return [(a // p**i) % p for i in range(k)]

    def encode(ds):
        return sum(d * p**i for i, d in enumerate(ds))

    table = []
    for a in range(q):
        da = digits(a)
        row = []
        for b in range(q):
            db = digits(b)
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(da):
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
            # x^k = -(red) reduction, highest degree first
            for deg in range(2 * k - 2, k - 1, -1):
                c = prod[deg]
                if c:
                    prod[deg] = 0
                    for i, r in enumerate(red):
                        prod[deg - k + i] = (prod[deg - k + i] - c * r) % p
            row.append(encode(prod[:k]))
        table.append(tuple(row))
    return tuple(table)
