"""Exact univariate polynomials and truncated power series over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UniPoly:
    """Polynomial with exact rational coefficients, ``coeffs[i]`` is the x^i term."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def interpolate(cls, points: Sequence[tuple]) -> "UniPoly":
        """Lagrange interpolation through ``(x, y)`` pairs with distinct x."""
        result = cls()
        for i, (xi, yi) in enumerate(points):
            if yi == 0:
                continue
            basis = cls([1])
            denom = Fraction(1)
            for j, (xj, _) in enumerate(points):
                if j != i:
                    basis = basis * cls([-xj, 1])
                    denom *= xi - xj
            result = result + basis * (_frac(yi) / denom)
        return result

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return UniPoly([other]) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = _frac(other)
            return UniPoly(a * c for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = UniPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        return UniPoly([0] * k + list(self.coeffs))

    def compose_linear(self, a, b) -> "UniPoly":
        """Return p(a*x + b)."""
        lin = UniPoly([b, a])
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def is_palindromic(self, d: int | None = None) -> bool:
        d = self.degree if d is None else d
        return all(self[k] == self[d - k] for k in range(d + 1)) and self.degree <= d

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == UniPoly(other).coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "UniPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(f"{c}{'*' if mono else ''}{mono}")
        return "UniPoly(" + " + ".join(terms) + ")"


class TruncatedSeries:
    """Power series known modulo z^(order+1); arithmetic never invents higher terms."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        cs = [_frac(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order = order

    def __getitem__(self, i: int) -> Fraction:
        if i > self.order:
            raise IndexError(f"coefficient z^{i} beyond truncation order {self.order}")
        return self.coeffs[i]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries((self.coeffs[i] + other.coeffs[i] for i in range(order + 1)), order)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = _frac(other)
            return TruncatedSeries((a * c for a in self.coeffs), self.order)
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            raise ValueError("negative exponent")
        result = TruncatedSeries([1], self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(map(str, self.coeffs))}, order={self.order})"
