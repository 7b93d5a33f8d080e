"""Commutative shadow of the algebra: the limit h -> 0.

In the limit the generators commute, L becomes u + i v and Ls becomes
u - i v, so every element degenerates to an ordinary polynomial in two
real variables.  :class:`UVPoly` is that polynomial ring (coefficients
still GaussRational; hermitian elements land in the real subring), and
:func:`classical_limit` performs the substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .scalars import GaussLike, GaussRational
from .weyl import WeylElement


def _canon(
    items: Iterable[tuple[tuple[int, int], GaussRational]],
) -> tuple[tuple[tuple[int, int], GaussRational], ...]:
    acc: dict[tuple[int, int], GaussRational] = {}
    for pq, c in items:
        cur = acc.get(pq)
        acc[pq] = c if cur is None else cur + c
    return tuple(
        sorted(
            ((pq, c) for pq, c in acc.items() if not c.is_zero()),
            key=lambda t: (t[0][0] + t[0][1], t[0][0]),
        )
    )


@dataclass(frozen=True, init=False)
class UVPoly:
    """Commutative polynomial in the real coordinates (u, v)."""

    terms: tuple[tuple[tuple[int, int], GaussRational], ...]

    def __init__(
        self,
        terms: Union[
            Mapping[tuple[int, int], GaussLike],
            Iterable[tuple[tuple[int, int], GaussLike]],
        ] = (),
    ) -> None:
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        object.__setattr__(
            self, "terms", _canon((pq, GaussRational.coerce(c)) for pq, c in items)
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "UVPoly") -> "UVPoly":
        return UVPoly(self.terms + other.terms)

    def __sub__(self, other: "UVPoly") -> "UVPoly":
        return self + (-other)

    def __neg__(self) -> "UVPoly":
        return UVPoly((pq, -c) for pq, c in self.terms)

    def __mul__(self, other: "UVPoly") -> "UVPoly":
        out = []
        for (p1, q1), c1 in self.terms:
            for (p2, q2), c2 in other.terms:
                out.append(((p1 + p2, q1 + q2), c1 * c2))
        return UVPoly(out)

    def scale(self, c: GaussLike) -> "UVPoly":
        co = GaussRational.coerce(c)
        return UVPoly((pq, cc * co) for pq, cc in self.terms)

    def __pow__(self, n: int) -> "UVPoly":
        out = UV_ONE
        for _ in range(n):
            out = out * self
        return out

    def diff(self, var: str) -> "UVPoly":
        """Partial derivative with respect to "u" or "v"."""
        if var == "u":
            return UVPoly(((p - 1, q), c * p) for (p, q), c in self.terms if p > 0)
        if var == "v":
            return UVPoly(((p, q - 1), c * q) for (p, q), c in self.terms if q > 0)
        raise ValueError(f"variable must be 'u' or 'v', got {var!r}")

    def is_real(self) -> bool:
        return all(not c.im for _, c in self.terms)


UV_ZERO = UVPoly()
UV_ONE = UVPoly({(0, 0): 1})
UV_U = UVPoly({(1, 0): 1})
UV_V = UVPoly({(0, 1): 1})

_Z_PLUS = UVPoly({(1, 0): GaussRational(1), (0, 1): GaussRational(0, 1)})
_Z_MINUS = UVPoly({(1, 0): GaussRational(1), (0, 1): GaussRational(0, -1)})


def classical_limit(a: WeylElement) -> UVPoly:
    """Send h -> 0 and substitute L -> u + iv, Ls -> u - iv.

    Only the h-degree-zero part of each coefficient survives.
    """
    out = UV_ZERO
    for (k, l), c in a.terms:
        c0 = c.constant()
        if c0.is_zero():
            continue
        out = out + (_Z_PLUS**k * _Z_MINUS**l).scale(c0)
    return out


def classical_limit_fraction(a: WeylElement) -> dict[tuple[int, int], Fraction]:
    """Real classical limit as a plain dict, for hermitian elements.

    Raises if any surviving coefficient has an imaginary part.
    """
    p = classical_limit(a)
    if not p.is_real():
        raise ValueError("classical limit is not real")
    return {pq: c.re for pq, c in p.terms}
