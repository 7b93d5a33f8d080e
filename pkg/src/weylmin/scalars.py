"""Exact scalar arithmetic.

Three layers of coefficients, all exact:

* :class:`GaussRational` -- complex numbers a + b*i with rational parts,
  the base field for every coefficient in the package.
* :class:`HbarPoly` -- polynomials in the central hermitian parameter ``h``
  over GaussRational.  ``h`` is formal, so identities proved here hold for
  every numerical value of the parameter.
* :class:`HbarRat` -- quotients of two HbarPoly, used internally by the
  Lambda-rational calculus where a coefficient *field* is required.

Everything is immutable and hashable; equality is equality of canonical
forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]


def _frac(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True, init=False)
class GaussRational:
    """Exact complex number ``re + im*i`` with rational components.

    Fractions keep themselves in lowest terms with positive denominators,
    so instances are always canonical.
    """

    re: Fraction
    im: Fraction

    def __init__(self, re: Rational = 0, im: Rational = 0) -> None:
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    @staticmethod
    def coerce(x: "GaussLike") -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        return GaussRational(_frac(x))

    @staticmethod
    def _try(x: object) -> "GaussRational | None":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRational(x)
        return None

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __add__(self, other: "GaussLike") -> "GaussRational":
        o = GaussRational._try(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussLike") -> "GaussRational":
        o = GaussRational._try(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: "GaussLike") -> "GaussRational":
        o = GaussRational._try(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other: "GaussLike") -> "GaussRational":
        o = GaussRational._try(other)
        if o is None:
            return NotImplemented
        return GaussRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GaussRational":
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussRational(1)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "GaussRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero GaussRational")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other: "GaussLike") -> "GaussRational":
        o = GaussRational._try(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: "GaussLike") -> "GaussRational":
        o = GaussRational._try(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im >= 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}*i)"


GaussLike = Union[GaussRational, int, Fraction]

GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)
GR_HALF = GaussRational(Fraction(1, 2))


def _canon_hbar(items: Iterable[tuple[int, GaussRational]]) -> tuple[tuple[int, GaussRational], ...]:
    acc: dict[int, GaussRational] = {}
    for deg, c in items:
        if deg < 0:
            raise ValueError("negative h-degree")
        cur = acc.get(deg)
        acc[deg] = c if cur is None else cur + c
    return tuple(sorted((d, c) for d, c in acc.items() if not c.is_zero()))


@dataclass(frozen=True, init=False)
class HbarPoly:
    """Polynomial in the central parameter ``h`` over GaussRational.

    Stored as a sorted tuple of ``(degree, coefficient)`` pairs with no
    zero coefficients, which makes equality and hashing structural.
    """

    coeffs: tuple[tuple[int, GaussRational], ...]

    def __init__(
        self,
        coeffs: Union[Mapping[int, GaussLike], Iterable[tuple[int, GaussLike]]] = (),
    ) -> None:
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = coeffs
        canon = _canon_hbar((d, GaussRational.coerce(c)) for d, c in items)
        object.__setattr__(self, "coeffs", canon)

    @staticmethod
    def const(c: GaussLike) -> "HbarPoly":
        return HbarPoly({0: GaussRational.coerce(c)})

    @staticmethod
    def hbar(deg: int = 1, c: GaussLike = 1) -> "HbarPoly":
        return HbarPoly({deg: GaussRational.coerce(c)})

    @staticmethod
    def coerce(x: "HbarLike") -> "HbarPoly":
        if isinstance(x, HbarPoly):
            return x
        return HbarPoly.const(GaussRational.coerce(x))

    @staticmethod
    def _try(x: object) -> "HbarPoly | None":
        if isinstance(x, HbarPoly):
            return x
        if isinstance(x, (GaussRational, int, Fraction)):
            return HbarPoly.const(GaussRational.coerce(x))
        return None

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree in h; -1 for the zero polynomial."""
        return self.coeffs[-1][0] if self.coeffs else -1

    def leading(self) -> GaussRational:
        if not self.coeffs:
            return GR_ZERO
        return self.coeffs[-1][1]

    def constant(self) -> GaussRational:
        """The h-degree-zero coefficient."""
        for d, c in self.coeffs:
            if d == 0:
                return c
        return GR_ZERO

    def conjugate(self) -> "HbarPoly":
        """Complex-conjugate coefficients; h itself is hermitian and fixed."""
        return HbarPoly((d, c.conjugate()) for d, c in self.coeffs)

    def shift(self, j: int) -> "HbarPoly":
        """Multiply by h**j (j may be negative if every degree allows it)."""
        if j == 0:
            return self
        if j < 0 and any(d + j < 0 for d, _ in self.coeffs):
            raise ValueError("not divisible by the requested power of h")
        return HbarPoly((d + j, c) for d, c in self.coeffs)

    def __add__(self, other: "HbarLike") -> "HbarPoly":
        o = HbarPoly._try(other)
        if o is None:
            return NotImplemented
        return HbarPoly(self.coeffs + o.coeffs)

    __radd__ = __add__

    def __sub__(self, other: "HbarLike") -> "HbarPoly":
        o = HbarPoly._try(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: "HbarLike") -> "HbarPoly":
        o = HbarPoly._try(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "HbarPoly":
        return HbarPoly((d, -c) for d, c in self.coeffs)

    def __mul__(self, other: "HbarScalarLike") -> "HbarPoly":
        o = HbarPoly._try(other)
        if o is None:
            return NotImplemented
        out: list[tuple[int, GaussRational]] = []
        for d1, c1 in self.coeffs:
            for d2, c2 in o.coeffs:
                out.append((d1 + d2, c1 * c2))
        return HbarPoly(out)

    def __rmul__(self, other: "HbarScalarLike") -> "HbarPoly":
        return self * other

    def evaluate(self, hbar: float) -> complex:
        """Numerical value at a concrete hbar (used by the Fock layer)."""
        return sum((complex(c) * hbar**d for d, c in self.coeffs), 0j)

    def divmod_poly(self, other: "HbarPoly") -> tuple["HbarPoly", "HbarPoly"]:
        """Euclidean division; the coefficient field makes this exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero HbarPoly")
        rem = dict(self.coeffs)
        quo: dict[int, GaussRational] = {}
        db = other.degree()
        lb = other.leading()
        while rem:
            dr = max(rem)
            if dr < db:
                break
            q = rem[dr] / lb
            quo[dr - db] = q
            for d, c in other.coeffs:
                nd = d + dr - db
                nc = rem.get(nd, GR_ZERO) - c * q
                if nc.is_zero():
                    rem.pop(nd, None)
                else:
                    rem[nd] = nc
        return HbarPoly(quo), HbarPoly(rem)

    def monic(self) -> "HbarPoly":
        if self.is_zero():
            return self
        return self * self.leading().inverse()

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in self.coeffs:
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append(f"{c}*h")
            else:
                parts.append(f"{c}*h^{d}")
        return " + ".join(parts)


HbarLike = Union[HbarPoly, GaussRational, int, Fraction]
HbarScalarLike = HbarLike

HP_ZERO = HbarPoly()
HP_ONE = HbarPoly.const(1)
HP_HBAR = HbarPoly.hbar()


def hp_gcd(a: HbarPoly, b: HbarPoly) -> HbarPoly:
    """Monic gcd in the Euclidean ring of h-polynomials."""
    while not b.is_zero():
        a, b = b, a.divmod_poly(b)[1]
    return a.monic()


def hp_lcm(a: HbarPoly, b: HbarPoly) -> HbarPoly:
    if a.is_zero() or b.is_zero():
        return HP_ZERO
    g = hp_gcd(a, b)
    return (a * b).divmod_poly(g)[0].monic()


def hp_exact_div(a: HbarPoly, b: HbarPoly) -> HbarPoly:
    q, r = a.divmod_poly(b)
    if not r.is_zero():
        raise ValueError("inexact HbarPoly division")
    return q


@dataclass(frozen=True, init=False)
class HbarRat:
    """Quotient of h-polynomials, reduced, with a monic denominator.

    This is the coefficient field backing gcd, squarefree factorization
    and Hermite reduction in the Lambda-rational layer.
    """

    num: HbarPoly
    den: HbarPoly

    def __init__(self, num: HbarLike, den: HbarLike = HP_ONE) -> None:
        n = HbarPoly.coerce(num)
        d = HbarPoly.coerce(den)
        if d.is_zero():
            raise ZeroDivisionError("zero denominator in HbarRat")
        if n.is_zero():
            n, d = HP_ZERO, HP_ONE
        else:
            g = hp_gcd(n, d)
            if g.degree() > 0:
                n = hp_exact_div(n, g)
                d = hp_exact_div(d, g)
            lc = d.leading().inverse()
            n, d = n * lc, d * lc
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @staticmethod
    def coerce(x: "HbarRatLike") -> "HbarRat":
        if isinstance(x, HbarRat):
            return x
        return HbarRat(HbarPoly.coerce(x))

    @staticmethod
    def _try(x: object) -> "HbarRat | None":
        if isinstance(x, HbarRat):
            return x
        if isinstance(x, (HbarPoly, GaussRational, int, Fraction)):
            return HbarRat(HbarPoly.coerce(x))
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == HP_ONE

    def as_poly(self) -> HbarPoly:
        if not self.is_polynomial():
            raise ValueError("HbarRat has a nontrivial h-denominator")
        return self.num

    def __add__(self, other: "HbarRatLike") -> "HbarRat":
        o = HbarRat._try(other)
        if o is None:
            return NotImplemented
        return HbarRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other: "HbarRatLike") -> "HbarRat":
        o = HbarRat._try(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: "HbarRatLike") -> "HbarRat":
        o = HbarRat._try(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "HbarRat":
        return HbarRat(-self.num, self.den)

    def __mul__(self, other: "HbarRatLike") -> "HbarRat":
        o = HbarRat._try(other)
        if o is None:
            return NotImplemented
        return HbarRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "HbarRat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero HbarRat")
        return HbarRat(self.den, self.num)

    def __truediv__(self, other: "HbarRatLike") -> "HbarRat":
        o = HbarRat._try(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: "HbarRatLike") -> "HbarRat":
        o = HbarRat._try(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


HbarRatLike = Union[HbarRat, HbarPoly, GaussRational, int, Fraction]

HR_ZERO = HbarRat(HP_ZERO)
HR_ONE = HbarRat(HP_ONE)
