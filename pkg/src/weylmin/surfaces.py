"""Noncommutative minimal surfaces from Weierstrass data.

A surface is a tuple of hermitian algebra elements ``X^i``, each of the
form ``offset + Re(P_i)`` with ``P_i`` a holomorphic polynomial in L.
The constructors integrate an isotropic Lambda-rational triple

    Phi = (f(1 - g^2)/2, i f(1 + g^2)/2, f g)

and take real parts; isotropy of Phi makes the result conformal and
harmonicity is automatic because the components are real parts of
holomorphic elements.  Exactness is preserved end to end: the verifier
checks hermiticity, ``lap X^i = 0``, ``E = G`` and ``F = 0`` as algebra
identities, not numerically.

Three generating conventions are supported and kept mutually consistent:

* ``surface_from_fg(f, g)`` integrates Phi as is.
* ``surface_from_F(F)`` uses the triple ``((1 - L^2)F, i(1 + L^2)F, 2LF)``
  (Gauss map g = L) and divides the primitives by nu = (d+2)(d+3),
  d = deg F.  The scaling keeps the classical shapes of the resulting
  family (Enneper for constant F and its higher-order relatives) and is
  invisible to every minimality or normality property.
* ``surface_from_Ftilde(Ft)`` applies the integrated-by-parts form

      Omega1 = (1 - L^2) Ft'' + 2L Ft' - 2Ft
      Omega2 = i(1 + L^2) Ft'' - 2iL Ft' + 2i Ft
      Omega3 = 2L Ft'' - 2 Ft'

  drops constant terms, and divides by nu = n(n - 1), n = deg Ft.  With
  these choices it agrees exactly with ``surface_from_F`` applied to the
  third derivative of Ft.

``surface_from_pair`` builds the four-component analogue carrying both
real and imaginary parts of two polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .scalars import GR_I, GaussRational, HbarPoly
from .holomorphic import (
    NotIntegrableError,
    PhiTriple,
    PolyLambda,
    RatLambda,
    phi_from_fg,
    poly_to_weyl,
)
from .weyl import Direction, WeylElement

__all__ = [
    "NonPolynomialPrimitiveError",
    "Provenance",
    "Surface",
    "FirstFundamental",
    "VerificationReport",
    "bilinear",
    "first_fundamental",
    "verify_minimal",
    "phi_components",
    "surface_from_fg",
    "surface_from_F",
    "surface_from_Ftilde",
    "surface_from_pair",
    "enneper",
    "conjugate_surface",
    "normal_element",
    "check_normal",
    "mean_curvature_h0",
]


class NonPolynomialPrimitiveError(ValueError):
    """A primitive exists but has a denominator, so Re() has no meaning here."""


ParamValue = Union[RatLambda, PolyLambda]


@dataclass(frozen=True)
class Provenance:
    """Generating data of a surface.

    ``kind`` is one of fg, F, Ftilde, pair, conjugate or raw.  ``params``
    records the constructor inputs by name; ``primitives`` holds the
    holomorphic polynomials P_i with X^i = offset_i + Re(P_i), which is
    what conjugation consumes.  Raw surfaces carry no primitives.
    """

    kind: str
    params: tuple[tuple[str, ParamValue], ...] = ()
    primitives: tuple[PolyLambda, ...] = ()


@dataclass(frozen=True)
class Surface:
    """An immutable tuple of hermitian components with rational offsets."""

    components: tuple[WeylElement, ...]
    offsets: tuple[Fraction, ...]
    provenance: Provenance

    def __post_init__(self) -> None:
        if len(self.components) != len(self.offsets):
            raise ValueError("offsets and components must have equal length")

    @property
    def n(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class FirstFundamental:
    """Coefficients E, F, G of the first fundamental form."""

    E: WeylElement
    F: WeylElement
    G: WeylElement


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the exact minimality checks, with residual witnesses."""

    hermitian: tuple[bool, ...]
    harmonic: tuple[bool, ...]
    conformal: bool
    witnesses: tuple[tuple[str, WeylElement], ...]

    @property
    def passes(self) -> bool:
        return all(self.hermitian) and all(self.harmonic) and self.conformal


def _offsets_tuple(n: int, offsets: Union[Sequence[Union[int, Fraction]], None]) -> tuple[Fraction, ...]:
    if offsets is None:
        return (Fraction(0),) * n
    out = []
    for x in offsets:
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise ValueError("offsets must be rational numbers")
        out.append(Fraction(x))
    if len(out) != n:
        raise ValueError(f"expected {n} offsets, got {len(out)}")
    return tuple(out)


def bilinear(xs: Sequence[WeylElement], ys: Sequence[WeylElement]) -> WeylElement:
    """The symmetrized form <X, Y> = (1/2) sum (X^i Y^i + Y^i X^i)."""
    if len(xs) != len(ys):
        raise ValueError("vectors must have equal length")
    total = WeylElement()
    for x, y in zip(xs, ys):
        total = total + (x * y + y * x)
    return total.scale(Fraction(1, 2))


def _partials(s: Surface, direction: Direction) -> tuple[WeylElement, ...]:
    return tuple(c.derive(direction) for c in s.components)


def first_fundamental(s: Surface) -> FirstFundamental:
    xu = _partials(s, Direction.U)
    xv = _partials(s, Direction.V)
    return FirstFundamental(
        E=bilinear(xu, xu), F=bilinear(xu, xv), G=bilinear(xv, xv)
    )


def verify_minimal(s: Surface) -> VerificationReport:
    """Exact hermiticity, harmonicity and conformality checks."""
    hermitian = []
    harmonic = []
    witnesses: list[tuple[str, WeylElement]] = []
    for idx, c in enumerate(s.components, start=1):
        h = c.is_hermitian()
        hermitian.append(h)
        if not h:
            witnesses.append((f"hermitian:X{idx}", c - c.star()))
        lap = c.laplace()
        harmonic.append(lap.is_zero())
        if not lap.is_zero():
            witnesses.append((f"harmonic:X{idx}", lap))
    ff = first_fundamental(s)
    eg = ff.E - ff.G
    conformal = eg.is_zero() and ff.F.is_zero()
    if not eg.is_zero():
        witnesses.append(("conformal:E-G", eg))
    if not ff.F.is_zero():
        witnesses.append(("conformal:F", ff.F))
    return VerificationReport(
        hermitian=tuple(hermitian),
        harmonic=tuple(harmonic),
        conformal=conformal,
        witnesses=tuple(witnesses),
    )


def phi_components(s: Surface) -> tuple[WeylElement, ...]:
    """The holomorphic derivative components 2 d X^i."""
    return tuple(c.derive(Direction.D).scale(2) for c in s.components)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def _integrate_component(c: RatLambda, label: str) -> PolyLambda:
    try:
        prim = c.primitive()
    except NotIntegrableError as exc:
        raise NotIntegrableError(f"component {label}: {exc}") from exc
    if not prim.is_polynomial():
        raise NonPolynomialPrimitiveError(
            f"component {label}: primitive is rational, not polynomial; "
            "only polynomial representations are supported"
        )
    return prim.as_poly()


def _surface_from_primitives(
    prims: Sequence[PolyLambda],
    offsets: tuple[Fraction, ...],
    provenance: Provenance,
) -> Surface:
    comps = []
    for off, p in zip(offsets, prims):
        comps.append(WeylElement.coerce(off) + poly_to_weyl(p).real_part())
    return Surface(tuple(comps), offsets, provenance)


def surface_from_fg(
    f: RatLambda,
    g: RatLambda,
    offsets: Union[Sequence[Union[int, Fraction]], None] = None,
) -> Surface:
    """Integrate the Weierstrass triple of (f, g) and take real parts."""
    f = RatLambda.coerce(f)
    g = RatLambda.coerce(g)
    offs = _offsets_tuple(3, offsets)
    phi = phi_from_fg(f, g)
    prims = tuple(
        _integrate_component(c, f"Phi{idx}")
        for idx, c in enumerate(phi.components, start=1)
    )
    prov = Provenance("fg", (("f", f), ("g", g)), prims)
    return _surface_from_primitives(prims, offs, prov)


def _nu_from_degree(d: int) -> Fraction:
    nu = (d + 2) * (d + 3)
    return Fraction(nu) if nu > 0 else Fraction(1)


def surface_from_F(
    F: RatLambda,
    offsets: Union[Sequence[Union[int, Fraction]], None] = None,
) -> Surface:
    """The Gauss-map-L family: integrate ((1-L^2)F, i(1+L^2)F, 2LF) / nu."""
    F = RatLambda.coerce(F)
    offs = _offsets_tuple(3, offsets)
    l2 = RatLambda.from_poly(PolyLambda({2: 1}))
    lam = RatLambda.from_poly(PolyLambda({1: 1}))
    one = RatLambda.from_poly(PolyLambda.const(1))
    phi = PhiTriple.of(
        (one - l2) * F,
        (one + l2) * F * GR_I,
        lam * F * 2,
    )
    nu = _nu_from_degree(F.num.degree() - F.den.degree())
    prims = tuple(
        _integrate_component(c, f"Phi{idx}").scale(Fraction(1, 1) / nu)
        for idx, c in enumerate(phi.components, start=1)
    )
    prov = Provenance("F", (("F", F),), prims)
    return _surface_from_primitives(prims, offs, prov)


def surface_from_Ftilde(
    Ft: PolyLambda,
    offsets: Union[Sequence[Union[int, Fraction]], None] = None,
) -> Surface:
    """Integrated-by-parts construction from a polynomial potential."""
    Ft = PolyLambda.coerce(Ft)
    offs = _offsets_tuple(3, offsets)
    d1 = Ft.derivative()
    d2 = d1.derivative()
    one = PolyLambda.const(1)
    lam = PolyLambda({1: 1})
    l2 = PolyLambda({2: 1})
    omega = (
        (one - l2) * d2 + lam * d1 * 2 - Ft * 2,
        ((one + l2) * d2 - lam * d1 * 2 + Ft * 2).scale(GR_I),
        lam * d2 * 2 - d1 * 2,
    )
    n = Ft.degree()
    nu = Fraction(n * (n - 1)) if n >= 2 else Fraction(1)
    prims = tuple(
        PolyLambda((dg, c) for dg, c in o.coeffs if dg > 0).scale(Fraction(1, 1) / nu)
        for o in omega
    )
    prov = Provenance("Ftilde", (("Ftilde", Ft),), prims)
    return _surface_from_primitives(prims, offs, prov)


def surface_from_pair(
    f: PolyLambda,
    g: PolyLambda,
    offsets: Union[Sequence[Union[int, Fraction]], None] = None,
) -> Surface:
    """Four components (Re f, Im f, Re g, Im g) of two polynomials in L."""
    f = PolyLambda.coerce(f)
    g = PolyLambda.coerce(g)
    offs = _offsets_tuple(4, offsets)
    minus_i = GaussRational(0, -1)
    prims = (f, f.scale(minus_i), g, g.scale(minus_i))
    prov = Provenance("pair", (("f", f), ("g", g)), prims)
    return _surface_from_primitives(prims, offs, prov)


def enneper(
    n: int = 1,
    offsets: Union[Sequence[Union[int, Fraction]], None] = None,
) -> Surface:
    """The degree-n Enneper surface, surface_from_fg(2, L^n)."""
    if n < 1:
        raise ValueError("enneper requires n >= 1")
    return surface_from_fg(
        RatLambda.from_poly(PolyLambda.const(2)),
        RatLambda.from_poly(PolyLambda({n: 1})),
        offsets,
    )


def conjugate_surface(s: Surface) -> Surface:
    """The conjugate family member: X~^i = Im(P_i), offsets reset to zero.

    Satisfies d_u X = d_v X~ and d_v X = -d_u X~ exactly.  Applying it
    twice gives -X (up to offsets).  Raw surfaces carry no primitives and
    are rejected.
    """
    prov = s.provenance
    if not prov.primitives:
        raise ValueError(
            f"cannot conjugate a surface of kind {prov.kind!r}: no primitives recorded"
        )
    comps = tuple(poly_to_weyl(p).imag_part() for p in prov.primitives)
    new_prims = tuple(p.scale(GaussRational(0, -1)) for p in prov.primitives)
    offs = (Fraction(0),) * len(comps)
    return Surface(comps, offs, Provenance("conjugate", prov.params, new_prims))


# ---------------------------------------------------------------------------
# Normal and mean curvature
# ---------------------------------------------------------------------------


def normal_element() -> tuple[WeylElement, WeylElement, WeylElement]:
    """The Gauss-map normal (L + Ls, -i(L - Ls), L Ls - h - 1) for g = L."""
    n3 = WeylElement(
        {
            (1, 1): 1,
            (0, 0): HbarPoly({0: -1, 1: -1}),
        }
    )
    return (
        WeylElement({(1, 0): 1, (0, 1): 1}),
        WeylElement({(1, 0): GaussRational(0, -1), (0, 1): GaussRational(0, 1)}),
        n3,
    )


def check_normal(s: Surface, n: Sequence[WeylElement]) -> bool:
    """Whether <d_u X, N> and <d_v X, N> both vanish exactly."""
    if len(n) != s.n:
        raise ValueError("normal must have one component per surface component")
    xu = _partials(s, Direction.U)
    xv = _partials(s, Direction.V)
    return bilinear(xu, tuple(n)).is_zero() and bilinear(xv, tuple(n)).is_zero()


def mean_curvature_h0(s: Surface, n: Sequence[WeylElement]) -> WeylElement:
    """H0 = -(1/2)(<d_u X, d_u N> + <d_v X, d_v N>); zero for minimal data."""
    if len(n) != s.n:
        raise ValueError("normal must have one component per surface component")
    xu = _partials(s, Direction.U)
    xv = _partials(s, Direction.V)
    nu = tuple(c.derive(Direction.U) for c in n)
    nv = tuple(c.derive(Direction.V) for c in n)
    return (bilinear(xu, nu) + bilinear(xv, nv)).scale(Fraction(-1, 2))
