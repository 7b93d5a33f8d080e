"""Independent oracles for cross-checking the library.

Everything here recomputes results by a deliberately different route than
the package: one-swap rewriting instead of the closed reordering formula,
plain-dict polynomial arithmetic instead of the canonicalized classes, and
exact point evaluation instead of symbolic identities.  The implementations
are kept dumb on purpose.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from weylmin.scalars import GaussRational, HbarPoly
from weylmin.weyl import WeylElement

Word = Tuple[str, ...]
Coeff = Dict[int, GaussRational]  # hbar degree -> Gaussian rational


def _acc(target: Coeff, source: Coeff, scale: GaussRational, shift: int = 0) -> None:
    for deg, c in source.items():
        key = deg + shift
        target[key] = target.get(key, GaussRational()) + c * scale


def _coeff_to_poly(coeff: Coeff) -> HbarPoly:
    return HbarPoly({deg: c for deg, c in coeff.items() if c})


_ONE = GaussRational(1)


def lambda_word_normal_order(l: int, m: int) -> Dict[Tuple[int, int], HbarPoly]:
    """Rewrite (Ls)^l L^m using only the single swap Ls L -> L Ls - 2h.

    Words are tuples over the letters "L" and "S" (for Lambda-star); the
    result maps (k, l) bidegrees to hbar-polynomial coefficients.
    """
    pending: Dict[Word, Coeff] = {("S",) * l + ("L",) * m: {0: _ONE}}
    done: Dict[Tuple[int, int], Coeff] = {}
    while pending:
        next_round: Dict[Word, Coeff] = {}
        for word, coeff in pending.items():
            idx = next(
                (i for i in range(len(word) - 1) if word[i : i + 2] == ("S", "L")),
                None,
            )
            if idx is None:
                k = word.count("L")
                _acc(done.setdefault((k, len(word) - k), {}), coeff, _ONE)
                continue
            swapped = word[:idx] + ("L", "S") + word[idx + 2 :]
            dropped = word[:idx] + word[idx + 2 :]
            _acc(next_round.setdefault(swapped, {}), coeff, _ONE)
            _acc(next_round.setdefault(dropped, {}), coeff, GaussRational(-2), shift=1)
        pending = next_round
    out = {kl: _coeff_to_poly(c) for kl, c in done.items()}
    return {kl: p for kl, p in out.items() if not p.is_zero()}


def uv_word_normal_order(word: Iterable[str]) -> Dict[Tuple[int, int], HbarPoly]:
    """Rewrite a U/V word using only the single swap V U -> U V - i h.

    Result maps (p, q) to the coefficient of U^p V^q.
    """
    start = tuple(word)
    assert all(ch in ("U", "V") for ch in start)
    pending: Dict[Word, Coeff] = {start: {0: _ONE}}
    done: Dict[Tuple[int, int], Coeff] = {}
    while pending:
        next_round: Dict[Word, Coeff] = {}
        for w, coeff in pending.items():
            idx = next(
                (i for i in range(len(w) - 1) if w[i : i + 2] == ("V", "U")), None
            )
            if idx is None:
                p = w.count("U")
                _acc(done.setdefault((p, len(w) - p), {}), coeff, _ONE)
                continue
            swapped = w[:idx] + ("U", "V") + w[idx + 2 :]
            dropped = w[:idx] + w[idx + 2 :]
            _acc(next_round.setdefault(swapped, {}), coeff, _ONE)
            _acc(next_round.setdefault(dropped, {}), coeff, GaussRational(0, -1), shift=1)
        pending = next_round
    out = {pq: _coeff_to_poly(c) for pq, c in done.items()}
    return {pq: p for pq, p in out.items() if not p.is_zero()}


def classical_point(a: WeylElement, u: Fraction, v: Fraction) -> GaussRational:
    """Evaluate the h -> 0 limit of a at the point (u, v), exactly.

    At h = 0 the generators commute and L evaluates to u + iv, so the
    limit is the sum of the h-free coefficients times (u+iv)^k (u-iv)^l.
    """
    z = GaussRational(u, v)
    zbar = GaussRational(u, -v)
    total = GaussRational()
    for (k, l), poly in a.terms:
        c0 = dict(poly.coeffs).get(0)
        if c0 is not None:
            total = total + c0 * z**k * zbar**l
    return total


def uv_dict_point(
    coeffs: Dict[Tuple[int, int], Fraction], u: Fraction, v: Fraction
) -> Fraction:
    return sum((c * u**p * v**q for (p, q), c in coeffs.items()), Fraction(0))


# -- dict-based polynomial arithmetic over HbarPoly coefficients -------------

PolyDict = Dict[int, HbarPoly]


def poly_dict(p) -> PolyDict:
    """Coefficient dict of a PolyLambda."""
    return {deg: c for deg, c in p.coeffs}


def pd_mul(a: PolyDict, b: PolyDict) -> PolyDict:
    out: PolyDict = {}
    for da, ca in a.items():
        for db, cb in b.items():
            key = da + db
            prod = ca * cb
            out[key] = out[key] + prod if key in out else prod
    return {d: c for d, c in out.items() if not c.is_zero()}


def pd_sub(a: PolyDict, b: PolyDict) -> PolyDict:
    out = dict(a)
    for d, c in b.items():
        out[d] = out[d] - c if d in out else -c
    return {d: c for d, c in out.items() if not c.is_zero()}


def pd_diff(a: PolyDict) -> PolyDict:
    return {d - 1: c * d for d, c in a.items() if d > 0}


def rat_derivative_matches(r, dr) -> bool:
    """Check dr == r' via the cross-multiplied quotient rule.

    (p/q)' = (p'q - pq')/q^2, so the claim dr = a/b is equivalent to
    a q^2 == (p'q - pq') b with plain dict arithmetic.
    """
    p, q = poly_dict(r.num), poly_dict(r.den)
    a, b = poly_dict(dr.num), poly_dict(dr.den)
    lhs = pd_mul(a, pd_mul(q, q))
    rhs = pd_mul(pd_sub(pd_mul(pd_diff(p), q), pd_mul(p, pd_diff(q))), b)
    return pd_sub(lhs, rhs) == {}


def rat_equal_crossmul(r1, r2) -> bool:
    p1, q1 = poly_dict(r1.num), poly_dict(r1.den)
    p2, q2 = poly_dict(r2.num), poly_dict(r2.den)
    return pd_sub(pd_mul(p1, q2), pd_mul(p2, q1)) == {}


# -- closed-form Fock matrix entries -----------------------------------------


def fock_exp_entry(lam: float, m: int, n: int, dagger: bool) -> complex:
    """Exact entry <m| e^{lam a} |n> (or a-dagger) from the ladder action."""
    if dagger:
        if m < n:
            return 0.0
        k = m - n
        return lam**k / math.factorial(k) * math.sqrt(
            math.factorial(m) / math.factorial(n)
        )
    if m > n:
        return 0.0
    k = n - m
    return lam**k / math.factorial(k) * math.sqrt(
        math.factorial(n) / math.factorial(m)
    )


# -- seeded random generators -------------------------------------------------


def random_gauss(rng, bound: int = 6) -> GaussRational:
    def frac() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return GaussRational(frac(), frac())


def random_weyl(rng, max_deg: int = 4, terms: int = 4, max_hbar: int = 1) -> WeylElement:
    out = WeylElement()
    for _ in range(terms):
        k = rng.randint(0, max_deg)
        l = rng.randint(0, max_deg - k)
        coeff = HbarPoly({rng.randint(0, max_hbar): random_gauss(rng)})
        out = out + WeylElement({(k, l): coeff})
    return out


def random_poly_lambda(rng, max_deg: int = 6, terms: int = 4):
    from weylmin.holomorphic import PolyLambda

    coeffs: Dict[int, HbarPoly] = {}
    for _ in range(terms):
        deg = rng.randint(0, max_deg)
        c = random_gauss(rng)
        poly = HbarPoly({0: c})
        coeffs[deg] = coeffs[deg] + poly if deg in coeffs else poly
    return PolyLambda(coeffs)


def random_rat(rng, num_deg: int = 4, den_deg: int = 2):
    from weylmin.holomorphic import RatLambda

    num = random_poly_lambda(rng, num_deg, 3)
    den = random_poly_lambda(rng, den_deg, 2)
    while den.is_zero():
        den = random_poly_lambda(rng, den_deg, 2)
    return RatLambda(num, den)
