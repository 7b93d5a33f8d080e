"""Truncated Fock-space representation and the catenoid residual check.

The algebra acts on the harmonic-oscillator basis |0>, ..., |dim-1> via
the annihilation matrix ``a|n> = sqrt(n)|n-1>`` and its transpose, with

    L = sqrt(2 hbar) a,      U = sqrt(hbar/2)(a + a^T),
    Ls = sqrt(2 hbar) a^T,   V = i sqrt(hbar/2)(a^T - a).

Truncation is only trustworthy in a window of low columns: products push
weight toward the cut at dim-1, so every reported quantity is measured on
columns ``n <= safe_rows`` (default dim // 3).

The catenoid components are built from exponentials of L and Ls.  For
``exp(c a)`` the column series is exactly finite (k <= n); for
``exp(c a^T)`` the series is cut at row dim-1 and the discarded tail at
column n admits the explicit bound

    sum_{k > dim-1-n} |c|^k sqrt((n+k)!/n!) / k!,

which :func:`exp_tail_bound` computes and residual reports include.

Residuals in :func:`residual_report` are evaluated with extended-precision
matrices (long double) so that the truncation error, not double-precision
roundoff, dominates and keeps shrinking as dim grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .weyl import Direction, WeylElement

__all__ = [
    "FockConfig",
    "ladder",
    "weyl_matrix",
    "exp_lambda",
    "exp_tail_bound",
    "catenoid",
    "derive_matrix",
    "laplace_matrix",
    "residual_report",
]

_TERM_CUTOFF = 1e-18


@dataclass(frozen=True)
class FockConfig:
    """Truncation parameters: matrix size, hbar value, safe window."""

    dim: int
    hbar: float = 1.0
    safe_rows: Optional[int] = None

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError("dim must be at least 2")
        if not (self.hbar > 0):
            raise ValueError("hbar must be positive")
        if self.safe_rows is None:
            object.__setattr__(self, "safe_rows", self.dim // 3)
        if not (0 < self.safe_rows < self.dim):
            raise ValueError("safe_rows must satisfy 0 < safe_rows < dim")

    @property
    def lam_scale(self) -> float:
        """|c| with L = c a, namely sqrt(2 hbar)."""
        return math.sqrt(2.0 * self.hbar)


def _real_type(dtype):
    return np.zeros(0, dtype=dtype).real.dtype.type


def ladder(config: FockConfig, dtype=np.complex128) -> tuple[np.ndarray, np.ndarray]:
    """The annihilation matrix and its transpose.

    Square roots are taken in the real precision matching dtype, so
    long-double runs are long-double throughout.
    """
    rt = _real_type(dtype)
    root = np.sqrt(np.arange(1, config.dim, dtype=rt))
    a = np.diag(root.astype(dtype), k=1)
    return a, a.T.copy()


def _generators(config: FockConfig, dtype):
    a, ad = ladder(config, dtype)
    rt = _real_type(dtype)
    s = np.sqrt(rt(2.0) * rt(config.hbar))
    lam = s * a
    lam_star = s * ad
    u = (lam + lam_star) / rt(2.0)
    v = -1j * (lam - lam_star) / rt(2.0)
    return lam, lam_star, u, v


def weyl_matrix(a: WeylElement, config: FockConfig, dtype=np.complex128) -> np.ndarray:
    """Represent a normal-ordered element as a dim x dim matrix."""
    lam, lam_star, _, _ = _generators(config, dtype)
    dim = config.dim
    max_k = max((k for (k, _), _ in a.terms), default=0)
    max_l = max((l for (_, l), _ in a.terms), default=0)
    pow_l = [np.eye(dim, dtype=dtype)]
    for _ in range(max_k):
        pow_l.append(pow_l[-1] @ lam)
    pow_s = [np.eye(dim, dtype=dtype)]
    for _ in range(max_l):
        pow_s.append(pow_s[-1] @ lam_star)
    out = np.zeros((dim, dim), dtype=dtype)
    for (k, l), c in a.terms:
        out += c.evaluate(config.hbar) * (pow_l[k] @ pow_s[l])
    return out


def exp_lambda(
    config: FockConfig,
    sign: int = 1,
    dagger: bool = False,
    dtype=np.complex128,
) -> np.ndarray:
    """exp(sign * L) or exp(sign * Ls) on the truncated space.

    Entries are generated column by column from the scalar recurrences

        exp(c a)  [n-k, n] = c^k/k! sqrt(n!/(n-k)!)
        exp(c a^T)[n+k, n] = c^k/k! sqrt((n+k)!/n!)

    For the annihilation exponential the series terminates at k = n, so
    the matrix is exact; for the creation exponential rows stop at dim-1
    and the discarded tail is bounded by :func:`exp_tail_bound`.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    dim = config.dim
    rt = _real_type(dtype)
    c = rt(sign) * np.sqrt(rt(2.0) * rt(config.hbar))
    out = np.zeros((dim, dim), dtype=dtype)
    for n in range(dim):
        out[n, n] += rt(1.0)
        t = rt(1.0)
        if dagger:
            for k in range(1, dim - n):
                t = t * c * np.sqrt(rt(n + k)) / rt(k)
                out[n + k, n] += t
                if abs(t) < _TERM_CUTOFF:
                    break
        else:
            for k in range(1, n + 1):
                t = t * c * np.sqrt(rt(n - k + 1)) / rt(k)
                out[n - k, n] += t
                if abs(t) < _TERM_CUTOFF:
                    break
    return out


def exp_tail_bound(config: FockConfig) -> float:
    """Largest discarded-tail bound for exp(+-Ls) over the safe window."""
    lam = config.lam_scale
    worst = 0.0
    for n in range(config.safe_rows + 1):
        cut = config.dim - n  # first omitted k
        t = 1.0
        total = 0.0
        for k in range(1, cut + 400):
            t *= lam * math.sqrt(n + k) / k
            if k >= cut:
                total += t
                if t < total * 1e-20:
                    break
        worst = max(worst, total)
    return worst


def catenoid(config: FockConfig, dtype=np.complex128) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The catenoid components on the truncated Fock space.

    X1 = (e^L + e^-L + e^Ls + e^-Ls)/4
    X2 = -(i/4)(e^L - e^-L - e^Ls + e^-Ls)
    X3 = U
    """
    ep = exp_lambda(config, 1, False, dtype)
    em = exp_lambda(config, -1, False, dtype)
    epd = exp_lambda(config, 1, True, dtype)
    emd = exp_lambda(config, -1, True, dtype)
    x1 = 0.25 * (ep + em + epd + emd)
    x2 = -0.25j * (ep - em - epd + emd)
    _, _, u, _ = _generators(config, dtype)
    return x1, x2, u


def derive_matrix(
    m: np.ndarray, direction: Direction, config: FockConfig
) -> np.ndarray:
    """The derivations as commutators, e.g. d_u M = (1/i hbar)[M, V]."""
    dtype = m.dtype
    lam, lam_star, u, v = _generators(config, dtype)
    h = config.hbar
    if direction is Direction.U:
        return (m @ v - v @ m) / (1j * h)
    if direction is Direction.V:
        return -(m @ u - u @ m) / (1j * h)
    if direction is Direction.D:
        return (m @ lam_star - lam_star @ m) / (2.0 * h)
    if direction is Direction.DBAR:
        return -(m @ lam - lam @ m) / (2.0 * h)
    raise ValueError(f"unknown direction {direction!r}")


def laplace_matrix(m: np.ndarray, config: FockConfig) -> np.ndarray:
    """lap M = d_u^2 M + d_v^2 M on the truncated space."""
    du = derive_matrix(derive_matrix(m, Direction.U, config), Direction.U, config)
    dv = derive_matrix(derive_matrix(m, Direction.V, config), Direction.V, config)
    return du + dv


def _window_norm(m: np.ndarray, safe_rows: int) -> float:
    """Largest column norm over the safe window n <= safe_rows."""
    cols = m[:, : safe_rows + 1]
    return float(np.max(np.sqrt(np.sum(np.abs(cols) ** 2, axis=0))))


def residual_report(config: FockConfig) -> dict:
    """Catenoid residuals on the safe window, with the truncation bound.

    Residuals are the column norms of lap(X^i) for the three components
    and of Phi1^2 + Phi2^2 + Phi3^2 for the isotropy identity, where
    Phi1 = (e^L - e^-L)/2, Phi2 = -(i/2)(e^L + e^-L), Phi3 = 1.
    Matrices are built and multiplied in long-double precision so the
    numbers reflect truncation rather than roundoff.
    """
    dtype = np.clongdouble
    x1, x2, x3 = catenoid(config, dtype)
    res = {
        name: _window_norm(laplace_matrix(x, config), config.safe_rows)
        for name, x in (("X1", x1), ("X2", x2), ("X3", x3))
    }
    ep = exp_lambda(config, 1, False, dtype)
    em = exp_lambda(config, -1, False, dtype)
    phi1 = 0.5 * (ep - em)
    phi2 = -0.5j * (ep + em)
    iso = phi1 @ phi1 + phi2 @ phi2 + np.eye(config.dim, dtype=dtype)
    res["phi_isotropy"] = _window_norm(iso, config.safe_rows)
    return {
        "dim": config.dim,
        "hbar": config.hbar,
        "safe_rows": config.safe_rows,
        "residuals": res,
        "tail_bound": exp_tail_bound(config),
    }
