"""Jacobi elliptic functions, the complete elliptic integral K, and adaptive quadrature.

The function values are produced by the descending Landen / arithmetic-geometric
mean recursion (DLMF 22.20), which converges quadratically and is uniformly
accurate for every modulus k < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "EllipticTriple",
    "QuadratureResult",
    "QuadratureError",
    "jacobi_elliptic",
    "jacobi_sd",
    "complete_K",
    "integrate",
]

_EPS = 2.220446049250313e-16
_MAX_AGM_ITER = 60


class QuadratureError(RuntimeError):
    """Raised when adaptive subdivision cannot reach the requested tolerance."""


@dataclass(frozen=True)
class EllipticTriple:
    """Values sn(u,k), cn(u,k), dn(u,k) at a single argument."""

    u: float
    k: float
    sn: float
    cn: float
    dn: float


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def _check_modulus(k: float) -> None:
    if not (0.0 <= k < 1.0):
        raise ValueError(f"modulus k must lie in [0, 1), got {k!r}")


def _agm(a: float, b: float) -> float:
    for _ in range(_MAX_AGM_ITER):
        if abs(a - b) <= 4.0 * _EPS * abs(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complete_K(k: float) -> float:
    """Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k'))."""
    _check_modulus(k)
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return math.pi / (2.0 * _agm(1.0, kp))


def jacobi_elliptic(u: float, k: float) -> EllipticTriple:
    """Evaluate sn, cn, dn at argument u and modulus k in [0, 1).

    Handles all real u through reduction modulo the full period 4K(k).
    """
    _check_modulus(k)
    if not math.isfinite(u):
        raise ValueError(f"argument u must be finite, got {u!r}")

    if k < 1e-14:
        # Degenerate circular limit; the recursion below would need phi_1.
        return EllipticTriple(u, k, math.sin(u), math.cos(u), 1.0)

    kp = math.sqrt((1.0 - k) * (1.0 + k))
    K = math.pi / (2.0 * _agm(1.0, kp))
    # sn, cn are 4K-periodic and dn is 2K-periodic; reduce to keep the
    # amplified phase 2^N a_N u at a size where sin() stays accurate.
    ured = u - 4.0 * K * math.floor(u / (4.0 * K) + 0.5)

    a = [1.0]
    b = [kp]
    c = [k]
    while c[-1] > 4.0 * _EPS and len(a) < _MAX_AGM_ITER:
        an = 0.5 * (a[-1] + b[-1])
        bn = math.sqrt(a[-1] * b[-1])
        cn_ = 0.5 * (a[-1] - b[-1])
        a.append(an)
        b.append(bn)
        c.append(cn_)
    N = len(a) - 1

    phi = (2.0 ** N) * a[N] * ured
    for n in range(N, 0, -1):
        s = c[n] / a[n] * math.sin(phi)
        s = max(-1.0, min(1.0, s))
        phi = 0.5 * (phi + math.asin(s))

    sn = math.sin(phi)
    cn = math.cos(phi)
    # dn from the parameter identity: the phase-quotient expression for dn
    # loses all precision near the quarter periods where cn -> 0; the
    # positive root is the correct branch for every k < 1.
    dn = math.sqrt(max(kp * kp, 1.0 - (k * sn) * (k * sn)))
    return EllipticTriple(u, k, sn, cn, dn)


def jacobi_sd(u: float, k: float) -> float:
    """sd(u, k) = sn(u, k) / dn(u, k); dn never vanishes for k < 1."""
    t = jacobi_elliptic(u, k)
    return t.sn / t.dn


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = 48,
) -> QuadratureResult:
    """Adaptive Simpson quadrature with an interval-local error estimate.

    Deterministic for fixed inputs; raises :class:`QuadratureError` if the
    subdivision depth limit is reached before the tolerance is met.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0)

    evals = 0

    def ev(x: float) -> float:
        nonlocal evals
        evals += 1
        y = f(x)
        if not math.isfinite(y):
            raise QuadratureError(f"integrand not finite at x={x!r}")
        return y

    fa = ev(a)
    fb = ev(b)
    m = 0.5 * (a + b)
    fm = ev(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    total = 0.0
    err_total = 0.0
    # Stack of (a, b, fa, fm, fb, S, local_tol, depth).
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    while stack:
        xa, xb, ya, ym, yb, S, ltol, depth = stack.pop()
        xm = 0.5 * (xa + xb)
        lm = 0.5 * (xa + xm)
        rm = 0.5 * (xm + xb)
        yl = ev(lm)
        yr = ev(rm)
        Sl = (xm - xa) / 6.0 * (ya + 4.0 * yl + ym)
        Sr = (xb - xm) / 6.0 * (ym + 4.0 * yr + yb)
        delta = Sl + Sr - S
        if abs(delta) <= 15.0 * ltol:
            total += Sl + Sr + delta / 15.0
            err_total += abs(delta) / 15.0
        else:
            if depth >= max_depth:
                raise QuadratureError(
                    f"subdivision limit reached on [{xa}, {xb}] before tolerance"
                )
            stack.append((xa, xm, ya, yl, ym, Sl, 0.5 * ltol, depth + 1))
            stack.append((xm, xb, ym, yr, yb, Sr, 0.5 * ltol, depth + 1))
    return QuadratureResult(total, err_total, evals)
