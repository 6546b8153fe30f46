"""Adapted orthonormal frames, second fundamental form, and an intrinsic
curvature oracle for Gauss-equation cross-checks.

The tangent frame comes from a QR factorization of the coordinate tangent
vectors with the sign fixed by a positive triangular diagonal; the normal
frame completes it deterministically from the ambient standard basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .immersions import (
    BoundaryProximityError,
    Chart,
    IllConditionedPointError,
    Jet2,
    domain_check,
    first_partials,
    jet2,
)

__all__ = [
    "FramedPoint",
    "SecondForm",
    "RiemannTensor",
    "frame_at",
    "second_form",
    "intrinsic_riemann",
    "intrinsic_tau",
    "gauss_residual",
]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class SecondForm:
    """Components h^r_ij of the second fundamental form in an adapted
    orthonormal frame; h has shape (p, n, n) and each slice is symmetric."""

    n: int
    p: int
    h: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.h, dtype=float)
        if h.shape != (self.p, self.n, self.n):
            raise ValueError(f"h must have shape ({self.p}, {self.n}, {self.n}), "
                             f"got {h.shape}")
        scale = 1.0 + np.abs(h).max(initial=0.0)
        if np.abs(h - h.transpose(0, 2, 1)).max(initial=0.0) > 1e-8 * scale:
            raise ValueError("each h[r] must be symmetric in (i, j)")
        object.__setattr__(self, "h", h)


@dataclass(frozen=True)
class RiemannTensor:
    """R_ijkl in an orthonormal tangent frame, with R_ijij the sectional
    curvature of the (e_i, e_j) plane."""

    n: int
    components: np.ndarray


@dataclass(frozen=True)
class FramedPoint:
    x: np.ndarray
    tangent_frame: np.ndarray  # (n, N) rows e_1..e_n
    normal_frame: np.ndarray   # (p, N) rows e_{n+1}..e_{n+p}
    induced_metric: np.ndarray
    condition: float
    jet: Jet2 = field(repr=False)
    coord_to_frame: np.ndarray = field(repr=False)  # B with e_i = sum_a B[a,i] d_a


def frame_at(chart: Chart, x, *, jet_mode: str | None = None,
             cond_threshold: float = 1e8) -> FramedPoint:
    """Adapted orthonormal frame at an admissible point.

    Raises IllConditionedPointError when the induced-metric condition number
    exceeds the threshold.
    """
    x = np.asarray(x, dtype=float)
    jet = jet2(chart, x, jet_mode=jet_mode, cond_threshold=cond_threshold)
    n, N = chart.n, chart.ambient_dim
    A = jet.d1.T  # (N, n) columns are coordinate tangent vectors
    M = np.hstack([A, np.eye(N)])
    Q, R = np.linalg.qr(M)
    sgn = np.sign(np.diagonal(R)[:N])
    sgn[sgn == 0.0] = 1.0
    Q = Q * sgn
    tangent = Q[:, :n].T
    normal = Q[:, n:].T
    Rtri = (R[:n, :n].T * sgn[:n]).T
    B = np.linalg.solve(Rtri, np.eye(n))
    g = A.T @ A
    cond = float(np.linalg.cond(g))
    return FramedPoint(x, tangent, normal, g, cond, jet, B)


def second_form(chart: Chart, x, frame: FramedPoint) -> SecondForm:
    """h^r_ij: normal components of the second derivatives, expressed in the
    orthonormal tangent frame of `frame`."""
    d2 = frame.jet.d2
    B = frame.coord_to_frame
    T = np.einsum("rm,abm->rab", frame.normal_frame, d2)
    h = np.einsum("ai,rab,bj->rij", B, T, B)
    h = 0.5 * (h + h.transpose(0, 2, 1))
    return SecondForm(chart.n, chart.p, h)


def _metric_fn(chart: Chart, jet_mode: str | None):
    def g(y: np.ndarray) -> np.ndarray:
        d1 = first_partials(chart, y, jet_mode=jet_mode)
        return d1 @ d1.T
    return g


def _christoffel(gfun, y: np.ndarray, n: int, step: float) -> np.ndarray:
    """Gamma^k_ij of the induced metric by Richardson-extrapolated central
    differences of the metric field."""
    g0 = gfun(y)
    ginv = np.linalg.inv(g0)
    dg = np.empty((n, n, n))
    h = step * np.maximum(1.0, np.abs(y))
    for a in range(n):
        e = np.zeros(n)
        e[a] = 1.0
        ha = h[a]
        D1 = (gfun(y + ha * e) - gfun(y - ha * e)) / (2.0 * ha)
        D2 = (gfun(y + 0.5 * ha * e) - gfun(y - 0.5 * ha * e)) / ha
        dg[a] = (4.0 * D2 - D1) / 3.0
    # T[i, j, l] = d_i g_jl + d_j g_il - d_l g_ij;  Gamma[k, i, j]
    T = dg + dg.transpose(1, 0, 2) - dg.transpose(1, 2, 0)
    return 0.5 * np.einsum("kl,ijl->kij", ginv, T)


def intrinsic_riemann(chart: Chart, x, *, jet_mode: str | None = None,
                      step: float | None = None,
                      gamma_step: float | None = None) -> RiemannTensor:
    """Independent intrinsic route: Riemann tensor of the induced metric via
    finite-differenced Christoffel symbols, converted to the orthonormal
    tangent frame.

    Step defaults track the two noise regimes: an analytic metric is clean
    enough for small stencils, a numeric-jet metric carries ~1e-10 noise that
    the nested differences would otherwise amplify.
    """
    x = np.asarray(x, dtype=float)
    n = chart.n
    mode = jet_mode or chart.jet_mode
    analytic = mode == "analytic" and (chart._analytic_jet is not None
                                       or chart._analytic_d1 is not None)
    if gamma_step is None:
        gamma_step = float(np.cbrt(_EPS)) if analytic else 1e-2
    if step is None:
        step = 2e-3 if analytic else 5e-2
    frame = frame_at(chart, x, jet_mode=jet_mode)
    gfun = _metric_fn(chart, jet_mode)

    hs = step * np.maximum(1.0, np.abs(x))
    # Every stencil point (including the nested metric stencils) must stay
    # strictly inside the domain.
    pad = hs + 2.0 * gamma_step * np.maximum(1.0, np.abs(x))
    for a in range(n):
        e = np.zeros(n)
        e[a] = 1.0
        for s in (+1.0, -1.0):
            if not domain_check(chart, x + s * pad[a] * e).admissible:
                raise BoundaryProximityError(
                    f"point {x.tolist()} too close to the boundary of chart "
                    f"{chart.name!r} for the intrinsic curvature stencil")

    gamma0 = _christoffel(gfun, x, n, gamma_step)
    dgamma = np.empty((n, n, n, n))
    for a in range(n):
        e = np.zeros(n)
        e[a] = 1.0
        ha = hs[a]
        D1 = (_christoffel(gfun, x + ha * e, n, gamma_step)
              - _christoffel(gfun, x - ha * e, n, gamma_step)) / (2.0 * ha)
        D2 = (_christoffel(gfun, x + 0.5 * ha * e, n, gamma_step)
              - _christoffel(gfun, x - 0.5 * ha * e, n, gamma_step)) / ha
        dgamma[a] = (4.0 * D2 - D1) / 3.0

    # R(d_a, d_b) d_c = Rup[d, a, b, c] d_d
    rup = (np.einsum("adbc->dabc", dgamma)
           - np.einsum("bdac->dabc", dgamma)
           + np.einsum("dae,ebc->dabc", gamma0, gamma0)
           - np.einsum("dbe,eac->dabc", gamma0, gamma0))
    g0 = gfun(x)
    # Rm(a,b,c,d) = g(R(d_a, d_b) d_c, d_d); the artifact's index order puts
    # the sectional curvature at R[i,j,i,j], i.e. R[a,b,c,d] = Rm(a,b,d,c).
    rm = np.einsum("eabc,ed->abcd", rup, g0)
    rspec = rm.transpose(0, 1, 3, 2)
    B = frame.coord_to_frame
    comp = np.einsum("abcd,ai,bj,ck,dl->ijkl", rspec, B, B, B, B)
    return RiemannTensor(n, comp)


def intrinsic_tau(riemann: RiemannTensor) -> float:
    """Scalar curvature tau = sum_{i<j} R_ijij over the orthonormal frame."""
    c = riemann.components
    n = riemann.n
    return float(sum(c[i, j, i, j] for i in range(n) for j in range(i + 1, n)))


def gauss_residual(secondform: SecondForm, riemann: RiemannTensor,
                   c_tilde: float = 0.0) -> float:
    """Max componentwise defect of the Gauss equation between the intrinsic
    Riemann tensor and the extrinsic reconstruction from h and c_tilde."""
    n = secondform.n
    if riemann.n != n:
        raise ValueError(f"dimension mismatch: h has n={n}, R has n={riemann.n}")
    eye = np.eye(n)
    h = secondform.h
    expected = (c_tilde * (np.einsum("ik,jl->ijkl", eye, eye)
                           - np.einsum("il,jk->ijkl", eye, eye))
                + np.einsum("rik,rjl->ijkl", h, h)
                - np.einsum("ril,rjk->ijkl", h, h))
    return float(np.abs(riemann.components - expected).max())
