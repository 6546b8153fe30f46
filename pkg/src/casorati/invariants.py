"""Scalar curvature invariants and inequality machinery.

Everything here is a pure function of the second fundamental form (and the
ambient curvature c_tilde): Casorati curvatures, hyperplane extremization,
delta-curvatures, the nonnegative proof polynomials behind the two
curvature inequalities, the trace-constrained quadratic minimization,
Ricci/Einstein/Weyl checks, and the equality-case classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.special import ndtri
from scipy.stats import qmc

from .geometry import SecondForm

__all__ = [
    "HyperplaneExtremum",
    "IdealClassification",
    "InvariantReport",
    "QPSolution",
    "casorati_total",
    "casorati_hyperplane",
    "extremize_hyperplane",
    "hyperplane_extrema_batch",
    "sphere_grid",
    "tau_from_h",
    "tau_subspace",
    "delta_curvatures",
    "proof_polynomial",
    "oprea_qp",
    "qp_objective",
    "qp_hessian",
    "ricci_values",
    "einstein_residual",
    "weyl_norm",
    "classify_ideal",
    "inequality_report",
]

_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HyperplaneExtremum:
    """Extremum of C(L) over hyperplanes L = u-perp of the tangent space."""

    mode: str               # "inf" | "sup"
    value: float
    u: np.ndarray
    certificate: dict


@dataclass(frozen=True)
class IdealClassification:
    kind: str               # TotallyGeodesic | Umbilical | Ideal11 | Ideal41 | Generic
    lam: Optional[float]
    single_normal: bool
    quasi_umbilical: bool


@dataclass(frozen=True)
class QPSolution:
    variant: str
    n: int
    k: float
    point: np.ndarray
    t: float
    value: float
    min_restricted_hessian_eig: float


@dataclass(frozen=True)
class InvariantReport:
    n: int
    p: int
    c_tilde: float
    C: float
    infCL: HyperplaneExtremum
    supCL: HyperplaneExtremum
    meanH: float
    tau: float
    rho: float
    delta_hat: float
    delta_C: float
    delta_c_legacy: float
    slack11: float
    slack41: float
    classification: IdealClassification


# ---------------------------------------------------------------------------
# Casorati curvatures
# ---------------------------------------------------------------------------

def casorati_total(h: SecondForm) -> float:
    """C = (1/n) sum_r sum_ij (h^r_ij)^2."""
    return float(np.sum(h.h ** 2) / h.n)


def _check_unit(u: np.ndarray, n: int) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if u.shape != (n,):
        raise ValueError(f"u must be a vector of length {n}")
    if abs(np.linalg.norm(u) - 1.0) > 1e-10:
        raise ValueError("u must be a unit vector (|u| = 1 to 1e-10)")
    return u


def casorati_hyperplane(h: SecondForm, u) -> float:
    """C(L) for the hyperplane L = u-perp, normalized by dim L = n - 1.

    Uses the projector form (1/(n-1)) sum_r |P h^r P|_F^2 with P = I - u u^T,
    which is independent of any basis chosen for L.
    """
    n = h.n
    u = _check_unit(u, n)
    if n < 2:
        raise ValueError("hyperplane Casorati curvature needs n >= 2")
    tr2 = float(np.sum(h.h ** 2))
    hu = h.h @ u                              # (p, n)
    quad = np.einsum("ri,i->r", hu, u)        # u^T h_r u
    val = tr2 - 2.0 * float(np.sum(hu ** 2)) + float(np.sum(quad ** 2))
    return val / (n - 1)


# ---------------------------------------------------------------------------
# hyperplane extremization over the unit sphere of u
# ---------------------------------------------------------------------------

def sphere_grid(n: int, size: int) -> np.ndarray:
    """Deterministic quasi-uniform grid on S^{n-1}.

    n = 3 uses a Fibonacci lattice; higher n maps an unscrambled Sobol
    sequence through the normal quantile and normalizes.
    """
    if n == 3:
        i = np.arange(size)
        z = 1.0 - (2.0 * i + 1.0) / size
        r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
        phi = i * _GOLDEN_ANGLE
        return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])
    m = int(math.ceil(math.log2(max(2, size))))
    pts = qmc.Sobol(d=n, scramble=False).random_base2(m)
    pts = ndtri(np.clip(pts, 1e-12, 1.0 - 1e-12))
    norms = np.linalg.norm(pts, axis=1)
    keep = norms > 1e-8
    return pts[keep] / norms[keep, None]


def _objective_parts(h: np.ndarray):
    """Closed-form value/gradient/Hessian of f(u) = (n-1) C(u-perp)."""
    S = np.einsum("rij,rjk->ik", h, h)
    tr2 = float(np.sum(h ** 2))

    def value(u: np.ndarray) -> float:
        hu = h @ u
        quad = np.einsum("ri,i->r", hu, u)
        return tr2 - 2.0 * float(u @ S @ u) + float(np.sum(quad ** 2))

    def grad(u: np.ndarray) -> np.ndarray:
        hu = h @ u
        quad = np.einsum("ri,i->r", hu, u)
        return -4.0 * (S @ u) + 4.0 * np.einsum("r,ri->i", quad, hu)

    def hess(u: np.ndarray) -> np.ndarray:
        hu = h @ u
        quad = np.einsum("ri,i->r", hu, u)
        return (-4.0 * S
                + 8.0 * np.einsum("ri,rj->ij", hu, hu)
                + 4.0 * np.einsum("r,rij->ij", quad, h))

    return value, grad, hess, tr2


def _tangent_basis(u: np.ndarray) -> np.ndarray:
    n = u.shape[0]
    Q, _ = np.linalg.qr(np.column_stack([u, np.eye(n)]))
    return Q[:, 1:n]


def extremize_hyperplane(h: SecondForm, mode: str, *,
                         grid_size: int | None = None,
                         refine_iters: int = 60) -> HyperplaneExtremum:
    """Optimize C(u-perp) over unit u: deterministic quasi-uniform sphere grid
    followed by a safeguarded Newton polish on the sphere.

    The polished point is always feasible, so `inf` results upper-bound the
    true infimum and `sup` results lower-bound the true supremum.
    """
    if mode not in ("inf", "sup"):
        raise ValueError("mode must be 'inf' or 'sup'")
    n = h.n
    if n < 3:
        raise ValueError("hyperplane extremization needs n >= 3")
    if grid_size is None:
        grid_size = min(32768, 4096 * 2 ** (n - 3))

    sign = 1.0 if mode == "inf" else -1.0
    value, grad, hess, tr2 = _objective_parts(h.h)
    scale = 1.0 + tr2

    U = sphere_grid(n, grid_size)
    vals = _batch_values(h.h[None], U)[0]
    idx = int(np.argmin(sign * vals))
    u = U[idx].copy()
    fu = float(vals[idx])

    # Safeguarded Riemannian Newton: clip the restricted Hessian to be
    # positive (for the chosen direction), backtrack on the retraction.
    for _ in range(refine_iters):
        g_full = sign * grad(u)
        g_r = g_full - (g_full @ u) * u
        if np.linalg.norm(g_r) <= 1e-14 * scale:
            break
        V = _tangent_basis(u)
        H_full = sign * hess(u) - (g_full @ u) * np.eye(n)
        H_r = V.T @ H_full @ V
        w, E = np.linalg.eigh(H_r)
        floor = 1e-8 * (1.0 + np.abs(w).max())
        w = np.maximum(w, floor)
        step = -V @ (E @ ((E.T @ (V.T @ g_full)) / w))
        t = 1.0
        accepted = False
        for _ in range(30):
            cand = u + t * step
            cand /= np.linalg.norm(cand)
            fc = value(cand)
            if sign * fc < sign * fu:
                u, fu = cand, fc
                accepted = True
                break
            t *= 0.5
        if not accepted:
            break

    cval = fu / (n - 1)
    cert = {"grid_nodes": int(U.shape[0]), "refine_iters": refine_iters,
            "grid_value": float(vals[idx]) / (n - 1)}
    return HyperplaneExtremum(mode, cval, u, cert)


def _batch_values(h: np.ndarray, U: np.ndarray) -> np.ndarray:
    """(n-1) C(u-perp) for a batch: h (B,p,n,n), U (G,n) -> (B,G)."""
    B, p, n, _ = h.shape
    G = U.shape[0]
    M = np.einsum("gi,gj->gij", U, U).reshape(G, n * n)
    S = np.einsum("brij,brjk->bik", h, h).reshape(B, n * n)
    tr2 = np.einsum("brij,brij->b", h, h)
    E1 = S @ M.T                                          # (B, G)
    E2 = (h.reshape(B * p, n * n) @ M.T).reshape(B, p, G)  # u^T h_r u
    return tr2[:, None] - 2.0 * E1 + np.sum(E2 ** 2, axis=1)


def hyperplane_extrema_batch(h: np.ndarray, mode: str, *,
                             grid_size: int = 512,
                             refine_iters: int = 40) -> np.ndarray:
    """Refined hyperplane extrema for a batch of forms h of shape (B,p,n,n).

    Grid seed plus vectorized projected-gradient refinement with per-instance
    adaptive steps; every iterate is feasible, so the returned values are
    conservative bounds in the sense documented on `extremize_hyperplane`.
    """
    if mode not in ("inf", "sup"):
        raise ValueError("mode must be 'inf' or 'sup'")
    h = np.asarray(h, dtype=float)
    B, p, n, _ = h.shape
    sign = 1.0 if mode == "inf" else -1.0

    U = sphere_grid(n, grid_size)
    vals = _batch_values(h, U)
    idx = np.argmin(sign * vals, axis=1)
    u = U[idx].copy()                           # (B, n)
    f = vals[np.arange(B), idx]

    S = np.einsum("brij,brjk->bik", h, h)
    tr2 = np.einsum("brij,brij->b", h, h)

    def fval(uu):
        hu = np.einsum("brij,bj->bri", h, uu)
        quad = np.einsum("bri,bi->br", hu, uu)
        return (tr2 - 2.0 * np.einsum("bri,bri->b", hu, hu)
                + np.einsum("br,br->b", quad, quad))

    def fgrad(uu):
        hu = np.einsum("brij,bj->bri", h, uu)
        quad = np.einsum("bri,bi->br", hu, uu)
        return (-4.0 * np.einsum("bik,bk->bi", S, uu)
                + 4.0 * np.einsum("br,bri->bi", quad, hu))

    alpha = np.full(B, 0.05)
    for _ in range(refine_iters):
        g = sign * fgrad(u)
        g -= np.einsum("bi,bi->b", g, u)[:, None] * u
        gn = np.linalg.norm(g, axis=1, keepdims=True)
        gn[gn == 0.0] = 1.0
        cand = u - (alpha[:, None] * g / gn)
        cand /= np.linalg.norm(cand, axis=1, keepdims=True)
        fc = fval(cand)
        better = sign * fc < sign * f
        u[better] = cand[better]
        f[better] = fc[better]
        alpha = np.where(better, alpha * 1.3, alpha * 0.5)
    return f / (n - 1)


# ---------------------------------------------------------------------------
# scalar curvature
# ---------------------------------------------------------------------------

def tau_from_h(h: SecondForm, c_tilde: float = 0.0) -> float:
    """Scalar curvature of the Gauss-equation metric.

    Computed both from 2 tau = n^2 |H|^2 - n C + n(n-1) c_tilde and from the
    pairwise sectional sums; the two routes agree as an algebraic identity and
    are asserted to 1e-12 relative.
    """
    n = h.n
    traces = np.einsum("rii->r", h.h)
    H2 = float(np.sum(traces ** 2)) / n ** 2
    C = casorati_total(h)
    tau_a = 0.5 * (n * n * H2 - n * C + n * (n - 1) * c_tilde)

    hh = h.h
    diag = np.einsum("rii->ri", hh)
    # K_ij = c_tilde + sum_r (h_ii h_jj - h_ij^2), summed over i < j
    K = (c_tilde
         + np.einsum("ri,rj->ij", diag, diag)
         - np.einsum("rij,rij->ij", hh, hh))
    iu = np.triu_indices(n, k=1)
    tau_b = float(np.sum(K[iu]))

    scale = 1.0 + abs(tau_a) + abs(tau_b)
    assert abs(tau_a - tau_b) <= 1e-12 * scale, (tau_a, tau_b)
    return tau_a


def tau_subspace(h: SecondForm, L, c_tilde: float = 0.0) -> float:
    """Scalar curvature of the subspace spanned by the orthonormal rows of L."""
    L = np.asarray(L, dtype=float)
    if L.ndim != 2 or L.shape[1] != h.n:
        raise ValueError(f"L must be an (l, {h.n}) array of basis rows")
    l = L.shape[0]
    if not (2 <= l <= h.n):
        raise ValueError("subspace dimension must satisfy 2 <= l <= n")
    if np.abs(L @ L.T - np.eye(l)).max() > 1e-8:
        raise ValueError("basis rows must be orthonormal")
    hb = np.einsum("mi,rij,nj->rmn", L, h.h, L)
    diag = np.einsum("rmm->rm", hb)
    K = (c_tilde
         + np.einsum("rm,rn->mn", diag, diag)
         - np.einsum("rmn,rmn->mn", hb, hb))
    iu = np.triu_indices(l, k=1)
    return float(np.sum(K[iu]))


# ---------------------------------------------------------------------------
# delta curvatures and proof polynomials
# ---------------------------------------------------------------------------

def delta_curvatures(h: SecondForm, *, grid_size: int | None = None):
    """(delta_hat, delta_C, delta_c_legacy) from C and the refined hyperplane
    extrema; requires n >= 3."""
    n = h.n
    if n < 3:
        raise ValueError("delta-Casorati curvatures need n >= 3")
    C = casorati_total(h)
    inf_ext = extremize_hyperplane(h, "inf", grid_size=grid_size)
    sup_ext = extremize_hyperplane(h, "sup", grid_size=grid_size)
    delta_hat = 2.0 * C - (2.0 * n - 1.0) / (2.0 * n) * sup_ext.value
    delta_C = 0.5 * C + (n + 1.0) / (2.0 * n) * inf_ext.value
    delta_legacy = 0.5 * C + (n + 1.0) / (2.0 * n * (n - 1.0)) * inf_ext.value
    return delta_hat, delta_C, delta_legacy


def proof_polynomial(h: SecondForm, u, variant: str) -> float:
    """The nonnegative quadratic polynomial underlying each inequality.

    variant "P": 2n(n-1) C + (n-1)(1-2n)/2 C(L) - 2 tau + n(n-1) c_tilde
    variant "Q": n(n-1)/2 C + (n-1)(n+1)/2 C(L) - 2 tau + n(n-1) c_tilde

    with L = u-perp.  Substituting 2 tau = n^2 |H|^2 - n C + n(n-1) c_tilde
    cancels the ambient term, so the value depends only on (h, u).
    """
    n = h.n
    if n < 3:
        raise ValueError("proof polynomial needs n >= 3")
    C = casorati_total(h)
    CL = casorati_hyperplane(h, u)
    traces = np.einsum("rii->r", h.h)
    n2H2 = float(np.sum(traces ** 2))
    if variant == "P":
        return 2.0 * n * (n - 1.0) * C + 0.5 * (n - 1.0) * (1.0 - 2.0 * n) * CL \
            + n * C - n2H2
    if variant == "Q":
        return 0.5 * n * (n - 1.0) * C + 0.5 * (n - 1.0) * (n + 1.0) * CL \
            + n * C - n2H2
    raise ValueError("variant must be 'P' or 'Q'")


# ---------------------------------------------------------------------------
# trace-constrained quadratic minimization
# ---------------------------------------------------------------------------

def qp_objective(variant: str, x) -> float:
    """Quadratic form in the diagonal entries, per inequality variant."""
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    off = float(sum(x[i] * x[j] for i in range(n) for j in range(i + 1, n)))
    if variant == "P":
        return (0.5 * (2.0 * n - 3.0) * float(np.sum(x[:-1] ** 2))
                + 2.0 * (n - 1.0) * x[-1] ** 2 - 2.0 * off)
    if variant == "Q":
        return (n * float(np.sum(x[:-1] ** 2))
                + 0.5 * (n - 1.0) * x[-1] ** 2 - 2.0 * off)
    raise ValueError("variant must be 'P' or 'Q'")


def qp_hessian(variant: str, n: int) -> np.ndarray:
    H = -2.0 * np.ones((n, n))
    if variant == "P":
        np.fill_diagonal(H, 2.0 * n - 3.0)
        H[-1, -1] = 4.0 * (n - 1.0)
    elif variant == "Q":
        np.fill_diagonal(H, 2.0 * n)
        H[-1, -1] = n - 1.0
    else:
        raise ValueError("variant must be 'P' or 'Q'")
    return H


def _trace_constraint_basis(n: int) -> np.ndarray:
    """Deterministic orthonormal basis of {x : sum x_i = 0} (Helmert columns)."""
    V = np.zeros((n, n - 1))
    for i in range(1, n):
        V[:i, i - 1] = 1.0
        V[i, i - 1] = -float(i)
        V[:, i - 1] /= math.sqrt(i * (i + 1.0))
    return V


def oprea_qp(variant: str, n: int, k: float) -> QPSolution:
    """Closed-form minimizer of the variant quadratic form under trace k.

    variant P: (2t, ..., 2t, t) with t = k / (2n - 1); variant Q:
    (t, ..., t, 2t) with t = k / (n + 1).  The minimum value is 0, certified
    by the restricted Hessian (projected onto {sum x_i = 0}) being PSD.
    """
    if n < 3:
        raise ValueError("trace-constrained minimization needs n >= 3")
    if variant == "P":
        t = k / (2.0 * n - 1.0)
        point = np.full(n, 2.0 * t)
        point[-1] = t
    elif variant == "Q":
        t = k / (n + 1.0)
        point = np.full(n, t)
        point[-1] = 2.0 * t
    else:
        raise ValueError("variant must be 'P' or 'Q'")
    value = qp_objective(variant, point)
    V = _trace_constraint_basis(n)
    H = qp_hessian(variant, n)
    eigs = np.linalg.eigvalsh(V.T @ H @ V)
    return QPSolution(variant, n, float(k), point, float(t), float(value),
                      float(eigs[0]))


# ---------------------------------------------------------------------------
# Ricci, Einstein, Weyl
# ---------------------------------------------------------------------------

def _gauss_riemann(h: SecondForm, c_tilde: float) -> np.ndarray:
    n = h.n
    eye = np.eye(n)
    hh = h.h
    return (c_tilde * (np.einsum("ik,jl->ijkl", eye, eye)
                       - np.einsum("il,jk->ijkl", eye, eye))
            + np.einsum("rik,rjl->ijkl", hh, hh)
            - np.einsum("ril,rjk->ijkl", hh, hh))


def ricci_values(h: SecondForm, c_tilde: float = 0.0) -> np.ndarray:
    """Frame Ricci curvatures Ric(e_i) = sum_{j != i} K(e_i ^ e_j)."""
    R = _gauss_riemann(h, c_tilde)
    return np.einsum("ijij->i", R) - np.einsum("iiii->i", R)


def einstein_residual(h: SecondForm, c_tilde: float = 0.0) -> float:
    """Spread max - min of the frame Ricci values; 0 on Einstein inputs."""
    ric = ricci_values(h, c_tilde)
    return float(ric.max() - ric.min())


def weyl_norm(h: SecondForm, c_tilde: float = 0.0) -> float:
    """Frobenius norm of the Weyl tensor of the Gauss-equation curvature.

    Identically 0 for n = 3; vanishing for n >= 4 certifies conformal
    flatness.
    """
    n = h.n
    if n < 4:
        return 0.0
    R = _gauss_riemann(h, c_tilde)
    ric = np.einsum("ijil->jl", R)
    S = float(np.einsum("jj->", ric))  # = 2 tau
    eye = np.eye(n)
    ric_term = (np.einsum("ik,jl->ijkl", ric, eye)
                - np.einsum("il,jk->ijkl", ric, eye)
                + np.einsum("jl,ik->ijkl", ric, eye)
                - np.einsum("jk,il->ijkl", ric, eye)) / (n - 2.0)
    scal_term = S / ((n - 1.0) * (n - 2.0)) * (
        np.einsum("ik,jl->ijkl", eye, eye) - np.einsum("il,jk->ijkl", eye, eye))
    W = R - ric_term + scal_term
    return float(np.sqrt(np.sum(W ** 2)))


# ---------------------------------------------------------------------------
# classification and assembled report
# ---------------------------------------------------------------------------

def _match_pattern(eigs: np.ndarray, tol: float):
    """Detect {2l x (n-1), l} or {l x (n-1), 2l} spectra up to global sign."""
    n = eigs.shape[0]
    scale = max(1.0, float(np.abs(eigs).max()))
    for sign in (1.0, -1.0):
        v = np.sort(sign * eigs)
        for big, single in ((v[:-1], v[-1]), (v[1:], v[0])):
            if big.max() - big.min() > tol * scale:
                continue
            m = float(big.mean())
            if abs(m - 2.0 * single) <= tol * scale:
                return "Ideal11", single
            if abs(single - 2.0 * m) <= tol * scale:
                return "Ideal41", m
    return None, None


def classify_ideal(h: SecondForm, tol: float = 1e-8) -> IdealClassification:
    """Equality-case detection from the shape-operator spectrum.

    Checks in order: totally geodesic, umbilical, the two ideal spectra
    {2l,...,2l,l} and {l,...,l,2l} (up to a global sign), otherwise Generic.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    n = h.n
    hh = h.h
    norm = float(np.abs(hh).max(initial=0.0))
    if norm <= tol:
        return IdealClassification("TotallyGeodesic", 0.0, True, True)

    # Single normal direction: the p matrices proportional to one matrix A.
    if h.p == 1:
        single = True
        A = hh[0]
    else:
        M = hh.reshape(h.p, n * n)
        U, s, Vt = np.linalg.svd(M, full_matrices=False)
        single = s[1] <= tol * s[0]
        A = (s[0] * Vt[0]).reshape(n, n)
        A = 0.5 * (A + A.T)
    eigs = np.linalg.eigvalsh(A)
    scale = max(1.0, float(np.abs(eigs).max()))
    counts = _multiplicities(eigs, tol * scale)
    quasi = single and max(counts) >= n - 1

    if not single:
        return IdealClassification("Generic", None, False, False)
    if eigs.max() - eigs.min() <= tol * scale:
        lam = float(eigs.mean())
        return IdealClassification("Umbilical", lam, True, True)
    kind, lam = _match_pattern(eigs, tol)
    if kind is not None:
        # The pattern is matched up to a global sign, so report lambda >= 0.
        return IdealClassification(kind, abs(float(lam)), True, quasi)
    return IdealClassification("Generic", None, True, quasi)


def _multiplicities(eigs: np.ndarray, atol: float) -> list:
    counts = []
    i = 0
    v = np.sort(eigs)
    while i < len(v):
        j = i
        while j + 1 < len(v) and v[j + 1] - v[i] <= atol:
            j += 1
        counts.append(j - i + 1)
        i = j + 1
    return counts


def inequality_report(h: SecondForm, c_tilde: float = 0.0, *,
                      classify_tol: float = 1e-8,
                      grid_size: int | None = None) -> InvariantReport:
    """All scalar invariants plus the slacks of both curvature inequalities."""
    n = h.n
    if n < 3:
        raise ValueError("inequality report needs n >= 3")
    C = casorati_total(h)
    infCL = extremize_hyperplane(h, "inf", grid_size=grid_size)
    supCL = extremize_hyperplane(h, "sup", grid_size=grid_size)
    traces = np.einsum("rii->r", h.h)
    meanH = float(np.linalg.norm(traces) / n)
    tau = tau_from_h(h, c_tilde)
    rho = 2.0 * tau / (n * (n - 1.0))
    delta_hat = 2.0 * C - (2.0 * n - 1.0) / (2.0 * n) * supCL.value
    delta_C = 0.5 * C + (n + 1.0) / (2.0 * n) * infCL.value
    delta_legacy = 0.5 * C + (n + 1.0) / (2.0 * n * (n - 1.0)) * infCL.value
    slack11 = delta_hat + c_tilde - rho
    slack41 = delta_C + c_tilde - rho
    cls = classify_ideal(h, tol=classify_tol)
    return InvariantReport(n, h.p, float(c_tilde), C, infCL, supCL, meanH,
                           tau, rho, delta_hat, delta_C, delta_legacy,
                           slack11, slack41, cls)
