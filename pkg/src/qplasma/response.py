"""Longitudinal dielectric function and conductivity of collisional plasma.

Four response families over one dimensionless parameterization
(alpha, q, x, y, xp):

* BGK        - relaxation (tau) model kernel equation solved in coordinate
               space; primary form uses the quadratic log kernel L, an
               algebraically identical log-difference form is kept as a
               cross-check (method tag BGK_ALT).
* CLASSICAL  - the q -> 0 limit, written with the dispersion function only.
* LINDHARD   - collisionless (y = 0) branch, regularized with the retarded
               prescription x -> x + i0 (principal value + Plemelj terms).
* MERMIN     - momentum-space relaxation model, which replaces the
               dispersion function in the BGK denominator by the ratio
               d = [l(w-q/2)-l(w+q/2)] / [l(-q/2)-l(q/2)].

Variables: x = omega/(k0 v0), y = nu/(k0 v0) (> 0 except on the Lindhard
branch), q = k/k0 > 0, xp = omega_p/(k0 v0), z = x + iy, w = z/q.
sigma_l/sigma_0 and epsilon_l are linked by epsilon - 1 = i (xp^2/(x y))
sigma/sigma0, and both are produced from the same integrals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .dispersion import _kernel_L_res, _lambda0_res, _peak_points
from .errors import DomainError
from .fermi import _phi0_res, _phi2_res, log_fermi
from .quadrature import (DEFAULT_CONFIG, QuadratureConfig, integrate_line,
                         principal_value)

__all__ = [
    "METHODS",
    "PlasmaPoint",
    "ResponseResult",
    "epsilon_bgk",
    "epsilon_bgk_alt",
    "sigma_bgk",
    "epsilon_classical",
    "epsilon_lindhard",
    "epsilon_mermin",
    "bgk_vs_mermin_delta",
    "mermin_d_factor",
]

METHODS = ("BGK", "BGK_ALT", "MERMIN", "LINDHARD", "CLASSICAL")


@dataclass(frozen=True)
class PlasmaPoint:
    """One evaluation point in thermal-wave-number units.

    y = 0 is legal only for the collisionless (LINDHARD) branch; every
    collisional operation requires y > 0 so the pole w = z/q stays off the
    real axis.
    """

    alpha: float
    q: float
    x: float
    y: float
    xp: float

    def __post_init__(self):
        for name in ("alpha", "q", "x", "y", "xp"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError("%s must be finite (got %r)" % (name, v))
        if self.q <= 0.0:
            raise DomainError("q must be > 0")
        if self.x < 0.0:
            raise DomainError("x must be >= 0")
        if self.y < 0.0:
            raise DomainError("y must be >= 0 (0 only for LINDHARD)")
        if self.xp <= 0.0:
            raise DomainError("xp must be > 0")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def w(self) -> complex:
        return self.z / self.q


@dataclass(frozen=True)
class ResponseResult:
    """epsilon_l, sigma_l/sigma_0 (None where x = 0), method tag, error bound."""

    epsilon: complex
    sigma_ratio: complex | None
    method: str
    err_estimate: float


def _require_collisional(p: PlasmaPoint):
    if p.y <= 0.0:
        raise DomainError("y > 0 required for collisional methods")


def _sigma_from_eps(eps: complex, p: PlasmaPoint) -> complex | None:
    # epsilon - 1 = i (xp^2/(x y)) sigma/sigma0, so the two share all integrals.
    if p.x == 0.0:
        return None
    return -1j * (eps - 1.0) * p.x * p.y / (p.xp * p.xp)


def _bgk_core(z: complex, q: float, alpha: float, xp: float,
              cfg: QuadratureConfig):
    """epsilon from the quadratic-kernel form; z may have any real part."""
    w = z / q
    L = _kernel_L_res(w, q, alpha, cfg)
    lam, lam_err = _lambda0_res(w, alpha, cfg)
    p2 = _phi2_res(alpha, cfg)
    phi2 = p2.value.real
    denom = z.real + 1j * z.imag * lam
    pref = xp * xp / (q * q * 4.0 * phi2)
    eps = 1.0 - pref * z * L.value / denom
    scale = abs(pref * z / denom)
    err = (scale * L.err_estimate
           + scale * abs(L.value * z.imag / denom) * lam_err
           + abs(eps - 1.0) * p2.err_estimate / phi2)
    return eps, err


def epsilon_bgk(p: PlasmaPoint, cfg: QuadratureConfig | None = None) -> ResponseResult:
    """Longitudinal permittivity of the collisional quantum plasma (tau model).

    epsilon = 1 - (xp^2/(4 q^2 phi2)) * z L(w,q,alpha) / (x + i y lambda0(w)).
    """
    cfg = cfg or DEFAULT_CONFIG
    _require_collisional(p)
    eps, err = _bgk_core(p.z, p.q, p.alpha, p.xp, cfg)
    return ResponseResult(eps, _sigma_from_eps(eps, p), "BGK", err)


def _bgk_alt_core(z: complex, q: float, alpha: float, xp: float,
                  cfg: QuadratureConfig):
    """Log-difference form: the numerator integrand carries the shift inside
    the logarithms instead of a quadratic denominator."""
    w = z / q
    v = abs(w.imag)
    half_q = 0.5 * q
    bps = _peak_points(w.real, v)
    if alpha > 0.0:
        edge = math.sqrt(alpha)
        bps += [edge - half_q, edge + half_q, -edge - half_q, -edge + half_q]

    def f(t):
        return (log_fermi(t - half_q, alpha) - log_fermi(t + half_q, alpha)) / (t - w)

    M = integrate_line(f, alpha, cfg, pole_distance=v, breakpoints=bps)
    lam, lam_err = _lambda0_res(w, alpha, cfg)
    p2 = _phi2_res(alpha, cfg)
    phi2 = p2.value.real
    denom = z.real + 1j * z.imag * lam
    pref = xp * xp / (4.0 * phi2 * q ** 3)
    eps = 1.0 + pref * z * M.value / denom
    scale = abs(pref * z / denom)
    err = (scale * M.err_estimate
           + scale * abs(M.value * z.imag / denom) * lam_err
           + abs(eps - 1.0) * p2.err_estimate / phi2)
    return eps, err


def epsilon_bgk_alt(p: PlasmaPoint, cfg: QuadratureConfig | None = None) -> ResponseResult:
    """BGK permittivity through the log-difference representation.

    Algebraically identical to epsilon_bgk (the two numerator integrands are
    related by shifting the integration variable); kept as an independent
    numerical route for the dual-representation check.
    """
    cfg = cfg or DEFAULT_CONFIG
    _require_collisional(p)
    eps, err = _bgk_alt_core(p.z, p.q, p.alpha, p.xp, cfg)
    return ResponseResult(eps, _sigma_from_eps(eps, p), "BGK_ALT", err)


def sigma_bgk(p: PlasmaPoint, cfg: QuadratureConfig | None = None) -> ResponseResult:
    """sigma_l/sigma_0 of the tau model; undefined at x = 0 (factor omega)."""
    cfg = cfg or DEFAULT_CONFIG
    _require_collisional(p)
    if p.x == 0.0:
        raise DomainError("sigma_l/sigma_0 carries a factor omega and is "
                          "undefined at x = 0; epsilon remains well-defined")
    eps, err = _bgk_core(p.z, p.q, p.alpha, p.xp, cfg)
    sig = _sigma_from_eps(eps, p)
    return ResponseResult(eps, sig, "BGK", err * p.x * p.y / (p.xp * p.xp))


def epsilon_classical(p: PlasmaPoint, cfg: QuadratureConfig | None = None) -> ResponseResult:
    """Permittivity of the classical (q -> 0) plasma at arbitrary degeneracy.

    epsilon = 1 + (xp^2 phi0)/(q^2 phi2) * z lambda0(z/q) / (x + i y lambda0).
    Static (x = 0) screening reduces exactly to 1 + (xp^2/q^2) phi0/phi2.
    """
    cfg = cfg or DEFAULT_CONFIG
    _require_collisional(p)
    p0 = _phi0_res(p.alpha, cfg)
    p2 = _phi2_res(p.alpha, cfg)
    phi0 = p0.value.real
    phi2 = p2.value.real
    ratio = phi0 / phi2
    pref = p.xp * p.xp / (p.q * p.q) * ratio
    if p.x == 0.0:
        eps = complex(1.0 + pref, 0.0)
        err = pref * (p0.err_estimate / phi0 + p2.err_estimate / phi2)
        return ResponseResult(eps, None, "CLASSICAL", err)
    lam, lam_err = _lambda0_res(p.w, p.alpha, cfg)
    denom = p.x + 1j * p.y * lam
    eps = 1.0 + pref * p.z * lam / denom
    err = (abs(pref * p.z * p.x / (denom * denom)) * lam_err
           + abs(eps - 1.0) * (p0.err_estimate / phi0 + p2.err_estimate / phi2))
    return ResponseResult(eps, _sigma_from_eps(eps, p), "CLASSICAL", err)


def epsilon_lindhard(p: PlasmaPoint, cfg: QuadratureConfig | None = None) -> ResponseResult:
    """Collisionless permittivity at real frequency (retarded prescription).

    Requires y = 0 and x > 0.  The kernel poles sit on the axis at
    w0 -+ q/2 with w0 = x/q; real parts come from principal values, imaginary
    parts from the Plemelj pole terms, with the sign fixed so Im epsilon >= 0
    (dissipation) for x > 0.
    """
    cfg = cfg or DEFAULT_CONFIG
    if p.y != 0.0:
        raise DomainError("epsilon_lindhard requires y = 0 exactly")
    if p.x <= 0.0:
        raise DomainError("epsilon_lindhard requires x > 0")
    alpha = p.alpha
    w0 = p.x / p.q
    half_q = 0.5 * p.q

    def s(t):
        return log_fermi(t, alpha)

    Pp = principal_value(s, w0 + half_q, alpha, cfg)
    Pm = principal_value(s, w0 - half_q, alpha, cfg)
    lf_p = log_fermi(w0 + half_q, alpha)
    lf_m = log_fermi(w0 - half_q, alpha)
    L_reg = (Pp.value - Pm.value + 1j * math.pi * (lf_p - lf_m)) / p.q
    p2 = _phi2_res(alpha, cfg)
    phi2 = p2.value.real
    up2 = (p.xp / p.q) ** 2
    pref = up2 / (4.0 * phi2)
    eps = 1.0 - pref * L_reg
    err = (pref * (Pp.err_estimate + Pm.err_estimate) / p.q
           + abs(eps - 1.0) * p2.err_estimate / phi2)
    # sigma/sigma0 normalizes by nu and has no collisionless meaning.
    return ResponseResult(eps, None, "LINDHARD", err)


@lru_cache(maxsize=2048)
def _mermin_static_res(q: float, alpha: float, cfg: QuadratureConfig):
    """l(-q/2 + i0) - l(q/2 + i0): the static denominator of the d factor.

    Both values are principal-value integrals with the retarded Plemelj term
    i pi ln(1+e^(alpha - q^2/4)); the Plemelj parts are equal and cancel in
    the difference, which is real and odd in the pole position.
    """
    half_q = 0.5 * q

    def s(t):
        return log_fermi(t, alpha)

    Pp = principal_value(s, half_q, alpha, cfg)
    Pm = principal_value(s, -half_q, alpha, cfg)
    plemelj = 1j * math.pi * log_fermi(half_q, alpha)
    l_plus = Pp.value + plemelj
    l_minus = Pm.value + plemelj
    return l_minus - l_plus, Pp.err_estimate + Pm.err_estimate


def mermin_d_factor(p: PlasmaPoint, cfg: QuadratureConfig | None = None) -> complex:
    """d = [l(w-q/2) - l(w+q/2)] / [l(-q/2) - l(q/2)].

    The numerator is evaluated as -q L(w,q,alpha) (cancellation-free); the
    denominator through the principal-value path.  d -> lambda0(w) as q -> 0.
    """
    cfg = cfg or DEFAULT_CONFIG
    _require_collisional(p)
    L = _kernel_L_res(p.w, p.q, p.alpha, cfg)
    S, _ = _mermin_static_res(p.q, p.alpha, cfg)
    return -p.q * L.value / S


def epsilon_mermin(p: PlasmaPoint, cfg: QuadratureConfig | None = None) -> ResponseResult:
    """Permittivity of the momentum-space relaxation (particle-conserving) model.

    epsilon = 1 + (up^2 z)/(4 q phi2) * N / (x + i y d) with
    N = l(w-q/2) - l(w+q/2) = -q L(w,q,alpha) and d = N / [l(-q/2)-l(q/2)].
    At x = 0 the d factor cancels N exactly, so the static value is
    independent of y.
    """
    cfg = cfg or DEFAULT_CONFIG
    _require_collisional(p)
    L = _kernel_L_res(p.w, p.q, p.alpha, cfg)
    N = -p.q * L.value
    N_err = p.q * L.err_estimate
    S, S_err = _mermin_static_res(p.q, p.alpha, cfg)
    d = N / S
    p2 = _phi2_res(p.alpha, cfg)
    phi2 = p2.value.real
    pref = p.xp * p.xp * p.z / (4.0 * phi2 * p.q ** 3)
    denom = p.x + 1j * p.y * d
    eps = 1.0 + pref * N / denom
    err = (abs(pref * p.x / (denom * denom)) * N_err
           + abs(pref * N * N * p.y / (S * S * denom * denom)) * S_err
           + abs(eps - 1.0) * p2.err_estimate / phi2)
    return ResponseResult(eps, _sigma_from_eps(eps, p), "MERMIN", err)


def bgk_vs_mermin_delta(p: PlasmaPoint, cfg: QuadratureConfig | None = None) -> complex:
    """epsilon_bgk - epsilon_mermin at one point (they share the L integral)."""
    cfg = cfg or DEFAULT_CONFIG
    return epsilon_bgk(p, cfg).epsilon - epsilon_mermin(p, cfg).epsilon
