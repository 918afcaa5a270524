"""Dispersion functions of the electron gas at arbitrary degeneracy.

The building blocks of the longitudinal response: the Hilbert-type transform
F0 of the Fermi function, the Fermi-Dirac dispersion function lambda0 (the
finite-degeneracy generalization of the Van Kampen / plasma dispersion
function), the shifted logarithmic transforms l(w -+ q/2) and the quadratic
log kernel L(w, q, alpha).

Arguments w live off the real axis (Im w > 0 on the physical, retarded side;
Im w < 0 is accepted too and simply evaluates the same integral, which makes
the Schwarz reflection F(conj w) = conj F(w) testable).  w = 0 is excluded:
the lambda0(0) = 1 limit is reached smoothly through small imaginary w.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.special import wofz

from .errors import DomainError
from .fermi import _check_alpha, _phi0_res, fermi_f0, log_fermi
from .quadrature import (DEFAULT_CONFIG, IntegralResult, QuadratureConfig,
                         integrate_line)

__all__ = ["f0_hilbert", "lambda0", "lambda_classical", "l_shift", "kernel_L"]

def _check_w(w) -> complex:
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError("w must be finite")
    if w.imag == 0.0:
        raise DomainError("Im(w) must be nonzero; the collisionless limit "
                          "is handled by the principal-value path")
    return w


def _peak_points(center: float, halfwidth: float):
    """Pre-split points around a sharp rational peak of width ~halfwidth.

    The ladder k = 1, 3, 10, 30, ... continues geometrically so that, however
    small the width, no initial segment spans more than ~half a decade;
    otherwise resolving a 1e-14-wide peak from an O(10) segment exhausts the
    bisection depth right at the peak.
    """
    pts = [center]
    k = 1.0
    for _ in range(256):
        pts += [center - k * halfwidth, center + k * halfwidth]
        if k * halfwidth > 4000.0:
            break
        k *= 3.0
    return pts


@lru_cache(maxsize=8192)
def _f0_hilbert_res(w: complex, alpha: float, cfg: QuadratureConfig) -> IntegralResult:
    v = abs(w.imag)

    def f(t):
        return fermi_f0(t, alpha) / (t - w)

    return integrate_line(f, alpha, cfg, pole_distance=v,
                          breakpoints=_peak_points(w.real, v))


def f0_hilbert(w, alpha, cfg: QuadratureConfig | None = None) -> complex:
    """F0(w) = integral f0(t)/(t - w) dt over the real line, Im w != 0."""
    return _f0_hilbert_res(_check_w(w), _check_alpha(alpha),
                           cfg or DEFAULT_CONFIG).value


@lru_cache(maxsize=8192)
def _lambda0_res(w: complex, alpha: float, cfg: QuadratureConfig):
    F = _f0_hilbert_res(w, alpha, cfg)
    p0 = _phi0_res(alpha, cfg)
    two_phi0 = 2.0 * p0.value.real
    lam = 1.0 + w * F.value / two_phi0
    err = (abs(w) * F.err_estimate
           + abs(w * F.value) * (p0.err_estimate / p0.value.real)) / two_phi0
    return lam, err


def lambda0(w, alpha, cfg: QuadratureConfig | None = None) -> complex:
    """Dispersion function 1 + w F0(w) / (2 phi0(alpha)).

    Equals (1/(2 phi0)) integral t f0(t)/(t-w) dt; tends to the classical
    lambda_c(w) as alpha -> -inf and to 1 as w -> 0.  Decays like
    -phi2/(phi0 w^2) for large |w|.
    """
    return _lambda0_res(_check_w(w), _check_alpha(alpha),
                        cfg or DEFAULT_CONFIG)[0]


def lambda_classical(w) -> complex:
    """Van Kampen dispersion function 1 + w Z(w) of the Maxwellian plasma.

    Z is the plasma dispersion function, evaluated via the Faddeeva function
    for Im w >= 0; for Im w < 0 the value is reflected (conjugate symmetry of
    the defining integral, not the analytic continuation).
    """
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError("w must be finite")
    if w.imag < 0.0:
        return complex(np.conj(lambda_classical(np.conj(w))))
    z = 1j * math.sqrt(math.pi) * wofz(w)
    return 1.0 + w * complex(z)


@lru_cache(maxsize=8192)
def _l_res(pole: complex, alpha: float, cfg: QuadratureConfig) -> IntegralResult:
    v = abs(pole.imag)

    def f(t):
        return log_fermi(t, alpha) / (t - pole)

    return integrate_line(f, alpha, cfg, pole_distance=v,
                          breakpoints=_peak_points(pole.real, v))


def l_shift(w, shift, alpha, cfg: QuadratureConfig | None = None) -> complex:
    """Shifted log transform l(w - shift) = integral ln(1+e^(alpha-t^2))/(t-(w-shift)) dt."""
    w = complex(w)
    pole = _check_w(w - float(shift))
    return _l_res(pole, _check_alpha(alpha), cfg or DEFAULT_CONFIG).value


@lru_cache(maxsize=8192)
def _kernel_L_res(w: complex, q: float, alpha: float,
                  cfg: QuadratureConfig) -> IntegralResult:
    v = abs(w.imag)
    half_q = 0.5 * q
    bps = (_peak_points(w.real - half_q, v)
           + _peak_points(w.real + half_q, v) + [w.real])

    def f(t):
        d = t - w
        return log_fermi(t, alpha) / (d * d - half_q * half_q)

    # |(t-w)^2 - q^2/4| >= v^2 on the axis, and >= v for v >= 1.
    return integrate_line(f, alpha, cfg, pole_distance=min(v, v * v),
                          breakpoints=bps)


def kernel_L(w, q, alpha, cfg: QuadratureConfig | None = None) -> complex:
    """Quadratic log kernel L(w,q,alpha) = integral ln(1+e^(alpha-t^2)) / ((t-w)^2 - q^2/4) dt.

    Computed from its own integrand rather than as [l(w+q/2) - l(w-q/2)]/q:
    the difference form cancels catastrophically for small q and is kept only
    as a cross-check.  Satisfies q L = l(w+q/2) - l(w-q/2) and tends to
    -4 phi0 lambda0(w) as q -> 0.
    """
    q = float(q)
    if not (q > 0.0) or not math.isfinite(q):
        raise DomainError("q must be positive and finite")
    return _kernel_L_res(_check_w(w), q, _check_alpha(alpha),
                         cfg or DEFAULT_CONFIG).value
