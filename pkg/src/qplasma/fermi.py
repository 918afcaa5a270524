"""Fermi-Dirac kernels and their half-line moments.

Everything is dimensionless: speeds are in thermal units v0 = sqrt(2 kB T/m)
and alpha = mu/(kB T) is the degeneracy parameter (alpha -> -inf is the
Maxwellian limit, alpha -> +inf fully degenerate).  Values stay meaningful
over the whole real alpha axis; beyond |alpha| ~ 1e6 the degenerate /
Maxwellian asymptotes are exact to double precision anyway.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .quadrature import (DEFAULT_CONFIG, IntegralResult, QuadratureConfig,
                         integrate_interval, tail_cut)

__all__ = ["fermi_f0", "fermi_g", "log_fermi", "phi0", "phi0_from_g", "phi2"]


def _check_alpha(alpha) -> float:
    a = float(alpha)
    if not math.isfinite(a):
        raise DomainError("alpha must be finite (got %r)" % (alpha,))
    return a


def _maybe_scalar(out, scalar_in):
    return float(out) if scalar_in else out


def fermi_f0(t, alpha):
    """Fermi function 1/(1 + exp(t^2 - alpha)); even in t, values in (0, 1).

    Evaluated through exp(-|x|) only, so it saturates to 0 or 1 without
    overflow for any finite arguments.
    """
    a = _check_alpha(alpha)
    scalar = np.isscalar(t)
    x = np.asarray(t, dtype=float) ** 2 - a
    e = np.exp(-np.abs(x))
    out = np.where(x > 0.0, e / (1.0 + e), 1.0 / (1.0 + e))
    return _maybe_scalar(out, scalar)


def fermi_g(c, alpha):
    """Derivative kernel exp(c^2-alpha)/(1+exp(c^2-alpha))^2 = f0 (1 - f0).

    Peaks at 1/4 where c^2 = alpha and decays symmetrically in c^2 - alpha;
    computed from exp(-|x|) so both tails keep full relative accuracy.
    """
    a = _check_alpha(alpha)
    scalar = np.isscalar(c)
    x = np.asarray(c, dtype=float) ** 2 - a
    e = np.exp(-np.abs(x))
    out = e / (1.0 + e) ** 2
    return _maybe_scalar(out, scalar)


def log_fermi(t, alpha):
    """Logarithmic kernel ln(1 + exp(alpha - t^2)) >= 0.

    Stable softplus form: max(x, 0) + log1p(exp(-|x|)) with x = alpha - t^2,
    so large positive x returns x itself and large negative x underflows
    smoothly; no NaN anywhere on the documented domain.
    """
    a = _check_alpha(alpha)
    scalar = np.isscalar(t)
    x = a - np.asarray(t, dtype=float) ** 2
    out = np.maximum(x, 0.0) + np.log1p(np.exp(-np.abs(x)))
    return _maybe_scalar(out, scalar)


def _moment_cut(alpha: float, cfg: QuadratureConfig) -> float:
    # +2 absorbs the polynomial factor c^2 against the exp(alpha - c^2) bound.
    return tail_cut(alpha, cfg.tail_eps, 1.0) + 2.0


def _edge_seeds(alpha: float):
    return (math.sqrt(alpha),) if alpha > 0.0 else ()


@lru_cache(maxsize=512)
def _phi0_res(alpha: float, cfg: QuadratureConfig) -> IntegralResult:
    return integrate_interval(
        lambda c: fermi_f0(c, alpha), 0.0, _moment_cut(alpha, cfg), cfg,
        breakpoints=_edge_seeds(alpha), scale_hint=math.exp(min(alpha, 0.0)))


@lru_cache(maxsize=512)
def _phi2_res(alpha: float, cfg: QuadratureConfig) -> IntegralResult:
    return integrate_interval(
        lambda c: c * c * fermi_f0(c, alpha), 0.0, _moment_cut(alpha, cfg), cfg,
        breakpoints=_edge_seeds(alpha), scale_hint=math.exp(min(alpha, 0.0)))


@lru_cache(maxsize=512)
def _phi0_from_g_res(alpha: float, cfg: QuadratureConfig) -> IntegralResult:
    return integrate_interval(
        lambda c: 2.0 * c * c * fermi_g(c, alpha), 0.0, _moment_cut(alpha, cfg),
        cfg, breakpoints=_edge_seeds(alpha),
        scale_hint=math.exp(min(alpha, 0.0)))


def phi0(alpha, cfg: QuadratureConfig | None = None) -> float:
    """Zeroth moment integral_0^inf f0(c) dc of the Fermi function."""
    return _phi0_res(_check_alpha(alpha), cfg or DEFAULT_CONFIG).value.real


def phi2(alpha, cfg: QuadratureConfig | None = None) -> float:
    """Second moment integral_0^inf c^2 f0(c) dc."""
    return _phi2_res(_check_alpha(alpha), cfg or DEFAULT_CONFIG).value.real


def phi0_from_g(alpha, cfg: QuadratureConfig | None = None) -> float:
    """phi0 through the identity integral_0^inf 2 g(c) c^2 dc.

    Independent code path kept alongside phi0 so the moment identity can be
    checked numerically.
    """
    return _phi0_from_g_res(_check_alpha(alpha), cfg or DEFAULT_CONFIG).value.real
