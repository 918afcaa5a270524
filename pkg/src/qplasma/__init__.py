"""Longitudinal dielectric response of collisional quantum plasma.

Dimensionless BGK (relaxation-model) permittivity and conductivity of the
electron gas at arbitrary degeneracy, with the collisionless (Lindhard),
classical and Mermin variants and a numerical verification suite for the
limit identities connecting them.
"""

from .errors import DomainError, QuadratureFailure
from .fermi import fermi_f0, fermi_g, log_fermi, phi0, phi0_from_g, phi2
from .quadrature import (DEFAULT_CONFIG, IntegralResult, QuadratureConfig,
                         integrate_interval, integrate_line, principal_value,
                         tail_cut)
from .dispersion import f0_hilbert, kernel_L, l_shift, lambda0, lambda_classical
from .response import (METHODS, PlasmaPoint, ResponseResult,
                       bgk_vs_mermin_delta, epsilon_bgk, epsilon_bgk_alt,
                       epsilon_classical, epsilon_lindhard, epsilon_mermin,
                       mermin_d_factor, sigma_bgk)
from .verify import GRIDS, VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "DomainError", "QuadratureFailure",
    "fermi_f0", "fermi_g", "log_fermi", "phi0", "phi0_from_g", "phi2",
    "QuadratureConfig", "IntegralResult", "DEFAULT_CONFIG",
    "tail_cut", "integrate_line", "integrate_interval", "principal_value",
    "f0_hilbert", "lambda0", "lambda_classical", "l_shift", "kernel_L",
    "METHODS", "PlasmaPoint", "ResponseResult",
    "epsilon_bgk", "epsilon_bgk_alt", "sigma_bgk", "epsilon_classical",
    "epsilon_lindhard", "epsilon_mermin", "bgk_vs_mermin_delta",
    "mermin_d_factor",
    "GRIDS", "VerifyReport", "run_verify",
    "__version__",
]
