import math

import numpy as np
import pytest

from qplasma import (DEFAULT_CONFIG, DomainError, f0_hilbert, kernel_L,
                     l_shift, lambda0, lambda_classical, phi0)
from qplasma.quadrature import integrate_line
from oracles import lambda_c_oracle, plasma_zeta

# frozen composite-Simpson oracle values (tests/oracles.py)
F0_2_05J_A0 = -0.5470831102670926 + 0.2200591334927742j
LAMBDA0_03_02J_A5 = 0.8471779706844396 + 0.18733423137568014j
L_075_1J_A0 = -0.39806376244413955 + 0.8364697984864717j
KERNEL_L_1_1J_Q1_A0 = -0.2632235283222268 - 0.4033559489426676j
ERFC_1 = 0.15729920705028522

MAXWELL_W_POINTS = (0.5 + 0.1j, 1 + 0.01j, 2 + 1j, 5j)


def test_f0_hilbert_frozen():
    got = f0_hilbert(2 + 0.5j, 0.0)
    assert abs(got - F0_2_05J_A0) <= 1e-9 * abs(F0_2_05J_A0)


def test_f0_hilbert_maxwellian_limit():
    # for alpha -> -inf, F0 -> exp(alpha) sqrt(pi) Z(w)
    got = f0_hilbert(1j, -20.0)
    ref = math.exp(-20.0) * math.sqrt(math.pi) * plasma_zeta(1j)
    assert abs(got - ref) <= 1e-6 * abs(ref)


def test_f0_hilbert_purely_imaginary_on_imaginary_axis():
    got = f0_hilbert(0.7j, 1.0)
    assert abs(got.real) <= 1e-12 * abs(got.imag)


def test_f0_hilbert_rejects_real_w():
    with pytest.raises(DomainError):
        f0_hilbert(1.0 + 0j, 0.0)


def test_lambda0_at_origin_limit():
    assert abs(lambda0(1e-14j, 0.0) - 1.0) <= 1e-10


def test_lambda0_maxwellian_degeneration():
    for w in MAXWELL_W_POINTS:
        lc = lambda_classical(w)
        assert abs(lambda0(w, -20.0) - lc) <= 1e-6 * abs(lc)


def test_lambda0_frozen_and_tf0_form():
    got = lambda0(0.3 + 0.2j, 5.0)
    assert abs(got - LAMBDA0_03_02J_A5) <= 1e-9 * abs(LAMBDA0_03_02J_A5)
    # second integral form: (1/(2 phi0)) integral t f0/(t-w) dt
    w = 0.3 + 0.2j
    r = integrate_line(lambda t: t * (1.0 / (1.0 + np.exp(t * t - 5.0))) / (t - w),
                       5.0, pole_distance=0.2, breakpoints=(0.3,))
    other = r.value / (2.0 * phi0(5.0))
    assert abs(got - other) <= 1e-9 * abs(got)


def test_lambda0_large_w_decay():
    for alpha in (-5.0, 0.0, 5.0):
        assert abs(lambda0(100j, alpha)) <= 2e-4


def test_lambda_classical_basics():
    assert lambda_classical(0.0) == 1.0
    got = lambda_classical(1j)
    ref = 1.0 + 1j * (1j * math.sqrt(math.pi) * math.e * ERFC_1)
    assert abs(got - ref) <= 1e-12 * abs(ref)


def test_lambda_classical_large_w_asymptote():
    # lambda_c = 1 + w Z(w) with Z ~ -1/w - 1/(2 w^3), i.e. -> -1/(2 w^2)
    w = 100j
    ref = -1.0 / (2.0 * w * w)
    assert abs(lambda_classical(w) - ref) <= 1e-8


def test_lambda_classical_vs_series_cf_oracle():
    for w in MAXWELL_W_POINTS:
        ref = lambda_c_oracle(w)
        assert abs(lambda_classical(w) - ref) <= 1e-8 * abs(ref)


def test_l_shift_frozen_and_identical_shifts():
    got = l_shift(1 + 1j, 0.25, 0.0)
    assert abs(got - L_075_1J_A0) <= 1e-9 * abs(L_075_1J_A0)
    assert l_shift(1 + 1j, 0.0, 0.0) == l_shift(1 + 1j, -0.0, 0.0)


def test_l_shift_conjugation():
    w, alpha = 1.2 + 0.4j, 1.5
    up = l_shift(w, 0.3, alpha)
    dn = l_shift(np.conj(w), 0.3, alpha)
    assert abs(dn - np.conj(up)) <= 1e-12 * abs(up)


def test_kernel_L_frozen():
    got = kernel_L(1 + 1j, 1.0, 0.0)
    assert abs(got - KERNEL_L_1_1J_Q1_A0) <= 1e-9 * abs(KERNEL_L_1_1J_Q1_A0)


def test_kernel_L_partial_fraction_identity():
    w, q, alpha = 1 + 1j, 1.0, 0.0
    lhs = q * kernel_L(w, q, alpha)
    rhs = l_shift(w, -q / 2, alpha) - l_shift(w, q / 2, alpha)
    assert abs(lhs - rhs) <= 1e-9 * abs(lhs)


def test_kernel_L_small_q_integration_by_parts():
    for alpha in (-5.0, 0.0, 5.0):
        for w in (1 + 0.1j, 0.5 + 0.5j):
            lhs = kernel_L(w, 1e-4, alpha)
            rhs = -4.0 * phi0(alpha) * lambda0(w, alpha)
            assert abs(lhs - rhs) <= 1e-6 * abs(rhs)


def test_schwarz_reflection():
    w, alpha = 1.3 + 0.7j, 2.0
    for f in (lambda W: f0_hilbert(W, alpha),
              lambda W: lambda0(W, alpha),
              lambda W: l_shift(W, 0.25, alpha),
              lambda W: kernel_L(W, 0.8, alpha)):
        val = f(w)
        assert abs(f(np.conj(w)) - np.conj(val)) <= 1e-12 * abs(val)


def test_domain_errors():
    with pytest.raises(DomainError):
        lambda0(0.5 + 0j, 0.0)
    with pytest.raises(DomainError):
        kernel_L(1 + 1j, 0.0, 0.0)
    with pytest.raises(DomainError):
        kernel_L(1 + 1j, -1.0, 0.0)
    with pytest.raises(DomainError):
        l_shift(1.0 + 0j, 0.0, 0.0)
