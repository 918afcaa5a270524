"""Acceptance suite: the limit identities of the response family, run at
fixed tolerances on the standard grid, one printed pass/fail line each.

Standard grid G: alpha in {-20,-5,0,5,20}; q in {1e-3,1e-2,0.1,0.5,1,2};
x in {0,0.3,1,3}; y in {0.01,0.1,1}; xp = 1.

Order checks (criteria 2 and 3) hold w = z/q fixed while q is reduced, which
is where the O(q^2) kernel expansion applies; holding z fixed instead lets
w = z/q grow like 1/q and the deviation collapses at O(q^4) below quadrature
noise (see the decision log).
"""

import json
import math
import os
import subprocess
import sys
import time

import pytest

from qplasma import (PlasmaPoint, epsilon_bgk, epsilon_bgk_alt,
                     epsilon_classical, epsilon_lindhard, epsilon_mermin,
                     kernel_L, lambda0, lambda_classical, mermin_d_factor,
                     phi0, phi0_from_g, sigma_bgk)
from oracles import lambda_c_oracle

ALPHAS = (-20.0, -5.0, 0.0, 5.0, 20.0)
QS = (1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0)
XS = (0.0, 0.3, 1.0, 3.0)
YS = (0.01, 0.1, 1.0)
XP = 1.0

LAMBDA_W_POINTS = (0.5 + 0.1j, 1 + 0.01j, 2 + 1j, 5j)

_REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _grid_points(qs=QS, xs=XS):
    for a in ALPHAS:
        for q in qs:
            for x in xs:
                for y in YS:
                    yield PlasmaPoint(a, q, x, y, XP)


def _report(num, name, dev, tol, extra=""):
    ok = dev <= tol
    print("ACCEPTANCE %02d %-28s %s (max dev %.3e, tol %.3e%s)"
          % (num, name, "PASS" if ok else "FAIL", dev, tol, extra))
    return ok


def test_criterion_01_dual_representation():
    t0 = time.time()
    dev = 0.0
    for p in _grid_points():
        e1 = epsilon_bgk(p).epsilon
        e2 = epsilon_bgk_alt(p).epsilon
        dev = max(dev, abs(e1 - e2) / abs(e1))
    elapsed = time.time() - t0
    ok = _report(1, "dual_representation", dev, 1e-8,
                 ", %.1f s" % elapsed)
    assert ok
    assert elapsed <= 30.0


def _classical_dev(p):
    eb = epsilon_bgk(p).epsilon
    ec = epsilon_classical(p).epsilon
    return abs(eb - ec) / abs(ec - 1.0)


def test_criterion_02_classical_limit():
    dev = 0.0
    for a in ALPHAS:
        for x in XS:
            for y in YS:
                dev = max(dev, _classical_dev(PlasmaPoint(a, 1e-3, x, y, XP)))
    ok_mag = _report(2, "classical_limit_magnitude", dev, 5e-4)
    ratio_dev = 0.0
    for a in ALPHAS:
        for x in XS:
            for y in YS:
                d3 = _classical_dev(PlasmaPoint(a, 1e-3, 1e-3 * x, 1e-3 * y, XP))
                d2 = _classical_dev(PlasmaPoint(a, 1e-2, 1e-2 * x, 1e-2 * y, XP))
                ratio_dev = max(ratio_dev, abs(d2 / d3 - 100.0))
    ok_ord = _report(2, "classical_limit_order", ratio_dev, 20.0)
    assert ok_mag and ok_ord


def _d_dev(p):
    d = mermin_d_factor(p)
    lam = lambda0(p.w, p.alpha)
    return abs(d - lam) / abs(lam)


def test_criterion_03_mermin_limit():
    dev = 0.0
    for a in ALPHAS:
        for x in XS:
            for y in YS:
                dev = max(dev, _d_dev(PlasmaPoint(a, 1e-3, x, y, XP)))
    ok_mag = _report(3, "mermin_d_limit", dev, 5e-4)
    ratio_dev = 0.0
    for a in ALPHAS:
        for x in XS:
            for y in YS:
                d3 = _d_dev(PlasmaPoint(a, 1e-3, 1e-3 * x, 1e-3 * y, XP))
                d2 = _d_dev(PlasmaPoint(a, 1e-2, 1e-2 * x, 1e-2 * y, XP))
                ratio_dev = max(ratio_dev, abs(d2 / d3 - 100.0))
    ok_ord = _report(3, "mermin_d_order", ratio_dev, 20.0)
    eps_dev = 0.0
    for a in ALPHAS:
        for x in XS:
            for y in YS:
                p = PlasmaPoint(a, 1e-3, x, y, XP)
                eb = epsilon_bgk(p).epsilon
                em = epsilon_mermin(p).epsilon
                eps_dev = max(eps_dev, abs(em - eb) / abs(eb - 1.0))
    ok_eps = _report(3, "mermin_vs_bgk", eps_dev, 1e-3)
    assert ok_mag and ok_ord and ok_eps


def test_criterion_04_maxwellian_degeneration():
    dev = 0.0
    for w in LAMBDA_W_POINTS:
        lc = lambda_classical(w)
        dev = max(dev, abs(lambda0(w, -20.0) - lc) / abs(lc))
    assert _report(4, "maxwellian_lambda0", dev, 1e-6)


def test_criterion_05_van_kampen_oracle():
    dev = 0.0
    for w in LAMBDA_W_POINTS:
        ref = lambda_c_oracle(w)
        dev = max(dev, abs(lambda_classical(w) - ref) / abs(ref))
    assert _report(5, "van_kampen_oracle", dev, 1e-8)


def test_criterion_06_integration_by_parts():
    dev = 0.0
    for a in (-5.0, 0.0, 5.0):
        for w in (1 + 0.1j, 0.5 + 0.5j):
            rhs = -4.0 * phi0(a) * lambda0(w, a)
            dev = max(dev, abs(kernel_L(w, 1e-4, a) - rhs) / abs(rhs))
    assert _report(6, "integration_by_parts", dev, 1e-6)


def test_criterion_07_moment_identity():
    dev = 0.0
    for a in ALPHAS:
        dev = max(dev, abs(phi0(a) - phi0_from_g(a)) / phi0(a))
    assert _report(7, "moment_identity", dev, 1e-8)


def test_criterion_08_sigma_eps_linkage():
    dev = 0.0
    for p in _grid_points():
        if p.x == 0.0:
            continue
        r = sigma_bgk(p)
        lhs = r.epsilon - 1.0
        rhs = 1j * (p.xp ** 2 / (p.x * p.y)) * r.sigma_ratio
        dev = max(dev, abs(lhs - rhs) / abs(lhs))
    assert _report(8, "sigma_eps_linkage", dev, 1e-12)


def test_criterion_09_collisionless_continuity():
    dev = 0.0
    for a in (-5.0, 0.0, 5.0):
        for q in (0.5, 1.0):
            for x in (0.5, 1.0, 2.0):
                el = epsilon_lindhard(PlasmaPoint(a, q, x, 0.0, XP)).epsilon
                eb = epsilon_bgk(PlasmaPoint(a, q, x, 1e-6, XP)).epsilon
                dev = max(dev, abs(el - eb) / abs(el))
    assert _report(9, "collisionless_continuity", dev, 1e-3)


def test_criterion_10_mermin_static_nu_independence():
    dev = 0.0
    for a in (-5.0, 0.0, 5.0):
        for q in (0.5, 1.0):
            r1 = epsilon_mermin(PlasmaPoint(a, q, 0.0, 0.1, XP))
            r2 = epsilon_mermin(PlasmaPoint(a, q, 0.0, 1.0, XP))
            bound = 10.0 * (r1.err_estimate + r2.err_estimate)
            dev = max(dev, abs(r1.epsilon - r2.epsilon) / bound)
    assert _report(10, "mermin_static_nu_free", dev, 1.0)


def _run_cli(args, timeout):
    env = dict(os.environ)
    env["PYTHONPATH"] = os.path.join(_REPO_ROOT, "src") + os.pathsep + \
        env.get("PYTHONPATH", "")
    return subprocess.run([sys.executable, "-m", "qplasma.cli"] + args,
                          capture_output=True, text=True,
                          timeout=timeout, env=env, cwd=_REPO_ROOT)


def test_criterion_11_end_to_end(tmp_path):
    t0 = time.time()
    proc = _run_cli(["verify", "--grid", "small"], timeout=120)
    elapsed = time.time() - t0
    ok_verify = proc.returncode == 0 and elapsed <= 60.0
    print("ACCEPTANCE 11 verify_small                %s (exit %d, %.1f s)"
          % ("PASS" if ok_verify else "FAIL", proc.returncode, elapsed))
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert elapsed <= 60.0

    sweep_args = ["sweep", "--vary", "q", "--start", "1e-3", "--stop", "1",
                  "--steps", "8", "--scale", "log", "--methods",
                  "bgk,mermin,classical", "--alpha", "0", "--x", "1",
                  "--y", "0.1", "--xp", "1", "--format", "csv"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    p1 = _run_cli(sweep_args + ["--out", str(a)], timeout=120)
    p2 = _run_cli(sweep_args + ["--out", str(b)], timeout=120)
    assert p1.returncode == 0 and p2.returncode == 0, p1.stderr + p2.stderr
    identical = a.read_bytes() == b.read_bytes()
    print("ACCEPTANCE 11 sweep_determinism           %s"
          % ("PASS" if identical else "FAIL"))
    assert identical
