import math

import numpy as np
import pytest

from difftop.diskmodel import DomainError, Q, include_k, q, random_disk, section
from difftop.smoothfn import lambda_fn, lambda_inv, smoothness_check, xi
from difftop.subdivision import (
    CylPoint, in_L, phi_map, psi, psi_inv, region_classify, rho, source_point,
)

RNG = np.random.default_rng(77)


def test_phi_branch_agreement_at_walls():
    for _ in range(50):
        n = int(RNG.integers(1, 4))
        v = random_disk(n - 1, RNG)
        t = float(RNG.uniform())
        # wall 1/3: branch 1 and 2 both give (q(v, lambda(t/3)), lambda(t))
        d, y = phi_map(n, 1.0 / 3.0, t, v)
        assert np.max(np.abs(d - q(n - 1, v, lambda_fn(t / 3.0)))) < 1e-12
        assert abs(y - lambda_fn(t)) < 1e-12
        # wall 2/3: both give (q(v, lambda(1 - t/3)), lambda(t))
        d, y = phi_map(n, 2.0 / 3.0, t, v)
        assert np.max(np.abs(d - q(n - 1, v, lambda_fn(1.0 - t / 3.0)))) < 1e-12
        assert abs(y - lambda_fn(t)) < 1e-12


def test_phi_middle_branch_at_top():
    v = random_disk(1, RNG)
    d, y = phi_map(2, 0.5, 1.0, v)
    # (3-2t)s + t - 1 at t=1 is s, so the disk slot is lambda(1/2)
    assert np.max(np.abs(d - q(1, v, lambda_fn(0.5)))) < 1e-12
    assert y == 1.0


def test_phi_domain_errors():
    v = random_disk(1, RNG)
    with pytest.raises(DomainError):
        phi_map(2, 1.2, 0.5, v)
    with pytest.raises(DomainError):
        source_point(2, v, 0.5, -0.1)


def test_region_classify_examples():
    assert region_classify(0.1, 0.5, "V") == (1,)
    assert region_classify(0.5, 0.9, "W") == (2,)
    assert region_classify(0.2, 0.9, "W") == (1,)
    assert region_classify(1.0 / 3.0, 0.2, "V") == (1, 2)
    assert region_classify(0.3, 0.9, "W") == (1, 2)
    with pytest.raises(ValueError):
        region_classify(0.1, 0.5, "X")


def test_rho_fixes_identity_bands():
    for s in (0.05, 0.1, 0.16, 0.87, 0.95):
        w = source_point(2, random_disk(1, RNG), s, float(RNG.uniform()))
        assert np.max(np.abs(rho(2, w) - w)) < 1e-10


def test_rho_fixes_center():
    w = source_point(2, random_disk(1, RNG), 0.5, 0.3)
    assert np.max(np.abs(rho(2, w) - w)) < 1e-10


def test_rho_moves_blend_band():
    # xi(0.25) != 0.25, so rho genuinely moves this band
    w = source_point(2, random_disk(1, RNG), 0.25, 0.4)
    r1 = rho(2, w)
    r2 = rho(2, r1)
    assert np.max(np.abs(r1 - w)) > 1e-6
    assert np.max(np.abs(r2 - r1)) > 1e-6  # not idempotent
    assert xi(0.25) != 0.25


def test_psi0_is_chart_inverse():
    t = 0.25
    w = np.array([math.cos(math.pi * t), math.sin(math.pi * t)])
    c = psi(0, w)
    assert np.allclose(c.disk, [1.0])
    assert c.time == pytest.approx(t, abs=1e-14)
    assert np.max(np.abs(psi_inv(0, CylPoint(np.array([1.0]), t)) - w)) < 1e-14


def test_psi_boundary_display():
    # time-zero slice: s=1/2 gives (q(v, lambda(1/2)), 0)
    for n in (1, 2, 3):
        v = random_disk(n - 1, RNG)
        w = source_point(n, v, 0.5, 0.0)
        c = psi(n, w)
        assert abs(c.time) < 1e-12
        assert np.max(np.abs(c.disk - q(n - 1, v, lambda_fn(0.5)))) < 1e-10
        # s=0.1 is in the identity band: (q(v,0), lambda(0.7))
        w = source_point(n, v, 0.1, 0.0)
        c = psi(n, w)
        assert np.max(np.abs(c.disk - q(n - 1, v, 0.0))) < 1e-10
        assert c.time == pytest.approx(lambda_fn(0.7), abs=1e-10)


def test_psi_boundary_lands_in_L():
    for _ in range(100):
        n = int(RNG.integers(1, 4))
        w = include_k(n, random_disk(n, RNG))
        assert in_L(n, psi(n, w), tol=1e-8)


def test_psi_roundtrip_both_ways():
    for _ in range(300):
        n = int(RNG.integers(0, 4))
        w = random_disk(n + 1, RNG)
        w2 = psi_inv(n, psi(n, w))
        d = np.max(np.abs(w2 - w))
        if d > 1e-8:
            # certified wrinkle collapse: images must be bit-close
            c1, c2 = psi(n, w), psi(n, w2)
            assert np.max(np.abs(c1.disk - c2.disk)) < 1e-11
            assert abs(c1.time - c2.time) < 1e-11
        c = CylPoint(random_disk(n, RNG), float(RNG.uniform()))
        c2 = psi(n, psi_inv(n, c))
        assert np.max(np.abs(c2.disk - c.disk)) < 1e-8
        assert abs(c2.time - c.time) < 1e-8


def test_psi_inv_boundary_example():
    # the time-zero cylinder point over the middle band comes back at s = 1/2
    n = 2
    v = random_disk(n - 1, RNG)
    c = CylPoint(q(n - 1, v, lambda_fn(0.5)), 0.0)
    w = psi_inv(n, c)
    cc = section(n + 1, w)
    assert lambda_inv(cc[n - 1]) == pytest.approx(0.5, abs=1e-9)


def test_psi_inv_domain_errors():
    with pytest.raises(DomainError):
        psi_inv(1, CylPoint(np.array([1.0, 0.0]), 1.5))
    with pytest.raises(DomainError):
        psi_inv(1, CylPoint(np.array([5.0, 0.0]), 0.5))


def test_in_L_examples():
    assert in_L(1, CylPoint(np.array([0.6, 0.8]), 0.0))
    assert in_L(1, CylPoint(np.array([1.0, 0.0]), 0.7))
    assert not in_L(1, CylPoint(np.array([math.cos(1.0), math.sin(1.0)]), 0.5))


def test_seam_smoothness_with_and_without_wrinkle():
    n = 2
    v = random_disk(n - 1, RNG)
    t = 0.45

    def coord(j, wrinkle):
        def f(s):
            s = min(1.0, max(0.0, s))
            c = psi(n, source_point(n, v, s, t), wrinkle=wrinkle)
            return np.concatenate([c.disk, [c.time]])[j]
        return f

    for seam in (1.0 / 3.0, 2.0 / 3.0):
        assert all(smoothness_check(coord(j, True), seam, 3).passed
                   for j in range(n + 2))
        assert any(smoothness_check(coord(j, False), seam, 1).verdicts[1] == "fail"
                   for j in range(n + 2))
