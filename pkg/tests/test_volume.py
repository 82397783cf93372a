import math

import numpy as np
import pytest

from ghzpolytope import _mc_kernel_py
from ghzpolytope.errors import InvalidArgumentError, UnsupportedSizeError
from ghzpolytope.volume import (
    BISEP_MINUS_FBI,
    FBI,
    GENUINE,
    KERNEL_BACKEND,
    MC_FAMILIES,
    MERMIN,
    RVR_LIMITS,
    hull_volume,
    mc_relative_volume,
    rel_vol_exact,
    rvr,
    sample_simplex,
    vol_exact,
)

try:
    from ghzpolytope import _mc_kernel

    HAVE_EXTENSION = True
except ImportError:
    HAVE_EXTENSION = False


# ------------------------------------------------------------ closed forms


def test_hull_volume_triangle():
    # q=0: plain regular simplex; equilateral triangle of side s
    s = 1.7
    assert hull_volume(2, s, 0, 1.0) == pytest.approx(np.sqrt(3) * s**2 / 4)


def test_hull_volume_right_triangle():
    ell, length = 0.8, 2.5
    assert hull_volume(1, ell, 1, length) == pytest.approx(0.5 * ell * length)


def test_hull_volume_full_simplex():
    for n in (2, 3):
        d = 2**n
        assert hull_volume(d - 1, np.sqrt(2), 0, 1.0) == pytest.approx(
            np.sqrt(d) / math.factorial(d - 1)
        )


def test_hull_volume_reproduces_fbi_volume():
    for n in (2, 3, 4):
        d = 2**n
        cube_vol = (2 * np.sqrt(2) / d) ** (d // 2)
        got = hull_volume(d // 2 - 1, 1.0, d // 2, cube_vol)
        assert got == pytest.approx(vol_exact(FBI, n), rel=1e-12)


def test_vol_exact_values():
    assert vol_exact("ghz", 2) == pytest.approx(1 / 3)
    # simplex-volume oracle: sqrt(d)/(d-1)! for side sqrt(2)
    for n in (2, 3, 4):
        d = 2**n
        assert vol_exact("ghz", n) == pytest.approx(np.sqrt(d) / math.factorial(d - 1))
    # fbi must equal rel_fbi * vol_ghz = 1/2 * 1/3; the n=2 degeneracy
    # (B_2 = F_2, relative volume 1/2) forces 1/6
    assert vol_exact(FBI, 2) == pytest.approx(1 / 6)
    assert vol_exact(FBI, 2) == pytest.approx(0.5 * vol_exact("ghz", 2))
    assert vol_exact(MERMIN, 3) == pytest.approx(0.5**7 * np.sqrt(8) / (2 * math.factorial(7)))
    assert vol_exact(GENUINE, 3) == pytest.approx(
        8 * np.sqrt(8) / (2**7 * math.factorial(7))
    )


def test_rel_vol_values():
    assert rel_vol_exact(GENUINE, 2) == 0.5
    assert rel_vol_exact(GENUINE, 3) == 0.0625
    assert rel_vol_exact(FBI, 3) == 0.09375
    assert rel_vol_exact(BISEP_MINUS_FBI, 2) == 0.0
    assert rel_vol_exact(MERMIN, 3) == 0.00390625
    assert rel_vol_exact(MERMIN, 2) == 0.0


def test_trisection_sums_to_one_exactly():
    for n in range(2, 21):
        total = (
            rel_vol_exact(GENUINE, n)
            + rel_vol_exact(BISEP_MINUS_FBI, n)
            + rel_vol_exact(FBI, n)
        )
        assert total == 1.0


def test_rvr_values():
    assert rvr(GENUINE, 2) == pytest.approx(0.5 * 4 ** (1 / 3))
    for n in (2, 3, 4, 6):
        d = 2**n
        assert rvr(GENUINE, n) == pytest.approx(0.5 * d ** (1 / (d - 1)))
        assert rvr(FBI, n) == pytest.approx(rel_vol_exact(FBI, n) ** (1 / (d - 1)))
    # n=3: ((1-nu)^7 / 2)^(1/7) with nu = 1/2
    assert rvr(MERMIN, 3) == pytest.approx(0.5 * 2 ** (-1 / 7))
    assert rvr(MERMIN, 2) == 0.0


def test_rvr_limits_at_twenty():
    for fam in (GENUINE, BISEP_MINUS_FBI, FBI):
        assert abs(rvr(fam, 20) - RVR_LIMITS[fam]) < 0.02
    assert abs(rvr(MERMIN, 20) - 1.0) < 0.02


def test_rvr_monotone_approach():
    for fam in MC_FAMILIES:
        errs = [abs(rvr(fam, n) - RVR_LIMITS[fam]) for n in range(6, 21)]
        assert all(a >= b - 1e-15 for a, b in zip(errs, errs[1:]))


def test_invalid_families():
    with pytest.raises(InvalidArgumentError):
        rel_vol_exact("nope", 3)
    with pytest.raises(InvalidArgumentError):
        rvr(GENUINE, 1)
    with pytest.raises(UnsupportedSizeError):
        rel_vol_exact(GENUINE, 21)


# ------------------------------------------------------------- Monte Carlo


def test_sampler_marginal_means():
    rng = np.random.default_rng(77)
    d = 8
    m = 200_000
    p = sample_simplex(rng, m, d)
    np.testing.assert_allclose(p.sum(axis=1), 1.0, atol=1e-12)
    sigma = np.sqrt((1 / d) * (1 - 1 / d) / m)  # crude scale bound
    assert np.abs(p.mean(axis=0) - 1 / d).max() < 4 * sigma


@pytest.mark.parametrize("family", MC_FAMILIES)
def test_mc_matches_exact_n2_n3(family):
    for n in (2, 3):
        exact = rel_vol_exact(family, n)
        report = mc_relative_volume(family, n, samples=200_000, seed=123)
        band = 4 * max(report.mc_stderr, 1e-6)
        assert abs(report.mc_estimate - exact) <= band
        assert report.exact == exact
        assert report.samples == 200_000
        assert report.seed == 123


def test_mc_deterministic_across_threads():
    kwargs = dict(samples=150_000, seed=9)
    single = mc_relative_volume(GENUINE, 3, threads=1, **kwargs)
    multi = mc_relative_volume(GENUINE, 3, threads=4, **kwargs)
    assert single.mc_estimate == multi.mc_estimate


def test_mc_deterministic_across_backends():
    kwargs = dict(samples=120_000, seed=31)
    for family in MC_FAMILIES:
        fallback = mc_relative_volume(family, 3, kernel=_mc_kernel_py, **kwargs)
        default = mc_relative_volume(family, 3, **kwargs)
        assert fallback.mc_estimate == default.mc_estimate


@pytest.mark.skipif(not HAVE_EXTENSION, reason="compiled kernel not built")
def test_kernels_agree_rowwise():
    rng = np.random.default_rng(5)
    p = sample_simplex(rng, 50_000, 16)
    for code in range(4):
        nu = 0.5
        assert _mc_kernel.count_hits(p, code, nu) == _mc_kernel_py.count_hits(p, code, nu)


def test_mc_guards():
    with pytest.raises(InvalidArgumentError):
        mc_relative_volume(GENUINE, 3, samples=100, seed=1)
    with pytest.raises(UnsupportedSizeError):
        mc_relative_volume(GENUINE, 7, samples=20_000, seed=1)


def test_backend_reported():
    report = mc_relative_volume(FBI, 2, samples=20_000, seed=1)
    assert report.backend == KERNEL_BACKEND
    assert report.rng == "philox4x64"
