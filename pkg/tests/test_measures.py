import math
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcorr.errors import DomainError
from qcorr.hawking_channel import bogoliubov
from qcorr.matrix_core import SIGMA_X, SIGMA_Z
from qcorr.measures import (
    UinConvention,
    bloch_vector,
    consonance,
    fibonacci_sphere,
    n_matrix,
    skew_information,
    uin,
    uin_bruteforce,
)
from qcorr.states import Bipartition, GisinParams, gisin_state, reduced_state

STRICT, RADIAL = UinConvention.STRICT, UinConvention.RADIAL_LIMIT
I2 = np.eye(2)


def haar_unitary(rng, n=2):
    z = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_state(rng, dim=4, rank=None):
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def maximally_mixed_marginal_state(rng, terms=3):
    """Mixture of maximally entangled states: the first marginal is exactly I/2."""
    bell = np.array([1, 0, 0, 1]) / math.sqrt(2)
    p = rng.dirichlet(np.ones(terms))
    rho = np.zeros((4, 4), dtype=complex)
    for pk in p:
        k = np.kron(I2, haar_unitary(rng)) @ bell
        rho += pk * np.outer(k, k.conj())
    return rho


def test_skew_information_examples():
    for obs in (SIGMA_X, np.kron(SIGMA_Z, I2), np.diag([1.0, 2.0, -1.0, 0.5])):
        obs = np.asarray(obs, dtype=complex)
        if obs.shape == (2, 2):
            obs = np.kron(obs, I2)
        assert skew_information(np.eye(4) / 4, obs) == pytest.approx(0.0, abs=1e-15)
    assert skew_information(np.diag([1.0, 0.0]), SIGMA_X) == pytest.approx(1.0, abs=1e-14)
    rho = np.diag([0.1, 0.2, 0.3, 0.4])
    assert skew_information(rho, np.kron(SIGMA_Z, I2)) == pytest.approx(0.0, abs=1e-15)


def test_skew_information_rejects_non_hermitian():
    with pytest.raises(DomainError):
        skew_information(np.eye(2) / 2, [[0, 1], [0, 0]])


def test_skew_information_bounded_by_variance():
    rng = np.random.default_rng(21)
    for _ in range(100):
        rho = random_state(rng)
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        obs = np.kron(n[0] * SIGMA_X + n[2] * SIGMA_Z + n[1] * np.array([[0, -1j], [1j, 0]]), I2)
        s = skew_information(rho, obs)
        var = np.trace(rho @ obs @ obs).real - np.trace(rho @ obs).real ** 2
        assert -1e-15 <= s <= var + 1e-10
        assert s <= 1 + 1e-12


@pytest.mark.parametrize("lam", [0.0, 0.25, 0.7, 1.0])
@pytest.mark.parametrize("psi", [0.0, math.pi / 7, math.pi / 4, 1.3])
def test_bloch_vector_gisin(lam, psi):
    v = bloch_vector(gisin_state(GisinParams(lam, psi)))
    np.testing.assert_allclose(v, [0, 0, -lam * math.cos(2 * psi)], atol=1e-15)


def test_bloch_vector_pole():
    np.testing.assert_allclose(bloch_vector(np.kron(np.diag([1, 0]), I2 / 2)), [0, 0, 1], atol=1e-15)


def test_n_matrix_examples():
    bell = gisin_state(GisinParams(1, math.pi / 4))
    np.testing.assert_allclose(n_matrix(bell), np.zeros((3, 3)), atol=1e-12)
    np.testing.assert_allclose(n_matrix(np.eye(4) / 4), np.eye(3), atol=1e-14)
    np.testing.assert_allclose(n_matrix(np.diag([0.5, 0, 0, 0.5])), np.diag([0, 0, 1]), atol=1e-14)


def test_n_matrix_spectrum_bounds():
    rng = np.random.default_rng(22)
    for _ in range(50):
        n = n_matrix(random_state(rng))
        np.testing.assert_allclose(n, n.T, atol=1e-10)
        w = np.linalg.eigvalsh(n)
        assert w.min() >= -1e-10 and w.max() <= 1 + 1e-10


def test_uin_examples():
    bell = gisin_state(GisinParams(1, math.pi / 4))
    assert uin(bell, STRICT) == pytest.approx(1.0, abs=1e-12)
    assert uin(bell, RADIAL) == pytest.approx(1.0, abs=1e-12)
    classical = gisin_state(GisinParams(0, math.pi / 4))
    assert uin(classical, STRICT) == pytest.approx(1.0, abs=1e-12)
    assert uin(classical, RADIAL) == pytest.approx(0.0, abs=1e-12)


def test_uin_pure_product_is_zero():
    rng = np.random.default_rng(23)
    for _ in range(10):
        a = haar_unitary(rng)[:, 0]
        rho = np.kron(np.outer(a, a.conj()), random_state(rng, 2))
        assert uin(rho, STRICT) == pytest.approx(0.0, abs=1e-9)
        assert uin_bruteforce(rho) == pytest.approx(0.0, abs=1e-9)


def test_uin_gisin_closed_form():
    # Along z: U = 1 - N_zz = lam * sin^2(2 psi) for every Gisin state.
    for lam, psi in product(np.linspace(0, 1, 11), np.linspace(0, math.pi / 2, 9)):
        got = uin(gisin_state(GisinParams(lam, psi)), RADIAL)
        assert got == pytest.approx(lam * math.sin(2 * psi) ** 2, abs=1e-7)


def test_convention_parse():
    assert UinConvention.parse("radial-limit") is RADIAL
    assert UinConvention.parse("RADIAL_LIMIT") is RADIAL
    with pytest.raises(DomainError):
        UinConvention.parse("loose")


def test_fibonacci_sphere_unit_and_spread():
    d = fibonacci_sphere(2000)
    np.testing.assert_allclose(np.linalg.norm(d, axis=1), 1, atol=1e-14)
    assert np.abs(d.mean(axis=0)).max() < 1e-2


def test_bruteforce_examples():
    assert uin_bruteforce(gisin_state(GisinParams(1, math.pi / 4)), 10_000) == pytest.approx(1.0, abs=1e-6)
    rho = gisin_state(GisinParams(0.5, math.pi / 5))
    assert uin_bruteforce(rho) == pytest.approx(uin(rho, STRICT), abs=2e-3)
    assert uin_bruteforce(np.eye(4) / 4, restrict=False) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(DomainError):
        uin_bruteforce(np.eye(4) / 4, grid_size=10)


def test_bruteforce_agrees_v_nonzero():
    rng = np.random.default_rng(24)
    checked = 0
    while checked < 200:
        rho = random_state(rng, rank=int(rng.integers(1, 5)))
        if np.linalg.norm(bloch_vector(rho)) < 1e-3:
            continue
        assert abs(uin(rho, STRICT) - uin_bruteforce(rho, 10_000)) <= 2e-3
        checked += 1


def test_bruteforce_agrees_v_zero_unrestricted():
    rng = np.random.default_rng(25)
    states = [maximally_mixed_marginal_state(rng, k) for k in (1, 2, 3, 4) for _ in range(5)]
    states += [gisin_state(GisinParams(lam, math.pi / 4)).matrix for lam in np.linspace(0, 1, 6)]
    for rho in states:
        assert np.linalg.norm(bloch_vector(rho)) < 1e-9
        assert abs(uin(rho, STRICT) - uin_bruteforce(rho, 10_000, restrict=False)) <= 2e-3


def test_bruteforce_two_by_three():
    rng = np.random.default_rng(26)
    for _ in range(10):
        rho = random_state(rng, 6)
        assert abs(uin(rho, STRICT) - uin_bruteforce(rho)) <= 2e-3


def test_uin_bounds_random():
    rng = np.random.default_rng(27)
    for _ in range(100):
        rho = random_state(rng, rank=int(rng.integers(1, 5)))
        for conv in UinConvention:
            assert 0.0 <= uin(rho, conv) <= 1 + 1e-10


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1), st.booleans())
def test_uin_local_unitary_covariance(seed, v_zero):
    rng = np.random.default_rng(seed)
    rho = maximally_mixed_marginal_state(rng) if v_zero else random_state(rng)
    u = np.kron(haar_unitary(rng), I2)
    rotated = u @ rho @ u.conj().T
    assert abs(uin(rotated, STRICT) - uin(rho, STRICT)) <= 1e-9


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_consonance_diagonal_phase_invariance(seed):
    rng = np.random.default_rng(seed)
    p1 = np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, 2)))
    p2 = np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, 2)))
    rho = random_state(rng)
    u = np.kron(p1, p2)
    assert abs(consonance(u @ rho @ u.conj().T) - consonance(rho)) <= 1e-12


def test_consonance_gisin_grid():
    for lam, psi in product(np.linspace(0, 1, 20), np.linspace(0, math.pi / 2, 20)):
        got = consonance(gisin_state(GisinParams(lam, psi)))
        assert abs(got - lam * math.sin(2 * psi)) <= 1e-12
    assert consonance(gisin_state(GisinParams(1, math.pi / 4))) == pytest.approx(1.0, abs=1e-15)


def test_consonance_reduced_formulas():
    for lam, psi, t in product([0.2, 0.6, 1.0], [0.3, math.pi / 4, 1.2], [0.0, 0.5, 3.0, 80.0]):
        p, c = GisinParams(lam, psi), bogoliubov(1.0, t)
        w, e = c.varpi, c.epsilon
        s, co = math.sin(psi), math.cos(psi)
        assert consonance(reduced_state(p, c, Bipartition.ACCESSIBLE)) == pytest.approx(2 * lam * s * co * w, abs=1e-14)
        assert consonance(reduced_state(p, c, Bipartition.INACCESSIBLE)) == pytest.approx(2 * lam * s * co * e, abs=1e-14)
        assert consonance(reduced_state(p, c, Bipartition.SPACETIME)) == pytest.approx(
            (1 - lam + 2 * lam * co**2) * w * e, abs=1e-14
        )


def test_consonance_spacetime_hot_limit():
    c = bogoliubov(1.0, 1e9)
    assert consonance(reduced_state(GisinParams(1, math.pi / 4), c, "spacetime")) == pytest.approx(0.5, abs=1e-9)


def test_consonance_generic_path_undoes_local_unitaries():
    rng = np.random.default_rng(28)
    base = reduced_state(GisinParams(0.8, 0.5), bogoliubov(1.0, 2.0), "accessible").matrix
    for _ in range(20):
        u = np.kron(haar_unitary(rng), haar_unitary(rng))
        assert consonance(u @ base @ u.conj().T) == pytest.approx(consonance(base), abs=1e-10)
