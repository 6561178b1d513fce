"""Quantum consonance and uncertainty-induced nonlocality (UIN).

UIN is evaluated in closed form from the Bloch vector ``v`` of the first
subsystem and the 3x3 matrix

    N_ij = Tr[ sqrt(rho) (s_i x I) sqrt(rho) (s_j x I) ],

giving ``1 - n_min(N)`` when ``v = 0`` and ``1 - v N v^T / |v|^2`` otherwise.
:func:`uin_bruteforce` maximizes skew information directly and shares nothing
with that formula beyond ``sqrt(rho)``.
"""
from __future__ import annotations

import enum
import functools
import math

import numpy as np

from .density import unwrap
from .errors import DimensionError, DomainError, NumericError
from .matrix_core import PAULIS, hermitian_eig, matrix_sqrt_psd

V_ZERO_TOL = 1e-9
CLAMP_TOL = 1e-12


class UinConvention(enum.Enum):
    """How to treat the ``v = 0`` branch.

    ``STRICT`` applies the two-branch formula literally.  ``RADIAL_LIMIT``
    replaces the ``v = 0`` branch by the limit of the ``v != 0`` branch along
    the z axis, ``1 - N_zz``; this is what reproduces the published curves at
    ``psi = pi/4``.
    """

    STRICT = "strict"
    RADIAL_LIMIT = "radial-limit"

    @classmethod
    def parse(cls, name: "str | UinConvention") -> "UinConvention":
        if isinstance(name, cls):
            return name
        key = str(name).lower().replace("_", "-")
        if key == "radial":
            key = "radial-limit"
        try:
            return cls(key)
        except ValueError:
            raise DomainError(
                f"unknown convention {name!r}; expected 'strict' or 'radial-limit'"
            ) from None


def _clamp_unit(x: float, what: str) -> float:
    if x < -CLAMP_TOL:
        raise NumericError(f"{what} evaluated to {x:.3e} < 0")
    return max(x, 0.0)


@functools.lru_cache(maxsize=None)
def _local_paulis(dim: int) -> tuple[np.ndarray, ...]:
    if dim % 2:
        raise DimensionError(f"first subsystem must be a qubit; total dimension {dim} is odd")
    eye = np.eye(dim // 2)
    ops = tuple(np.kron(s, eye) for s in PAULIS)
    for op in ops:
        op.flags.writeable = False
    return ops


def skew_information(rho, obs, sqrt_rho: np.ndarray | None = None) -> float:
    """Wigner-Yanase skew information ``Tr(rho K^2) - Tr(sqrt(rho) K sqrt(rho) K)``."""
    m = unwrap(rho)
    k = np.asarray(obs, dtype=complex)
    if k.shape != m.shape:
        raise DimensionError(f"observable shape {k.shape} does not match state {m.shape}")
    if np.max(np.abs(k - k.conj().T)) > 1e-10:
        raise DomainError("observable must be Hermitian")
    root = matrix_sqrt_psd(m) if sqrt_rho is None else sqrt_rho
    val = np.trace(m @ k @ k) - np.trace(root @ k @ root @ k)
    return _clamp_unit(float(val.real), "skew information")


def bloch_vector(rho) -> np.ndarray:
    """Bloch vector of the first (qubit) subsystem, ``v_i = Tr[rho (s_i x I)]``."""
    m = unwrap(rho)
    vals = np.array([np.trace(m @ s) for s in _local_paulis(m.shape[0])])
    if np.max(np.abs(vals.imag)) > 1e-12:
        raise NumericError("Bloch vector has a non-negligible imaginary part")
    return vals.real.copy()


def n_matrix(rho, sqrt_rho: np.ndarray | None = None) -> np.ndarray:
    m = unwrap(rho)
    root = matrix_sqrt_psd(m) if sqrt_rho is None else sqrt_rho
    conj = [root @ s for s in _local_paulis(m.shape[0])]
    n = np.array([[np.trace(a @ b).real for b in conj] for a in conj])
    return 0.5 * (n + n.T)


def uin(rho, conv: UinConvention | str = UinConvention.STRICT) -> float:
    """Uncertainty-induced nonlocality with respect to the first subsystem."""
    conv = UinConvention.parse(conv)
    v = bloch_vector(rho)
    n = n_matrix(rho)
    norm = float(np.linalg.norm(v))
    if norm >= V_ZERO_TOL:
        u = 1.0 - float(v @ n @ v) / norm**2
    elif conv is UinConvention.STRICT:
        u = 1.0 - float(hermitian_eig(n).eigenvalues[-1])
    else:
        u = 1.0 - float(n[2, 2])
    return _clamp_unit(u, "UIN")


def fibonacci_sphere(count: int) -> np.ndarray:
    """``count`` quasi-uniform unit vectors on the sphere (golden-angle spiral)."""
    i = np.arange(count) + 0.5
    z = 1.0 - 2.0 * i / count
    r = np.sqrt(1.0 - z * z)
    phi = math.pi * (3.0 - math.sqrt(5.0)) * i
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def _observables(dirs: np.ndarray, paulis) -> np.ndarray:
    return np.tensordot(dirs.astype(complex), np.stack(paulis), axes=1)


@functools.lru_cache(maxsize=8)
def _grid_observables(grid_size: int, dim: int) -> tuple[np.ndarray, np.ndarray]:
    dirs = fibonacci_sphere(grid_size)
    obs = _observables(dirs, _local_paulis(dim))
    dirs.flags.writeable = False
    obs.flags.writeable = False
    return dirs, obs


def _skew_batch(m: np.ndarray, root: np.ndarray, obs: np.ndarray) -> np.ndarray:
    """Skew information of each observable in the stack ``obs``."""
    obs_t = obs.transpose(0, 2, 1)
    first = ((m @ obs) * obs_t).sum(axis=(1, 2))
    a = root @ obs
    second = (a * a.transpose(0, 2, 1)).sum(axis=(1, 2))
    return (first - second).real


def uin_bruteforce(rho, grid_size: int = 10_000, restrict: bool = True, refine_iters: int = 20) -> float:
    """Maximize skew information of ``(n . sigma) x I`` over directions ``n``.

    With ``restrict`` (default) and a non-vanishing Bloch vector the search is
    confined to ``+/- v_hat``, the only nondegenerate observables commuting
    with the marginal.  Otherwise a Fibonacci grid of ``grid_size`` directions
    is scanned and the best point is refined by a shrinking compass search.
    """
    if grid_size < 1000:
        raise DomainError("grid_size must be at least 1000")
    m = unwrap(rho)
    paulis = _local_paulis(m.shape[0])
    root = matrix_sqrt_psd(m)
    v = bloch_vector(m)
    norm = float(np.linalg.norm(v))
    if restrict and norm >= V_ZERO_TOL:
        dirs = np.stack([v / norm, -v / norm])
        return _clamp_unit(float(np.max(_skew_batch(m, root, _observables(dirs, paulis)))), "skew information")

    dirs, obs = _grid_observables(grid_size, m.shape[0])
    vals = _skew_batch(m, root, obs)
    k = int(np.argmax(vals))
    best_dir, best = dirs[k], float(vals[k])

    step = math.sqrt(4.0 * math.pi / grid_size)
    for _ in range(refine_iters):
        helper = np.array([1.0, 0.0, 0.0]) if abs(best_dir[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
        e1 = np.cross(best_dir, helper)
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(best_dir, e1)
        cand = np.stack([best_dir + step * e1, best_dir - step * e1, best_dir + step * e2, best_dir - step * e2])
        cand /= np.linalg.norm(cand, axis=1, keepdims=True)
        cvals = _skew_batch(m, root, _observables(cand, paulis))
        j = int(np.argmax(cvals))
        if cvals[j] > best:
            best_dir, best = cand[j], float(cvals[j])
        else:
            step *= 0.5
    return _clamp_unit(best, "skew information")


_ANTI_DIAGONAL = ((0, 3), (3, 0), (1, 2), (2, 1))


def consonance(rho) -> float:
    """Quantum consonance of a two-qubit state.

    Sums ``|rho_{ij,mn}|`` over ``i != m`` and ``j != n`` (both orderings)
    after local unitaries that diagonalize the marginals.  When the marginals
    are already diagonal the rotation is skipped.
    """
    m = unwrap(rho)
    if m.shape != (4, 4):
        raise DimensionError(f"consonance needs a 2x2 state, got shape {m.shape}")
    t = m.reshape(2, 2, 2, 2)
    rho_a = np.einsum("ijkj->ik", t)
    rho_b = np.einsum("ijil->jl", t)
    if max(abs(rho_a[0, 1]), abs(rho_b[0, 1])) > 1e-10:
        w1 = hermitian_eig(rho_a).eigenvectors.conj().T
        w2 = hermitian_eig(rho_b).eigenvectors.conj().T
        u = np.kron(w1, w2)
        m = u @ m @ u.conj().T
    return float(sum(abs(m[r, c]) for r, c in _ANTI_DIAGONAL))
