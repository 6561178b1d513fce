"""Dense complex linear algebra for the small matrices used throughout qcorr.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.  Every
public function validates its inputs with :func:`as_matrix`, so callers may
pass nested lists or real arrays.

Basis convention: subsystem-major, big-endian packing, i.e. ``|o p q>`` lives
at index ``4*o + 2*p + q``.  This matches ``numpy.kron``.
"""
from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DimensionError, NotPSDError, NumericError

MAX_DIM = 64
EIG_MAX_SWEEPS = 100
EIG_TOL = 1e-13
PSD_CLAMP = 1e-10
HERMITIAN_TOL = 1e-10

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class HermitianEigen(NamedTuple):
    eigenvalues: np.ndarray
    """Real eigenvalues, sorted non-increasing."""
    eigenvectors: np.ndarray
    """Unitary matrix whose columns match ``eigenvalues``."""


def as_matrix(m, max_dim: int = MAX_DIM) -> np.ndarray:
    """Coerce ``m`` to a square, finite complex128 array."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionError(f"expected a non-empty square matrix, got shape {a.shape}")
    if a.shape[0] > max_dim:
        raise DimensionError(f"matrix dimension {a.shape[0]} exceeds cap {max_dim}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def _same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")


def tensor_product(a, b, max_dim: int = MAX_DIM) -> np.ndarray:
    """Kronecker product; entry ``(i*db + k, j*db + l)`` is ``a[i,j] * b[k,l]``."""
    a = as_matrix(a, max_dim)
    b = as_matrix(b, max_dim)
    if a.shape[0] * b.shape[0] > max_dim:
        raise DimensionError(
            f"tensor product dimension {a.shape[0] * b.shape[0]} exceeds cap {max_dim}"
        )
    return np.kron(a, b)


def mat_mul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return a @ b


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_matrix(a)))


def commutator(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return a @ b - b @ a


def frobenius_distance(a, b) -> float:
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return float(np.linalg.norm(a - b))


def partial_trace(rho, dims: Sequence[int], keep) -> np.ndarray:
    """Trace out every subsystem whose index is not in ``keep``.

    ``dims`` lists subsystem dimensions in tensor order; kept subsystems appear
    in the result in ascending index order.
    """
    rho = as_matrix(rho)
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims) or int(np.prod(dims)) != rho.shape[0]:
        raise DimensionError(f"subsystem dims {dims} do not factor dimension {rho.shape[0]}")
    keep = sorted(set(int(k) for k in keep))
    if not keep or keep[0] < 0 or keep[-1] >= len(dims):
        raise DimensionError(f"keep={keep} is not a non-empty subset of 0..{len(dims) - 1}")

    n = len(dims)
    t = rho.reshape(dims + dims)
    # Trace highest indices first so lower axis numbers stay valid.
    for ax in reversed(range(n)):
        if ax in keep:
            continue
        t = np.trace(t, axis1=ax, axis2=ax + t.ndim // 2)
    d = int(np.prod([dims[k] for k in keep]))
    return t.reshape(d, d)


def _offdiag_norm(a: list) -> float:
    n = len(a)
    return math.sqrt(sum(abs(a[i][j]) ** 2 for i in range(n) for j in range(n) if i != j))


def _canonical_phase(v: np.ndarray) -> np.ndarray:
    mags = np.abs(v)
    # first component (within rounding) of largest magnitude
    k = int(np.argmax(mags >= mags.max() - 1e-12))
    if mags[k] == 0:
        return v
    return v * (np.conj(v[k]) / mags[k])


def _lex_key(v: np.ndarray) -> tuple:
    return tuple(x for z in np.round(v, 12) for x in (z.real, z.imag))


def hermitian_eig(m, max_sweeps: int = EIG_MAX_SWEEPS, tol: float = EIG_TOL) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    The input is symmetrized as ``(m + m^H)/2``.  Sweeps stop once the
    off-diagonal Frobenius norm falls below ``tol * max(1, ||m||_F)``.

    Each eigenvector is rephased so that its first largest-magnitude component
    is real and non-negative.  Eigenvalues equal within 1e-12 are ordered by
    descending lexicographic order of their eigenvector entries.
    """
    a = as_matrix(m)
    if np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOL:
        raise ValueError("hermitian_eig requires a Hermitian matrix")
    herm = 0.5 * (a + a.conj().T)
    n = herm.shape[0]
    # Rotations run on Python scalars: for dim <= 8 this beats numpy call overhead.
    a = herm.tolist()
    v = np.eye(n, dtype=complex).tolist()
    threshold = tol * max(1.0, float(np.linalg.norm(herm)))
    # Far below the stopping threshold; rotating such entries only breeds subnormals.
    negligible = threshold * 1e-20

    for _ in range(max_sweeps + 1):
        if _offdiag_norm(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                mag = abs(apq)
                if mag < negligible:
                    a[p][q] = a[q][p] = 0j
                    continue
                ph = (apq / mag).conjugate()
                tau = (a[q][q].real - a[p][p].real) / (2.0 * mag)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # J = diag(1, ph) . [[c, s], [-s, c]] on the (p, q) plane; a <- J^H a J
                j10, j11 = -s * ph, c * ph
                for row in a:
                    x, y = row[p], row[q]
                    row[p] = c * x + j10 * y
                    row[q] = s * x + j11 * y
                rp, rq = a[p], a[q]
                j10c, j11c = j10.conjugate(), j11.conjugate()
                for k in range(n):
                    x, y = rp[k], rq[k]
                    rp[k] = c * x + j10c * y
                    rq[k] = s * x + j11c * y
                rp[q] = rq[p] = 0.0
                rp[p] = complex(rp[p].real)
                rq[q] = complex(rq[q].real)
                for row in v:
                    x, y = row[p], row[q]
                    row[p] = c * x + j10 * y
                    row[q] = s * x + j11 * y
    else:
        raise NumericError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")

    v = np.array(v, dtype=complex)
    w = np.array([a[i][i].real for i in range(n)])
    vecs = [_canonical_phase(v[:, i]) for i in range(n)]
    order = sorted(range(n), key=lambda i: -w[i])
    if any(w[order[i]] - w[order[i + 1]] <= 1e-12 for i in range(n - 1)):
        order = sorted(order, key=lambda i: (-round(w[i], 12), tuple(-x for x in _lex_key(vecs[i]))))
    return HermitianEigen(w[order], np.column_stack([vecs[i] for i in order]))


def matrix_sqrt_psd(m) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-1e-10, 0)`` are treated as rounding noise and clamped.
    Positive eigenvalues at the solver's own noise floor are zeroed as well:
    their square roots (~1e-8) would otherwise leak into every product with
    the root, breaking rotation covariance of downstream quantities.
    """
    w, v = hermitian_eig(m)
    if w[-1] < -PSD_CLAMP:
        raise NotPSDError(f"matrix has eigenvalue {w[-1]:.3e} < -{PSD_CLAMP}")
    floor = 32 * np.finfo(float).eps * max(1.0, float(np.abs(w).max()))
    root = (v * np.sqrt(np.where(w > floor, w, 0.0))) @ v.conj().T
    return 0.5 * (root + root.conj().T)
