"""Validated density matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from .errors import StateError
from .matrix_core import PSD_CLAMP, HERMITIAN_TOL, as_matrix, partial_trace

TRACE_TOL = 1e-12


def check_density(m: np.ndarray) -> None:
    """Raise :class:`StateError` unless ``m`` is Hermitian, unit-trace and PSD.

    PSD is tested as "Cholesky of ``m + 1e-10 I`` succeeds", which is
    equivalent to every eigenvalue being >= -1e-10.
    """
    herm_err = float(np.max(np.abs(m - m.conj().T)))
    if herm_err > HERMITIAN_TOL:
        raise StateError(f"not Hermitian (max |m - m^H| = {herm_err:.3e})")
    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_TOL:
        raise StateError(f"trace is {tr.real:.15g}, expected 1")
    try:
        np.linalg.cholesky(0.5 * (m + m.conj().T) + PSD_CLAMP * np.eye(m.shape[0]))
    except np.linalg.LinAlgError:
        raise StateError("not positive semidefinite (eigenvalue below -1e-10)") from None


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    matrix: np.ndarray
    dims: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        m = as_matrix(self.matrix)
        dims = tuple(int(d) for d in self.dims) or (m.shape[0],)
        if int(np.prod(dims)) != m.shape[0]:
            raise StateError(f"dims {dims} do not factor dimension {m.shape[0]}")
        check_density(m)
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def reduce(self, keep) -> "DensityMatrix":
        keep = sorted(keep)
        return DensityMatrix(partial_trace(self.matrix, self.dims, keep), tuple(self.dims[k] for k in keep))

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def unwrap(rho) -> np.ndarray:
    """Matrix of a :class:`DensityMatrix`, or ``rho`` itself coerced to an array."""
    return rho.matrix if isinstance(rho, DensityMatrix) else as_matrix(rho)
