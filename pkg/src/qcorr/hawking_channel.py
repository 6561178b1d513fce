"""Hawking temperature, Bogoliubov amplitudes, and the Kruskal-to-Schwarzschild dilation.

Natural units throughout (G = c = hbar = k_B = 1).  A single Kruskal mode seen
by a Schwarzschild observer splits into an exterior mode ``B_I`` and an
interior mode ``B_II``:

    |0>_K -> varpi |00> + epsilon |11>
    |1>_K -> |10>

with ``varpi = (exp(-w/T) + 1)^(-1/2)`` and ``epsilon = (exp(w/T) + 1)^(-1/2)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .density import DensityMatrix, unwrap
from .errors import DomainError, StateError


@dataclass(frozen=True)
class FieldMode:
    omega: float

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega > 0):
            raise DomainError(f"omega must be a positive finite number, got {self.omega!r}")


@dataclass(frozen=True)
class Temperature:
    t_hawking: float

    def __post_init__(self):
        t = self.t_hawking
        if math.isnan(t) or t < 0:
            raise DomainError(f"t_hawking must be >= 0, got {t!r}")


@dataclass(frozen=True)
class BogoliubovCoefficients:
    varpi: float
    epsilon: float

    def __post_init__(self):
        if abs(self.varpi**2 + self.epsilon**2 - 1.0) > 1e-12:
            raise DomainError(
                f"varpi^2 + epsilon^2 = {self.varpi**2 + self.epsilon**2!r}, expected 1"
            )


def hawking_temperature(mass: float) -> Temperature:
    """``T_H = 1 / (8 pi M)`` for a Schwarzschild black hole of mass ``mass``."""
    if not mass > 0:
        raise DomainError(f"mass must be > 0, got {mass!r}")
    return Temperature(1.0 / (8.0 * math.pi * mass))


def bogoliubov(mode: FieldMode | float, temp: Temperature | float) -> BogoliubovCoefficients:
    """Channel amplitudes ``(varpi, epsilon)`` for frequency ``omega`` at temperature ``T_H``.

    ``T_H = 0`` is the exact frozen limit ``(1, 0)``.  ``epsilon`` is evaluated
    as ``exp(-x/2) / sqrt(1 + exp(-x))`` with ``x = omega / T_H``, which never
    overflows.
    """
    if not isinstance(mode, FieldMode):
        mode = FieldMode(float(mode))
    if not isinstance(temp, Temperature):
        temp = Temperature(float(temp))
    if temp.t_hawking == 0.0:
        return BogoliubovCoefficients(1.0, 0.0)
    x = mode.omega / temp.t_hawking
    ex = math.exp(-x) if x < 1e300 else 0.0
    varpi = (ex + 1.0) ** -0.5
    epsilon = math.exp(-0.5 * x) * (1.0 + ex) ** -0.5
    return BogoliubovCoefficients(varpi, epsilon)


def kruskal_basis_images(coeffs: BogoliubovCoefficients) -> tuple[np.ndarray, np.ndarray]:
    """Images of the Kruskal basis states in the ``B_I (x) B_II`` basis ``|00>,|01>,|10>,|11>``."""
    zero = np.array([coeffs.varpi, 0.0, 0.0, coeffs.epsilon], dtype=complex)
    one = np.array([0.0, 0.0, 1.0, 0.0], dtype=complex)
    return zero, one


def dilation_isometry(coeffs: BogoliubovCoefficients) -> np.ndarray:
    """The 8x4 isometry ``I_A (x) (|img0><0| + |img1><1|)``."""
    zero, one = kruskal_basis_images(coeffs)
    v = np.zeros((8, 4), dtype=complex)
    for a in range(2):
        v[4 * a:4 * a + 4, 2 * a] = zero
        v[4 * a:4 * a + 4, 2 * a + 1] = one
    return v


def dilate_second_qubit(rho_ab, coeffs: BogoliubovCoefficients) -> DensityMatrix:
    """Map a two-qubit state ``rho_AB`` to ``rho_{A B_I B_II}`` via ``V rho V^H``.

    ``rho_ab`` may be a :class:`DensityMatrix` or a raw 4x4 array; raw arrays
    are validated first.
    """
    if not isinstance(rho_ab, DensityMatrix):
        rho_ab = DensityMatrix(unwrap(rho_ab), (2, 2))
    rho = rho_ab.matrix
    if rho.shape != (4, 4):
        raise StateError(f"expected a 2x2 bipartite state (4x4 matrix), got {rho.shape}")
    v = dilation_isometry(coeffs)
    return DensityMatrix(v @ rho @ v.conj().T, (2, 2, 2))
