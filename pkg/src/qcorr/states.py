"""Gisin states and their Hawking-evolved tripartite and bipartite descendants.

Every state is available in two independent forms: a closed-form matrix
written term by term, and the channel route (dilation isometry followed by a
partial trace).  The closed forms are deliberately left unsimplified.

Basis ordering is ``|o p q> = |o>_A |p>_{B_I} |q>_{B_II}``, index ``4o + 2p + q``.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .density import DensityMatrix
from .errors import DomainError
from .hawking_channel import BogoliubovCoefficients, dilate_second_qubit


class Bipartition(enum.Enum):
    INITIAL = "initial"
    ACCESSIBLE = "accessible"
    INACCESSIBLE = "inaccessible"
    SPACETIME = "spacetime"

    @classmethod
    def parse(cls, name: "str | Bipartition") -> "Bipartition":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise DomainError(
                f"unknown region {name!r}; expected one of {[b.value for b in cls]}"
            ) from None


# Subsystems kept from the (A, B_I, B_II) state for each bipartition.
KEPT_MODES = {
    Bipartition.ACCESSIBLE: (0, 1),
    Bipartition.INACCESSIBLE: (0, 2),
    Bipartition.SPACETIME: (1, 2),
}


@dataclass(frozen=True)
class GisinParams:
    lam: float
    psi: float

    def __post_init__(self):
        if not (0.0 <= self.lam <= 1.0):
            raise DomainError(f"lambda must lie in [0, 1], got {self.lam!r}")
        if not (0.0 <= self.psi <= math.pi / 2):
            raise DomainError(f"psi must lie in [0, pi/2], got {self.psi!r}")


def _ket(bits: str) -> np.ndarray:
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


@functools.lru_cache(maxsize=None)
def _op(ket: str, bra: str) -> np.ndarray:
    """``|ket><bra|`` as a read-only matrix."""
    m = np.outer(_ket(ket), _ket(bra))
    m.flags.writeable = False
    return m


def gisin_state(p: GisinParams) -> DensityMatrix:
    """``lam |phi><phi| + (1 - lam)/2 (|00><00| + |11><11|)``, ``|phi> = sin psi |01> + cos psi |10>``."""
    lam, psi = p.lam, p.psi
    phi = math.sin(psi) * _ket("01") + math.cos(psi) * _ket("10")
    m = lam * np.outer(phi, phi.conj()) + (1 - lam) / 2 * (_op("00", "00") + _op("11", "11"))
    return DensityMatrix(m, (2, 2))


def evolved_tripartite(p: GisinParams, c: BogoliubovCoefficients) -> DensityMatrix:
    """Closed-form ``rho_{A B_I B_II}`` after Bob's mode crosses the Hawking channel."""
    lam, psi = p.lam, p.psi
    w, e = c.varpi, c.epsilon
    sin, cos = math.sin(psi), math.cos(psi)
    m = (1 - lam) / 2 * (
        w**2 * _op("000", "000")
        + w * e * (_op("000", "011") + _op("011", "000"))
        + e**2 * _op("011", "011")
        + _op("110", "110")
    )
    m = m + lam * cos**2 * (
        w**2 * _op("100", "100")
        + w * e * (_op("100", "111") + _op("111", "100"))
        + e**2 * _op("111", "111")
    )
    m = m + lam * sin**2 * _op("010", "010")
    m = m + lam * sin * cos * (
        w * (_op("010", "100") + _op("100", "010"))
        + e * (_op("010", "111") + _op("111", "010"))
    )
    return DensityMatrix(m, (2, 2, 2))


def _accessible(lam, psi, w, e) -> np.ndarray:
    sin, cos = math.sin(psi), math.cos(psi)
    return (
        (1 - lam) / 2 * w**2 * _op("00", "00")
        + ((1 - lam) / 2 * e**2 + lam * sin**2) * _op("01", "01")
        + lam * cos**2 * w**2 * _op("10", "10")
        + lam * sin * cos * w * (_op("01", "10") + _op("10", "01"))
        + ((1 - lam) / 2 + lam * cos**2 * e**2) * _op("11", "11")
    )


def _inaccessible(lam, psi, w, e) -> np.ndarray:
    sin, cos = math.sin(psi), math.cos(psi)
    return (
        ((1 - lam) / 2 * w**2 + lam * sin**2) * _op("00", "00")
        + (1 - lam) / 2 * e**2 * _op("01", "01")
        + ((1 - lam) / 2 + lam * cos**2 * w**2) * _op("10", "10")
        + lam * cos**2 * e**2 * _op("11", "11")
        + lam * sin * cos * e * (_op("00", "11") + _op("11", "00"))
    )


def _spacetime(lam, psi, w, e) -> np.ndarray:
    sin, cos = math.sin(psi), math.cos(psi)
    return (
        ((1 - lam) / 2 + lam * cos**2) * w**2 * _op("00", "00")
        + ((1 - lam) / 2 + lam * cos**2) * w * e * (_op("00", "11") + _op("11", "00"))
        + ((1 - lam) / 2 + lam * sin**2) * _op("10", "10")
        + ((1 - lam) / 2 + lam * cos**2) * e**2 * _op("11", "11")
    )


_CLOSED_FORMS = {
    Bipartition.ACCESSIBLE: _accessible,
    Bipartition.INACCESSIBLE: _inaccessible,
    Bipartition.SPACETIME: _spacetime,
}


def reduced_state(p: GisinParams, c: BogoliubovCoefficients, which: Bipartition | str) -> DensityMatrix:
    """Closed-form two-mode state for ``which``; ``INITIAL`` returns the Gisin state."""
    which = Bipartition.parse(which)
    if which is Bipartition.INITIAL:
        return gisin_state(p)
    return DensityMatrix(_CLOSED_FORMS[which](p.lam, p.psi, c.varpi, c.epsilon), (2, 2))


def channel_tripartite(p: GisinParams, c: BogoliubovCoefficients) -> DensityMatrix:
    """``rho_{A B_I B_II}`` obtained by dilating the Gisin state through the isometry."""
    return dilate_second_qubit(gisin_state(p), c)


def channel_reduced_state(p: GisinParams, c: BogoliubovCoefficients, which: Bipartition | str) -> DensityMatrix:
    """Partial-trace counterpart of :func:`reduced_state`."""
    which = Bipartition.parse(which)
    if which is Bipartition.INITIAL:
        return gisin_state(p)
    return channel_tripartite(p, c).reduce(KEPT_MODES[which])
