"""Grid evaluation of the correlation measures."""
from __future__ import annotations

import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, QcorrError
from .hawking_channel import BogoliubovCoefficients, bogoliubov
from .matrix_core import frobenius_distance
from .measures import UinConvention, consonance, uin
from .states import Bipartition, GisinParams, channel_reduced_state, reduced_state

MISMATCH_TOL = 1e-12

CSV_COLUMNS = (
    "lambda", "psi", "omega", "t_hawking", "varpi", "epsilon",
    "region", "convention", "consonance", "uin", "flags",
)


@dataclass(frozen=True)
class MeasureRecord:
    lam: float
    psi: float
    omega: float
    t_hawking: float
    varpi: float
    epsilon: float
    bipartition: Bipartition
    consonance: float
    uin: float
    convention: UinConvention
    flags: tuple[str, ...] = ()

    def csv_fields(self) -> list[str]:
        nums = (self.lam, self.psi, self.omega, self.t_hawking, self.varpi, self.epsilon)
        return (
            [format(x, ".17g") for x in nums]
            + [self.bipartition.value, self.convention.value]
            + [format(self.consonance, ".17g"), format(self.uin, ".17g"), ";".join(self.flags)]
        )


def _log_range(start: float, stop: float, count: int) -> list[float]:
    if start <= 0 or stop <= 0 or count < 1:
        raise DomainError("log-spaced t_hawking range needs start > 0, stop > 0, count >= 1")
    return [float(x) for x in np.logspace(math.log10(start), math.log10(stop), int(count))]


@dataclass(frozen=True)
class SweepSpec:
    lambda_values: tuple[float, ...]
    psi_values: tuple[float, ...]
    omega_values: tuple[float, ...]
    t_hawking_values: tuple[float, ...]
    bipartitions: tuple[Bipartition, ...]
    convention: UinConvention = UinConvention.STRICT

    def __post_init__(self):
        for f in fields(self):
            if f.name != "convention" and not getattr(self, f.name):
                raise DomainError(f"{f.name} must be non-empty")
        for lam in self.lambda_values:
            if not 0.0 <= lam <= 1.0:
                raise DomainError(f"lambda_values: {lam!r} outside [0, 1]")
        for psi in self.psi_values:
            if not 0.0 <= psi <= math.pi / 2:
                raise DomainError(f"psi_values: {psi!r} outside [0, pi/2]")
        for w in self.omega_values:
            if not w > 0:
                raise DomainError(f"omega_values: {w!r} must be > 0")
        for t in self.t_hawking_values:
            if not t >= 0:
                raise DomainError(f"t_hawking_values: {t!r} must be >= 0")

    @classmethod
    def from_dict(cls, data: dict) -> "SweepSpec":
        """Build a spec from a parsed config document, rejecting unknown keys."""
        allowed = {f.name for f in fields(cls)}
        unknown = set(data) - allowed
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        missing = allowed - {"convention"} - set(data)
        if missing:
            raise DomainError(f"missing config keys: {sorted(missing)}")
        temps = data["t_hawking_values"]
        if isinstance(temps, dict):
            extra = set(temps) - {"start", "stop", "count"}
            if extra or len(temps) != 3:
                raise DomainError("t_hawking_values range must have exactly start, stop, count")
            temps = _log_range(float(temps["start"]), float(temps["stop"]), int(temps["count"]))
        return cls(
            lambda_values=tuple(float(x) for x in data["lambda_values"]),
            psi_values=tuple(float(x) for x in data["psi_values"]),
            omega_values=tuple(float(x) for x in data["omega_values"]),
            t_hawking_values=tuple(float(x) for x in temps),
            bipartitions=tuple(Bipartition.parse(b) for b in data["bipartitions"]),
            convention=UinConvention.parse(data.get("convention", "strict")),
        )

    @classmethod
    def from_json(cls, path) -> "SweepSpec":
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise DomainError("config must be a JSON object")
        return cls.from_dict(data)

    def points(self) -> Iterable[tuple]:
        """Grid points in row-major order, lambda outermost and bipartition innermost."""
        return itertools.product(
            self.lambda_values, self.psi_values, self.omega_values,
            self.t_hawking_values, self.bipartitions,
        )

    def __len__(self) -> int:
        return (len(self.lambda_values) * len(self.psi_values) * len(self.omega_values)
                * len(self.t_hawking_values) * len(self.bipartitions))


def run_point(lam, psi, omega, t_hawking, bipartition, convention=UinConvention.STRICT) -> MeasureRecord:
    """Evaluate both measures at one grid point.

    The closed-form reduced state is cross-checked against the channel route;
    a Frobenius mismatch above 1e-12 is recorded in ``flags`` and the channel
    state is used instead.
    """
    which = Bipartition.parse(bipartition)
    conv = UinConvention.parse(convention)
    try:
        params = GisinParams(float(lam), float(psi))
    except DomainError as exc:
        raise DomainError(f"{'lambda' if 'lambda' in str(exc) else 'psi'}: {exc}") from None
    try:
        coeffs: BogoliubovCoefficients = bogoliubov(float(omega), float(t_hawking))
    except DomainError as exc:
        raise DomainError(f"{'omega' if 'omega' in str(exc) else 't_hawking'}: {exc}") from None

    flags = []
    state = reduced_state(params, coeffs, which)
    if which is not Bipartition.INITIAL:
        reference = channel_reduced_state(params, coeffs, which)
        dist = frobenius_distance(state.matrix, reference.matrix)
        if dist > MISMATCH_TOL:
            flags.append(f"closed_form_channel_mismatch={dist:.3e}")
            state = reference

    return MeasureRecord(
        lam=float(lam), psi=float(psi), omega=float(omega), t_hawking=float(t_hawking),
        varpi=coeffs.varpi, epsilon=coeffs.epsilon, bipartition=which,
        consonance=consonance(state), uin=uin(state, conv), convention=conv,
        flags=tuple(flags),
    )


def _run_one(args: tuple) -> MeasureRecord:
    lam, psi, omega, temp, which, conv = args
    try:
        return run_point(lam, psi, omega, temp, which, conv)
    except QcorrError as exc:
        raise type(exc)(
            f"at lambda={lam!r}, psi={psi!r}, omega={omega!r}, t_hawking={temp!r}, "
            f"region={which.value}: {exc}"
        ) from exc


def worker_count() -> int:
    raw = os.environ.get("QCORR_WORKERS")
    if raw is None or raw == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"QCORR_WORKERS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise DomainError(f"QCORR_WORKERS must be a positive integer, got {raw!r}")
    return n


def run_sweep(spec: SweepSpec, workers: int | None = None) -> list[MeasureRecord]:
    """Evaluate every grid point of ``spec``; output order never depends on ``workers``."""
    workers = worker_count() if workers is None else workers
    jobs = [(*pt, spec.convention) for pt in spec.points()]
    if workers <= 1 or len(jobs) < 64:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def series_key(rec: MeasureRecord, x_axis: str) -> tuple:
    """Identify the curve a record belongs to: every input except ``x_axis``."""
    key = {"lambda": rec.lam, "psi": rec.psi, "omega": rec.omega, "t_hawking": rec.t_hawking}
    key.pop(x_axis)
    return (rec.bipartition.value, *key.items())


def group_series(records: Sequence[MeasureRecord], x_axis: str) -> dict[tuple, list[MeasureRecord]]:
    out: dict[tuple, list[MeasureRecord]] = {}
    for rec in records:
        out.setdefault(series_key(rec, x_axis), []).append(rec)
    return out
