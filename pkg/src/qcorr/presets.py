"""Parameter grids that regenerate the published figures.

The source figures do not print their parameter values.  Each constant below
is an inference; ``assumptions`` on every preset records why it was chosen
and is copied into the figure's metadata file.

Version 1 of the preset table.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .measures import UinConvention
from .states import Bipartition
from .sweep import SweepSpec

PRESET_VERSION = 1

# 201 log-spaced temperatures over four decades; "T_H = 100" is quoted as the
# effectively infinite temperature, so the grid stops there.
T_GRID = tuple(float(t) for t in np.logspace(-2, 2, 201))
STATE_LAMBDAS = (0.3, 0.6, 0.9)
STATE_PSIS = (math.pi / 8, math.pi / 6, math.pi / 4)
FREQUENCIES = (1.0, 3.0, 10.0)
# 0.9 reproduces both quoted anchors: 0.9 at T_H -> 0 and ~0.65 at omega = 10.
FREQ_LAMBDA = 0.9
FREQ_PSI = math.pi / 4

_T_ASSUMPTION = "t_hawking grid: 201 log-spaced points on [1e-2, 1e2] (axis range not printed)"
_STATE_ASSUMPTION = "lambda in {0.3, 0.6, 0.9}, psi in {pi/8, pi/6, pi/4}, omega = 1 (values not printed)"
_FREQ_ASSUMPTION = (
    "lambda = 0.9, psi = pi/4 inferred from the 0.9 zero-temperature anchor; "
    "omega in {1, 3, 10} with 10 taken from the 0.65 floor anchor"
)


@dataclass(frozen=True)
class FigurePreset:
    id: str
    caption: str
    spec: SweepSpec
    x_axis: str
    assumptions: tuple[str, ...]


def _state_sweep(region: Bipartition) -> SweepSpec:
    return SweepSpec(STATE_LAMBDAS, STATE_PSIS, (1.0,), T_GRID, (region,), UinConvention.RADIAL_LIMIT)


def _freq_sweep(*regions: Bipartition) -> SweepSpec:
    return SweepSpec((FREQ_LAMBDA,), (FREQ_PSI,), FREQUENCIES, T_GRID, regions, UinConvention.RADIAL_LIMIT)


def _build() -> dict[str, FigurePreset]:
    fig1 = SweepSpec(
        tuple(float(x) for x in np.linspace(0.0, 1.0, 101)),
        (math.pi / 5, math.pi / 4),
        (1.0,),
        (0.0,),
        (Bipartition.INITIAL,),
        UinConvention.RADIAL_LIMIT,
    )
    return {
        "fig1": FigurePreset(
            "fig1",
            "Fig. 1: U_AB and C_AB of the initial Gisin state versus the mixing parameter lambda, psi in {pi/5, pi/4}",
            fig1, "lambda",
            ("omega = 1 is a placeholder; it has no effect at T_H = 0",),
        ),
        "fig3": FigurePreset(
            "fig3",
            "Fig. 3: U_AB_I and C_AB_I versus Hawking temperature for several state parameters (accessible)",
            _state_sweep(Bipartition.ACCESSIBLE), "t_hawking", (_T_ASSUMPTION, _STATE_ASSUMPTION),
        ),
        "fig4": FigurePreset(
            "fig4",
            "Fig. 4: U_AB_I and C_AB_I versus Hawking temperature for several frequency modes (accessible)",
            _freq_sweep(Bipartition.ACCESSIBLE), "t_hawking", (_T_ASSUMPTION, _FREQ_ASSUMPTION),
        ),
        "fig5": FigurePreset(
            "fig5",
            "Fig. 5: U_AB_II and C_AB_II versus Hawking temperature for several state parameters (inaccessible)",
            _state_sweep(Bipartition.INACCESSIBLE), "t_hawking", (_T_ASSUMPTION, _STATE_ASSUMPTION),
        ),
        "fig6": FigurePreset(
            "fig6",
            "Fig. 6: correlations versus Hawking temperature for several frequency modes "
            "(captioned as the spacetime region; discussed as A-B_II)",
            _freq_sweep(Bipartition.INACCESSIBLE, Bipartition.SPACETIME), "t_hawking",
            (_T_ASSUMPTION, _FREQ_ASSUMPTION,
             "caption names the spacetime region while the discussion uses A-B_II; both are emitted"),
        ),
        "fig7": FigurePreset(
            "fig7",
            "Fig. 7: U_BIBII and C_BIBII versus Hawking temperature for several state parameters (spacetime)",
            _state_sweep(Bipartition.SPACETIME), "t_hawking", (_T_ASSUMPTION, _STATE_ASSUMPTION),
        ),
        "fig8": FigurePreset(
            "fig8",
            "Fig. 8: U_BIBII and C_BIBII versus Hawking temperature for several frequency modes (spacetime)",
            _freq_sweep(Bipartition.SPACETIME), "t_hawking", (_T_ASSUMPTION, _FREQ_ASSUMPTION),
        ),
    }


PRESETS = _build()
PRESET_IDS = tuple(PRESETS)


def get_preset(fig_id: str) -> FigurePreset:
    try:
        return PRESETS[fig_id]
    except KeyError:
        raise DomainError(f"unknown figure {fig_id!r}; expected one of {list(PRESETS)}") from None


def figure_preset(fig_id: str) -> SweepSpec:
    return get_preset(fig_id).spec
