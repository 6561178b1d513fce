"""Quantum consonance and uncertainty-induced nonlocality of Hawking-decohered Gisin states."""
from .density import DensityMatrix
from .errors import DimensionError, DomainError, NotPSDError, NumericError, QcorrError, StateError
from .hawking_channel import (
    BogoliubovCoefficients,
    FieldMode,
    Temperature,
    bogoliubov,
    dilate_second_qubit,
    hawking_temperature,
    kruskal_basis_images,
)
from .measures import (
    UinConvention,
    bloch_vector,
    consonance,
    n_matrix,
    skew_information,
    uin,
    uin_bruteforce,
)
from .presets import figure_preset
from .states import (
    Bipartition,
    GisinParams,
    channel_reduced_state,
    evolved_tripartite,
    gisin_state,
    reduced_state,
)
from .sweep import MeasureRecord, SweepSpec, run_point, run_sweep

__version__ = "0.1.0"
