"""Fekete-Szego bounds for convolution-defined Ma-Minda classes, with a numerical oracle."""

from .bounds import (
    BoundReport,
    Improvement,
    Regime,
    a2_bound,
    fs_auto,
    fs_complex,
    fs_improved,
    fs_real,
    fs_sigma3,
    fs_v,
    lemma_minda,
    lemma_minda_improved,
    lemma_ravi,
    sigmas,
    specialization_check,
)
from .config import DEFAULT_TOLERANCES, Tolerances
from .kernels import Kernel, coeff, kernel_series, parse_kernel
from .oracle import (
    CaratheodoryPoint,
    VerifyReport,
    caratheodory_point,
    extremal,
    member_from_point,
    schwarz_path_check,
    sup_search,
    sup_sweep,
)
from .psi_map import ClassSpec, DPair, d_closed_form, psi_forward, solve_a23
from .series import TruncSeries, compose, derivative, div, hadamard, mul
from .targets import Target, compose_schwarz, custom, janowski, parse_target

__version__ = "0.1.0"
