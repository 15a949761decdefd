"""Compass superpositions of q-oscillator stationary states and their Wigner functions."""
from .compass import (
    CompassSpec,
    cat_amplitude,
    compass_amplitude,
    component,
    normalization_analytic,
    normalization_numeric,
    phase_factor,
)
from .directions import Direction, DirectionPair
from .oscillator import AnalyticState, OscillatorParams, ho_eigenstate, ladder_apply, make_params, psi_p_model, psi_x
from .phasespace import GridSpec, PhaseSpaceGrid, export_grid, locate_peaks, negativity_fraction, render_grid
from .quadrature import QuadratureSpec
from .wigner import component_closed, cross_wigner_oracle, total

__version__ = "0.1.0"
