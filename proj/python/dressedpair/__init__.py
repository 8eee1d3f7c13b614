"""Dressed-state Lindblad dynamics of two dipole-coupled two-level atoms."""

from dressedpair._core import (  # noqa: F401
    DensityMatrix,
    RateSet,
    SystemParams,
    ValidityReport,
    analytic_eigenvalues,
    analytic_modes,
    build_dressed_generator,
    build_phenomenological_generator,
    computational_to_dressed,
    concurrence_excited_atom_zero_T,
    concurrence_general,
    concurrence_single_excitation,
    concurrence_transient_steady,
    concurrence_x_state,
    coupling_g,
    dressed_rates,
    dressed_to_computational,
    evolve_closed_form_zero_temperature,
    evolve_eig,
    evolve_phenomenological_diagonal,
    evolve_rotating_frame,
    geometry_factor_axial,
    geometry_factor_parallel,
    integrate_linear_ode,
    parse_initial_state,
    reduced_generator_finite_temperature,
    run_acceptance,
    spectral_evolve,
    thermal_occupation,
    transient_steady_state,
    validity_window,
)

__version__ = "0.1.0"
