"""Stirling-cycle quantum heat engines on the LMG and Dicke models."""

from ._core import (
    Baths,
    ConfigError,
    ContractError,
    CycleResult,
    IoError,
    ModelParams,
    ParameterError,
    QheError,
    SolverError,
    ThermalState,
    converge_cutoff,
    critical_coupling,
    efficiency_sweep,
    eigh,
    eigvalsh,
    excitation_number,
    hamiltonian,
    meanfield_energy,
    parity,
    preset_names,
    preset_text,
    run,
    run_cycle,
    second_derivative_jump,
    spectrum,
    thermal_state,
    toy_cycle,
    toy_levels,
    toy_sweep,
)


def run_preset(command, name, fmt="csv", workers=1):
    """Run a CLI subcommand on a bundled preset and return the table text."""
    return run(command, preset_text(name), fmt, workers)
