"""SLOCC-invariant entanglement measures for delocalized fermions."""

from ._core import (  # noqa: F401
    HamiltonianParams,
    State,
    apply_random_slocc,
    build_hamiltonian,
    cyclic_max_state,
    degree16_probe,
    example_state,
    fermionic_concurrence,
    find_peak,
    format_state,
    i0,
    i_abc,
    i_deg4,
    i_pair,
    is_maximally_entangled,
    measures_at,
    monotone,
    omega_evaluate,
    omega_labels,
    parse_state,
    psi_p,
    psi_p_overlap,
    random_state,
    reduced_density_matrix,
    sector_labels,
    subsystem_entropy,
    three_tangle,
    two_fermion_max,
)
