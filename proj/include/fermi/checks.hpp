#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermi/fock.hpp"
#include "fermi/slocc.hpp"

namespace fermi::checks {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // worst deviation or failure description
};

/// Group-action, composition, and commutation properties.
std::vector<CheckResult> run_slocc(int samples, std::uint64_t seed);

/// Cross-validation of the transvection recipes against the hand-coded
/// polynomials, index-balance admissibility, and degree constraints.
std::vector<CheckResult> run_omega(int samples, std::uint64_t seed);

/// Maximal-mixedness of the constructed example and cyclic states.
std::vector<CheckResult> run_maxent(int samples, std::uint64_t seed);

std::vector<CheckResult> run_suite(const std::string& suite, int samples,
                                   std::uint64_t seed);  // slocc|omega|maxent|all

bool all_passed(const std::vector<CheckResult>& results);

/// Restricted subgroup samplers for the constrained invariant families.
slocc::GroupElement random_spin_block_element(int n_modes, double scale, std::uint64_t seed);
slocc::GroupElement random_pair_diagonal_element(int n_modes, double scale,
                                                 std::uint64_t seed);
/// Spin-block action on mode A, unrestricted on the other modes.
slocc::GroupElement random_localized_element(int n_modes, double scale, std::uint64_t seed);

/// Random state supported on labels without doubly occupied modes.
StateVector random_hardcore_state(int n_modes, int n_particles, std::uint64_t seed);
/// Random state supported on {empty, double} labels.
StateVector random_paired_state(int n_modes, int n_particles, std::uint64_t seed);
/// Random (3,3) state with mode A singly occupied; pair_bc restricts B, C to
/// {empty, double} labels.
StateVector random_localized_state(std::uint64_t seed, bool pair_bc);

}  // namespace fermi::checks
