#pragma once

#include "fermi/fock.hpp"

namespace fermi::invariants {

struct InvariantValue {
    Complex value;
    int degree;  // homogeneous degree of the defining polynomial
};

/// |value|^(2/degree); the entanglement monotone associated with an invariant.
double monotone(const InvariantValue& inv);

// --- two modes, two fermions -------------------------------------------------

InvariantValue i0(const StateVector& state);             // degree 4
double fermionic_concurrence(const StateVector& state);  // |m0D mD0 - muu mdd + mud mdu|

// --- three modes, three fermions, unconstrained ------------------------------

InvariantValue i_deg4(const StateVector& state, int variant);  // variant 1 or 2

enum class Pair { BC, AC, AB };
InvariantValue i_pair(const StateVector& state, Pair pair);  // degree 8

InvariantValue i_abc(const StateVector& state, int variant);  // degree 12

/// Hyperdeterminant of the single-occupancy amplitude block (three-tangle).
InvariantValue three_tangle(const StateVector& state);  // degree 4

// --- constrained cases --------------------------------------------------------

enum class Repulsive { I1, I2 };  // hardcore constraint: no doubly occupied mode
InvariantValue repulsive_invariant(const StateVector& state, Repulsive which);

enum class Attractive { PairMonomial, AB_CD, AD_BC, AC_BD };  // {empty, double} support
InvariantValue attractive_invariant(const StateVector& state, Attractive which);

enum class Localized { A1, A2, AL };  // one fermion pinned in mode A
InvariantValue localized_invariant(const StateVector& state, Localized which);

// --- density matrices ----------------------------------------------------------

/// 4x4 single-mode reduced density matrix, basis order (up, down, empty, double).
/// Off-block entries between different local particle numbers are exact zeros.
Eigen::Matrix4cd reduced_density_matrix(const StateVector& state, int mode);

/// von Neumann entropy, natural log; eigenvalues below 1e-14 treated as 0.
double subsystem_entropy(const Eigen::Matrix4cd& rdm);

}  // namespace fermi::invariants
