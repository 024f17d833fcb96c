#pragma once

#include "fermi/fock.hpp"

namespace fermi::maxent {

/// (1/2)(|uu> + |dd> + |0D> + |D0>), the two-mode maximally entangled state.
StateVector two_fermion_max();

enum class Example {
    I2Only,
    I1Only,
    IABOnly,
    IACOnly,
    IBCOnly,
    IABC1Only,
    IABC2Only,
};

/// The (3, 3) maximally entangled examples for which a single invariant is
/// nonzero; permuted kinds are mode relabelings of the printed states.
StateVector example_state(Example kind);

/// Cyclic construction for spin p/2 fermions: n = r * 2^(p+1) modes,
/// m = r * 2^p * (p+1) fermions; 2^(p+1) equal-weight orthogonal terms.
struct CyclicSpec {
    int p;  // odd (fermionic spin p/2)
    int r;  // concatenation count >= 1
};

StateVector cyclic_max_state(const CyclicSpec& spec);

/// True iff every single-mode reduced density matrix is within tol entrywise
/// of identity / local dimension.
bool is_maximally_entangled(const StateVector& state, double tol);

}  // namespace fermi::maxent
