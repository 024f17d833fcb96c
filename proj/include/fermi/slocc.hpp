#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fermi/fock.hpp"

namespace fermi::slocc {

/// 4x4 local operator in the basis order (up, down, empty, double).
using LocalOperator = Eigen::Matrix4cd;

/// Coefficients for the generators lambda_1, lambda_2, lambda_3, lambda_8, lambda_15.
using GeneratorCoefficients = std::array<Complex, 5>;

struct GroupElement {
    std::vector<LocalOperator> locals;  // one per mode
};

LocalOperator generator(int kind);  // kind in {1, 2, 3, 8, 15}

/// Matrix exponential of sum c_k * lambda_k; block-diagonal with determinant 1.
LocalOperator exponentiate(const GeneratorCoefficients& coeffs);

bool is_block_diagonal(const LocalOperator& op, double tol = 0.0);

/// Per mode, draws 5 complex coefficients with re/im uniform in [-scale, scale]
/// and exponentiates. Deterministic for a fixed seed.
GroupElement random_element(int n_modes, double scale, std::uint64_t seed);

GroupElement identity_element(int n_modes);

/// Per-mode product g2.locals[m] * g1.locals[m] (apply g1 first).
GroupElement compose(const GroupElement& g2, const GroupElement& g1);

/// Applies the element mode by mode; the image is generally unnormalized.
StateVector apply(const GroupElement& element, const StateVector& state);

/// Every mode gets diag(1, 1, r e^{i phi}, r^{-1} e^{-i phi}); scales any state
/// in an (n, m) sector by (r e^{i phi})^(n-m).
GroupElement scaling_element(int n_modes, double r, double phi);

/// e^{-6 a lambda_3 + 2 a lambda_8 + a lambda_15}; scales states of the form
/// r1|up>|theta> + r2|0>|phi> + r3|double>|phi'> by e^{-3a}.
LocalOperator bell_local_annihilator(Complex alpha);

/// Uniform-box random state in the sector; normalized unless raw.
StateVector random_state(const std::shared_ptr<const Sector>& sector, std::uint64_t seed,
                         bool normalize = true);

}  // namespace fermi::slocc
