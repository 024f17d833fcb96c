#pragma once

#include <string>
#include <vector>

#include "fermi/fock.hpp"

namespace fermi::hubbard {

/// Three-site ring with Ising spin coupling, longitudinal field, on-site
/// pairing attraction, transverse spin flips, and spin-dependent hopping.
struct HamiltonianParams {
    double J = 1.0;        // Ising coupling (ferromagnetic for J > 0)
    double B = 0.0;        // longitudinal field
    double K = 2.99507;    // on-site attraction per doubly occupied site
    double f = 5e-3;       // transverse spin-flip amplitude
    double p_up = -5e-6;   // hopping amplitude, spin up
    double p_down = 5e-6;  // hopping amplitude, spin down
};

/// 20x20 Hermitian matrix over the (3 modes, 3 fermions) sector basis.
Eigen::MatrixXcd build_hamiltonian(const HamiltonianParams& params);

/// The k lowest eigenpairs, energies ascending. Each eigenvector is gauged so
/// its largest-magnitude amplitude is real and positive.
struct Spectrum {
    std::vector<double> energies;
    std::vector<StateVector> states;
};
Spectrum spectrum(const Eigen::MatrixXcd& h, int k);

struct SweepRow {
    double B;
    double measure_i12;  // 4 |I1 - I2|^(1/2)
    double measure_tau;  // 2 |tau|^(1/2)
    double entropy;      // single-site von Neumann entropy of the ground state
    double gap;          // E1 - E0
    double ground_energy;
};

/// Ground-state measures at one field value (other parameters from base).
SweepRow measures_at(const HamiltonianParams& base, double field);

/// Uniform grid of `points` field values from b_min to b_max inclusive.
std::vector<SweepRow> sweep(const HamiltonianParams& base, double b_min, double b_max,
                            int points);

/// CSV with header B,measure_i12,measure_tau,entropy,gap,ground_energy and
/// 12-significant-digit values; throws std::runtime_error if unwritable.
void write_csv(const std::string& path, const std::vector<SweepRow>& rows);

enum class Quantity { I12, Tau, Entropy };

struct PeakResult {
    double B;
    double value;
    bool at_endpoint;  // maximum within tol of a bracket endpoint
};

/// Golden-section maximization of the quantity over [b_min, b_max].
PeakResult find_peak(const HamiltonianParams& base, Quantity quantity, double b_min,
                     double b_max, double b_tol = 1e-11);

/// The period-three translation-covariant reference state (normalized).
StateVector psi_p();

/// |<psi_p | state>|.
double psi_p_overlap(const StateVector& state);

}  // namespace fermi::hubbard
