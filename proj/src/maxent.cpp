#include "fermi/maxent.hpp"

#include <cmath>
#include <stdexcept>

#include "fermi/invariants.hpp"

namespace fermi::maxent {

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ o = Occ::Empty;
constexpr Occ D = Occ::Double;

StateVector make_state3(const std::vector<std::pair<BasisLabel, double>>& entries) {
    std::map<BasisLabel, Complex> amps;
    for (const auto& [label, w] : entries) amps[label] = w;
    return StateVector::from_amplitudes(enumerate_sector(3, 3), amps, true);
}

/// Plain relabeling of the mode order; particle-conserving mode permutations
/// act on labels without fermionic resigning.
StateVector permute_modes(const StateVector& state, int a, int b) {
    std::map<BasisLabel, Complex> amps;
    const auto& basis = state.sector().basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Complex v = state.amp(i);
        if (v == 0.0) continue;
        BasisLabel label = basis[i];
        std::swap(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);
        amps[label] = v;
    }
    return StateVector::from_amplitudes(state.sector_ptr(), amps, false);
}

}  // namespace

StateVector two_fermion_max() {
    return StateVector::from_amplitudes(enumerate_sector(2, 2),
                                        {{{u, u}, 1.0},
                                         {{d, d}, 1.0},
                                         {{o, D}, 1.0},
                                         {{D, o}, 1.0}},
                                        true);
}

StateVector example_state(Example kind) {
    const double s2 = std::sqrt(2.0);
    switch (kind) {
        case Example::I2Only:
            return make_state3({{{u, D, o}, 1.0},
                                {{o, u, D}, 1.0},
                                {{D, o, u}, 1.0},
                                {{d, d, d}, 1.0}});
        case Example::I1Only:
            return permute_modes(example_state(Example::I2Only), 1, 2);
        case Example::IABOnly:
            return make_state3({{{u, D, o}, 1.0},
                                {{o, u, D}, 1.0},
                                {{D, o, u}, 1.0},
                                {{o, D, u}, 1.0},
                                {{d, o, D}, 1.0},
                                {{D, d, o}, 1.0},
                                {{d, u, d}, 1.0},
                                {{u, d, d}, 1.0}});
        case Example::IACOnly:
            return permute_modes(example_state(Example::IABOnly), 1, 2);
        case Example::IBCOnly:
            return permute_modes(example_state(Example::IABOnly), 0, 2);
        case Example::IABC1Only:
            return make_state3({{{u, o, D}, s2},
                                {{o, D, u}, s2},
                                {{D, u, o}, s2},
                                {{D, o, d}, 1.0},
                                {{o, d, D}, 1.0},
                                {{d, D, o}, 1.0},
                                {{d, u, d}, 1.0},
                                {{u, d, d}, 1.0},
                                {{d, d, u}, 1.0}});
        case Example::IABC2Only:
            return permute_modes(example_state(Example::IABC1Only), 1, 2);
    }
    throw std::domain_error("invalid example kind");
}

StateVector cyclic_max_state(const CyclicSpec& spec) {
    if (spec.p < 1 || spec.p % 2 == 0)
        throw std::domain_error("cyclic construction requires odd p (fermionic spin)");
    if (spec.r < 1) throw std::domain_error("concatenation count r must be >= 1");
    if (spec.p != 1)
        throw std::length_error(
            "cyclic construction exceeds the size guard for p > 1 (local dimension 2^(p+1))");

    int period = 4;  // 2^(p+1) local states for p = 1
    int n_modes = spec.r * period;
    int n_particles = spec.r * 2 * (spec.p + 1);  // r * 2^p * (p+1)
    if (Sector::count_labels(n_modes, n_particles) > (1u << 20))
        throw std::length_error("cyclic construction exceeds the 2^20 basis-label guard");

    // base sequence: r concatenated copies of the local-state cycle, integer
    // labels mapped onto the local basis in its lexicographic order
    const Occ map[4] = {u, d, o, D};
    std::vector<int> base(static_cast<std::size_t>(n_modes));
    for (int i = 0; i < n_modes; ++i) base[static_cast<std::size_t>(i)] = i % period;

    auto sector = enumerate_sector(n_modes, n_particles);
    std::map<BasisLabel, Complex> amps;
    for (int shift = 1; shift <= period; ++shift) {
        BasisLabel label(static_cast<std::size_t>(n_modes));
        for (int i = 0; i < n_modes; ++i)
            label[static_cast<std::size_t>(i)] =
                map[base[static_cast<std::size_t>((i + shift) % n_modes)]];
        amps[label] = 0.5;  // 2^{-(p+1)/2}
    }
    return StateVector::from_amplitudes(sector, amps, false);
}

bool is_maximally_entangled(const StateVector& state, double tol) {
    for (int mode = 0; mode < state.sector().n_modes(); ++mode) {
        Eigen::Matrix4cd rdm = invariants::reduced_density_matrix(state, mode);
        Eigen::Matrix4cd delta = rdm - Eigen::Matrix4cd::Identity() * 0.25;
        if (delta.cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

}  // namespace fermi::maxent
