#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace fermi {

using Complex = std::complex<double>;

/// Local occupation of one spatial mode, in the basis order used throughout:
/// up, down, empty, doubly occupied.
enum class Occ : std::uint8_t { Up = 0, Down = 1, Empty = 2, Double = 3 };

inline int particle_count(Occ o) {
    switch (o) {
        case Occ::Up:
        case Occ::Down: return 1;
        case Occ::Double: return 2;
        case Occ::Empty: return 0;
    }
    return 0;
}

char occ_char(Occ o);
Occ occ_from_char(char c);  // throws std::domain_error on bad alphabet

/// Occupation pattern of all modes; mode 0 first.
using BasisLabel = std::vector<Occ>;

BasisLabel label_from_string(std::string_view s);  // alphabet u, d, 0, D
std::string label_to_string(const BasisLabel& label);
int total_particles(const BasisLabel& label);

/// Fixed-particle-number sector of an n-mode Fock space. The basis is ordered
/// lexicographically with Up < Down < Empty < Double, mode 0 most significant.
class Sector {
public:
    static std::shared_ptr<const Sector> make(int n_modes, int n_particles);

    int n_modes() const { return n_modes_; }
    int n_particles() const { return n_particles_; }
    const std::vector<BasisLabel>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }

    std::size_t index_of(const BasisLabel& label) const;  // throws if absent
    std::optional<std::size_t> find(const BasisLabel& label) const;

    /// Number of labels the sector would contain, without materializing it.
    static std::uint64_t count_labels(int n_modes, int n_particles);

private:
    Sector(int n_modes, int n_particles);
    int n_modes_;
    int n_particles_;
    std::vector<BasisLabel> basis_;
    std::map<BasisLabel, std::size_t> index_;
};

std::shared_ptr<const Sector> enumerate_sector(int n_modes, int n_particles);

enum class Spin : std::uint8_t { Up = 0, Down = 1 };

struct LadderFactor {
    int mode;
    Spin spin;
    bool create;
};

/// Product of ladder operators; factors are applied right to left.
using LadderTerm = std::vector<LadderFactor>;

/// Applies the term to a basis label. Returns the resulting label together
/// with the fermionic sign accumulated against the canonical operator order
/// (modes ascending, up before down), or nullopt if any factor annihilates.
std::optional<std::pair<BasisLabel, int>> apply_ladder(const LadderTerm& term,
                                                       const BasisLabel& label);

class StateVector {
public:
    StateVector(std::shared_ptr<const Sector> sector, Eigen::VectorXcd amplitudes);

    static StateVector zero(std::shared_ptr<const Sector> sector);
    static StateVector from_amplitudes(std::shared_ptr<const Sector> sector,
                                       const std::map<BasisLabel, Complex>& entries,
                                       bool normalize);

    const Sector& sector() const { return *sector_; }
    const std::shared_ptr<const Sector>& sector_ptr() const { return sector_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }

    Complex amp(const BasisLabel& label) const;
    Complex amp(std::size_t index) const { return amps_(static_cast<Eigen::Index>(index)); }

    double norm() const { return amps_.norm(); }
    bool is_normalized(double tol = 1e-12) const;
    StateVector normalized() const;  // throws on zero vector

private:
    std::shared_ptr<const Sector> sector_;
    Eigen::VectorXcd amps_;
};

Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace fermi
