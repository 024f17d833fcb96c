#include "fermi/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermi {

namespace {

constexpr Occ kOccOrder[4] = {Occ::Up, Occ::Down, Occ::Empty, Occ::Double};

bool spin_occupied(Occ o, Spin s) {
    if (s == Spin::Up) return o == Occ::Up || o == Occ::Double;
    return o == Occ::Down || o == Occ::Double;
}

Occ with_spin(Occ o, Spin s, bool present) {
    bool up = spin_occupied(o, Spin::Up);
    bool down = spin_occupied(o, Spin::Down);
    (s == Spin::Up ? up : down) = present;
    if (up && down) return Occ::Double;
    if (up) return Occ::Up;
    if (down) return Occ::Down;
    return Occ::Empty;
}

}  // namespace

char occ_char(Occ o) {
    switch (o) {
        case Occ::Up: return 'u';
        case Occ::Down: return 'd';
        case Occ::Empty: return '0';
        case Occ::Double: return 'D';
    }
    return '?';
}

Occ occ_from_char(char c) {
    switch (c) {
        case 'u': return Occ::Up;
        case 'd': return Occ::Down;
        case '0': return Occ::Empty;
        case 'D': return Occ::Double;
        default: throw std::domain_error(std::string("invalid occupation character '") + c + "'");
    }
}

BasisLabel label_from_string(std::string_view s) {
    BasisLabel label;
    label.reserve(s.size());
    for (char c : s) label.push_back(occ_from_char(c));
    return label;
}

std::string label_to_string(const BasisLabel& label) {
    std::string s;
    s.reserve(label.size());
    for (Occ o : label) s.push_back(occ_char(o));
    return s;
}

int total_particles(const BasisLabel& label) {
    int n = 0;
    for (Occ o : label) n += particle_count(o);
    return n;
}

Sector::Sector(int n_modes, int n_particles)
    : n_modes_(n_modes), n_particles_(n_particles) {}

std::uint64_t Sector::count_labels(int n_modes, int n_particles) {
    // Number of occupation strings of n modes with the given total count,
    // i.e. C(2*n_modes, n_particles).
    if (n_particles < 0 || n_particles > 2 * n_modes) return 0;
    std::uint64_t c = 1;
    for (int k = 1; k <= n_particles; ++k)
        c = c * static_cast<std::uint64_t>(2 * n_modes - n_particles + k) / k;
    return c;
}

std::shared_ptr<const Sector> Sector::make(int n_modes, int n_particles) {
    if (n_modes < 1) throw std::domain_error("n_modes must be >= 1");
    if (n_particles < 0 || n_particles > 2 * n_modes)
        throw std::domain_error("n_particles out of range for the given mode count");

    auto sector = std::shared_ptr<Sector>(new Sector(n_modes, n_particles));
    BasisLabel current;
    current.reserve(static_cast<std::size_t>(n_modes));
    // Lexicographic enumeration, Up < Down < Empty < Double, mode 0 most significant.
    auto recurse = [&](auto&& self, int mode, int remaining) -> void {
        if (mode == n_modes) {
            if (remaining == 0) sector->basis_.push_back(current);
            return;
        }
        int slots_left = 2 * (n_modes - mode - 1);
        for (Occ o : kOccOrder) {
            int rest = remaining - particle_count(o);
            if (rest < 0 || rest > slots_left) continue;
            current.push_back(o);
            self(self, mode + 1, rest);
            current.pop_back();
        }
    };
    recurse(recurse, 0, n_particles);
    for (std::size_t i = 0; i < sector->basis_.size(); ++i)
        sector->index_.emplace(sector->basis_[i], i);
    return sector;
}

std::shared_ptr<const Sector> enumerate_sector(int n_modes, int n_particles) {
    return Sector::make(n_modes, n_particles);
}

std::size_t Sector::index_of(const BasisLabel& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw std::domain_error("label " + label_to_string(label) + " is not in the sector");
    return it->second;
}

std::optional<std::size_t> Sector::find(const BasisLabel& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::pair<BasisLabel, int>> apply_ladder(const LadderTerm& term,
                                                       const BasisLabel& label) {
    BasisLabel current = label;
    int sign = 1;
    // Factors act right to left. The sign of creating/annihilating (mode, spin)
    // against the canonical word (modes ascending, up before down) is (-1)^c
    // where c counts occupied single-particle states strictly before the target.
    for (auto it = term.rbegin(); it != term.rend(); ++it) {
        const LadderFactor& f = *it;
        if (f.mode < 0 || f.mode >= static_cast<int>(current.size()))
            throw std::domain_error("ladder factor mode out of range");
        bool occupied = spin_occupied(current[static_cast<std::size_t>(f.mode)], f.spin);
        if (f.create == occupied) return std::nullopt;  // Pauli exclusion / empty slot
        int crossings = 0;
        for (int m = 0; m < f.mode; ++m) {
            Occ o = current[static_cast<std::size_t>(m)];
            crossings += spin_occupied(o, Spin::Up) ? 1 : 0;
            crossings += spin_occupied(o, Spin::Down) ? 1 : 0;
        }
        if (f.spin == Spin::Down &&
            spin_occupied(current[static_cast<std::size_t>(f.mode)], Spin::Up))
            ++crossings;
        if (crossings % 2 != 0) sign = -sign;
        current[static_cast<std::size_t>(f.mode)] =
            with_spin(current[static_cast<std::size_t>(f.mode)], f.spin, f.create);
    }
    return std::make_pair(current, sign);
}

StateVector::StateVector(std::shared_ptr<const Sector> sector, Eigen::VectorXcd amplitudes)
    : sector_(std::move(sector)), amps_(std::move(amplitudes)) {
    if (!sector_) throw std::domain_error("null sector");
    if (static_cast<std::size_t>(amps_.size()) != sector_->size())
        throw std::domain_error("amplitude count does not match sector size");
}

StateVector StateVector::zero(std::shared_ptr<const Sector> sector) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(sector->size()));
    return StateVector(std::move(sector), std::move(amps));
}

StateVector StateVector::from_amplitudes(std::shared_ptr<const Sector> sector,
                                         const std::map<BasisLabel, Complex>& entries,
                                         bool normalize) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(sector->size()));
    for (const auto& [label, value] : entries)
        amps(static_cast<Eigen::Index>(sector->index_of(label))) = value;
    if (normalize) {
        double n = amps.norm();
        if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
        amps /= n;
    }
    return StateVector(std::move(sector), std::move(amps));
}

Complex StateVector::amp(const BasisLabel& label) const {
    return amps_(static_cast<Eigen::Index>(sector_->index_of(label)));
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(amps_.squaredNorm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
    return StateVector(sector_, amps_ / n);
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.sector().n_modes() != b.sector().n_modes() ||
        a.sector().n_particles() != b.sector().n_particles())
        throw std::domain_error("inner product requires matching sectors");
    return a.amplitudes().dot(b.amplitudes());
}

}  // namespace fermi
