#include "fermi/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace fermi::invariants {

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ o = Occ::Empty;
constexpr Occ D = Occ::Double;

void require_sector(const StateVector& s, int n, int m, const char* what) {
    if (s.sector().n_modes() != n || s.sector().n_particles() != m)
        throw std::domain_error(std::string(what) + " requires the (" + std::to_string(n) +
                                ", " + std::to_string(m) + ") sector");
}

// amplitude accessors
struct Amp2 {
    const StateVector& s;
    Complex operator()(Occ a, Occ b) const { return s.amp(BasisLabel{a, b}); }
};
struct Amp3 {
    const StateVector& s;
    Complex operator()(Occ a, Occ b, Occ c) const { return s.amp(BasisLabel{a, b, c}); }
};
struct Amp4 {
    const StateVector& s;
    Complex operator()(Occ a, Occ b, Occ c, Occ e) const {
        return s.amp(BasisLabel{a, b, c, e});
    }
};

double support_tolerance(const StateVector& s) { return 1e-12 * std::max(1.0, s.norm()); }

void require_no_double(const StateVector& s) {
    double tol = support_tolerance(s);
    const auto& basis = s.sector().basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (Occ occ : basis[i])
            if (occ == D && std::abs(s.amp(i)) > tol)
                throw std::domain_error(
                    "repulsive invariants require zero amplitude on doubly occupied labels");
}

void require_pair_support(const StateVector& s) {
    double tol = support_tolerance(s);
    const auto& basis = s.sector().basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (Occ occ : basis[i])
            if ((occ == u || occ == d) && std::abs(s.amp(i)) > tol)
                throw std::domain_error(
                    "attractive invariants require support on {empty, double} labels only");
}

void require_localized_a(const StateVector& s, bool bc_paired) {
    double tol = support_tolerance(s);
    const auto& basis = s.sector().basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (std::abs(s.amp(i)) <= tol) continue;
        Occ a = basis[i][0];
        if (a == o || a == D)
            throw std::domain_error(
                "localized invariants require a single fermion pinned in mode A");
        if (bc_paired && (basis[i][1] == u || basis[i][1] == d || basis[i][2] == u ||
                          basis[i][2] == d))
            throw std::domain_error(
                "the AL invariant additionally requires {empty, double} support on modes B, C");
    }
}

// hyperdeterminant of the 8 single-occupancy amplitudes
Complex tau_bracket(const Amp3& m) {
    return m(d, d, d) * m(d, d, d) * m(u, u, u) * m(u, u, u) +
           m(u, d, d) * m(u, d, d) * m(d, u, u) * m(d, u, u) +
           m(d, u, d) * m(d, u, d) * m(u, d, u) * m(u, d, u) +
           m(d, d, u) * m(d, d, u) * m(u, u, d) * m(u, u, d) -
           2.0 * m(d, d, d) * m(d, d, u) * m(u, u, d) * m(u, u, u) -
           2.0 * m(d, d, d) * m(d, u, d) * m(u, d, u) * m(u, u, u) -
           2.0 * m(d, d, d) * m(d, u, u) * m(u, d, d) * m(u, u, u) -
           2.0 * m(d, d, u) * m(d, u, d) * m(u, d, u) * m(u, u, d) -
           2.0 * m(d, d, u) * m(u, u, d) * m(d, u, u) * m(u, d, d) -
           2.0 * m(d, u, d) * m(d, u, u) * m(u, d, u) * m(u, d, d) +
           4.0 * m(d, d, d) * m(d, u, u) * m(u, d, u) * m(u, u, d) +
           4.0 * m(u, u, u) * m(u, d, d) * m(d, u, d) * m(d, d, u);
}

}  // namespace

double monotone(const InvariantValue& inv) {
    if (inv.degree < 1) throw std::domain_error("invariant degree must be >= 1");
    return std::pow(std::abs(inv.value), 2.0 / static_cast<double>(inv.degree));
}

InvariantValue i0(const StateVector& state) {
    require_sector(state, 2, 2, "i0");
    Amp2 m{state};
    return {(m(u, u) * m(d, d) - m(u, d) * m(d, u)) * m(o, D) * m(D, o), 4};
}

double fermionic_concurrence(const StateVector& state) {
    require_sector(state, 2, 2, "fermionic_concurrence");
    Amp2 m{state};
    return std::abs(m(o, D) * m(D, o) - m(u, u) * m(d, d) + m(u, d) * m(d, u));
}

InvariantValue i_deg4(const StateVector& state, int variant) {
    require_sector(state, 3, 3, "i_deg4");
    Amp3 m{state};
    Complex v;
    if (variant == 1) {
        v = m(u, o, D) * m(o, D, u) * (m(D, u, o) * m(d, d, d) - m(D, d, o) * m(d, u, d)) +
            m(u, o, D) * m(o, D, d) * (m(D, d, o) * m(d, u, u) - m(D, u, o) * m(d, d, u)) +
            m(d, o, D) * m(o, D, u) * (m(D, d, o) * m(u, u, d) - m(D, u, o) * m(u, d, d)) +
            m(d, o, D) * m(o, D, d) * (m(D, u, o) * m(u, d, u) - m(D, d, o) * m(u, u, u));
    } else if (variant == 2) {
        v = m(u, D, o) * m(D, o, u) * (m(o, u, D) * m(d, d, d) - m(o, d, D) * m(d, u, d)) +
            m(u, D, o) * m(D, o, d) * (m(o, d, D) * m(d, u, u) - m(o, u, D) * m(d, d, u)) +
            m(d, D, o) * m(D, o, u) * (m(o, d, D) * m(u, u, d) - m(o, u, D) * m(u, d, d)) +
            m(d, D, o) * m(D, o, d) * (m(o, u, D) * m(u, d, u) - m(o, d, D) * m(u, u, u));
    } else {
        throw std::domain_error("i_deg4 variant must be 1 or 2");
    }
    return {v, 4};
}

InvariantValue i_pair(const StateVector& state, Pair pair) {
    require_sector(state, 3, 3, "i_pair");
    Amp3 m{state};
    Complex v;
    switch (pair) {
        case Pair::BC:
            v = (m(o, D, u) * m(D, o, d) - m(o, D, d) * m(D, o, u)) *
                (m(o, u, D) * m(D, d, o) - m(o, d, D) * m(D, u, o)) *
                (2.0 * m(u, o, D) * m(u, D, o) *
                     (m(d, d, u) * m(d, u, d) - m(d, d, d) * m(d, u, u)) +
                 2.0 * m(d, o, D) * m(d, D, o) *
                     (m(u, d, u) * m(u, u, d) - m(u, d, d) * m(u, u, u)) +
                 (m(u, o, D) * m(d, D, o) + m(d, o, D) * m(u, D, o)) *
                     (m(d, d, d) * m(u, u, u) - m(d, u, d) * m(u, d, u) -
                      m(d, d, u) * m(u, u, d) + m(d, u, u) * m(u, d, d)));
            break;
        case Pair::AC:
            v = (m(o, D, u) * m(D, o, d) - m(o, D, d) * m(D, o, u)) *
                (m(u, o, D) * m(d, D, o) - m(d, o, D) * m(u, D, o)) *
                (2.0 * m(o, u, D) * m(D, u, o) *
                     (m(d, d, u) * m(u, d, d) - m(d, d, d) * m(u, d, u)) +
                 2.0 * m(o, d, D) * m(D, d, o) *
                     (m(d, u, u) * m(u, u, d) - m(d, u, d) * m(u, u, u)) +
                 (m(o, u, D) * m(D, d, o) + m(o, d, D) * m(D, u, o)) *
                     (m(d, d, d) * m(u, u, u) - m(d, u, u) * m(u, d, d) +
                      m(d, u, d) * m(u, d, u) - m(d, d, u) * m(u, u, d)));
            break;
        case Pair::AB:
            v = (m(o, u, D) * m(D, d, o) - m(o, d, D) * m(D, u, o)) *
                (m(u, o, D) * m(d, D, o) - m(d, o, D) * m(u, D, o)) *
                (2.0 * m(o, D, u) * m(D, o, u) *
                     (m(d, u, d) * m(u, d, d) - m(d, d, d) * m(u, u, d)) +
                 2.0 * m(o, D, d) * m(D, o, d) *
                     (m(d, u, u) * m(u, d, u) - m(d, d, u) * m(u, u, u)) +
                 (m(o, D, u) * m(D, o, d) + m(o, D, d) * m(D, o, u)) *
                     (m(d, d, d) * m(u, u, u) - m(d, u, u) * m(u, d, d) -
                      m(d, u, d) * m(u, d, u) + m(d, d, u) * m(u, u, d)));
            break;
    }
    return {v, 8};
}

InvariantValue i_abc(const StateVector& state, int variant) {
    require_sector(state, 3, 3, "i_abc");
    if (variant != 1 && variant != 2) throw std::domain_error("i_abc variant must be 1 or 2");
    Amp3 m{state};
    Complex prefactor = (m(o, D, u) * m(D, o, d) - m(o, D, d) * m(D, o, u)) *
                        (m(o, u, D) * m(D, d, o) - m(o, d, D) * m(D, u, o)) *
                        (m(u, o, D) * m(d, D, o) - m(d, o, D) * m(u, D, o));
    Complex sym = m(d, d, u) * m(u, u, d) + m(d, d, d) * m(u, u, u) -
                  m(d, u, u) * m(u, d, d) - m(d, u, d) * m(u, d, u);
    Complex bracket;
    if (variant == 1) {
        bracket =
            2.0 * m(u, o, D) * m(o, D, u) *
                (m(D, d, o) * m(d, u, u) - m(D, u, o) * m(d, d, u)) *
                (m(d, u, d) * m(u, d, d) - m(d, d, d) * m(u, u, d)) +
            2.0 * m(u, o, D) * m(o, D, d) *
                (m(D, d, o) * m(d, u, d) - m(D, u, o) * m(d, d, d)) *
                (m(d, u, u) * m(u, d, u) - m(d, d, u) * m(u, u, u)) +
            2.0 * m(d, o, D) * m(o, D, u) *
                (m(D, d, o) * m(u, u, u) - m(D, u, o) * m(u, d, u)) *
                (m(d, d, d) * m(u, u, d) - m(d, u, d) * m(u, d, d)) +
            2.0 * m(d, o, D) * m(o, D, d) *
                (m(D, d, o) * m(u, u, d) - m(D, u, o) * m(u, d, d)) *
                (m(d, d, u) * m(u, u, u) - m(d, u, u) * m(u, d, u)) +
            m(u, o, D) * m(o, D, d) * (m(D, d, o) * m(d, u, u) - m(D, u, o) * m(d, d, u)) * sym +
            m(u, o, D) * m(o, D, u) * (m(D, d, o) * m(d, u, d) - m(D, u, o) * m(d, d, d)) * sym -
            m(d, o, D) * m(o, D, d) * (m(D, d, o) * m(u, u, u) - m(D, u, o) * m(u, d, u)) * sym -
            m(d, o, D) * m(o, D, u) * (m(D, d, o) * m(u, u, d) - m(D, u, o) * m(u, d, d)) * sym;
    } else {
        bracket =
            2.0 * m(u, D, o) * m(D, o, u) *
                (m(o, d, D) * m(d, u, u) - m(o, u, D) * m(d, d, u)) *
                (m(d, u, d) * m(u, d, d) - m(d, d, d) * m(u, u, d)) +
            2.0 * m(u, D, o) * m(D, o, d) *
                (m(o, d, D) * m(d, u, d) - m(o, u, D) * m(d, d, d)) *
                (m(d, u, u) * m(u, d, u) - m(d, d, u) * m(u, u, u)) +
            2.0 * m(d, D, o) * m(D, o, u) *
                (m(o, d, D) * m(u, u, u) - m(o, u, D) * m(u, d, u)) *
                (m(d, d, d) * m(u, u, d) - m(d, u, d) * m(u, d, d)) +
            2.0 * m(d, D, o) * m(D, o, d) *
                (m(o, d, D) * m(u, u, d) - m(o, u, D) * m(u, d, d)) *
                (m(d, d, u) * m(u, u, u) - m(d, u, u) * m(u, d, u)) +
            m(u, D, o) * m(D, o, d) * (m(o, d, D) * m(d, u, u) - m(o, u, D) * m(d, d, u)) * sym +
            m(u, D, o) * m(D, o, u) * (m(o, d, D) * m(d, u, d) - m(o, u, D) * m(d, d, d)) * sym -
            m(d, D, o) * m(D, o, d) * (m(o, d, D) * m(u, u, u) - m(o, u, D) * m(u, d, u)) * sym -
            m(d, D, o) * m(D, o, u) * (m(o, d, D) * m(u, u, d) - m(o, u, D) * m(u, d, d)) * sym;
    }
    return {prefactor * bracket, 12};
}

InvariantValue three_tangle(const StateVector& state) {
    require_sector(state, 3, 3, "three_tangle");
    Amp3 m{state};
    return {tau_bracket(m), 4};
}

InvariantValue repulsive_invariant(const StateVector& state, Repulsive which) {
    require_sector(state, 3, 2, "repulsive_invariant");
    require_no_double(state);
    Amp3 m{state};
    if (which == Repulsive::I1) {
        Complex v = (m(u, u, o) * m(d, d, o) - m(u, d, o) * m(d, u, o)) *
                    (m(o, u, u) * m(o, d, d) - m(o, u, d) * m(o, d, u)) *
                    (m(u, o, u) * m(d, o, d) - m(u, o, d) * m(d, o, u));
        return {v, 6};
    }
    Complex v = m(u, u, o) * (m(o, d, d) * m(d, o, u) - m(o, d, u) * m(d, o, d)) +
                m(u, d, o) * (m(o, u, u) * m(d, o, d) - m(o, u, d) * m(d, o, u)) +
                m(d, u, o) * (m(o, d, u) * m(u, o, d) - m(o, d, d) * m(u, o, u)) +
                m(d, d, o) * (m(o, u, d) * m(u, o, u) - m(o, u, u) * m(u, o, d));
    return {v, 3};
}

InvariantValue attractive_invariant(const StateVector& state, Attractive which) {
    if (which == Attractive::PairMonomial) {
        require_sector(state, 2, 2, "attractive pair monomial");
        require_pair_support(state);
        Amp2 m{state};
        return {m(o, D) * m(D, o), 2};
    }
    require_sector(state, 4, 4, "attractive_invariant");
    require_pair_support(state);
    Amp4 m{state};
    Complex v;
    switch (which) {
        case Attractive::AB_CD:
            v = m(o, D, D, o) * m(D, o, o, D) - m(o, D, o, D) * m(D, o, D, o);
            break;
        case Attractive::AD_BC:
            v = m(o, o, D, D) * m(D, D, o, o) - m(o, D, o, D) * m(D, o, D, o);
            break;
        case Attractive::AC_BD:
            v = m(o, D, D, o) * m(D, o, o, D) - m(o, o, D, D) * m(D, D, o, o);
            break;
        default:
            v = 0.0;
            break;
    }
    return {v, 2};
}

InvariantValue localized_invariant(const StateVector& state, Localized which) {
    require_sector(state, 3, 3, "localized_invariant");
    require_localized_a(state, which == Localized::AL);
    Amp3 m{state};
    switch (which) {
        case Localized::A1: {
            Complex v =
                2.0 * m(u, o, D) * m(u, D, o) *
                    (m(d, d, u) * m(d, u, d) - m(d, d, d) * m(d, u, u)) +
                2.0 * m(d, o, D) * m(d, D, o) *
                    (m(u, d, u) * m(u, u, d) - m(u, d, d) * m(u, u, u)) +
                m(u, o, D) * m(d, D, o) *
                    (m(d, d, d) * m(u, u, u) - m(d, u, d) * m(u, d, u)) +
                m(u, o, D) * m(d, D, o) *
                    (m(d, u, u) * m(u, d, d) - m(d, d, u) * m(u, u, d)) +
                m(d, o, D) * m(u, D, o) *
                    (m(d, d, d) * m(u, u, u) - m(d, u, d) * m(u, d, u)) +
                m(d, o, D) * m(u, D, o) *
                    (m(d, u, u) * m(u, d, d) - m(d, d, u) * m(u, u, d));
            return {v, 4};
        }
        case Localized::A2: {
            Complex det = m(u, o, D) * m(d, D, o) - m(d, o, D) * m(u, D, o);
            return {det * det * tau_bracket(m), 8};
        }
        case Localized::AL:
            return {m(u, o, D) * m(d, D, o) - m(d, o, D) * m(u, D, o), 2};
    }
    throw std::domain_error("invalid localized invariant selector");
}

Eigen::Matrix4cd reduced_density_matrix(const StateVector& state, int mode) {
    const Sector& sector = state.sector();
    if (mode < 0 || mode >= sector.n_modes())
        throw std::domain_error("reduced_density_matrix mode out of range");
    Eigen::Matrix4cd rdm = Eigen::Matrix4cd::Zero();
    // group basis labels by the occupation of all other modes
    std::map<BasisLabel, std::array<Complex, 4>> groups;
    const auto& basis = sector.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Complex a = state.amp(i);
        if (a == 0.0) continue;
        BasisLabel rest = basis[i];
        Occ local = rest[static_cast<std::size_t>(mode)];
        rest.erase(rest.begin() + mode);
        auto [it, inserted] = groups.try_emplace(std::move(rest));
        if (inserted) it->second.fill(Complex(0.0));
        it->second[static_cast<std::size_t>(local)] += a;
    }
    for (const auto& [rest, amps] : groups)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                rdm(r, c) += amps[static_cast<std::size_t>(r)] *
                             std::conj(amps[static_cast<std::size_t>(c)]);
    // particle-number superselection: off-block coherences are structurally zero
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (particle_count(static_cast<Occ>(r)) != particle_count(static_cast<Occ>(c)))
                rdm(r, c) = 0.0;
    return rdm;
}

double subsystem_entropy(const Eigen::Matrix4cd& rdm) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rdm);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double ev = es.eigenvalues()(i);
        if (ev > 1e-14) s -= ev * std::log(ev);
    }
    return s;
}

}  // namespace fermi::invariants
