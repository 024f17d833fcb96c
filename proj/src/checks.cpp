#include "fermi/checks.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "fermi/invariants.hpp"
#include "fermi/maxent.hpp"
#include "fermi/omega.hpp"

namespace fermi::checks {

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ o = Occ::Empty;
constexpr Occ D = Occ::Double;

std::string format_deviation(double dev) {
    std::ostringstream os;
    os.precision(3);
    os << "max deviation " << dev;
    return os.str();
}

Complex random_complex(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    double re = box(rng);
    double im = box(rng);
    return {re, im};
}

StateVector random_supported_state(const std::shared_ptr<const Sector>& sector,
                                   const std::function<bool(const BasisLabel&)>& allowed,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::map<BasisLabel, Complex> amps;
    for (const auto& label : sector->basis())
        if (allowed(label)) amps[label] = random_complex(rng);
    return StateVector::from_amplitudes(sector, amps, true);
}

slocc::GroupElement element_from_pattern(
    int n_modes, double scale, std::uint64_t seed,
    const std::function<slocc::GeneratorCoefficients(int, slocc::GeneratorCoefficients)>&
        restrict_mode) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-scale, scale);
    slocc::GroupElement g;
    for (int mode = 0; mode < n_modes; ++mode) {
        slocc::GeneratorCoefficients c;
        for (auto& ck : c) {
            double re = box(rng);
            double im = box(rng);
            ck = {re, im};
        }
        g.locals.push_back(slocc::exponentiate(restrict_mode(mode, c)));
    }
    return g;
}

double relative_deviation(Complex a, Complex b) {
    double scale = std::max({std::abs(a), std::abs(b), 1e-12});
    return std::abs(a - b) / scale;
}

using Evaluator = std::function<Complex(const StateVector&)>;
using StateSampler = std::function<StateVector(std::uint64_t)>;
using ElementSampler = std::function<slocc::GroupElement(std::uint64_t)>;

CheckResult invariance_check(const std::string& name, const Evaluator& eval,
                             const StateSampler& states, const ElementSampler& elements,
                             int samples, std::uint64_t seed, double tol = 1e-8) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        StateVector psi = states(seed + 2 * static_cast<std::uint64_t>(i));
        slocc::GroupElement g = elements(seed + 2 * static_cast<std::uint64_t>(i) + 1);
        StateVector image = slocc::apply(g, psi);
        worst = std::max(worst, relative_deviation(eval(psi), eval(image)));
    }
    return {name, worst < tol, format_deviation(worst)};
}

}  // namespace

slocc::GroupElement random_spin_block_element(int n_modes, double scale,
                                              std::uint64_t seed) {
    return element_from_pattern(n_modes, scale, seed,
                                [](int, slocc::GeneratorCoefficients c) {
                                    c[3] = 0.0;  // lambda_8
                                    c[4] = 0.0;  // lambda_15
                                    return c;
                                });
}

slocc::GroupElement random_pair_diagonal_element(int n_modes, double scale,
                                                 std::uint64_t seed) {
    // diagonal with unit determinant on the {empty, double} block: c8 = -c15
    return element_from_pattern(n_modes, scale, seed,
                                [](int, slocc::GeneratorCoefficients c) {
                                    c[0] = c[1] = c[2] = 0.0;
                                    c[3] = -c[4];
                                    return c;
                                });
}

slocc::GroupElement random_localized_element(int n_modes, double scale,
                                             std::uint64_t seed) {
    return element_from_pattern(n_modes, scale, seed,
                                [](int mode, slocc::GeneratorCoefficients c) {
                                    if (mode == 0) {
                                        c[3] = 0.0;
                                        c[4] = 0.0;
                                    }
                                    return c;
                                });
}

StateVector random_hardcore_state(int n_modes, int n_particles, std::uint64_t seed) {
    return random_supported_state(
        enumerate_sector(n_modes, n_particles),
        [](const BasisLabel& l) {
            for (Occ t : l)
                if (t == Occ::Double) return false;
            return true;
        },
        seed);
}

StateVector random_paired_state(int n_modes, int n_particles, std::uint64_t seed) {
    return random_supported_state(
        enumerate_sector(n_modes, n_particles),
        [](const BasisLabel& l) {
            for (Occ t : l)
                if (t == Occ::Up || t == Occ::Down) return false;
            return true;
        },
        seed);
}

StateVector random_localized_state(std::uint64_t seed, bool pair_bc) {
    return random_supported_state(
        enumerate_sector(3, 3),
        [pair_bc](const BasisLabel& l) {
            if (l[0] != Occ::Up && l[0] != Occ::Down) return false;
            if (!pair_bc) return true;
            for (std::size_t i = 1; i < 3; ++i)
                if (l[i] == Occ::Up || l[i] == Occ::Down) return false;
            return true;
        },
        seed);
}

std::vector<CheckResult> run_slocc(int samples, std::uint64_t seed) {
    std::vector<CheckResult> out;
    auto sector33 = enumerate_sector(3, 3);
    auto sector22 = enumerate_sector(2, 2);
    auto sector44 = enumerate_sector(4, 4);

    // group elements are block-diagonal with unit determinant
    {
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            auto g = slocc::random_element(3, 0.3, seed + static_cast<std::uint64_t>(i));
            for (const auto& m : g.locals) {
                if (!slocc::is_block_diagonal(m, 0.0)) worst = 1.0;
                worst = std::max(worst, std::abs(m.determinant() - 1.0));
            }
        }
        out.push_back({"group elements block-diagonal with det 1", worst < 1e-9,
                       format_deviation(worst)});
    }

    // composition: apply(g2, apply(g1, psi)) == apply(g2 o g1, psi)
    {
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            auto s = seed + 10'000 + 3 * static_cast<std::uint64_t>(i);
            auto g1 = slocc::random_element(3, 0.3, s);
            auto g2 = slocc::random_element(3, 0.3, s + 1);
            StateVector psi = slocc::random_state(sector33, s + 2);
            StateVector lhs = slocc::apply(g2, slocc::apply(g1, psi));
            StateVector rhs = slocc::apply(slocc::compose(g2, g1), psi);
            worst = std::max(worst, (lhs.amplitudes() - rhs.amplitudes()).norm());
        }
        out.push_back({"composition of group actions", worst < 1e-10, format_deviation(worst)});
    }

    // the spin-block factors commute with the diagonal factors
    {
        double worst = 0.0;
        std::mt19937_64 rng(seed + 20'000);
        for (int i = 0; i < samples; ++i) {
            slocc::GeneratorCoefficients a{random_complex(rng), random_complex(rng),
                                           random_complex(rng), 0.0, 0.0};
            slocc::GeneratorCoefficients b{0.0, 0.0, 0.0, random_complex(rng),
                                           random_complex(rng)};
            auto ga = slocc::exponentiate(a);
            auto gb = slocc::exponentiate(b);
            worst = std::max(worst, (ga * gb - gb * ga).cwiseAbs().maxCoeff());
        }
        out.push_back({"spin-block and diagonal factors commute", worst < 1e-10,
                       format_deviation(worst)});
    }

    auto full33 = [&](std::uint64_t s) { return slocc::random_element(3, 0.3, s); };
    auto full22 = [&](std::uint64_t s) { return slocc::random_element(2, 0.3, s); };
    auto rand33 = [&](std::uint64_t s) { return slocc::random_state(sector33, s); };
    auto rand22 = [&](std::uint64_t s) { return slocc::random_state(sector22, s); };

    out.push_back(invariance_check(
        "invariance: I0", [](const StateVector& s) { return invariants::i0(s).value; },
        rand22, full22, samples, seed + 30'000));
    struct NamedEval {
        const char* name;
        Evaluator eval;
    };
    std::vector<NamedEval> unconstrained = {
        {"invariance: I1",
         [](const StateVector& s) { return invariants::i_deg4(s, 1).value; }},
        {"invariance: I2",
         [](const StateVector& s) { return invariants::i_deg4(s, 2).value; }},
        {"invariance: IBC",
         [](const StateVector& s) { return invariants::i_pair(s, invariants::Pair::BC).value; }},
        {"invariance: IAC",
         [](const StateVector& s) { return invariants::i_pair(s, invariants::Pair::AC).value; }},
        {"invariance: IAB",
         [](const StateVector& s) { return invariants::i_pair(s, invariants::Pair::AB).value; }},
        {"invariance: IABC1",
         [](const StateVector& s) { return invariants::i_abc(s, 1).value; }},
        {"invariance: IABC2",
         [](const StateVector& s) { return invariants::i_abc(s, 2).value; }},
    };
    std::uint64_t salt = 40'000;
    for (auto& [name, eval] : unconstrained) {
        out.push_back(invariance_check(name, eval, rand33, full33, samples, seed + salt));
        salt += 1000;
    }

    // constrained families with their restricted subgroups
    auto hardcore = [&](std::uint64_t s) { return random_hardcore_state(3, 2, s); };
    auto spin3 = [&](std::uint64_t s) { return random_spin_block_element(3, 0.3, s); };
    out.push_back(invariance_check(
        "invariance: repulsive I1",
        [](const StateVector& s) {
            return invariants::repulsive_invariant(s, invariants::Repulsive::I1).value;
        },
        hardcore, spin3, samples, seed + salt));
    salt += 1000;
    out.push_back(invariance_check(
        "invariance: repulsive I2",
        [](const StateVector& s) {
            return invariants::repulsive_invariant(s, invariants::Repulsive::I2).value;
        },
        hardcore, spin3, samples, seed + salt));
    salt += 1000;

    auto paired22 = [&](std::uint64_t s) { return random_paired_state(2, 2, s); };
    auto paired44 = [&](std::uint64_t s) { return random_paired_state(4, 4, s); };
    auto diag2 = [&](std::uint64_t s) { return random_pair_diagonal_element(2, 0.3, s); };
    auto diag4 = [&](std::uint64_t s) { return random_pair_diagonal_element(4, 0.3, s); };
    out.push_back(invariance_check(
        "invariance: attractive pair monomial",
        [](const StateVector& s) {
            return invariants::attractive_invariant(s, invariants::Attractive::PairMonomial)
                .value;
        },
        paired22, diag2, samples, seed + salt));
    salt += 1000;
    for (auto [which, name] :
         {std::pair{invariants::Attractive::AB_CD, "invariance: attractive AB|CD"},
          std::pair{invariants::Attractive::AD_BC, "invariance: attractive AD|BC"},
          std::pair{invariants::Attractive::AC_BD, "invariance: attractive AC|BD"}}) {
        out.push_back(invariance_check(
            name,
            [which](const StateVector& s) {
                return invariants::attractive_invariant(s, which).value;
            },
            paired44, diag4, samples, seed + salt));
        salt += 1000;
    }

    auto localizedA = [&](std::uint64_t s) { return random_localized_state(s, false); };
    auto localizedL = [&](std::uint64_t s) { return random_localized_state(s, true); };
    auto locel = [&](std::uint64_t s) { return random_localized_element(3, 0.3, s); };
    auto locelL = [&](std::uint64_t s) {
        // spin block on A, unit-determinant diagonal on the paired modes
        return element_from_pattern(3, 0.3, s, [](int mode, slocc::GeneratorCoefficients c) {
            if (mode == 0) {
                c[3] = 0.0;
                c[4] = 0.0;
            } else {
                c[0] = c[1] = c[2] = 0.0;
                c[3] = -c[4];
            }
            return c;
        });
    };
    for (auto [which, name] : {std::pair{invariants::Localized::A1, "invariance: IA1"},
                               std::pair{invariants::Localized::A2, "invariance: IA2"}}) {
        out.push_back(invariance_check(
            name,
            [which](const StateVector& s) {
                return invariants::localized_invariant(s, which).value;
            },
            localizedA, locel, samples, seed + salt));
        salt += 1000;
    }
    out.push_back(invariance_check(
        "invariance: IAL",
        [](const StateVector& s) {
            return invariants::localized_invariant(s, invariants::Localized::AL).value;
        },
        localizedL, locelL, samples, seed + salt));
    salt += 1000;

    // scaling element: identity action on n = m sectors
    {
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            StateVector psi = slocc::random_state(sector33, seed + salt + i);
            StateVector image = slocc::apply(slocc::scaling_element(3, 2.0, 0.7), psi);
            worst = std::max(worst, (image.amplitudes() - psi.amplitudes()).norm());
        }
        out.push_back({"scaling element trivial on n = m", worst < 1e-12,
                       format_deviation(worst)});
        salt += 1000;
    }

    // Bell-local-form states annihilate the seven generators
    {
        double worst = 0.0;
        for (int i = 0; i < samples; ++i) {
            std::mt19937_64 rng(seed + salt + static_cast<std::uint64_t>(i));
            int mode = static_cast<int>(rng() % 3);
            std::map<BasisLabel, Complex> amps;
            auto add_block = [&](Occ local, int rest_particles) {
                Complex r = random_complex(rng);
                auto rest_sector = enumerate_sector(2, rest_particles);
                for (const auto& rest : rest_sector->basis()) {
                    BasisLabel label = rest;
                    label.insert(label.begin() + mode, local);
                    amps[label] += r * random_complex(rng);
                }
            };
            add_block(u, 2);
            add_block(o, 3);
            add_block(D, 1);
            StateVector psi =
                StateVector::from_amplitudes(sector33, amps, true);
            for (auto& [name, eval] : unconstrained)
                worst = std::max(worst, std::abs(eval(psi)));
        }
        out.push_back({"Bell-local forms annihilate all generators", worst < 1e-12,
                       format_deviation(worst)});
    }

    return out;
}

std::vector<CheckResult> run_omega(int samples, std::uint64_t seed) {
    std::vector<CheckResult> out;
    auto sector33 = enumerate_sector(3, 3);

    struct RecipeRef {
        omega::Named which;
        Evaluator reference;
        StateSampler states;
    };
    auto rand33 = [&](std::uint64_t s) { return slocc::random_state(sector33, s); };
    auto localizedA = [&](std::uint64_t s) { return random_localized_state(s, false); };
    auto localizedL = [&](std::uint64_t s) { return random_localized_state(s, true); };

    std::vector<RecipeRef> refs = {
        {omega::Named::I1,
         [](const StateVector& s) { return invariants::i_deg4(s, 1).value; }, rand33},
        {omega::Named::I2,
         [](const StateVector& s) { return invariants::i_deg4(s, 2).value; }, rand33},
        {omega::Named::IBC,
         [](const StateVector& s) { return invariants::i_pair(s, invariants::Pair::BC).value; },
         rand33},
        {omega::Named::IAC,
         [](const StateVector& s) { return invariants::i_pair(s, invariants::Pair::AC).value; },
         rand33},
        {omega::Named::IAB,
         [](const StateVector& s) { return invariants::i_pair(s, invariants::Pair::AB).value; },
         rand33},
        {omega::Named::IABC1,
         [](const StateVector& s) { return invariants::i_abc(s, 1).value; }, rand33},
        {omega::Named::IABC2,
         [](const StateVector& s) { return invariants::i_abc(s, 2).value; }, rand33},
        {omega::Named::IA1,
         [](const StateVector& s) {
             return invariants::localized_invariant(s, invariants::Localized::A1).value;
         },
         localizedA},
        {omega::Named::IA2,
         [](const StateVector& s) {
             return invariants::localized_invariant(s, invariants::Localized::A2).value;
         },
         localizedA},
        {omega::Named::IA2Alt,
         [](const StateVector& s) {
             return invariants::localized_invariant(s, invariants::Localized::A2).value;
         },
         localizedA},
        {omega::Named::IAL,
         [](const StateVector& s) {
             return invariants::localized_invariant(s, invariants::Localized::AL).value;
         },
         localizedL},
    };

    int n_prop = std::max(samples, 20);
    std::uint64_t salt = 0;
    for (const auto& ref : refs) {
        const auto& poly = omega::named_polynomial(ref.which);
        std::string label = omega::named_label(ref.which);
        bool ok = true;
        std::string detail;
        try {
            // evaluate ratio consistency over support-appropriate samples
            std::vector<StateVector> states;
            for (int i = 0; i < n_prop; ++i)
                states.push_back(ref.states(seed + salt + static_cast<std::uint64_t>(i)));
            Complex c = 0.0;
            double worst = 0.0;
            for (const auto& psi : states) {
                Complex p = omega::evaluate_at(poly, psi);
                Complex r = ref.reference(psi);
                if (std::abs(r) < 1e-14) continue;
                if (c == 0.0) {
                    c = p / r;
                    continue;
                }
                worst = std::max(worst, relative_deviation(p, c * r));
            }
            if (c == 0.0) {
                ok = false;
                detail = "reference vanished on every sample";
            } else {
                ok = worst < 1e-8;
                std::ostringstream os;
                os.precision(6);
                os << "ratio " << c.real();
                if (std::abs(c.imag()) > 1e-10) os << (c.imag() < 0 ? "-" : "+")
                                                  << std::abs(c.imag()) << "i";
                os << ", " << format_deviation(worst);
                detail = os.str();
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        out.push_back({"proportionality: " + label, ok, detail});
        salt += 1000;
    }

    // index-balance admissibility of the unconstrained-case polynomials
    {
        bool ok = true;
        for (auto which : {omega::Named::I1, omega::Named::I2, omega::Named::IBC,
                           omega::Named::IAC, omega::Named::IAB, omega::Named::IABC1,
                           omega::Named::IABC2})
            if (!omega::is_g815_admissible(omega::named_polynomial(which))) ok = false;
        out.push_back(
            {"index balance of generated monomials", ok, ok ? "all balanced" : "violation"});
    }

    // unconstrained degrees are multiples of four
    {
        bool ok = true;
        for (auto which : {omega::Named::I1, omega::Named::I2, omega::Named::IBC,
                           omega::Named::IAC, omega::Named::IAB, omega::Named::IABC1,
                           omega::Named::IABC2})
            if (omega::named_polynomial(which).degree() % 4 != 0) ok = false;
        out.push_back({"unconstrained degrees are multiples of 4", ok,
                       ok ? "degrees 4, 8, 12" : "violation"});
    }

    // antisymmetry of the transvection
    {
        const auto& f = omega::forms();
        auto fwd = omega::transvect(f.m21, f.m31, omega::Family::X);
        auto rev = omega::transvect(f.m31, f.m21, omega::Family::X);
        bool ok = (fwd + rev).is_zero();
        bool self_zero = omega::transvect(f.m21, f.m21, omega::Family::X).is_zero();
        out.push_back({"transvection antisymmetry", ok && self_zero,
                       ok && self_zero ? "exact" : "violation"});
    }

    // the generated invariants stay invariant under random group elements
    {
        double worst = 0.0;
        for (auto which : {omega::Named::I1, omega::Named::I2, omega::Named::IBC,
                           omega::Named::IAC, omega::Named::IAB, omega::Named::IABC1,
                           omega::Named::IABC2}) {
            const auto& poly = omega::named_polynomial(which);
            for (int i = 0; i < samples; ++i) {
                auto s = seed + salt + 2 * static_cast<std::uint64_t>(i);
                StateVector psi = slocc::random_state(sector33, s);
                StateVector image =
                    slocc::apply(slocc::random_element(3, 0.3, s + 1), psi);
                worst = std::max(worst, relative_deviation(omega::evaluate_at(poly, psi),
                                                           omega::evaluate_at(poly, image)));
            }
            salt += 1000;
        }
        out.push_back({"generated invariants are group-invariant", worst < 1e-8,
                       format_deviation(worst)});
    }

    // rank of the independence sets
    {
        const auto& i1 = omega::named_polynomial(omega::Named::I1);
        const auto& i2 = omega::named_polynomial(omega::Named::I2);
        const auto& ibc = omega::named_polynomial(omega::Named::IBC);
        const auto& iac = omega::named_polynomial(omega::Named::IAC);
        const auto& iab = omega::named_polynomial(omega::Named::IAB);
        const auto& iabc1 = omega::named_polynomial(omega::Named::IABC1);
        const auto& iabc2 = omega::named_polynomial(omega::Named::IABC2);

        std::vector<omega::SparsePolynomial> deg8 = {i1 * i1, i1 * i2, i2 * i2,
                                                     ibc, iac, iab};
        int r8 = omega::rank_of_set(deg8, 2 * static_cast<int>(deg8.size()), seed + salt);
        out.push_back({"degree-8 set has rank 6", r8 == 6, "rank " + std::to_string(r8)});

        std::vector<omega::SparsePolynomial> deg12 = {
            i1 * i1 * i1, i1 * i1 * i2, i1 * i2 * i2, i2 * i2 * i2,
            i1 * ibc,     i1 * iac,     i1 * iab,
            i2 * ibc,     i2 * iac,     i2 * iab,
            iabc1,        iabc2};
        int r12 =
            omega::rank_of_set(deg12, 2 * static_cast<int>(deg12.size()), seed + salt + 1);
        out.push_back({"degree-12 set has rank 12", r12 == 12, "rank " + std::to_string(r12)});
    }

    return out;
}

std::vector<CheckResult> run_maxent(int samples, std::uint64_t seed) {
    (void)samples;
    (void)seed;
    std::vector<CheckResult> out;

    {
        StateVector psi = maxent::two_fermion_max();
        bool mixed = maxent::is_maximally_entangled(psi, 1e-12);
        double m = invariants::monotone(invariants::i0(psi));
        bool ok = mixed && std::abs(m - 0.25) < 1e-12;
        std::ostringstream os;
        os.precision(12);
        os << "|I0|^(1/2) = " << m;
        out.push_back({"two-fermion maximal state", ok, os.str()});
    }

    struct Kind {
        maxent::Example kind;
        std::string name;
        int designated;  // index into the generator list below
    };
    std::vector<Evaluator> generators = {
        [](const StateVector& s) { return invariants::i_deg4(s, 1).value; },
        [](const StateVector& s) { return invariants::i_deg4(s, 2).value; },
        [](const StateVector& s) { return invariants::i_pair(s, invariants::Pair::BC).value; },
        [](const StateVector& s) { return invariants::i_pair(s, invariants::Pair::AC).value; },
        [](const StateVector& s) { return invariants::i_pair(s, invariants::Pair::AB).value; },
        [](const StateVector& s) { return invariants::i_abc(s, 1).value; },
        [](const StateVector& s) { return invariants::i_abc(s, 2).value; },
    };
    std::vector<Kind> kinds = {
        {maxent::Example::I1Only, "I1-only", 0},
        {maxent::Example::I2Only, "I2-only", 1},
        {maxent::Example::IBCOnly, "IBC-only", 2},
        {maxent::Example::IACOnly, "IAC-only", 3},
        {maxent::Example::IABOnly, "IAB-only", 4},
        {maxent::Example::IABC1Only, "IABC1-only", 5},
        {maxent::Example::IABC2Only, "IABC2-only", 6},
    };
    for (const auto& k : kinds) {
        StateVector psi = maxent::example_state(k.kind);
        bool mixed = maxent::is_maximally_entangled(psi, 1e-12);
        double designated = std::abs(generators[static_cast<std::size_t>(k.designated)](psi));
        double others = 0.0;
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (static_cast<int>(i) != k.designated)
                others = std::max(others, std::abs(generators[i](psi)));
        bool ok = mixed && designated > 1e-6 && others < 1e-12;
        std::ostringstream os;
        os.precision(6);
        os << "designated " << designated << ", others <= " << others
           << (mixed ? "" : ", not maximally mixed");
        out.push_back({"exclusive example " + k.name, ok, os.str()});
    }

    for (int r : {1, 2}) {
        StateVector psi = maxent::cyclic_max_state({1, r});
        int n_terms = 0;
        for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i)
            if (psi.amp(static_cast<std::size_t>(i)) != 0.0) ++n_terms;
        bool ok = maxent::is_maximally_entangled(psi, 1e-12) && n_terms == 4 &&
                  psi.is_normalized();
        out.push_back({"cyclic construction p=1 r=" + std::to_string(r), ok,
                       std::to_string(n_terms) + " terms"});
    }
    {
        bool threw = false;
        try {
            maxent::cyclic_max_state({2, 1});
        } catch (const std::domain_error&) {
            threw = true;
        }
        out.push_back({"cyclic construction rejects even p", threw,
                       threw ? "domain error raised" : "no error"});
    }

    return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, int samples,
                                   std::uint64_t seed) {
    if (suite == "slocc") return run_slocc(samples, seed);
    if (suite == "omega") return run_omega(samples, seed);
    if (suite == "maxent") return run_maxent(samples, seed);
    if (suite == "all") {
        auto out = run_slocc(samples, seed);
        auto o2 = run_omega(samples, seed);
        auto o3 = run_maxent(samples, seed);
        out.insert(out.end(), o2.begin(), o2.end());
        out.insert(out.end(), o3.begin(), o3.end());
        return out;
    }
    throw std::domain_error("unknown suite: " + suite);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace fermi::checks
