#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermi/checks.hpp"
#include "fermi/fock.hpp"
#include "fermi/hubbard.hpp"
#include "fermi/invariants.hpp"
#include "fermi/maxent.hpp"
#include "fermi/omega.hpp"
#include "fermi/slocc.hpp"
#include "fermi/state_io.hpp"

namespace {

using fermi::Complex;
using fermi::Occ;
using fermi::StateVector;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    std::string s = os.str();
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

struct NamedInvariant {
    std::string name;
    fermi::invariants::InvariantValue value;
};

bool has_support(const StateVector& s, bool (*pred)(const fermi::BasisLabel&)) {
    const auto& basis = s.sector().basis();
    double tol = 1e-12 * std::max(1.0, s.norm());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!pred(basis[i]) && std::abs(s.amp(i)) > tol) return false;
    return true;
}

bool no_double(const fermi::BasisLabel& l) {
    for (Occ t : l)
        if (t == Occ::Double) return false;
    return true;
}
bool pair_only(const fermi::BasisLabel& l) {
    for (Occ t : l)
        if (t == Occ::Up || t == Occ::Down) return false;
    return true;
}
bool localized_a(const fermi::BasisLabel& l) {
    return l[0] == Occ::Up || l[0] == Occ::Down;
}

std::vector<NamedInvariant> full3_set(const StateVector& s) {
    namespace inv = fermi::invariants;
    return {{"I1", inv::i_deg4(s, 1)},
            {"I2", inv::i_deg4(s, 2)},
            {"IBC", inv::i_pair(s, inv::Pair::BC)},
            {"IAC", inv::i_pair(s, inv::Pair::AC)},
            {"IAB", inv::i_pair(s, inv::Pair::AB)},
            {"IABC1", inv::i_abc(s, 1)},
            {"IABC2", inv::i_abc(s, 2)},
            {"TAU", inv::three_tangle(s)}};
}

std::vector<NamedInvariant> invariant_set(const StateVector& s, const std::string& set) {
    namespace inv = fermi::invariants;
    int n = s.sector().n_modes();
    int m = s.sector().n_particles();

    if (set == "full3") return full3_set(s);
    if (set == "repulsive")
        return {{"REP_I1", inv::repulsive_invariant(s, inv::Repulsive::I1)},
                {"REP_I2", inv::repulsive_invariant(s, inv::Repulsive::I2)}};
    if (set == "attractive") {
        if (n == 2)
            return {{"ATT_PAIR", inv::attractive_invariant(s, inv::Attractive::PairMonomial)}};
        return {{"ATT_AB_CD", inv::attractive_invariant(s, inv::Attractive::AB_CD)},
                {"ATT_AD_BC", inv::attractive_invariant(s, inv::Attractive::AD_BC)},
                {"ATT_AC_BD", inv::attractive_invariant(s, inv::Attractive::AC_BD)}};
    }
    if (set == "localizedA") {
        std::vector<NamedInvariant> out = {
            {"LOC_A1", inv::localized_invariant(s, inv::Localized::A1)},
            {"LOC_A2", inv::localized_invariant(s, inv::Localized::A2)}};
        if (has_support(s, [](const fermi::BasisLabel& l) {
                if (l[0] != Occ::Up && l[0] != Occ::Down) return false;
                for (std::size_t i = 1; i < l.size(); ++i)
                    if (l[i] == Occ::Up || l[i] == Occ::Down) return false;
                return true;
            }))
            out.push_back({"LOC_AL", inv::localized_invariant(s, inv::Localized::AL)});
        return out;
    }
    if (set != "auto") throw std::domain_error("unknown invariant set: " + set);

    // auto: choose the family from sector and support
    if (n == 2 && m == 2) {
        std::vector<NamedInvariant> out = {{"I0", inv::i0(s)}};
        if (has_support(s, pair_only))
            out.push_back(
                {"ATT_PAIR", inv::attractive_invariant(s, inv::Attractive::PairMonomial)});
        return out;
    }
    if (n == 4 && m == 4 && has_support(s, pair_only)) return invariant_set(s, "attractive");
    if (n == 3 && m == 2 && has_support(s, no_double)) return invariant_set(s, "repulsive");
    if (n == 3 && m == 3) {
        if (has_support(s, localized_a)) return invariant_set(s, "localizedA");
        return full3_set(s);
    }
    throw std::domain_error("no invariant family applies to sector (" + std::to_string(n) +
                            ", " + std::to_string(m) + ")");
}

int cmd_invariants(const std::string& state_path, const std::string& set, bool raw) {
    StateVector s = fermi::io::read_state_file(state_path);
    if (!raw) s = s.normalized();
    for (const auto& [name, v] : invariant_set(s, set))
        std::cout << name << ' ' << fmt(v.value.real()) << ' ' << fmt(v.value.imag()) << ' '
                  << v.degree << ' ' << fmt(fermi::invariants::monotone(v)) << '\n';
    return 0;
}

int cmd_sweep(double J, double K, double f, double p, double b_min, double b_max,
              int points, const std::string& out_path) {
    fermi::hubbard::HamiltonianParams base;
    base.J = J;
    base.K = K;
    base.f = f;
    base.p_down = p;
    base.p_up = -p;
    auto rows = fermi::hubbard::sweep(base, b_min, b_max, points);
    if (!out_path.empty()) {
        fermi::hubbard::write_csv(out_path, rows);
    } else {
        std::cout << "B,measure_i12,measure_tau,entropy,gap,ground_energy\n";
        std::cout.precision(12);
        for (const auto& r : rows)
            std::cout << r.B << ',' << r.measure_i12 << ',' << r.measure_tau << ','
                      << r.entropy << ',' << r.gap << ',' << r.ground_energy << '\n';
    }
    return 0;
}

int cmd_check(const std::string& suite, int samples, std::uint64_t seed) {
    auto results = fermi::checks::run_suite(suite, samples, seed);
    for (const auto& r : results)
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    if (!fermi::checks::all_passed(results)) {
        std::cerr << "one or more property checks failed\n";
        return 1;
    }
    return 0;
}

int cmd_maxent(const std::string& kind, const std::string& out_path, int p, int r) {
    StateVector s = [&] {
        using fermi::maxent::Example;
        if (kind == "two_fermion") return fermi::maxent::two_fermion_max();
        if (kind == "I1_only") return fermi::maxent::example_state(Example::I1Only);
        if (kind == "I2_only") return fermi::maxent::example_state(Example::I2Only);
        if (kind == "IAB_only") return fermi::maxent::example_state(Example::IABOnly);
        if (kind == "IAC_only") return fermi::maxent::example_state(Example::IACOnly);
        if (kind == "IBC_only") return fermi::maxent::example_state(Example::IBCOnly);
        if (kind == "IABC1_only") return fermi::maxent::example_state(Example::IABC1Only);
        if (kind == "IABC2_only") return fermi::maxent::example_state(Example::IABC2Only);
        if (kind == "cyclic") return fermi::maxent::cyclic_max_state({p, r});
        throw CLI::ValidationError("--kind", "unknown kind: " + kind);
    }();
    if (out_path.empty()) {
        fermi::io::write_state(std::cout, s);
    } else {
        fermi::io::write_state_file(out_path, s);
    }
    return 0;
}

int cmd_omega(bool probe, int samples, std::uint64_t seed) {
    namespace inv = fermi::invariants;
    namespace om = fermi::omega;
    struct Row {
        om::Named which;
        std::function<Complex(const StateVector&)> reference;
        bool localized;
        bool pair_bc;
    };
    std::vector<Row> rows = {
        {om::Named::I1, [](const StateVector& s) { return inv::i_deg4(s, 1).value; }, false,
         false},
        {om::Named::I2, [](const StateVector& s) { return inv::i_deg4(s, 2).value; }, false,
         false},
        {om::Named::IBC,
         [](const StateVector& s) { return inv::i_pair(s, inv::Pair::BC).value; }, false,
         false},
        {om::Named::IAC,
         [](const StateVector& s) { return inv::i_pair(s, inv::Pair::AC).value; }, false,
         false},
        {om::Named::IAB,
         [](const StateVector& s) { return inv::i_pair(s, inv::Pair::AB).value; }, false,
         false},
        {om::Named::IABC1, [](const StateVector& s) { return inv::i_abc(s, 1).value; },
         false, false},
        {om::Named::IABC2, [](const StateVector& s) { return inv::i_abc(s, 2).value; },
         false, false},
        {om::Named::IA1,
         [](const StateVector& s) {
             return inv::localized_invariant(s, inv::Localized::A1).value;
         },
         true, false},
        {om::Named::IA2,
         [](const StateVector& s) {
             return inv::localized_invariant(s, inv::Localized::A2).value;
         },
         true, false},
        {om::Named::IA2Alt,
         [](const StateVector& s) {
             return inv::localized_invariant(s, inv::Localized::A2).value;
         },
         true, false},
        {om::Named::IAL,
         [](const StateVector& s) {
             return inv::localized_invariant(s, inv::Localized::AL).value;
         },
         true, true},
    };

    std::cout << "invariant monomials degree proportionality\n";
    for (const auto& row : rows) {
        const auto& poly = om::named_polynomial(row.which);
        Complex c;
        if (row.localized) {
            // fit the ratio over support-restricted samples
            Complex fit = 0.0;
            double worst = 0.0;
            for (int i = 0; i < samples; ++i) {
                StateVector psi = fermi::checks::random_localized_state(
                    seed + static_cast<std::uint64_t>(i), row.pair_bc);
                Complex pv = om::evaluate_at(poly, psi);
                Complex rv = row.reference(psi);
                if (std::abs(rv) < 1e-14) continue;
                if (fit == 0.0)
                    fit = pv / rv;
                else
                    worst = std::max(worst,
                                     std::abs(pv - fit * rv) /
                                         std::max({std::abs(pv), std::abs(fit * rv), 1e-30}));
            }
            if (fit == 0.0 || worst > 1e-8)
                throw std::runtime_error("inconsistent proportionality for " +
                                         om::named_label(row.which));
            c = fit;
        } else {
            c = om::proportionality_constant(poly, row.reference, samples, seed);
        }
        std::cout << om::named_label(row.which) << ' ' << poly.n_terms() << ' '
                  << poly.degree() << ' ' << fmt(c.real());
        if (std::abs(c.imag()) > 1e-10) std::cout << (c.imag() < 0 ? "-" : "+")
                                                  << fmt(std::abs(c.imag())) << "i";
        std::cout << '\n';
    }

    if (probe) {
        bool ok = om::degree16_probe(64, seed);
        std::cout << "degree-16 probe: "
                  << (ok ? "all candidates lie in the span of generator products"
                         : "candidate outside generator span")
                  << '\n';
        if (!ok) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SLOCC entanglement invariants for delocalized fermions"};
    app.require_subcommand(1);

    auto* inv_cmd = app.add_subcommand("invariants", "evaluate invariants on a state file");
    std::string state_path;
    std::string set = "auto";
    bool raw = false;
    inv_cmd->add_option("--state", state_path, "state file")->required();
    inv_cmd->add_option("--set", set, "auto|full3|repulsive|attractive|localizedA")
        ->check(CLI::IsMember({"auto", "full3", "repulsive", "attractive", "localizedA"}));
    inv_cmd->add_flag("--raw", raw, "skip normalization");

    auto* sweep_cmd = app.add_subcommand("sweep", "ground-state measure sweep over the field");
    double J = 1.0, K = 2.99507, f = 5e-3, p = 5e-6, b_min = 0.0, b_max = 3e-5;
    int points = 601;
    std::string out_path;
    sweep_cmd->add_option("--J", J, "Ising coupling");
    sweep_cmd->add_option("--K", K, "on-site attraction");
    sweep_cmd->add_option("--f", f, "spin-flip amplitude");
    sweep_cmd->add_option("--p", p, "hopping amplitude (down: +p, up: -p)");
    sweep_cmd->add_option("--b-min", b_min, "lowest field");
    sweep_cmd->add_option("--b-max", b_max, "highest field");
    sweep_cmd->add_option("--points", points, "grid points");
    sweep_cmd->add_option("--out", out_path, "CSV output path (stdout if absent)");

    auto* check_cmd = app.add_subcommand("check", "run property suites");
    std::string suite = "all";
    int samples = 100;
    std::uint64_t seed = 0;
    check_cmd->add_option("--suite", suite, "slocc|omega|maxent|all")
        ->check(CLI::IsMember({"slocc", "omega", "maxent", "all"}));
    check_cmd->add_option("--samples", samples, "samples per property");
    check_cmd->add_option("--seed", seed, "random seed");

    auto* maxent_cmd = app.add_subcommand("maxent", "emit a maximally entangled state");
    std::string kind;
    std::string maxent_out;
    int cyc_p = 1, cyc_r = 1;
    maxent_cmd->add_option("--kind", kind,
                           "two_fermion|I1_only|I2_only|IAB_only|IAC_only|IBC_only|"
                           "IABC1_only|IABC2_only|cyclic")
        ->required();
    maxent_cmd->add_option("--out", maxent_out, "state file path (stdout if absent)");
    maxent_cmd->add_option("--p", cyc_p, "cyclic construction spin parameter");
    maxent_cmd->add_option("--r", cyc_r, "cyclic construction concatenation count");

    auto* omega_cmd = app.add_subcommand("omega", "transvection cross-validation report");
    bool probe = false;
    int omega_samples = 20;
    std::uint64_t omega_seed = 0;
    omega_cmd->add_flag("--degree16-probe", probe, "run the degree-16 span probe");
    omega_cmd->add_option("--samples", omega_samples, "samples for ratio fitting");
    omega_cmd->add_option("--seed", omega_seed, "random seed");

    try {
        app.parse(argc, argv);
        if (*inv_cmd) return cmd_invariants(state_path, set, raw);
        if (*sweep_cmd) return cmd_sweep(J, K, f, p, b_min, b_max, points, out_path);
        if (*check_cmd) return cmd_check(suite, samples, seed);
        if (*maxent_cmd) return cmd_maxent(kind, maxent_out, cyc_p, cyc_r);
        if (*omega_cmd) return cmd_omega(probe, omega_samples, omega_seed);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const fermi::io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
