#include "fermi/hubbard.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fermi/invariants.hpp"

namespace fermi::hubbard {

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ o = Occ::Empty;
constexpr Occ D = Occ::Double;

int sz(Occ t) {
    if (t == Occ::Up) return 1;
    if (t == Occ::Down) return -1;
    return 0;
}

Occ flipped(Occ t) { return t == Occ::Up ? Occ::Down : Occ::Up; }

}  // namespace

Eigen::MatrixXcd build_hamiltonian(const HamiltonianParams& params) {
    auto sector = enumerate_sector(3, 3);
    const auto& basis = sector->basis();
    const auto n = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);

    for (std::size_t j = 0; j < basis.size(); ++j) {
        const BasisLabel& b = basis[j];
        const auto col = static_cast<Eigen::Index>(j);

        double dia = 0.0;
        for (int s = 0; s < 3; ++s) {
            dia += -params.J * sz(b[static_cast<std::size_t>(s)]) *
                   sz(b[static_cast<std::size_t>((s + 1) % 3)]);
            // field term oriented so the large-field ground state is the
            // spin-aligned |ddd> configuration (see README: conventions)
            dia += params.B * sz(b[static_cast<std::size_t>(s)]);
            if (b[static_cast<std::size_t>(s)] == D) dia += -params.K;
        }
        h(col, col) += dia;

        // transverse spin flips on singly occupied sites
        for (int s = 0; s < 3; ++s) {
            Occ t = b[static_cast<std::size_t>(s)];
            if (t != u && t != d) continue;
            BasisLabel nb = b;
            nb[static_cast<std::size_t>(s)] = flipped(t);
            h(static_cast<Eigen::Index>(sector->index_of(nb)), col) += params.f;
        }

        // spin-dependent nearest-neighbor hopping around the ring
        for (int s = 0; s < 3; ++s) {
            int sp = (s + 1) % 3;
            for (auto [spin, p] : {std::pair{Spin::Up, params.p_up},
                                   std::pair{Spin::Down, params.p_down}}) {
                for (auto [src, dst] : {std::pair{sp, s}, std::pair{s, sp}}) {
                    LadderTerm term = {{dst, spin, true}, {src, spin, false}};
                    auto res = apply_ladder(term, b);
                    if (!res) continue;
                    h(static_cast<Eigen::Index>(sector->index_of(res->first)), col) +=
                        p * res->second;
                }
            }
        }
    }
    return h;
}

Spectrum spectrum(const Eigen::MatrixXcd& h, int k) {
    if (k < 1 || k > h.rows())
        throw std::domain_error("requested eigenpair count out of range");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");

    auto sector = enumerate_sector(3, 3);
    Spectrum out;
    for (int i = 0; i < k; ++i) {
        out.energies.push_back(solver.eigenvalues()(i));
        Eigen::VectorXcd v = solver.eigenvectors().col(i);
        Eigen::Index imax = 0;
        v.cwiseAbs().maxCoeff(&imax);
        Complex phase = v(imax) / std::abs(v(imax));
        v /= phase;
        out.states.emplace_back(sector, std::move(v));
    }
    return out;
}

SweepRow measures_at(const HamiltonianParams& base, double field) {
    HamiltonianParams p = base;
    p.B = field;
    Spectrum sp = spectrum(build_hamiltonian(p), 2);
    const StateVector& g = sp.states[0];

    Complex i1 = invariants::i_deg4(g, 1).value;
    Complex i2 = invariants::i_deg4(g, 2).value;
    Complex tau = invariants::three_tangle(g).value;

    SweepRow row;
    row.B = field;
    row.measure_i12 = 4.0 * std::sqrt(std::abs(i1 - i2));
    row.measure_tau = 2.0 * std::sqrt(std::abs(tau));
    row.entropy = invariants::subsystem_entropy(invariants::reduced_density_matrix(g, 0));
    row.gap = sp.energies[1] - sp.energies[0];
    row.ground_energy = sp.energies[0];
    return row;
}

std::vector<SweepRow> sweep(const HamiltonianParams& base, double b_min, double b_max,
                            int points) {
    if (points < 2) throw std::domain_error("sweep needs at least two grid points");
    if (!(b_max > b_min)) throw std::domain_error("sweep needs b_max > b_min");
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        double b = b_min + (b_max - b_min) * i / (points - 1);
        rows.push_back(measures_at(base, b));
    }
    return rows;
}

void write_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "B,measure_i12,measure_tau,entropy,gap,ground_energy\n";
    out.precision(12);
    for (const auto& r : rows)
        out << r.B << ',' << r.measure_i12 << ',' << r.measure_tau << ',' << r.entropy
            << ',' << r.gap << ',' << r.ground_energy << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

PeakResult find_peak(const HamiltonianParams& base, Quantity quantity, double b_min,
                     double b_max, double b_tol) {
    auto eval = [&](double b) {
        SweepRow r = measures_at(base, b);
        switch (quantity) {
            case Quantity::I12: return r.measure_i12;
            case Quantity::Tau: return r.measure_tau;
            case Quantity::Entropy: return r.entropy;
        }
        return 0.0;
    };

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = b_min, b = b_max;
    double c = b - gr * (b - a), e = a + gr * (b - a);
    double fc = eval(c), fe = eval(e);
    while (b - a > b_tol) {
        if (fc > fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - gr * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + gr * (b - a);
            fe = eval(e);
        }
    }
    PeakResult res;
    res.B = (a + b) / 2.0;
    res.value = eval(res.B);
    double span = b_max - b_min;
    res.at_endpoint = (res.B - b_min < 2.0 * b_tol + 1e-15 * span) ||
                      (b_max - res.B < 2.0 * b_tol + 1e-15 * span);
    return res;
}

StateVector psi_p() {
    return StateVector::from_amplitudes(enumerate_sector(3, 3),
                                        {{{D, u, o}, -1.0},
                                         {{u, o, D}, -1.0},
                                         {{o, D, u}, -1.0},
                                         {{u, D, o}, 1.0},
                                         {{o, u, D}, 1.0},
                                         {{D, o, u}, 1.0},
                                         {{D, o, d}, -1.0},
                                         {{d, D, o}, -1.0},
                                         {{o, d, D}, -1.0},
                                         {{D, d, o}, 1.0},
                                         {{o, D, d}, 1.0},
                                         {{d, o, D}, 1.0}},
                                        true);
}

double psi_p_overlap(const StateVector& state) {
    return std::abs(inner_product(psi_p(), state));
}

}  // namespace fermi::hubbard
