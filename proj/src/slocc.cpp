#include "fermi/slocc.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace fermi::slocc {

namespace {

// exp of a 2x2 complex matrix via eigen-decomposition, Taylor fallback when
// the matrix is (near-)defective.
Eigen::Matrix2cd exp2x2(const Eigen::Matrix2cd& a) {
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(a);
    Eigen::Matrix2cd v = es.eigenvectors();
    if (std::abs(v.determinant()) > 1e-6) {
        Eigen::Vector2cd ev = es.eigenvalues();
        Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
        d(0, 0) = std::exp(ev(0));
        d(1, 1) = std::exp(ev(1));
        return v * d * v.inverse();
    }
    // scaling-and-squaring Taylor series
    int squarings = 0;
    Eigen::Matrix2cd b = a;
    while (b.cwiseAbs().maxCoeff() > 0.5) {
        b /= 2.0;
        ++squarings;
    }
    Eigen::Matrix2cd result = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd term = Eigen::Matrix2cd::Identity();
    for (int k = 1; k <= 30; ++k) {
        term = term * b / static_cast<double>(k);
        result += term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace

LocalOperator generator(int kind) {
    LocalOperator g = LocalOperator::Zero();
    switch (kind) {
        case 1:
            g(0, 1) = 1.0;
            g(1, 0) = 1.0;
            break;
        case 2:
            g(0, 1) = Complex(0, -1);
            g(1, 0) = Complex(0, 1);
            break;
        case 3:
            g(0, 0) = 1.0;
            g(1, 1) = -1.0;
            break;
        case 8:
            g(0, 0) = 1.0;
            g(1, 1) = 1.0;
            g(2, 2) = -2.0;
            break;
        case 15:
            g(0, 0) = 1.0;
            g(1, 1) = 1.0;
            g(2, 2) = 1.0;
            g(3, 3) = -3.0;
            break;
        default:
            throw std::domain_error("generator kind must be one of 1, 2, 3, 8, 15");
    }
    return g;
}

LocalOperator exponentiate(const GeneratorCoefficients& c) {
    // The spin block gets the 2x2 exponential; the 0 and double blocks are
    // scalars, so the block structure and det = 1 hold by construction.
    Eigen::Matrix2cd spin;
    spin << c[2] + c[3] + c[4], c[0] - Complex(0, 1) * c[1],
            c[0] + Complex(0, 1) * c[1], -c[2] + c[3] + c[4];
    LocalOperator out = LocalOperator::Zero();
    out.topLeftCorner<2, 2>() = exp2x2(spin);
    out(2, 2) = std::exp(-2.0 * c[3] + c[4]);
    out(3, 3) = std::exp(-3.0 * c[4]);
    return out;
}

bool is_block_diagonal(const LocalOperator& op, double tol) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            bool in_block = (r < 2 && c < 2) || r == c;
            if (!in_block && std::abs(op(r, c)) > tol) return false;
        }
    return true;
}

GroupElement random_element(int n_modes, double scale, std::uint64_t seed) {
    if (scale < 0.0) throw std::domain_error("scale must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-scale, scale);
    GroupElement g;
    g.locals.reserve(static_cast<std::size_t>(n_modes));
    for (int m = 0; m < n_modes; ++m) {
        GeneratorCoefficients c;
        for (auto& ck : c) {
            double re = box(rng);
            double im = box(rng);
            ck = Complex(re, im);
        }
        g.locals.push_back(exponentiate(c));
    }
    return g;
}

GroupElement identity_element(int n_modes) {
    GroupElement g;
    g.locals.assign(static_cast<std::size_t>(n_modes), LocalOperator::Identity());
    return g;
}

GroupElement compose(const GroupElement& g2, const GroupElement& g1) {
    if (g2.locals.size() != g1.locals.size())
        throw std::domain_error("compose requires matching mode counts");
    GroupElement out;
    out.locals.reserve(g1.locals.size());
    for (std::size_t m = 0; m < g1.locals.size(); ++m)
        out.locals.push_back(g2.locals[m] * g1.locals[m]);
    return out;
}

StateVector apply(const GroupElement& element, const StateVector& state) {
    const Sector& sector = state.sector();
    if (static_cast<int>(element.locals.size()) != sector.n_modes())
        throw std::domain_error("group element mode count does not match the sector");
    // Particle-conserving local operators act without extra fermionic signs.
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(sector.size()));
    const auto& basis = sector.basis();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Complex a = state.amp(j);
        if (a == 0.0) continue;
        // distribute amplitude j over all images reachable within the sector
        std::vector<std::pair<BasisLabel, Complex>> frontier{{basis[j], a}};
        for (int m = 0; m < sector.n_modes(); ++m) {
            const LocalOperator& op = element.locals[static_cast<std::size_t>(m)];
            std::vector<std::pair<BasisLabel, Complex>> next;
            for (auto& [label, coeff] : frontier) {
                int col = static_cast<int>(label[static_cast<std::size_t>(m)]);
                for (int row = 0; row < 4; ++row) {
                    Complex e = op(row, col);
                    if (e == 0.0) continue;
                    BasisLabel img = label;
                    img[static_cast<std::size_t>(m)] = static_cast<Occ>(row);
                    next.emplace_back(std::move(img), coeff * e);
                }
            }
            frontier = std::move(next);
        }
        for (auto& [label, coeff] : frontier)
            out(static_cast<Eigen::Index>(sector.index_of(label))) += coeff;
    }
    return StateVector(state.sector_ptr(), std::move(out));
}

GroupElement scaling_element(int n_modes, double r, double phi) {
    if (r <= 0.0) throw std::domain_error("scaling factor r must be positive");
    Complex z = std::polar(r, phi);
    LocalOperator op = LocalOperator::Identity();
    op(2, 2) = z;
    op(3, 3) = 1.0 / z;
    GroupElement g;
    g.locals.assign(static_cast<std::size_t>(n_modes), op);
    return g;
}

LocalOperator bell_local_annihilator(Complex alpha) {
    return exponentiate({0.0, 0.0, -6.0 * alpha, 2.0 * alpha, alpha});
}

StateVector random_state(const std::shared_ptr<const Sector>& sector, std::uint64_t seed,
                         bool normalize) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    Eigen::VectorXcd amps(static_cast<Eigen::Index>(sector->size()));
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        double re = box(rng);
        double im = box(rng);
        amps(i) = Complex(re, im);
    }
    if (normalize) amps /= amps.norm();
    return StateVector(sector, std::move(amps));
}

}  // namespace fermi::slocc
