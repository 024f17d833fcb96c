#include <doctest.h>

#include <cmath>
#include <random>

#include "fermi/fock.hpp"
#include "fermi/slocc.hpp"

using namespace fermi;

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ o = Occ::Empty;
constexpr Occ D = Occ::Double;

// series-summation oracle for the matrix exponential, with scaling-squaring
Eigen::Matrix4cd taylor_exp(const Eigen::Matrix4cd& a) {
    int squarings = 0;
    Eigen::Matrix4cd scaled = a;
    while (scaled.cwiseAbs().maxCoeff() > 0.5) {
        scaled /= 2.0;
        ++squarings;
    }
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Identity();
    Eigen::Matrix4cd term = Eigen::Matrix4cd::Identity();
    for (int k = 1; k <= 30; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

}  // namespace

TEST_CASE("generators have the printed matrix forms") {
    auto l3 = slocc::generator(3);
    CHECK(l3(0, 0) == Complex(1));
    CHECK(l3(1, 1) == Complex(-1));
    CHECK(l3(2, 2) == Complex(0));
    auto l15 = slocc::generator(15);
    CHECK(l15(0, 0) == Complex(1));
    CHECK(l15(1, 1) == Complex(1));
    CHECK(l15(2, 2) == Complex(1));
    CHECK(l15(3, 3) == Complex(-3));
    for (int k : {1, 2, 3, 8, 15}) CHECK(std::abs(slocc::generator(k).trace()) < 1e-15);
    CHECK_THROWS_AS(slocc::generator(4), std::domain_error);
}

TEST_CASE("exponentiate matches the series oracle and has determinant one") {
    CHECK((slocc::exponentiate({0, 0, 0, 0, 0}) - Eigen::Matrix4cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    // particle-exchange phase element
    Complex a = Complex(0, M_PI / 4);
    auto ex = slocc::exponentiate({0, 0, 0, 0, a});
    CHECK(std::abs(ex(0, 0) - std::exp(a)) < 1e-12);
    CHECK(std::abs(ex(1, 1) - std::exp(a)) < 1e-12);
    CHECK(std::abs(ex(2, 2) - std::exp(a)) < 1e-12);
    CHECK(std::abs(ex(3, 3) - std::exp(-3.0 * a)) < 1e-12);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> box(-0.5, 0.5);
    for (int trial = 0; trial < 25; ++trial) {
        slocc::GeneratorCoefficients c;
        for (auto& ck : c) ck = {box(rng), box(rng)};
        Eigen::Matrix4cd gen = Eigen::Matrix4cd::Zero();
        int kinds[5] = {1, 2, 3, 8, 15};
        for (int k = 0; k < 5; ++k) gen += c[static_cast<std::size_t>(k)] * slocc::generator(kinds[k]);
        auto got = slocc::exponentiate(c);
        CHECK((got - taylor_exp(gen)).cwiseAbs().maxCoeff() < 1e-11);
        CHECK(std::abs(got.determinant() - 1.0) < 1e-9);
        CHECK(slocc::is_block_diagonal(got, 0.0));
    }
}

TEST_CASE("random elements are deterministic, block-diagonal, det one") {
    auto g1 = slocc::random_element(3, 0.3, 42);
    auto g2 = slocc::random_element(3, 0.3, 42);
    REQUIRE(g1.locals.size() == 3);
    for (std::size_t m = 0; m < 3; ++m)
        CHECK((g1.locals[m] - g2.locals[m]).cwiseAbs().maxCoeff() == 0.0);
    for (const auto& loc : slocc::random_element(2, 0.3, 7).locals) {
        CHECK(slocc::is_block_diagonal(loc, 0.0));
        CHECK(std::abs(loc.determinant() - 1.0) < 1e-9);
    }
    for (const auto& loc : slocc::random_element(3, 0.0, 9).locals)
        CHECK((loc - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("apply matches the dense matrix-action oracle") {
    auto sector = enumerate_sector(2, 2);
    auto psi = slocc::random_state(sector, 11);
    auto g = slocc::random_element(2, 0.4, 13);
    auto image = slocc::apply(g, psi);

    const auto& basis = sector->basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Complex want = 0.0;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Complex entry = 1.0;
            for (std::size_t m = 0; m < 2; ++m)
                entry *= g.locals[m](static_cast<int>(basis[i][m]),
                                     static_cast<int>(basis[j][m]));
            want += entry * psi.amp(j);
        }
        CHECK(std::abs(image.amp(i) - want) < 1e-12);
    }
}

TEST_CASE("particle-exchange element multiplies amplitudes blockwise") {
    auto sector = enumerate_sector(2, 2);
    auto psi = StateVector::from_amplitudes(
        sector, {{{u, d}, 1.0}, {{D, o}, 1.0}, {{o, D}, 1.0}}, true);
    slocc::GroupElement g{{slocc::exponentiate({0, 0, 0, 0, Complex(0, M_PI / 4)}),
                           Eigen::Matrix4cd::Identity()}};
    auto image = slocc::apply(g, psi);
    Complex phase = std::exp(Complex(0, M_PI / 4));
    CHECK(std::abs(image.amp(BasisLabel{u, d}) - phase * psi.amp(BasisLabel{u, d})) < 1e-12);
    CHECK(std::abs(image.amp(BasisLabel{D, o}) -
                   std::exp(Complex(0, -3 * M_PI / 4)) * psi.amp(BasisLabel{D, o})) < 1e-12);
    CHECK(std::abs(image.amp(BasisLabel{o, D}) - phase * psi.amp(BasisLabel{o, D})) < 1e-12);
}

TEST_CASE("scaling element acts as the predicted power of the scale") {
    auto s21 = enumerate_sector(2, 1);
    auto psi = slocc::random_state(s21, 3);
    auto image = slocc::apply(slocc::scaling_element(2, 2.0, 0.0), psi);
    CHECK((image.amplitudes() - 2.0 * psi.amplitudes()).norm() < 1e-12);

    auto s22 = enumerate_sector(2, 2);
    auto phi = slocc::random_state(s22, 4);
    auto same = slocc::apply(slocc::scaling_element(2, 3.0, 1.2), phi);
    CHECK((same.amplitudes() - phi.amplitudes()).norm() < 1e-12);
}

TEST_CASE("bell-local annihilator scales the bell-local block uniformly") {
    Complex alpha(0.7, 0.3);
    auto op = slocc::bell_local_annihilator(alpha);
    CHECK(std::abs(op.determinant() - 1.0) < 1e-10);
    CHECK((slocc::bell_local_annihilator(0.0) - Eigen::Matrix4cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    // r1 |up>|theta> + r2 |0>|phi> + r3 |double>|phi'> on mode 0 of (3,3)
    auto sector = enumerate_sector(3, 3);
    std::map<BasisLabel, Complex> amps;
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    auto rnd = [&] { return Complex(box(rng), box(rng)); };
    for (auto [head, rest_particles] : {std::pair{u, 2}, {o, 3}, {D, 1}}) {
        auto rest = enumerate_sector(2, rest_particles);
        for (const auto& tail : rest->basis()) {
            BasisLabel label = tail;
            label.insert(label.begin(), head);
            amps[label] = rnd();
        }
    }
    auto psi = StateVector::from_amplitudes(sector, amps, true);
    slocc::GroupElement g{{op, Eigen::Matrix4cd::Identity(), Eigen::Matrix4cd::Identity()}};
    auto image = slocc::apply(g, psi);
    Complex factor = std::exp(-3.0 * alpha);
    CHECK((image.amplitudes() - factor * psi.amplitudes()).norm() < 1e-10);
}
