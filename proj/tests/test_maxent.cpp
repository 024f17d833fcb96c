#include <doctest.h>

#include <cmath>
#include <functional>

#include "fermi/fock.hpp"
#include "fermi/invariants.hpp"
#include "fermi/maxent.hpp"

using namespace fermi;
namespace inv = fermi::invariants;
namespace me = fermi::maxent;

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ o = Occ::Empty;
constexpr Occ D = Occ::Double;

}  // namespace

TEST_CASE("two-fermion maximally entangled state") {
    auto s = me::two_fermion_max();
    CHECK(s.sector().n_modes() == 2);
    CHECK(s.is_normalized());
    for (const auto& label :
         {BasisLabel{u, u}, BasisLabel{d, d}, BasisLabel{o, D}, BasisLabel{D, o}})
        CHECK(std::abs(s.amp(label) - 0.5) < 1e-15);
    CHECK(me::is_maximally_entangled(s, 1e-12));
    CHECK(std::abs(inv::i0(s).value - 0.0625) < 1e-12);
    // |I|^(1/2) hits the monotone ceiling of 1/4
    CHECK(std::abs(inv::monotone(inv::i0(s)) - 0.25) < 1e-12);
}

TEST_CASE("three-mode examples are exclusive and maximally mixed") {
    struct Row {
        me::Example kind;
        std::function<double(const StateVector&)> designated;
    };
    std::vector<Row> rows = {
        {me::Example::I1Only, [](const StateVector& s) { return std::abs(inv::i_deg4(s, 1).value); }},
        {me::Example::I2Only, [](const StateVector& s) { return std::abs(inv::i_deg4(s, 2).value); }},
        {me::Example::IABOnly, [](const StateVector& s) { return std::abs(inv::i_pair(s, inv::Pair::AB).value); }},
        {me::Example::IACOnly, [](const StateVector& s) { return std::abs(inv::i_pair(s, inv::Pair::AC).value); }},
        {me::Example::IBCOnly, [](const StateVector& s) { return std::abs(inv::i_pair(s, inv::Pair::BC).value); }},
        {me::Example::IABC1Only, [](const StateVector& s) { return std::abs(inv::i_abc(s, 1).value); }},
        {me::Example::IABC2Only, [](const StateVector& s) { return std::abs(inv::i_abc(s, 2).value); }},
    };
    for (const auto& row : rows) {
        auto s = me::example_state(row.kind);
        CHECK(s.is_normalized());
        CHECK(me::is_maximally_entangled(s, 1e-12));
        CHECK(row.designated(s) > 1e-6);
        // every other invariant from the full-sector list vanishes
        std::vector<double> others = {
            std::abs(inv::i_deg4(s, 1).value),
            std::abs(inv::i_deg4(s, 2).value),
            std::abs(inv::i_pair(s, inv::Pair::BC).value),
            std::abs(inv::i_pair(s, inv::Pair::AC).value),
            std::abs(inv::i_pair(s, inv::Pair::AB).value),
            std::abs(inv::i_abc(s, 1).value),
            std::abs(inv::i_abc(s, 2).value),
        };
        double designated = row.designated(s);
        for (double v : others)
            if (std::abs(v - designated) > 1e-12) CHECK(v < 1e-12);
    }
    // the printed I^(2)-only state gives |I|^(1/2) = 1/4
    auto s2 = me::example_state(me::Example::I2Only);
    CHECK(std::abs(inv::monotone(inv::i_deg4(s2, 2)) - 0.25) < 1e-12);
}

TEST_CASE("cyclic construction for spin one-half") {
    for (int r : {1, 2}) {
        auto s = me::cyclic_max_state({1, r});
        CHECK(s.sector().n_modes() == 4 * r);
        CHECK(s.sector().n_particles() == 4 * r);
        CHECK(s.is_normalized());
        CHECK(me::is_maximally_entangled(s, 1e-12));
        // four orthogonal cyclic shifts with weight one half each
        int nonzero = 0;
        for (std::size_t i = 0; i < s.sector().size(); ++i)
            if (std::abs(s.amp(i)) > 1e-15) {
                CHECK(std::abs(s.amp(i) - 0.5) < 1e-15);
                ++nonzero;
            }
        CHECK(nonzero == 4);
    }
    CHECK_THROWS_AS(me::cyclic_max_state({2, 1}), std::domain_error);  // even p
    CHECK_THROWS_AS(me::cyclic_max_state({3, 1}), std::length_error);  // too large
}

TEST_CASE("maximal entanglement detector rejects product-like states") {
    auto sector = enumerate_sector(2, 2);
    auto ud = StateVector::from_amplitudes(sector, {{{u, d}, 1.0}}, false);
    CHECK(!me::is_maximally_entangled(ud, 1e-12));
}
