#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "fermi/fock.hpp"

using namespace fermi;

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ o = Occ::Empty;
constexpr Occ D = Occ::Double;

// Independent sign oracle: a label is the ordered product of creation
// operators over single-particle states (mode ascending, up before down)
// acting on the vacuum. Applying c or c^dagger at single-particle index i
// costs one transposition per occupied state before i.
struct SpOracle {
    std::vector<bool> occ;  // single-particle occupation, index = 2 * mode + spin

    static SpOracle from_label(const BasisLabel& label) {
        SpOracle s;
        for (Occ t : label) {
            s.occ.push_back(t == u || t == D);
            s.occ.push_back(t == d || t == D);
        }
        return s;
    }

    BasisLabel to_label() const {
        BasisLabel out;
        for (std::size_t m = 0; m < occ.size() / 2; ++m) {
            bool up = occ[2 * m], dn = occ[2 * m + 1];
            out.push_back(up && dn ? D : up ? u : dn ? d : o);
        }
        return out;
    }

    int parity_before(std::size_t i) const {
        int c = 0;
        for (std::size_t k = 0; k < i; ++k)
            if (occ[k]) ++c;
        return c % 2 == 0 ? 1 : -1;
    }
};

std::optional<std::pair<BasisLabel, int>> oracle_apply(const LadderTerm& term,
                                                       const BasisLabel& label) {
    SpOracle s = SpOracle::from_label(label);
    int sign = 1;
    for (auto it = term.rbegin(); it != term.rend(); ++it) {
        std::size_t i = 2 * static_cast<std::size_t>(it->mode) +
                        (it->spin == Spin::Down ? 1 : 0);
        if (s.occ[i] == it->create) return std::nullopt;
        sign *= s.parity_before(i);
        s.occ[i] = it->create;
    }
    return std::pair{s.to_label(), sign};
}

}  // namespace

TEST_CASE("sector enumeration is lexicographic and correctly sized") {
    auto s33 = enumerate_sector(3, 3);
    CHECK(s33->size() == 20);
    CHECK(Sector::count_labels(3, 3) == 20);
    CHECK(Sector::count_labels(2, 2) == 6);
    CHECK(Sector::count_labels(4, 4) == 70);
    // lexicographic with up < down < empty < double, mode 0 most significant
    CHECK(s33->basis().front() == BasisLabel{u, u, u});
    CHECK(std::is_sorted(s33->basis().begin(), s33->basis().end()));
    for (std::size_t i = 0; i < s33->size(); ++i)
        CHECK(s33->index_of(s33->basis()[i]) == i);
    CHECK(!s33->find(BasisLabel{u, u, D}).has_value());  // wrong particle count
}

TEST_CASE("labels round-trip through strings") {
    CHECK(label_to_string(BasisLabel{u, D, o}) == "uD0");
    CHECK(label_from_string("uD0") == BasisLabel{u, D, o});
    CHECK(total_particles(BasisLabel{u, D, o}) == 3);
    CHECK_THROWS_AS(label_from_string("uXd"), std::domain_error);
}

TEST_CASE("ladder signs match the transposition-counting oracle") {
    // every nearest- and next-neighbor single-hop bilinear on two sectors
    for (auto [n, m] : {std::pair{2, 2}, std::pair{3, 3}}) {
        auto sector = enumerate_sector(n, m);
        for (int src = 0; src < n; ++src)
            for (int dst = 0; dst < n; ++dst)
                for (Spin spin : {Spin::Up, Spin::Down}) {
                    LadderTerm term = {{dst, spin, true}, {src, spin, false}};
                    for (const auto& label : sector->basis()) {
                        auto got = apply_ladder(term, label);
                        auto want = oracle_apply(term, label);
                        REQUIRE(got.has_value() == want.has_value());
                        if (got) {
                            CHECK(got->first == want->first);
                            CHECK(got->second == want->second);
                        }
                    }
                }
    }
}

TEST_CASE("number-operator anticommutator identity on sector (3,3)") {
    auto sector = enumerate_sector(3, 3);
    for (const auto& label : sector->basis())
        for (int mode = 0; mode < 3; ++mode)
            for (Spin spin : {Spin::Up, Spin::Down}) {
                LadderTerm cdc = {{mode, spin, true}, {mode, spin, false}};
                LadderTerm ccd = {{mode, spin, false}, {mode, spin, true}};
                int total = 0;
                for (const auto& term : {cdc, ccd}) {
                    auto r = apply_ladder(term, label);
                    if (!r) continue;
                    REQUIRE(r->first == label);
                    total += r->second;
                }
                CHECK(total == 1);  // c^d c + c c^d = 1 on each sp state
            }
}

TEST_CASE("state vectors normalize and conjugate correctly") {
    auto sector = enumerate_sector(2, 2);
    auto a = StateVector::from_amplitudes(sector, {{{u, d}, Complex(0, 2)}}, true);
    CHECK(a.is_normalized());
    CHECK(std::abs(a.amp(BasisLabel{u, d}) - Complex(0, 1)) < 1e-15);
    auto b = StateVector::from_amplitudes(sector, {{{u, d}, 1.0}, {{d, u}, 1.0}}, false);
    // inner product conjugates the first argument
    CHECK(std::abs(inner_product(a, b) - Complex(0, -1)) < 1e-15);
    CHECK_THROWS_AS(StateVector::zero(sector).normalized(), std::domain_error);
}
