#include <doctest.h>

#include <cmath>
#include <set>

#include "fermi/fock.hpp"
#include "fermi/invariants.hpp"
#include "fermi/omega.hpp"
#include "fermi/slocc.hpp"

using namespace fermi;
namespace om = fermi::omega;
namespace inv = fermi::invariants;

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ o = Occ::Empty;
constexpr Occ D = Occ::Double;

om::Symbol amp(const BasisLabel& label) {
    auto sector = enumerate_sector(3, 3);
    return om::Symbol::amplitude(static_cast<std::uint32_t>(sector->index_of(label)));
}

Complex coeff_of(const om::SparsePolynomial& p, const om::Monomial& m) {
    auto it = p.terms().find(m);
    return it == p.terms().end() ? Complex(0.0) : it->second;
}

}  // namespace

TEST_CASE("the base forms have the expected shapes") {
    const auto& f = om::forms();
    CHECK(f.M.n_terms() == 8);
    CHECK(f.M.degree() == 4);  // one amplitude and three auxiliaries per term
    for (const auto* lin : {&f.m12, &f.m13, &f.m21, &f.m23, &f.m31, &f.m32}) {
        CHECK(lin->n_terms() == 2);
        CHECK(lin->degree() == 2);  // one amplitude and one auxiliary per term
    }
    // the forms together touch all 20 sector amplitudes
    std::set<om::Symbol> amps;
    for (const auto* p : {&f.M, &f.m12, &f.m13, &f.m21, &f.m23, &f.m31, &f.m32})
        for (const auto& [mono, c] : p->terms())
            for (const auto& [sym, e] : mono)
                if (sym.kind == om::Symbol::Kind::Amplitude) amps.insert(sym);
    CHECK(amps.size() == 20);
    // m21 carries the mode-0 spin against a (double, empty) tail
    om::Monomial up_term = {{amp({u, D, o}), 1}, {om::Symbol::auxiliary(om::Family::X, 0, 0), 1}};
    om::Monomial dn_term = {{amp({d, D, o}), 1}, {om::Symbol::auxiliary(om::Family::X, 1, 0), 1}};
    CHECK(coeff_of(f.m21, up_term) != Complex(0.0));
    CHECK(coeff_of(f.m21, dn_term) != Complex(0.0));
}

TEST_CASE("transvection matches hand-computed contractions") {
    const auto& f = om::forms();
    // the pairing of the two mode-0 linear forms is a 2x2 determinant
    auto det = om::transvect(f.m21, f.m31, om::Family::X);
    CHECK(det.n_terms() == 2);
    CHECK(!det.has_auxiliary());
    om::Monomial pos = {{amp({u, D, o}), 1}, {amp({d, o, D}), 1}};
    om::Monomial neg = {{amp({d, D, o}), 1}, {amp({u, o, D}), 1}};
    Complex cp = coeff_of(det, pos), cn = coeff_of(det, neg);
    CHECK(std::abs(cp) > 0);
    CHECK(std::abs(cp + cn) < 1e-15);

    // a form contracted with itself vanishes by antisymmetry
    CHECK(om::transvect(f.m21, f.m21, om::Family::X).is_zero());
    CHECK(om::transvect(f.M, f.M, om::Family::Y).is_zero());

    // contracting M with a linear form keeps the other two families
    auto mixed = om::transvect(f.M, f.m31, om::Family::X);
    CHECK(mixed.n_terms() == 8);
    CHECK(mixed.has_auxiliary());

    // antisymmetry of the process: T(a, b) = -T(b, a)
    auto fwd = om::transvect(f.M, f.m31, om::Family::X);
    auto rev = om::transvect(f.m31, f.M, om::Family::X);
    CHECK((fwd + rev).is_zero());
}

TEST_CASE("named recipes produce the expected sizes and degrees") {
    struct Row {
        om::Named which;
        int degree;
        std::size_t n_terms;
    };
    for (auto [which, degree, n_terms] : {
             Row{om::Named::I1, 4, 8},
             Row{om::Named::I2, 4, 8},
             Row{om::Named::IBC, 8, 48},
             Row{om::Named::IAC, 8, 48},
             Row{om::Named::IAB, 8, 48},
             Row{om::Named::IABC1, 12, 320},
             Row{om::Named::IABC2, 12, 320},
             Row{om::Named::IA1, 4, 12},
             Row{om::Named::IA2, 8, 36},
             Row{om::Named::IAL, 2, 2},
         }) {
        const auto& p = om::named_polynomial(which);
        CHECK(p.degree() == degree);
        CHECK(p.n_terms() == n_terms);
        CHECK(!p.has_auxiliary());
    }
    // the alternative second localized generator is proportional to IA2
    auto c = om::proportionality_constant(
        om::named_polynomial(om::Named::IA2Alt),
        [](const StateVector& s) {
            return om::evaluate_at(om::named_polynomial(om::Named::IA2), s);
        },
        20, 5);
    CHECK(std::abs(std::abs(c) - 1.0) < 1e-8);
}

TEST_CASE("evaluation and proportionality fitting") {
    auto sector = enumerate_sector(3, 3);
    CHECK(om::evaluate_at(om::SparsePolynomial(),
                          slocc::random_state(sector, 1)) == Complex(0.0));

    double r = 1.0 / std::sqrt(2.0);
    auto s = StateVector::from_amplitudes(sector, {{{u, o, D}, r}, {{d, D, o}, r}}, false);
    auto al = om::evaluate_at(om::named_polynomial(om::Named::IAL), s);
    CHECK(std::abs(std::abs(al) - 0.5) < 1e-12);

    const auto& f = om::forms();
    CHECK_THROWS_AS(om::evaluate_at(f.m21, s), std::domain_error);  // residual auxiliary

    auto poly = om::named_polynomial(om::Named::I1);
    auto ref = [](const StateVector& st) { return om::evaluate_at(om::named_polynomial(om::Named::I1), st); };
    CHECK(std::abs(om::proportionality_constant(poly, ref, 20, 3) - 1.0) < 1e-10);
    CHECK(std::abs(om::proportionality_constant(poly.scaled(2.0), ref, 20, 3) - 2.0) < 1e-10);
    auto other = [](const StateVector& st) { return om::evaluate_at(om::named_polynomial(om::Named::I2), st); };
    CHECK_THROWS_AS(om::proportionality_constant(poly, other, 20, 3), std::runtime_error);
}

TEST_CASE("generated invariants reproduce the direct implementations") {
    auto sector = enumerate_sector(3, 3);
    for (int trial = 0; trial < 5; ++trial) {
        auto s = slocc::random_state(sector, 100 + static_cast<std::uint64_t>(trial));
        struct Pairing {
            om::Named which;
            Complex direct;
            double ratio;  // generated / direct, fixed sign convention
        };
        std::vector<Pairing> rows = {
            {om::Named::I1, inv::i_deg4(s, 1).value, -1.0},
            {om::Named::I2, inv::i_deg4(s, 2).value, -1.0},
            {om::Named::IBC, inv::i_pair(s, inv::Pair::BC).value, 1.0},
            {om::Named::IAC, inv::i_pair(s, inv::Pair::AC).value, 1.0},
            {om::Named::IAB, inv::i_pair(s, inv::Pair::AB).value, 1.0},
            {om::Named::IABC1, inv::i_abc(s, 1).value, -1.0},
            {om::Named::IABC2, inv::i_abc(s, 2).value, -1.0},
        };
        for (const auto& row : rows) {
            Complex got = om::evaluate_at(om::named_polynomial(row.which), s);
            Complex want = row.ratio * row.direct;
            CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("rank detection") {
    std::vector<om::SparsePolynomial> two = {om::named_polynomial(om::Named::I1),
                                             om::named_polynomial(om::Named::I2)};
    CHECK(om::rank_of_set(two, 12, 7) == 2);
    std::vector<om::SparsePolynomial> dep = {om::named_polynomial(om::Named::I1),
                                             om::named_polynomial(om::Named::I1).scaled(3.0)};
    CHECK(om::rank_of_set(dep, 12, 7) == 1);
}

TEST_CASE("admissibility is judged per mode position") {
    for (auto which : {om::Named::I1, om::Named::I2, om::Named::IBC, om::Named::IAC,
                       om::Named::IAB, om::Named::IABC1, om::Named::IABC2})
        CHECK(om::is_g815_admissible(om::named_polynomial(which)));
    // balanced in aggregate but not position by position
    om::SparsePolynomial skew;
    skew.add_term({{amp({u, D, o}), 1}, {amp({d, o, D}), 1}, {amp({D, u, o}), 1},
                   {amp({d, d, u}), 1}},
                  1.0);
    CHECK(!om::is_g815_admissible(skew));
    // the localized generators are not unconstrained invariants
    CHECK(!om::is_g815_admissible(om::named_polynomial(om::Named::IAL)));
}

TEST_CASE("degree-16 probe finds no new generator") {
    auto candidates = om::degree16_candidates();
    CHECK(candidates.size() == 5);
    for (const auto& recipe : candidates) {
        auto poly = om::evaluate_recipe(recipe);
        if (!poly.is_zero()) CHECK(poly.degree() == 16);
    }
    CHECK(om::degree16_probe(48, 0));
}

TEST_CASE("dangling indices are rejected") {
    om::TransvectionRecipe bad{{{om::Base::m21, "x"}}, 1.0};
    CHECK_THROWS_AS(om::evaluate_recipe(bad), std::domain_error);
}
