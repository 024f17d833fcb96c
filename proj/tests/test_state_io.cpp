#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fermi/fock.hpp"
#include "fermi/state_io.hpp"

using namespace fermi;

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;
constexpr Occ o = Occ::Empty;
constexpr Occ D = Occ::Double;

int parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        io::read_state(in);
    } catch (const io::ParseError& e) {
        return e.line();
    }
    return -1;  // no error thrown
}

}  // namespace

TEST_CASE("states round-trip through the text format") {
    auto sector = enumerate_sector(3, 3);
    auto s = StateVector::from_amplitudes(
        sector, {{{u, D, o}, Complex(0.25, -0.5)}, {{d, d, u}, Complex(-0.75, 0.0)}}, false);
    std::stringstream buf;
    io::write_state(buf, s);
    auto again = io::read_state(buf);
    CHECK(again.sector().n_modes() == 3);
    CHECK(again.sector().n_particles() == 3);
    CHECK((again.amplitudes() - s.amplitudes()).norm() < 1e-11);
}

TEST_CASE("comments and blank lines are ignored; duplicates are summed") {
    std::istringstream in(
        "# a comment line\n"
        "\n"
        "ud 0.5 0.0   # trailing comment\n"
        "du 0.25 0.0\n"
        "du 0.25 0.0\n");
    auto s = io::read_state(in);
    CHECK(std::abs(s.amp(BasisLabel{u, d}) - 0.5) < 1e-15);
    CHECK(std::abs(s.amp(BasisLabel{d, u}) - 0.5) < 1e-15);
}

TEST_CASE("malformed inputs report the offending line") {
    CHECK(parse_error_line("") == 0);                          // empty file
    CHECK(parse_error_line("# only comments\n\n") == 0);       // effectively empty
    CHECK(parse_error_line("ux 1.0 0.0\n") == 1);              // bad alphabet
    CHECK(parse_error_line("ud 1.0 0.0\nudu 1.0 0.0\n") == 2);  // length mismatch
    CHECK(parse_error_line("ud 1.0 0.0\ndD 1.0 0.0\n") == 2);  // particle mismatch
    CHECK(parse_error_line("ud 1.0\n") == 1);                  // missing imaginary part
    CHECK(parse_error_line("ud one 0.0\n") == 1);              // non-numeric
    CHECK(parse_error_line("\n\nud 1.0 0.0 7.0\n") == 3);      // trailing field
}

TEST_CASE("write_state emits only nonzero entries in basis order") {
    auto sector = enumerate_sector(2, 2);
    auto s = StateVector::from_amplitudes(sector, {{{o, D}, 1.0}, {{u, d}, 1.0}}, false);
    std::ostringstream out;
    io::write_state(out, s);
    std::istringstream lines(out.str());
    std::string first, second, extra;
    REQUIRE(std::getline(lines, first));
    REQUIRE(std::getline(lines, second));
    CHECK(first.substr(0, 3) == "ud ");
    CHECK(second.substr(0, 3) == "0D ");
    CHECK(!std::getline(lines, extra));
}
