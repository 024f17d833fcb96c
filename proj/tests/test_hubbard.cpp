#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "fermi/fock.hpp"
#include "fermi/hubbard.hpp"

using namespace fermi;
namespace hb = fermi::hubbard;

namespace {

constexpr Occ u = Occ::Up;
constexpr Occ d = Occ::Down;

}  // namespace

TEST_CASE("hamiltonian is hermitian with the expected diagonal") {
    hb::HamiltonianParams params;
    auto h = hb::build_hamiltonian(params);
    REQUIRE(h.rows() == 20);
    REQUIRE(h.cols() == 20);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-14);

    // the fully aligned configuration sees only the three Ising bonds
    hb::HamiltonianParams bare;
    bare.K = 0.0;
    bare.f = 0.0;
    bare.p_up = bare.p_down = 0.0;
    auto sector = enumerate_sector(3, 3);
    auto h0 = hb::build_hamiltonian(bare);
    auto i_uuu = static_cast<Eigen::Index>(sector->index_of(BasisLabel{u, u, u}));
    CHECK(std::abs(h0(i_uuu, i_uuu) - Complex(-3.0)) < 1e-14);
    auto i_uud = static_cast<Eigen::Index>(sector->index_of(BasisLabel{u, u, d}));
    CHECK(std::abs(h0(i_uud, i_uud) - Complex(1.0)) < 1e-14);  // one aligned, two frustrated
}

TEST_CASE("zero-field ground state is numerically degenerate") {
    hb::HamiltonianParams params;
    auto row = hb::measures_at(params, 0.0);
    CHECK(row.gap < 1e-9);
}

TEST_CASE("gap opens and ground energy decreases with field") {
    hb::HamiltonianParams params;
    double prev_energy = std::numeric_limits<double>::infinity();
    for (double b : {2e-7, 1e-6, 5e-6, 1.5e-5, 2.5e-5, 3e-5}) {
        auto row = hb::measures_at(params, b);
        if (b > 1e-7) CHECK(row.gap > 0.0);
        CHECK(row.ground_energy <= prev_energy + 1e-12);
        prev_energy = row.ground_energy;
    }
}

TEST_CASE("reference-state overlap crosses over with the field") {
    hb::HamiltonianParams params;
    auto p = hb::psi_p();
    CHECK(p.is_normalized());
    CHECK(std::abs(hb::psi_p_overlap(p) - 1.0) < 1e-12);

    auto h_small = hb::build_hamiltonian([&] {
        auto q = params;
        q.B = 1e-6;
        return q;
    }());
    auto ground_small = hb::spectrum(h_small, 1).states.front();
    CHECK(hb::psi_p_overlap(ground_small) > 0.99);

    auto h_large = hb::build_hamiltonian([&] {
        auto q = params;
        q.B = 3e-5;
        return q;
    }());
    auto ground_large = hb::spectrum(h_large, 1).states.front();
    CHECK(hb::psi_p_overlap(ground_large) < 0.05);
}

TEST_CASE("entropy plateau and peak structure") {
    hb::HamiltonianParams params;
    CHECK(std::abs(hb::measures_at(params, 5e-6).entropy - std::log(3.0)) < 1e-3);

    auto peak = hb::find_peak(params, hb::Quantity::I12, 0.0, 3e-5);
    CHECK(!peak.at_endpoint);
    CHECK(std::abs(peak.value - 0.498) < 0.005);
    CHECK(std::abs(peak.B - 1.7099e-5) < 2e-8);
}

TEST_CASE("sweep produces a well-formed csv") {
    hb::HamiltonianParams params;
    auto rows = hb::sweep(params, 0.0, 3e-5, 7);
    REQUIRE(rows.size() == 7);
    CHECK(rows.front().B == 0.0);
    CHECK(std::abs(rows.back().B - 3e-5) < 1e-20);

    std::string path = "test_sweep_tmp.csv";
    hb::write_csv(path, rows);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "B,measure_i12,measure_tau,entropy,gap,ground_energy");
    int count = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++count;
        std::stringstream ss(line);
        std::string field;
        int fields = 0;
        while (std::getline(ss, field, ',')) {
            ++fields;
            CHECK_NOTHROW(std::stod(field));
        }
        CHECK(fields == 6);
    }
    CHECK(count == 7);
    in.close();
    std::remove(path.c_str());
}
