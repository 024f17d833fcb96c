#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>

#include "fermi/checks.hpp"
#include "fermi/fock.hpp"
#include "fermi/hubbard.hpp"
#include "fermi/invariants.hpp"
#include "fermi/maxent.hpp"
#include "fermi/omega.hpp"
#include "fermi/slocc.hpp"
#include "fermi/state_io.hpp"

namespace py = pybind11;
using namespace fermi;

namespace {

StateVector make_state(int n_modes, int n_particles,
                       const std::map<std::string, Complex>& entries, bool normalize) {
    std::map<BasisLabel, Complex> amps;
    for (const auto& [label, v] : entries) amps[label_from_string(label)] = v;
    return StateVector::from_amplitudes(enumerate_sector(n_modes, n_particles), amps,
                                        normalize);
}

std::map<std::string, Complex> state_dict(const StateVector& s) {
    std::map<std::string, Complex> out;
    const auto& basis = s.sector().basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (s.amp(i) != 0.0) out[label_to_string(basis[i])] = s.amp(i);
    return out;
}

maxent::Example example_from_name(const std::string& name) {
    if (name == "I1_only") return maxent::Example::I1Only;
    if (name == "I2_only") return maxent::Example::I2Only;
    if (name == "IAB_only") return maxent::Example::IABOnly;
    if (name == "IAC_only") return maxent::Example::IACOnly;
    if (name == "IBC_only") return maxent::Example::IBCOnly;
    if (name == "IABC1_only") return maxent::Example::IABC1Only;
    if (name == "IABC2_only") return maxent::Example::IABC2Only;
    throw std::domain_error("unknown example kind: " + name);
}

omega::Named named_from_label(const std::string& label) {
    for (auto which : omega::all_named())
        if (omega::named_label(which) == label) return which;
    throw std::domain_error("unknown recipe label: " + label);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SLOCC-invariant entanglement measures for delocalized fermions";

    py::class_<StateVector>(m, "State")
        .def(py::init(&make_state), py::arg("n_modes"), py::arg("n_particles"),
             py::arg("amplitudes"), py::arg("normalize") = true)
        .def_property_readonly("n_modes",
                               [](const StateVector& s) { return s.sector().n_modes(); })
        .def_property_readonly(
            "n_particles", [](const StateVector& s) { return s.sector().n_particles(); })
        .def_property_readonly("labels",
                               [](const StateVector& s) {
                                   std::vector<std::string> out;
                                   for (const auto& l : s.sector().basis())
                                       out.push_back(label_to_string(l));
                                   return out;
                               })
        .def_property_readonly("amplitudes",
                               [](const StateVector& s) { return s.amplitudes(); })
        .def("to_dict", &state_dict)
        .def("norm", &StateVector::norm)
        .def("normalized", &StateVector::normalized)
        .def("__repr__", [](const StateVector& s) {
            std::ostringstream os;
            os << "State(n_modes=" << s.sector().n_modes()
               << ", n_particles=" << s.sector().n_particles() << ")";
            return os.str();
        });

    m.def("sector_labels", [](int n, int p) {
        std::vector<std::string> out;
        auto sector = enumerate_sector(n, p);
        for (const auto& l : sector->basis()) out.push_back(label_to_string(l));
        return out;
    });

    m.def("parse_state", [](const std::string& text) {
        std::istringstream in(text);
        return io::read_state(in);
    });
    m.def("format_state", [](const StateVector& s) {
        std::ostringstream out;
        io::write_state(out, s);
        return out.str();
    });

    // invariants
    m.def("i0", [](const StateVector& s) { return invariants::i0(s).value; });
    m.def("fermionic_concurrence", &invariants::fermionic_concurrence);
    m.def("i_deg4",
          [](const StateVector& s, int v) { return invariants::i_deg4(s, v).value; });
    m.def("i_pair", [](const StateVector& s, const std::string& pair) {
        auto which = pair == "BC"   ? invariants::Pair::BC
                     : pair == "AC" ? invariants::Pair::AC
                     : pair == "AB" ? invariants::Pair::AB
                                    : throw std::domain_error("pair must be BC, AC, or AB");
        return invariants::i_pair(s, which).value;
    });
    m.def("i_abc", [](const StateVector& s, int v) { return invariants::i_abc(s, v).value; });
    m.def("three_tangle",
          [](const StateVector& s) { return invariants::three_tangle(s).value; });
    m.def("monotone", [](Complex value, int degree) {
        return invariants::monotone({value, degree});
    });
    m.def("reduced_density_matrix", [](const StateVector& s, int mode) {
        return Eigen::MatrixXcd(invariants::reduced_density_matrix(s, mode));
    });
    m.def("subsystem_entropy", [](const StateVector& s, int mode) {
        return invariants::subsystem_entropy(invariants::reduced_density_matrix(s, mode));
    });

    // slocc
    m.def("random_state", [](int n, int p, std::uint64_t seed) {
        return slocc::random_state(enumerate_sector(n, p), seed);
    });
    m.def("apply_random_slocc", [](const StateVector& s, double scale, std::uint64_t seed) {
        return slocc::apply(slocc::random_element(s.sector().n_modes(), scale, seed), s);
    });

    // omega
    m.def("omega_labels", [] {
        std::vector<std::string> out;
        for (auto which : omega::all_named()) out.push_back(omega::named_label(which));
        return out;
    });
    m.def("omega_evaluate", [](const std::string& label, const StateVector& s) {
        return omega::evaluate_at(omega::named_polynomial(named_from_label(label)), s);
    });
    m.def("degree16_probe", &omega::degree16_probe, py::arg("n_samples") = 64,
          py::arg("seed") = 0);

    // maxent
    m.def("two_fermion_max", &maxent::two_fermion_max);
    m.def("example_state",
          [](const std::string& kind) { return maxent::example_state(example_from_name(kind)); });
    m.def("cyclic_max_state",
          [](int p, int r) { return maxent::cyclic_max_state({p, r}); });
    m.def("is_maximally_entangled", &maxent::is_maximally_entangled, py::arg("state"),
          py::arg("tol") = 1e-12);

    // hubbard experiment
    py::class_<hubbard::HamiltonianParams>(m, "HamiltonianParams")
        .def(py::init<>())
        .def_readwrite("J", &hubbard::HamiltonianParams::J)
        .def_readwrite("B", &hubbard::HamiltonianParams::B)
        .def_readwrite("K", &hubbard::HamiltonianParams::K)
        .def_readwrite("f", &hubbard::HamiltonianParams::f)
        .def_readwrite("p_up", &hubbard::HamiltonianParams::p_up)
        .def_readwrite("p_down", &hubbard::HamiltonianParams::p_down);
    m.def("build_hamiltonian", [](const hubbard::HamiltonianParams& p) {
        return Eigen::MatrixXcd(hubbard::build_hamiltonian(p));
    });
    m.def("measures_at", [](const hubbard::HamiltonianParams& base, double field) {
        auto r = hubbard::measures_at(base, field);
        return py::dict(py::arg("B") = r.B, py::arg("measure_i12") = r.measure_i12,
                        py::arg("measure_tau") = r.measure_tau, py::arg("entropy") = r.entropy,
                        py::arg("gap") = r.gap, py::arg("ground_energy") = r.ground_energy);
    });
    m.def("find_peak",
          [](const hubbard::HamiltonianParams& base, const std::string& quantity,
             double b_min, double b_max) {
              auto q = quantity == "i12"   ? hubbard::Quantity::I12
                       : quantity == "tau" ? hubbard::Quantity::Tau
                       : quantity == "entropy"
                           ? hubbard::Quantity::Entropy
                           : throw std::domain_error("quantity must be i12, tau, or entropy");
              auto r = hubbard::find_peak(base, q, b_min, b_max);
              return py::make_tuple(r.B, r.value, r.at_endpoint);
          });
    m.def("psi_p", &hubbard::psi_p);
    m.def("psi_p_overlap", &hubbard::psi_p_overlap);
}
