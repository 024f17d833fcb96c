#include "fermi/state_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace fermi::io {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

StateVector read_state(std::istream& in) {
    std::map<BasisLabel, Complex> entries;
    int n_modes = -1;
    int n_particles = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string label_str;
        if (!(ls >> label_str)) continue;  // blank or comment-only line

        BasisLabel label;
        try {
            label = label_from_string(label_str);
        } catch (const std::domain_error& e) {
            throw ParseError(lineno, e.what());
        }
        if (n_modes < 0) {
            n_modes = static_cast<int>(label.size());
            n_particles = total_particles(label);
        } else if (static_cast<int>(label.size()) != n_modes) {
            throw ParseError(lineno, "label length differs from earlier entries");
        } else if (total_particles(label) != n_particles) {
            throw ParseError(lineno, "particle count differs from earlier entries");
        }

        double re = 0.0, im = 0.0;
        if (!(ls >> re >> im)) throw ParseError(lineno, "expected LABEL RE IM");
        std::string trailing;
        if (ls >> trailing) throw ParseError(lineno, "unexpected trailing field");
        entries[label] += Complex(re, im);
    }
    if (n_modes < 0) throw ParseError(0, "state file contains no entries");
    return StateVector::from_amplitudes(enumerate_sector(n_modes, n_particles), entries,
                                        false);
}

StateVector read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    return read_state(in);
}

void write_state(std::ostream& out, const StateVector& state) {
    out.precision(12);
    const auto& basis = state.sector().basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Complex v = state.amp(i);
        if (v == 0.0) continue;
        out << label_to_string(basis[i]) << ' ' << v.real() << ' ' << v.imag() << '\n';
    }
}

void write_state_file(const std::string& path, const StateVector& state) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_state(out, state);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fermi::io
