#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fermi/fock.hpp"

namespace fermi::io {

/// Malformed state file; `line` is the 1-based offending line (0 if global).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Reads a state file: one `LABEL RE IM` entry per line, labels over the
/// alphabet u, d, 0, D, blank lines and `#` comments ignored. All labels must
/// share one length and one particle count. Throws ParseError otherwise.
StateVector read_state(std::istream& in);
StateVector read_state_file(const std::string& path);  // ParseError / runtime_error

/// Writes the nonzero entries in basis order, 12 significant digits, LF.
void write_state(std::ostream& out, const StateVector& state);
void write_state_file(const std::string& path, const StateVector& state);

}  // namespace fermi::io
