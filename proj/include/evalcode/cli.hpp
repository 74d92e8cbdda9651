#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "evalcode/cartesian.hpp"

namespace evalcode {

/// A parse or validation failure, anchored to a line of the spec file.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A code described by a spec file: a family over GF(p^r), a defining set and
/// the subfield GF(p^s) the code lives in.
struct CodeSpec {
  JAffineFamily family;
  DefiningSet delta;
  std::uint64_t qprime;
  std::string generator;  // "list", "rm", "wrm", "hyperbolic", "hyperbolic_dual", "cosets", "consecutive"
  std::uint64_t s = 0;    // degree bound of rm/wrm/hyperbolic, or the index of consecutive
  std::vector<std::uint64_t> weights;
};

/// JSON text of the form
///   {"ambient": {"p": 2, "r": 6}, "subfield_degree": 1,
///    "family": {"m": 2, "N": [64, 4], "J": [2]},
///    "delta": [[0, 0], [1, 0]]}
/// where J is 1-based and "delta" may instead name a generator, e.g.
///   {"generator": "wrm", "s": 5, "weights": [1, 2, 2]}
///   {"generator": "cosets", "members": [[0, 0], [1, 0]]}
/// Unknown keys are rejected.
CodeSpec parse_code_spec(const std::string& text, const std::string& source = "<spec>");
CodeSpec load_code_spec(const std::string& path);

/// Entry point of the evalcode tool; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evalcode
