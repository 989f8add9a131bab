#pragma once

#include <stdexcept>
#include <string>

namespace cmreg {

enum class errc {
  usage,
  parse,
  mismatched_rings,
  non_homogeneous,
  singular_matrix,
  gin_disagreement,
  not_stable,
  macaulay_violation,
  cap_exceeded,
  not_hilbert_polynomial,
  depth_zero,
  dimension_too_small,
  resource_limit,
  unsupported,
  internal,
};

class error : public std::runtime_error {
public:
  error(errc kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

/// Parse errors additionally carry a 1-based source position.
class parse_error : public error {
public:
  parse_error(std::string msg, int line, int col)
      : error(errc::parse, msg + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::usage: return "USAGE";
    case errc::parse: return "PARSE";
    case errc::mismatched_rings: return "MISMATCHED-RINGS";
    case errc::non_homogeneous: return "NON-HOMOGENEOUS";
    case errc::singular_matrix: return "SINGULAR-MATRIX";
    case errc::gin_disagreement: return "DISAGREEMENT";
    case errc::not_stable: return "NOT-STABLE";
    case errc::macaulay_violation: return "MACAULAY-VIOLATION";
    case errc::cap_exceeded: return "CAP-EXCEEDED";
    case errc::not_hilbert_polynomial: return "NOT-A-HILBERT-POLYNOMIAL";
    case errc::depth_zero: return "DEPTH-ZERO";
    case errc::dimension_too_small: return "DIMENSION-TOO-SMALL";
    case errc::resource_limit: return "RESOURCE-LIMIT";
    case errc::unsupported: return "UNSUPPORTED";
    case errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

} // namespace cmreg
