#pragma once

#include <memory>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace cmreg {

/// Field-independent ring data: the variable list (in decreasing order) and the
/// coefficient-field description.  Shared immutably across values.
struct RingInfo {
  std::vector<std::string> vars;
  FieldDesc field;

  int nvars() const { return static_cast<int>(vars.size()); }
  bool operator==(const RingInfo& o) const { return vars == o.vars && field == o.field; }

  /// dim_k S_d = C(d + r - 1, r - 1)
  Int dim_of_degree(int d) const {
    if (d < 0) return Int(0);
    return binomial(static_cast<long>(d) + nvars() - 1, static_cast<long>(nvars()) - 1);
  }
};

using RingPtr = std::shared_ptr<const RingInfo>;

inline RingPtr make_ring(std::vector<std::string> vars, unsigned long characteristic = 0) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw error(errc::usage, "characteristic must be 0 or a prime");
  return std::make_shared<const RingInfo>(RingInfo{std::move(vars), FieldDesc{characteristic}});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw error(errc::mismatched_rings, "values from different rings");
}

} // namespace cmreg
