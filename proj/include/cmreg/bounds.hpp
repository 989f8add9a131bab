#pragma once

#include <optional>
#include <utility>

#include "hilbert.hpp"
#include "univariate.hpp"

namespace cmreg {

/// F_1 = X,  F_p = F_{p-1} + X*C(F_{p-1} + p - 1, p - 1).
inline RatPoly bound_polynomial_F(int p) {
  if (p < 1) throw error(errc::usage, "index must be >= 1");
  RatPoly f = RatPoly::x();
  for (int i = 2; i <= p; ++i)
    f = f + RatPoly::x() * binomial_poly(f + RatPoly::constant(Rat(i - 1)), i - 1);
  return f;
}

/// Q_1 = X - 1,  Q_d = Q_{d-1} + X*C(Q_{d-1} + d - 2, d - 1) + C(Q_{d-1} + d - 2, d - 2).
inline RatPoly bound_polynomial_Q(int d) {
  if (d < 1) throw error(errc::usage, "index must be >= 1");
  RatPoly q = RatPoly::x() - RatPoly::constant(Rat(1));
  for (int i = 2; i <= d; ++i) {
    RatPoly shifted = q + RatPoly::constant(Rat(i - 2));
    q = q + RatPoly::x() * binomial_poly(shifted, i - 1) + binomial_poly(shifted, i - 2);
  }
  return q;
}

inline Int eval_bound(const RatPoly& f, long x) { return to_int(f.eval(x)); }

/// (regularity bound F_d(e-1), embedding-dimension bound e*d) for a reduced
/// equidimensional non-degenerate algebra of dimension d and multiplicity e.
inline std::pair<Int, Int> kleiman_bounds(int d, const Int& e) {
  if (d < 1 || e < 1) throw error(errc::usage, "need d >= 1 and e >= 1");
  RatPoly f = bound_polynomial_F(d);
  return {to_int(f.eval(Rat(e - 1))), e * d};
}

/// dim H^1_j <= t * C(j + d - 1, d - 1) for all tabulated j (indices from 0);
/// returns the first violating index if any.
inline std::optional<int> lemma32_check(const std::vector<Int>& h1_dims, const Int& t, int d) {
  for (std::size_t j = 0; j < h1_dims.size(); ++j)
    if (h1_dims[j] > t * binomial(static_cast<long>(j) + d - 1, d - 1))
      return static_cast<int>(j);
  return std::nullopt;
}

/// h(n) <= l*C(n + d - 2, d - 1) + C(n + d - 2, d - 2) for all tabulated n >= 1;
/// returns the first violating index if any.
inline std::optional<int> parameter_hf_bound_check(const std::vector<Int>& h, int d, const Int& l) {
  for (std::size_t n = 1; n < h.size(); ++n) {
    Int cap = l * binomial(static_cast<long>(n) + d - 2, d - 1) +
              binomial(static_cast<long>(n) + d - 2, d - 2);
    if (h[n] > cap) return static_cast<int>(n);
  }
  return std::nullopt;
}

/// m + h^1(m) for the tabulated hyperplane-section Hilbert function.
inline Int local_mumford_bound(const std::vector<Int>& h_bar, int m) {
  if (m < 0 || m >= static_cast<int>(h_bar.size()))
    throw error(errc::usage, "m outside the tabulated range");
  return Int(m) + iterated_hf(h_bar)[static_cast<std::size_t>(m)];
}

/// Q_d(e): regularity bound for the tangent cone of a d-dimensional CM local
/// ring of multiplicity e.
inline Int cm_tangent_cone_bound(int d, const Int& e) {
  if (d < 1 || e < 1) throw error(errc::usage, "need d >= 1 and e >= 1");
  return to_int(bound_polynomial_Q(d).eval(Rat(e)));
}

/// e + d - 1: embedding-dimension bound for a CM local ring.
inline Int abhyankar_bound(int d, const Int& e) {
  if (d < 1 || e < 1) throw error(errc::usage, "need d >= 1 and e >= 1");
  return e + d - 1;
}

} // namespace cmreg
