#pragma once

#include <vector>

#include "monomial_ideal.hpp"
#include "univariate.hpp"

namespace cmreg {

/// Hilbert series of S/J written as numerator / (1-t)^denom_exponent with the
/// numerator not divisible by (1-t); denom_exponent is then the Krull dimension.
struct HilbertSeries {
  std::vector<Int> numerator; // N(t), index = degree, no trailing zeros
  int denom_exponent = 0;     // d = Krull dimension of S/J
  int nvars = 0;              // r of the ambient ring
  bool zero_ring = false;     // S/J = 0 (numerator vanished identically)

  int dimension() const { return denom_exponent; }
  bool dimension_zero() const { return denom_exponent == 0 && !zero_ring; }

  /// N(1): the multiplicity when d >= 1, the total length when d = 0.
  Int numerator_at_one() const {
    Int s(0);
    for (const auto& c : numerator) s += c;
    return s;
  }
  Int multiplicity() const { return numerator_at_one(); }
};

namespace detail {

inline std::vector<Int> poly_mul_1_minus_tk(const std::vector<Int>& p, int k) {
  // p(t) * (1 - t^k)
  std::vector<Int> r(p.size() + static_cast<std::size_t>(k), Int(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] += p[i];
    r[i + static_cast<std::size_t>(k)] -= p[i];
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

inline std::vector<Int> poly_add_shifted(const std::vector<Int>& a, const std::vector<Int>& b, int shift) {
  // a(t) + t^shift * b(t)
  std::vector<Int> r(std::max(a.size(), b.size() + static_cast<std::size_t>(shift)), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + static_cast<std::size_t>(shift)] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

/// K-polynomial of S/J over (1-t)^r by pivot recursion:
///   K(S/J) = K(S/(J+(p))) + t^deg(p) K(S/(J:p)),
/// pivot p a pure power of the variable hitting the most generators.
inline std::vector<Int> kpoly(const MonomialIdeal& j) {
  const auto& gens = j.gens();
  if (gens.empty()) return {Int(1)};
  if (j.is_unit()) return {};

  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!gens[a].coprime(gens[b])) { coprime = false; break; }
  if (coprime) {
    std::vector<Int> r{Int(1)};
    for (const auto& g : gens) r = poly_mul_1_minus_tk(r, g.degree());
    return r;
  }

  int best_var = -1, best_count = 0;
  for (int v = 0; v < j.nvars(); ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g[v] > 0) ++count;
    if (count > best_count) { best_count = count; best_var = v; }
  }
  int m = 0;
  for (const auto& g : gens)
    if (g[best_var] > 0 && (m == 0 || g[best_var] < m)) m = g[best_var];

  Monomial pivot = Monomial::var(best_var, j.nvars(), m);
  MonomialIdeal plus = j.plus({pivot});
  std::vector<Monomial> colon_gens;
  colon_gens.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<int> e = g.exps();
    e[best_var] = std::max(e[best_var] - m, 0);
    colon_gens.emplace_back(std::move(e));
  }
  MonomialIdeal colon(j.ring(), std::move(colon_gens));
  return poly_add_shifted(kpoly(plus), kpoly(colon), m);
}

} // namespace detail

inline HilbertSeries hilbert_series(const MonomialIdeal& j) {
  HilbertSeries s;
  s.nvars = j.nvars();
  s.numerator = detail::kpoly(j);
  s.denom_exponent = j.nvars();
  if (s.numerator.empty()) {
    s.zero_ring = true;
    s.denom_exponent = 0;
    return s;
  }
  // cancel factors of (1-t): numerator(1) = 0 means divisibility
  while (s.denom_exponent > 0 && s.numerator_at_one() == 0) {
    std::vector<Int> q(s.numerator.size() - 1, Int(0));
    Int carry(0);
    for (std::size_t i = 0; i + 1 < s.numerator.size(); ++i) {
      carry += s.numerator[i];
      q[i] = carry;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    s.numerator = std::move(q);
    --s.denom_exponent;
  }
  return s;
}

/// Coefficients h(0..n_max) of the power-series expansion of the series.
inline std::vector<Int> series_values(const HilbertSeries& s, int n_max) {
  std::vector<Int> h(static_cast<std::size_t>(n_max) + 1, Int(0));
  if (s.zero_ring) return h;
  int d = s.denom_exponent;
  for (int n = 0; n <= n_max; ++n) {
    Int v(0);
    for (std::size_t jj = 0; jj < s.numerator.size(); ++jj) {
      long j = static_cast<long>(jj);
      if (d == 0) {
        if (j == n) v += s.numerator[jj];
      } else {
        v += s.numerator[jj] * binomial(static_cast<long>(n) - j + d - 1, static_cast<long>(d) - 1);
      }
    }
    h[static_cast<std::size_t>(n)] = v;
  }
  return h;
}

struct HilbertPolynomial {
  RatPoly p;
  int dim = 0; // degree is dim - 1 for dim >= 1; the zero polynomial for dim = 0

  Rat eval(long n) const { return p.eval(n); }
  bool operator==(const HilbertPolynomial& o) const { return p == o.p; }
};

/// p(n) = sum_j N_j * C(n - j + d - 1, d - 1) with polynomial binomials.
inline HilbertPolynomial hilbert_polynomial(const HilbertSeries& s) {
  HilbertPolynomial hp;
  hp.dim = s.denom_exponent;
  if (s.zero_ring || s.denom_exponent == 0) return hp;
  int d = s.denom_exponent;
  RatPoly acc;
  for (std::size_t jj = 0; jj < s.numerator.size(); ++jj) {
    long j = static_cast<long>(jj);
    RatPoly arg = RatPoly::x() + RatPoly::constant(Rat(static_cast<long>(d) - 1 - j));
    acc = acc + binomial_poly(arg, d - 1) * Rat(s.numerator[jj]);
  }
  hp.p = acc;
  return hp;
}

struct HilbertFunction {
  std::vector<Int> values;  // h(0..n_max)
  int agreement_index = 0;  // least n0 with h(n) = p(n) for every tabulated n >= n0

  Int embdim() const { return values.size() > 1 ? values[1] : Int(0); }
};

inline HilbertFunction tabulate_hf(const HilbertSeries& s, int n_max) {
  HilbertFunction hf;
  hf.values = series_values(s, n_max);
  HilbertPolynomial p = hilbert_polynomial(s);
  int n0 = static_cast<int>(hf.values.size());
  while (n0 > 0) {
    Rat expect = p.dim == 0 ? Rat(0) : p.eval(n0 - 1);
    if (Rat(hf.values[static_cast<std::size_t>(n0) - 1]) != expect) break;
    --n0;
  }
  hf.agreement_index = n0;
  return hf;
}

/// h^1(n) = sum_{i<=n} h(i)
inline std::vector<Int> iterated_hf(const std::vector<Int>& h) {
  std::vector<Int> out(h.size(), Int(0));
  Int acc(0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    acc += h[i];
    out[i] = acc;
  }
  return out;
}

/// p(n) - h(n) at a tabulated n.
inline Int deficiency(const std::vector<Int>& h, const HilbertPolynomial& p, int n) {
  if (n < 0 || n >= static_cast<int>(h.size()))
    throw error(errc::usage, "deficiency index outside the tabulated range");
  Rat v = (p.dim == 0 ? Rat(0) : p.eval(n)) - Rat(h[static_cast<std::size_t>(n)]);
  return to_int(v);
}

/// Gotzmann representation p(n) = sum_{i=1..s} C(n + a_i - (i-1), a_i),
/// a_1 >= a_2 >= ... >= a_s >= 0.  bound() = s - 1.
struct GotzmannRep {
  std::vector<long> a;
  long s() const { return static_cast<long>(a.size()); }
  long bound() const { return s() - 1; }

  RatPoly reconstruct() const {
    RatPoly acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
      RatPoly arg = RatPoly::x() + RatPoly::constant(Rat(a[i] - static_cast<long>(i)));
      acc = acc + binomial_poly(arg, a[i]);
    }
    return acc;
  }
};

inline constexpr long kGotzmannStepCap = 10000;

inline GotzmannRep gotzmann_representation(const HilbertPolynomial& hp) {
  GotzmannRep rep;
  RatPoly rem = hp.p;
  long prev = -1;
  for (long step = 0; !rem.is_zero(); ++step) {
    if (step >= kGotzmannStepCap)
      throw error(errc::not_hilbert_polynomial, "Gotzmann expansion exceeded the step cap");
    if (rem.lc() < 0)
      throw error(errc::not_hilbert_polynomial, "remainder has negative leading coefficient");
    long ai = rem.degree();
    if (prev >= 0 && ai > prev)
      throw error(errc::not_hilbert_polynomial, "exponent sequence is not non-increasing");
    RatPoly arg = RatPoly::x() + RatPoly::constant(Rat(ai - static_cast<long>(rep.a.size())));
    rem = rem - binomial_poly(arg, ai);
    rep.a.push_back(ai);
    prev = ai;
    if (!rem.is_zero() && rem.degree() > ai)
      throw error(errc::not_hilbert_polynomial, "degree grew during expansion");
  }
  return rep;
}

/// Macaulay's upper bound for h(t+1) given h(t) = h in degree t >= 1:
/// expand h = C(k_t,t) + ... + C(k_j,j), return C(k_t+1,t+1) + ... + C(k_j+1,j+1).
inline Int macaulay_growth_bound(const Int& h, int t) {
  if (t < 1) throw error(errc::usage, "Macaulay bound needs degree t >= 1");
  if (h < 0) throw error(errc::usage, "negative Hilbert function value");
  if (h == 0) return Int(0);
  Int rem = h;
  Int bound(0);
  long i = t;
  while (rem > 0 && i >= 1) {
    // largest k with C(k, i) <= rem
    Int k = i;
    while (binomial(k + 1, i) <= rem) ++k;
    rem -= binomial(k, i);
    bound += binomial(k + 1, i + 1);
    --i;
  }
  if (rem != 0) throw error(errc::internal, "binomial expansion failed");
  return bound;
}

} // namespace cmreg
