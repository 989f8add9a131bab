#pragma once

#include <deque>
#include <set>
#include <vector>

#include "betti.hpp"
#include "hilbert.hpp"

namespace cmreg {

inline constexpr std::size_t kEnumerationCap = 200000;

namespace detail {

using MonoSet = std::set<Monomial, MonomialCmp>;

inline MonoSet make_mono_set() { return MonoSet{MonomialCmp{TermOrder::degrevlex}}; }

/// close a degree slice under the elementary moves x_i -> x_j, j < i
inline MonoSet borel_close(MonoSet s) {
  std::deque<Monomial> work(s.begin(), s.end());
  while (!work.empty()) {
    Monomial m = work.front();
    work.pop_front();
    for (int i = 1; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      for (int j = 0; j < i; ++j) {
        Monomial up = m.swap_var(i, j);
        if (s.insert(up).second) work.push_back(up);
      }
    }
  }
  return s;
}

inline MonoSet shift_slice(const MonoSet& s, int nvars) {
  MonoSet out = make_mono_set();
  for (const auto& m : s)
    for (int v = 0; v < nvars; ++v) out.insert(m * Monomial::var(v, nvars));
  return out;
}

/// all Borel-closed sets of degree-t monomials containing base
inline std::vector<MonoSet> closed_supersets(const MonoSet& base, int nvars, int degree,
                                             std::size_t cap) {
  std::vector<Monomial> all = monomials_of_degree(nvars, degree);
  std::set<std::vector<Monomial>> seen;
  std::vector<MonoSet> out;
  std::deque<MonoSet> work{borel_close(base)};
  while (!work.empty()) {
    MonoSet s = std::move(work.front());
    work.pop_front();
    std::vector<Monomial> key(s.begin(), s.end());
    if (!seen.insert(key).second) continue;
    out.push_back(s);
    if (out.size() > cap)
      throw error(errc::cap_exceeded, "Borel enumeration exceeded the size cap");
    for (const auto& m : all) {
      if (s.count(m)) continue;
      MonoSet t = s;
      t.insert(m);
      work.push_back(borel_close(std::move(t)));
    }
  }
  return out;
}

} // namespace detail

/// All Borel-fixed monomial ideals with minimal generators of degree <= dmax,
/// built degree by degree (each slice a Borel-closed superset of the shift of
/// the previous one).
inline std::vector<MonomialIdeal> enumerate_borel_ideals(const RingPtr& ring, int dmax,
                                                         std::size_t cap = kEnumerationCap) {
  int n = ring->nvars();
  struct Partial {
    detail::MonoSet slice;
    std::vector<Monomial> mons;
  };
  std::vector<Partial> partials{{detail::make_mono_set(), {}}};
  for (int t = 1; t <= dmax; ++t) {
    std::vector<Partial> next;
    for (const auto& p : partials) {
      detail::MonoSet base = detail::borel_close(detail::shift_slice(p.slice, n));
      for (auto& s : detail::closed_supersets(base, n, t, cap)) {
        Partial q;
        q.mons = p.mons;
        q.mons.insert(q.mons.end(), s.begin(), s.end());
        q.slice = std::move(s);
        next.push_back(std::move(q));
        if (next.size() > cap)
          throw error(errc::cap_exceeded, "Borel enumeration exceeded the size cap");
      }
    }
    partials = std::move(next);
  }
  std::set<MonomialIdeal> dedup;
  for (auto& p : partials) dedup.insert(MonomialIdeal(ring, std::move(p.mons)));
  return std::vector<MonomialIdeal>(dedup.begin(), dedup.end());
}

/// Canonical tag of a Hilbert function with regularity <= m: the values
/// h(0..m+1) plus the Hilbert polynomial (which determine h everywhere).
struct HFSignature {
  std::vector<Int> prefix;
  HilbertPolynomial poly;

  std::string key() const {
    std::string k;
    for (const auto& v : prefix) k += v.get_str() + ",";
    k += "|";
    for (const auto& c : poly.p.coeffs()) k += c.get_str() + ",";
    return k;
  }
  bool operator<(const HFSignature& o) const { return key() < o.key(); }
  bool operator==(const HFSignature& o) const { return key() == o.key(); }

  /// h(0..upto), extending past the stored prefix with the polynomial
  std::vector<Int> values(int upto) const {
    std::vector<Int> out;
    for (int n = 0; n <= upto; ++n) {
      if (n < static_cast<int>(prefix.size())) out.push_back(prefix[static_cast<std::size_t>(n)]);
      else out.push_back(poly.dim == 0 ? Int(0) : to_int(poly.eval(n)));
    }
    return out;
  }
};

inline HFSignature hf_signature(const MonomialIdeal& j, int m) {
  HilbertSeries s = hilbert_series(j);
  HFSignature sig;
  sig.prefix = series_values(s, m + 1);
  sig.poly = hilbert_polynomial(s);
  return sig;
}

/// Census of Hilbert functions of quotients with embdim <= r and reg <= m:
/// signatures of the Borel-fixed ideals generated in degrees <= m+1 whose own
/// quotient regularity passes the cap.
inline std::set<HFSignature> enumerate_hilbert_functions(const RingPtr& ring, int m,
                                                         std::size_t cap = kEnumerationCap) {
  if (m < 0) throw error(errc::usage, "regularity cap must be >= 0");
  std::set<HFSignature> out;
  for (const auto& j : enumerate_borel_ideals(ring, m + 1, cap)) {
    if (quotient_regularity(j) > m) continue;
    out.insert(hf_signature(j, m));
  }
  return out;
}

/// Independent slow path: every monomial ideal (Borel or not) generated in
/// degrees <= m+1, regularity via the lcm-lattice Betti table.
inline std::set<HFSignature> brute_force_hf_oracle(const RingPtr& ring, int m) {
  std::vector<Monomial> pool;
  for (int d = 1; d <= m + 1; ++d)
    for (const auto& mono : monomials_of_degree(ring->nvars(), d)) pool.push_back(mono);
  if (pool.size() > 20)
    throw error(errc::cap_exceeded, "oracle enumeration too large");

  std::set<MonomialIdeal> ideals;
  for (unsigned long mask = 0; mask < (1ul << pool.size()); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (1ul << i)) gens.push_back(pool[i]);
    ideals.insert(MonomialIdeal(ring, std::move(gens)));
  }

  std::set<HFSignature> out;
  for (const auto& j : ideals) {
    int reg = j.is_zero() ? 0 : regularity_from_betti(betti_lcm(j), true);
    if (reg > m) continue;
    out.insert(hf_signature(j, m));
  }
  return out;
}

} // namespace cmreg
