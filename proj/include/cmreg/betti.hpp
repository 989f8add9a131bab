#pragma once

#include <map>
#include <set>
#include <vector>

#include "monomial_ideal.hpp"

namespace cmreg {

/// Graded Betti numbers beta_{i,j} of an ideal (homological index i, internal degree j).
struct BettiTable {
  std::map<std::pair<int, int>, Int> beta;

  void add(int i, int j, const Int& v) {
    if (v == 0) return;
    beta[{i, j}] += v;
  }
  Int get(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? Int(0) : it->second;
  }
  bool empty() const { return beta.empty(); }
};

/// reg = max{ j - i : beta_{i,j} != 0 }; as_quotient shifts to reg(S/J) = reg(J) - 1.
inline int regularity_from_betti(const BettiTable& b, bool as_quotient) {
  if (b.empty())
    throw error(errc::internal, "regularity of an empty Betti table");
  int r = -1;
  bool first = true;
  for (const auto& [ij, v] : b.beta) {
    int d = ij.second - ij.first;
    if (first || d > r) r = d;
    first = false;
  }
  return as_quotient ? r - 1 : r;
}

/// Eliahou-Kervaire: for a stable ideal, beta_{i, i+deg u} += C(max(u) - 1, i)
/// over the minimal generators u, with max(u) the 1-based largest variable index.
inline BettiTable ek_betti(const MonomialIdeal& j) {
  if (!is_borel_fixed(j, BorelMode::stable))
    throw error(errc::not_stable, "ideal is not stable");
  BettiTable b;
  for (const auto& u : j.gens()) {
    int m = u.max_index(); // 0-based, equals max(u) - 1
    for (int i = 0; i <= m; ++i) b.add(i, i + u.degree(), binomial(static_cast<long>(m), i));
  }
  return b;
}

namespace detail {

/// rank of a dense 0/±1 matrix over the field (exact Gaussian elimination)
template <class F>
int field_rank(std::vector<std::vector<typename F::Elem>> m, const F& field) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!field.is_zero(m[r][c])) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    auto inv = field.inv(m[rank][c]);
    for (int r = rank + 1; r < rows; ++r) {
      if (field.is_zero(m[r][c])) continue;
      auto f = field.mul(m[r][c], inv);
      for (int cc = c; cc < cols; ++cc)
        m[r][cc] = field.sub(m[r][cc], field.mul(f, m[rank][cc]));
    }
    ++rank;
  }
  return rank;
}

/// Reduced homology dimensions of the upper Koszul complex
///   K^b = { sigma subset of support(b) : x^b / x^sigma in J },
/// returned as dims[q+1] = dim H~_q for q = -1 .. r-1.
template <class F>
std::vector<int> upper_koszul_homology(const MonomialIdeal& j, const Monomial& b, const F& field) {
  std::vector<int> support;
  for (int i = 0; i < b.nvars(); ++i)
    if (b[i] > 0) support.push_back(i);
  int s = static_cast<int>(support.size());

  // faces[q+1] = list of subsets (as bitmasks over support) of size q+1 lying in K^b
  std::vector<std::vector<unsigned>> faces(static_cast<std::size_t>(s) + 2);
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    std::vector<int> e = b.exps();
    bool ok = true;
    for (int t = 0; t < s; ++t)
      if (mask & (1u << t)) {
        if (--e[support[t]] < 0) { ok = false; break; }
      }
    if (!ok) continue;
    if (j.contains(Monomial(e))) faces[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
  }
  if (faces[0].empty()) return std::vector<int>(static_cast<std::size_t>(s) + 1, 0); // void complex

  // boundary ranks: d[k] = rank of the map C_{k-1} -> C_{k-2} (faces[k] -> faces[k-1])
  std::vector<int> d(static_cast<std::size_t>(s) + 2, 0);
  for (int k = 1; k <= s + 1; ++k) {
    const auto& dom = faces[static_cast<std::size_t>(k)];
    const auto& codom = faces[static_cast<std::size_t>(k) - 1];
    if (dom.empty() || codom.empty()) continue;
    std::map<unsigned, int> codom_index;
    for (std::size_t i = 0; i < codom.size(); ++i) codom_index[codom[i]] = static_cast<int>(i);
    std::vector<std::vector<typename F::Elem>> m(
        codom.size(), std::vector<typename F::Elem>(dom.size(), field.zero()));
    for (std::size_t c = 0; c < dom.size(); ++c) {
      unsigned mask = dom[c];
      int sign = 0;
      for (int t = 0; t < s; ++t) {
        if (!(mask & (1u << t))) continue;
        unsigned sub = mask & ~(1u << t);
        auto it = codom_index.find(sub);
        if (it != codom_index.end())
          m[static_cast<std::size_t>(it->second)][c] =
              (sign % 2 == 0) ? field.one() : field.neg(field.one());
        ++sign;
      }
    }
    d[static_cast<std::size_t>(k)] = field_rank(std::move(m), field);
  }

  std::vector<int> dims(static_cast<std::size_t>(s) + 1, 0);
  for (int q = -1; q < s; ++q) {
    int nq = static_cast<int>(faces[static_cast<std::size_t>(q) + 1].size());
    dims[static_cast<std::size_t>(q) + 1] = nq - d[static_cast<std::size_t>(q) + 1] - d[static_cast<std::size_t>(q) + 2];
  }
  return dims;
}

template <class F>
BettiTable betti_lcm_impl(const MonomialIdeal& j, const F& field) {
  BettiTable b;
  int n = static_cast<int>(j.gens().size());
  std::set<Monomial, MonomialCmp> lattice{MonomialCmp{TermOrder::degrevlex}};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Monomial l = Monomial::one(j.nvars());
    for (int t = 0; t < n; ++t)
      if (mask & (1u << t)) l = l.lcm(j.gens()[static_cast<std::size_t>(t)]);
    lattice.insert(l);
  }
  for (const auto& m : lattice) {
    std::vector<int> dims = upper_koszul_homology(j, m, field);
    for (int q = -1; q + 1 < static_cast<int>(dims.size()); ++q) {
      int h = dims[static_cast<std::size_t>(q) + 1];
      if (h > 0) b.add(q + 1, m.degree(), Int(h)); // beta_{i, deg b} with i - 1 = q
    }
  }
  return b;
}

} // namespace detail

inline constexpr int kBettiLcmGeneratorCap = 15;

/// lcm-lattice Betti numbers (Taylor-complex homology), valid for any monomial
/// ideal; homology is taken over the ideal's own coefficient field.
inline BettiTable betti_lcm(const MonomialIdeal& j) {
  if (static_cast<int>(j.gens().size()) > kBettiLcmGeneratorCap)
    throw error(errc::cap_exceeded,
                "lcm-lattice Betti computation capped at " +
                    std::to_string(kBettiLcmGeneratorCap) + " generators (got " +
                    std::to_string(j.gens().size()) + ")");
  if (j.ring()->field.characteristic == 0) return detail::betti_lcm_impl(j, Rationals{});
  return detail::betti_lcm_impl(j, PrimeField(j.ring()->field.characteristic));
}

/// Best available exact Betti route: Eliahou-Kervaire when stable, lcm-lattice otherwise.
inline BettiTable betti_auto(const MonomialIdeal& j) {
  if (is_borel_fixed(j, BorelMode::stable)) return ek_betti(j);
  return betti_lcm(j);
}

/// reg(S/J) for a monomial ideal, with reg(S/0) = 0 and reg of the zero ring -1.
inline int quotient_regularity(const MonomialIdeal& j) {
  if (j.is_zero()) return 0;
  if (j.is_unit()) return -1;
  return regularity_from_betti(betti_auto(j), true);
}

} // namespace cmreg
