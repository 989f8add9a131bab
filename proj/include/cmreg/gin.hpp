#pragma once

#include <cstdint>
#include <random>

#include "groebner.hpp"

namespace cmreg {

struct GinResult {
  MonomialIdeal gin;
  int trials_used = 0;
  std::uint64_t seed = 0;
  bool borel_fixed = true; // NOT-BOREL surfaces as borel_fixed = false
  int max_gen_degree = 0;  // D
};

struct GinOptions {
  int max_trials = 3;           // at least 2; stop as soon as two trials agree
  long coeff_range = 1000;      // entries uniform in [-range, range] over Q
  std::size_t pair_cap = 200000;
  int matrix_retry_cap = 1000;
};

namespace detail {

template <class F>
Matrix<F> random_invertible_matrix(const F& field, int n, std::mt19937_64& rng,
                                   const GinOptions& opts) {
  for (int attempt = 0; attempt < opts.matrix_retry_cap; ++attempt) {
    Matrix<F> m;
    m.n = n;
    m.a.resize(static_cast<std::size_t>(n) * n);
    for (auto& e : m.a) {
      if constexpr (std::is_same_v<F, Rationals>) {
        long span = 2 * opts.coeff_range + 1;
        long v = static_cast<long>(rng() % static_cast<unsigned long>(span)) - opts.coeff_range;
        e = Rat(v);
      } else {
        e = static_cast<typename F::Elem>(rng() % field.characteristic());
      }
    }
    if (is_invertible(m, field)) return m;
  }
  throw error(errc::singular_matrix, "could not sample an invertible coordinate change");
}

} // namespace detail

/// Generic initial ideal under degrevlex via randomized coordinate changes:
/// Monte-Carlo trials accepted as soon as two agree, DISAGREEMENT otherwise.
template <class F>
GinResult gin(const Ideal<F>& ideal, std::uint64_t seed, const GinOptions& opts = {}) {
  if (opts.max_trials < 2) throw error(errc::usage, "gin needs at least two trials");
  if constexpr (!std::is_same_v<F, Rationals>) {
    if (ideal.field.characteristic() <= static_cast<unsigned long>(ideal.max_gen_degree()))
      throw error(errc::usage, "prime characteristic must exceed all degrees involved");
  }

  GinResult res;
  res.seed = seed;
  if (ideal.gens.empty()) {
    res.gin = MonomialIdeal::zero(ideal.ring);
    return res;
  }

  std::mt19937_64 rng(seed);
  BuchbergerOptions bopts;
  bopts.pair_cap = opts.pair_cap;
  bopts.reduce = false;

  std::vector<MonomialIdeal> trials;
  std::optional<MonomialIdeal> agreed;
  for (int t = 0; t < opts.max_trials && !agreed; ++t) {
    Matrix<F> m = detail::random_invertible_matrix(ideal.field, ideal.ring->nvars(), rng, opts);
    Ideal<F> moved = apply_linear_change(ideal, m);
    MonomialIdeal in = initial_ideal(buchberger(moved, TermOrder::degrevlex, bopts));
    for (const auto& prev : trials)
      if (prev == in) { agreed = in; break; }
    trials.push_back(std::move(in));
    res.trials_used = t + 1;
  }
  if (!agreed)
    throw error(errc::gin_disagreement,
                "no two of " + std::to_string(res.trials_used) + " gin trials agree");

  res.gin = *agreed;
  res.borel_fixed = is_borel_fixed(res.gin, BorelMode::borel_char0);
  res.max_gen_degree = res.gin.max_gen_degree();
  return res;
}

} // namespace cmreg
