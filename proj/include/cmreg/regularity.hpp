#pragma once

#include <optional>
#include <string>

#include "betti.hpp"
#include "gin.hpp"
#include "hilbert.hpp"

namespace cmreg {

enum class RegRoute { stable_ek, lcm_lattice, gin_pipeline };

inline const char* route_name(RegRoute r) {
  switch (r) {
    case RegRoute::stable_ek: return "stable-EK";
    case RegRoute::lcm_lattice: return "lcm-lattice";
    case RegRoute::gin_pipeline: return "gin-pipeline";
  }
  return "?";
}

struct RegularityReport {
  int reg = 0;
  int g_reg = 0; // reg of the saturated quotient; -1 when the saturation is the unit ideal
  RegRoute route = RegRoute::stable_ek;
  std::optional<GinResult> gin_used;
  MonomialIdeal working;   // monomial ideal the invariants were read from
  int max_gen_degree = 0;  // D
  int dim = 0;
  bool dim_zero = false;
  Int mult;                // multiplicity for dim >= 1, total length for dim = 0
  int embdim = 0;          // h(1)
  bool upper_bound_only = false;
  std::vector<std::string> warnings;
  HilbertSeries series;
};

namespace detail {

inline void fill_numerics(RegularityReport& rep) {
  rep.series = hilbert_series(rep.working);
  rep.dim = rep.series.dimension();
  rep.dim_zero = rep.series.dimension_zero();
  rep.mult = rep.series.multiplicity();
  std::vector<Int> h = series_values(rep.series, 1);
  rep.embdim = static_cast<int>(h[1].get_si());
  rep.max_gen_degree = rep.working.max_gen_degree();
}

inline int saturated_quotient_reg(const MonomialIdeal& j) {
  MonomialIdeal sat = saturate(j);
  return quotient_regularity(sat); // -1 when sat is the unit ideal
}

} // namespace detail

/// Castelnuovo-Mumford regularity of S/I plus the geometric regularity
/// g-reg = reg of the saturated quotient.  Monomial inputs go through exact
/// Betti numbers; general inputs go through the degrevlex gin.
template <class F>
RegularityReport regularity(const Ideal<F>& ideal, std::uint64_t seed = 0,
                            const GinOptions& opts = {}) {
  RegularityReport rep;
  if (ideal.gens.empty()) {
    rep.working = MonomialIdeal::zero(ideal.ring);
    rep.route = RegRoute::stable_ek;
    rep.reg = 0;
    rep.g_reg = 0;
    detail::fill_numerics(rep);
    return rep;
  }

  if (ideal.all_monomial()) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens) gens.push_back(g.lt().mono);
    rep.working = MonomialIdeal(ideal.ring, std::move(gens));
    if (is_borel_fixed(rep.working, BorelMode::stable)) {
      rep.route = RegRoute::stable_ek;
      rep.reg = regularity_from_betti(ek_betti(rep.working), true);
    } else {
      rep.route = RegRoute::lcm_lattice;
      rep.reg = regularity_from_betti(betti_lcm(rep.working), true);
    }
  } else {
    rep.route = RegRoute::gin_pipeline;
    rep.gin_used = gin(ideal, seed, opts);
    rep.working = rep.gin_used->gin;
    if (rep.gin_used->borel_fixed) {
      rep.reg = rep.gin_used->max_gen_degree - 1;
    } else {
      // NOT-BOREL: reg(S/in) is only an upper bound for reg(S/I)
      rep.reg = quotient_regularity(rep.working);
      rep.upper_bound_only = true;
      rep.warnings.push_back("NOT-BOREL");
      rep.warnings.push_back("UPPER-BOUND-ONLY");
    }
  }

  rep.g_reg = detail::saturated_quotient_reg(rep.working);
  detail::fill_numerics(rep);
  return rep;
}

/// dim_k H^0(S/I)_j for j = 0..upto, as h_{S/J} - h_{S/sat(J)} with J the
/// working monomial ideal (gin for non-monomial input).
template <class F>
std::vector<Int> h0_dims(const Ideal<F>& ideal, int upto, std::uint64_t seed = 0,
                         const GinOptions& opts = {}) {
  MonomialIdeal j;
  if (ideal.gens.empty()) {
    j = MonomialIdeal::zero(ideal.ring);
  } else if (ideal.all_monomial()) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens) gens.push_back(g.lt().mono);
    j = MonomialIdeal(ideal.ring, std::move(gens));
  } else {
    j = gin(ideal, seed, opts).gin;
  }
  MonomialIdeal sat = saturate(j);
  std::vector<Int> hj = series_values(hilbert_series(j), upto);
  std::vector<Int> hs = series_values(hilbert_series(sat), upto);
  for (std::size_t i = 0; i < hj.size(); ++i) hj[i] = hj[i] - hs[i];
  return hj;
}

struct MumfordReport {
  int m = 0;               // g-reg of (S/I)/z(S/I) for a generic linear z
  int reg = 0;             // reg of S/I
  int window_lo = 0;       // checked degrees window_lo..m+4
  std::vector<Int> delta;  // p(t) - h(t) for t = window_lo..m+4
  std::vector<Int> h0_quotient; // dim H^0((S/I)/z)_j for j = 0..m+4
  bool ok_window = false;  // delta >= 0 on the window
  bool ok_a = false;       // delta(m) = delta(s) + sum_{j=m+1..s} h0_quotient[j], s = m+1..m+4
  bool ok_b = false;       // reg <= m + delta(m)
  bool holds() const { return ok_window && ok_a && ok_b; }
  std::string status() const { return holds() ? "OK" : "INCONCLUSIVE"; }
};

/// Numeric verification of the regularity-from-hyperplane-section identities on
/// S/I: requires dim >= 2 and positive depth; z is the last variable after a
/// seeded generic coordinate change.
template <class F>
MumfordReport check_mumford(const Ideal<F>& ideal, std::uint64_t seed = 0,
                            const GinOptions& opts = {}) {
  RegularityReport base = regularity(ideal, seed, opts);
  if (base.dim < 2)
    throw error(errc::dimension_too_small, "check needs dim >= 2, got " + std::to_string(base.dim));
  std::vector<Int> h0 = h0_dims(ideal, std::max(base.reg, 0) + 1, seed, opts);
  for (const auto& v : h0)
    if (v != 0) throw error(errc::depth_zero, "S/I has depth zero");

  // generic coordinates, then cut by the (now generic) last variable
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Matrix<F> m = detail::random_invertible_matrix(ideal.field, ideal.ring->nvars(), rng, opts);
  Ideal<F> moved = apply_linear_change(ideal, m);
  int n = ideal.ring->nvars();
  std::vector<Term<F>> zt{{ideal.field.one(), Monomial::var(n - 1, n)}};
  moved.gens.emplace_back(ideal.ring, ideal.field, TermOrder::degrevlex, std::move(zt));

  RegularityReport cut = regularity(moved, seed + 1, opts);
  MumfordReport rep;
  rep.m = cut.g_reg;
  rep.reg = base.reg;
  rep.window_lo = std::max(rep.m - 1, 0);

  HilbertPolynomial p = hilbert_polynomial(base.series);
  std::vector<Int> h = series_values(base.series, rep.m + 4);
  rep.delta.reserve(static_cast<std::size_t>(rep.m + 4 - rep.window_lo) + 1);
  for (int t = rep.window_lo; t <= rep.m + 4; ++t) rep.delta.push_back(deficiency(h, p, t));
  rep.h0_quotient = h0_dims(moved, rep.m + 4, seed + 2, opts);

  auto delta_at = [&](int t) { return rep.delta[static_cast<std::size_t>(t - rep.window_lo)]; };
  rep.ok_window = true;
  for (const auto& d : rep.delta)
    if (d < 0) rep.ok_window = false;
  rep.ok_a = true;
  for (int s = rep.m + 1; s <= rep.m + 4; ++s) {
    Int acc(0);
    for (int j = rep.m + 1; j <= s; ++j) acc += rep.h0_quotient[static_cast<std::size_t>(j)];
    if (delta_at(rep.m) != delta_at(s) + acc) rep.ok_a = false;
  }
  rep.ok_b = rep.reg <= rep.m + delta_at(rep.m);
  return rep;
}

} // namespace cmreg
