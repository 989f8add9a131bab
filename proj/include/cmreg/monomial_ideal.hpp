#pragma once

#include <algorithm>
#include <vector>

#include "ring.hpp"

namespace cmreg {

enum class BorelMode { borel_char0, stable };

/// Monomial ideal given by its minimal generators, kept sorted (degree, then
/// degrevlex) so equality is structural.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    set_gens(std::move(gens));
  }
  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  int nvars() const { return ring_->nvars(); }

  int max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  bool operator==(const MonomialIdeal& o) const {
    return same_ring(ring_, o.ring_) && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
  bool operator<(const MonomialIdeal& o) const {
    auto key = [](const MonomialIdeal& j) {
      std::vector<std::vector<int>> k;
      for (const auto& g : j.gens_) k.push_back(g.exps());
      return k;
    };
    return key(*this) < key(o);
  }

  /// ideal generated by this and the extra monomials
  MonomialIdeal plus(const std::vector<Monomial>& extra) const {
    std::vector<Monomial> g = gens_;
    g.insert(g.end(), extra.begin(), extra.end());
    return MonomialIdeal(ring_, std::move(g));
  }

private:
  void set_gens(std::vector<Monomial> raw) {
    for (const auto& m : raw)
      if (m.nvars() != ring_->nvars())
        throw error(errc::mismatched_rings, "monomial does not match ring");
    std::sort(raw.begin(), raw.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return cmp_monomials(a, b, TermOrder::degrevlex) < 0;
    });
    std::vector<Monomial> keep;
    for (const auto& m : raw) {
      bool redundant = false;
      for (const auto& k : keep)
        if (k.divides(m)) { redundant = true; break; }
      if (!redundant && (keep.empty() || !(keep.back() == m))) keep.push_back(m);
    }
    gens_ = std::move(keep);
  }

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ring), std::move(gens));
}

/// J : x_i^infinity, i.e. drop the x_i exponent from every generator.
inline MonomialIdeal colon_var_power(const MonomialIdeal& j, int i) {
  std::vector<Monomial> out;
  out.reserve(j.gens().size());
  for (const auto& g : j.gens()) {
    std::vector<int> e = g.exps();
    e[i] = 0;
    out.emplace_back(std::move(e));
  }
  return MonomialIdeal(j.ring(), std::move(out));
}

/// Intersection of monomial ideals via pairwise lcms.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ring());
  std::vector<Monomial> out;
  out.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) out.push_back(u.lcm(v));
  return MonomialIdeal(a.ring(), std::move(out));
}

/// (J : m^infinity) = intersection over i of J : x_i^infinity.
inline MonomialIdeal saturate(const MonomialIdeal& j) {
  if (j.is_zero()) return j;
  MonomialIdeal acc = colon_var_power(j, 0);
  for (int i = 1; i < j.nvars(); ++i) acc = intersect(acc, colon_var_power(j, i));
  return acc;
}

/// Borel/stability test under the listed-order convention x_1 > ... > x_r.
/// borel_char0: every generator u, every i with x_i | u, every j < i must have
/// x_j * u / x_i in J.  stable: only i = max_index(u) is tested.
inline bool is_borel_fixed(const MonomialIdeal& j, BorelMode mode = BorelMode::borel_char0) {
  for (const auto& u : j.gens()) {
    int lo = (mode == BorelMode::stable) ? u.max_index() : 0;
    for (int i = std::max(lo, 1); i < u.nvars(); ++i) {
      if (u[i] == 0) continue;
      if (mode == BorelMode::stable && i != u.max_index()) continue;
      for (int jj = 0; jj < i; ++jj)
        if (!j.contains(u.swap_var(i, jj))) return false;
    }
  }
  return true;
}

/// Lex-segment ideal of a quotient Hilbert function h(0..D): in each degree t
/// the first dim S_t - h(t) monomials in descending lex.  Throws
/// MACAULAY-VIOLATION when the values are not an O-sequence over this ring.
inline MonomialIdeal lex_segment_ideal(const RingPtr& ring, const std::vector<Int>& h) {
  if (h.empty() || h[0] != 1)
    throw error(errc::macaulay_violation, "Hilbert function must start with h(0) = 1");
  int D = static_cast<int>(h.size()) - 1;
  std::vector<Monomial> all_gens;
  std::vector<Monomial> prev_segment;
  for (int t = 1; t <= D; ++t) {
    Int dim_t = ring->dim_of_degree(t);
    if (h[t] < 0 || h[t] > dim_t)
      throw error(errc::macaulay_violation,
                  "h(" + std::to_string(t) + ") = " + h[t].get_str() + " outside [0, " +
                      dim_t.get_str() + "]");
    Int codim = dim_t - h[t];
    std::vector<Monomial> degree_t = monomials_of_degree(ring->nvars(), t);
    std::vector<Monomial> segment(degree_t.begin(), degree_t.begin() + codim.get_ui());

    // the shift of the previous segment must land inside this one
    for (const auto& m : prev_segment)
      for (int v = 0; v < ring->nvars(); ++v) {
        Monomial shifted = m * Monomial::var(v, ring->nvars());
        if (std::find(segment.begin(), segment.end(), shifted) == segment.end())
          throw error(errc::macaulay_violation,
                      "growth from degree " + std::to_string(t - 1) + " to " + std::to_string(t) +
                          " violates Macaulay's bound");
      }

    all_gens.insert(all_gens.end(), segment.begin(), segment.end());
    prev_segment = std::move(segment);
  }
  return MonomialIdeal(ring, std::move(all_gens));
}

inline std::string ideal_str(const MonomialIdeal& j) {
  if (j.is_zero()) return "0";
  std::string s;
  for (const auto& g : j.gens()) {
    if (!s.empty()) s += ", ";
    s += g.str(j.ring()->vars);
  }
  return s;
}

} // namespace cmreg
