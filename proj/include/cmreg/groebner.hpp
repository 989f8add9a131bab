#pragma once

#include <optional>
#include <set>
#include <vector>

#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace cmreg {

template <class F>
struct GroebnerBasis {
  RingPtr ring;
  F field;
  TermOrder order = TermOrder::degrevlex;
  std::vector<Poly<F>> elems;
  bool reduced = false;
};

struct BuchbergerOptions {
  std::size_t pair_cap = 200000; // processed-pair limit before RESOURCE-LIMIT
  bool reduce = true;            // interreduce to the unique reduced basis
};

/// Full normal form: no term of the remainder is divisible by any leading monomial.
template <class F>
Poly<F> normal_form(const Poly<F>& f, const std::vector<Poly<F>>& basis) {
  const F& field = f.field();
  Poly<F> p = f;
  std::vector<Term<F>> rem;
  while (!p.is_zero()) {
    bool reduced_step = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.lm().divides(p.lm())) {
        auto c = field.div(p.lc(), g.lc());
        p = p - g.mul_term(c, g.lm().divide_into(p.lm()));
        reduced_step = true;
        break;
      }
    }
    if (!reduced_step) {
      rem.push_back(p.lt());
      p = p - Poly<F>(p.ring(), field, p.order(), {p.lt()});
    }
  }
  return Poly<F>(f.ring(), field, f.order(), std::move(rem));
}

template <class F>
Poly<F> normal_form(const Poly<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(f.with_order(gb.order), gb.elems);
}

template <class F>
Poly<F> s_polynomial(const Poly<F>& f, const Poly<F>& g) {
  const F& field = f.field();
  Monomial l = f.lm().lcm(g.lm());
  Poly<F> a = f.mul_term(field.inv(f.lc()), f.lm().divide_into(l));
  Poly<F> b = g.mul_term(field.inv(g.lc()), g.lm().divide_into(l));
  return a - b;
}

namespace detail {

/// Keep coefficients tame during completion: over Q scale to coprime integer
/// coefficients with positive leading coefficient, over F_p make monic.
template <class F>
Poly<F> normalize_basis_elem(const Poly<F>& f) {
  if (f.is_zero()) return f;
  if constexpr (std::is_same_v<F, Rationals>) {
    Int den(1), num(0);
    for (const auto& t : f.terms()) den = lcm(den, t.coeff.get_den());
    for (const auto& t : f.terms()) {
      Rat scaled = t.coeff * Rat(den);
      num = gcd(num, scaled.get_num());
    }
    Rat scale = Rat(den) / Rat(num);
    if (f.lc() < 0) scale = -scale;
    return f.scale(scale);
  } else {
    return f.monic();
  }
}

} // namespace detail

/// Buchberger completion with the coprime and chain pair-elimination criteria
/// and normal selection (lowest lcm degree first).
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, TermOrder order,
                            const BuchbergerOptions& opts = {}) {
  const F& field = ideal.field;
  std::vector<Poly<F>> basis;
  for (const auto& g : ideal.gens)
    if (!g.is_zero()) basis.push_back(detail::normalize_basis_elem(g.with_order(order)));

  struct PairKey {
    int deg;
    Monomial l;
    int i, j;
    TermOrder order;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      int c = cmp_monomials(l, o.l, order);
      if (c != 0) return c < 0;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };

  std::set<PairKey> queue;
  std::set<std::pair<int, int>> handled;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = basis[static_cast<std::size_t>(i)].lm().lcm(basis[static_cast<std::size_t>(j)].lm());
      queue.insert(PairKey{l.degree(), l, i, j, order});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

  std::size_t processed = 0;
  while (!queue.empty()) {
    if (++processed > opts.pair_cap)
      throw error(errc::resource_limit, "Buchberger pair cap exceeded");
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    handled.insert({pk.i, pk.j});

    const Poly<F>& fi = basis[static_cast<std::size_t>(pk.i)];
    const Poly<F>& fj = basis[static_cast<std::size_t>(pk.j)];
    if (fi.lm().coprime(fj.lm())) continue; // first criterion

    bool chained = false; // second (chain) criterion
    for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!basis[static_cast<std::size_t>(k)].lm().divides(pk.l)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (handled.count(key(pk.i, k)) && handled.count(key(pk.j, k))) chained = true;
    }
    if (chained) continue;

    Poly<F> h = normal_form(s_polynomial(fi, fj), basis);
    if (h.is_zero()) continue;
    basis.push_back(detail::normalize_basis_elem(h));
    push_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  GroebnerBasis<F> gb{ideal.ring, field, order, {}, opts.reduce};
  if (opts.reduce) {
    // minimal leading terms, then tail-reduce each element against the others
    std::vector<Poly<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j)
        if (i != j && basis[j].lm().divides(basis[i].lm()))
          redundant = (basis[j].lm() != basis[i].lm()) || j < i;
      if (!redundant) minimal.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly<F>> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      gb.elems.push_back(normal_form(minimal[i], others).monic());
    }
    std::sort(gb.elems.begin(), gb.elems.end(), [order](const Poly<F>& a, const Poly<F>& b) {
      return cmp_monomials(a.lm(), b.lm(), order) < 0;
    });
  } else {
    gb.elems = std::move(basis);
  }

  for (const auto& g : ideal.gens)
    if (!normal_form(g.with_order(order), gb.elems).is_zero())
      throw error(errc::internal, "input generator does not reduce to zero");
  return gb;
}

/// in(I): the monomial ideal of leading monomials.
template <class F>
MonomialIdeal initial_ideal(const GroebnerBasis<F>& gb) {
  std::vector<Monomial> lms;
  lms.reserve(gb.elems.size());
  for (const auto& g : gb.elems)
    if (!g.is_zero()) lms.push_back(g.lm());
  return MonomialIdeal(gb.ring, std::move(lms));
}

template <class F>
MonomialIdeal initial_ideal(const Ideal<F>& ideal, TermOrder order,
                            const BuchbergerOptions& opts = {}) {
  BuchbergerOptions o = opts;
  o.reduce = false; // leading terms do not need tail reduction
  return initial_ideal(buchberger(ideal, order, o));
}

} // namespace cmreg
