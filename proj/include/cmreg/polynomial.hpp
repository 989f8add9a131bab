#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "ring.hpp"

namespace cmreg {

template <class F>
struct Term {
  typename F::Elem coeff;
  Monomial mono;
};

/// Immutable multivariate polynomial: terms kept strictly descending in the
/// active term order, no zero coefficients.
template <class F>
class Poly {
public:
  Poly() = default;
  Poly(RingPtr ring, F field, TermOrder order)
      : ring_(std::move(ring)), field_(field), order_(order) {}
  Poly(RingPtr ring, F field, TermOrder order, std::vector<Term<F>> terms)
      : ring_(std::move(ring)), field_(field), order_(order), terms_(std::move(terms)) {
    normalize();
  }

  const RingPtr& ring() const { return ring_; }
  const F& field() const { return field_; }
  TermOrder order() const { return order_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term<F>& lt() const {
    if (is_zero()) throw error(errc::internal, "leading term of zero");
    return terms_.front();
  }
  const Monomial& lm() const { return lt().mono; }
  const typename F::Elem& lc() const { return lt().coeff; }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  Poly with_order(TermOrder o) const {
    if (o == order_) return *this;
    return Poly(ring_, field_, o, terms_);
  }

  Poly operator+(const Poly& g) const {
    check(g);
    std::vector<Term<F>> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
      int c = cmp_monomials(terms_[i].mono, g.terms_[j].mono, order_);
      if (c > 0) out.push_back(terms_[i++]);
      else if (c < 0) out.push_back(g.terms_[j++]);
      else {
        auto s = field_.add(terms_[i].coeff, g.terms_[j].coeff);
        if (!field_.is_zero(s)) out.push_back({s, terms_[i].mono});
        ++i; ++j;
      }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
    Poly r(ring_, field_, order_);
    r.terms_ = std::move(out);
    return r;
  }
  Poly operator-(const Poly& g) const { return *this + g.neg(); }
  Poly neg() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }
  Poly scale(const typename F::Elem& c) const {
    if (field_.is_zero(c)) return Poly(ring_, field_, order_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }
  Poly mul_term(const typename F::Elem& c, const Monomial& m) const {
    if (field_.is_zero(c)) return Poly(ring_, field_, order_);
    Poly r(ring_, field_, order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({field_.mul(t.coeff, c), t.mono * m});
    return r;
  }
  Poly operator*(const Poly& g) const {
    check(g);
    Poly acc(ring_, field_, order_);
    for (const auto& t : g.terms_) acc = acc + mul_term(t.coeff, t.mono);
    return acc;
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(lc()));
  }

  bool operator==(const Poly& g) const {
    if (terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != g.terms_[i].mono || !field_.equal(terms_[i].coeff, g.terms_[i].coeff))
        return false;
    return true;
  }
  bool operator!=(const Poly& g) const { return !(*this == g); }

private:
  void check(const Poly& g) const {
    require_same_ring(ring_, g.ring_);
    if (order_ != g.order_) throw error(errc::internal, "mixed term orders");
  }
  void normalize() {
    std::map<Monomial, typename F::Elem, MonomialCmp> acc{MonomialCmp{order_}};
    for (auto& t : terms_) {
      auto it = acc.find(t.mono);
      if (it == acc.end()) acc.emplace(t.mono, t.coeff);
      else it->second = field_.add(it->second, t.coeff);
    }
    terms_.clear();
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!field_.is_zero(it->second)) terms_.push_back({it->second, it->first});
  }

  RingPtr ring_;
  F field_;
  TermOrder order_ = TermOrder::degrevlex;
  std::vector<Term<F>> terms_;
};

template <class F>
struct Ideal {
  RingPtr ring;
  F field;
  std::vector<Poly<F>> gens;

  /// Generators must be homogeneous of positive degree; zero generators are dropped.
  static Ideal make(RingPtr ring, F field, std::vector<Poly<F>> gens) {
    std::vector<Poly<F>> keep;
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(ring, g.ring());
      if (!g.is_homogeneous())
        throw error(errc::non_homogeneous, "generator is not homogeneous");
      if (g.degree() == 0)
        throw error(errc::non_homogeneous, "constant generator");
      keep.push_back(std::move(g));
    }
    return Ideal{std::move(ring), field, std::move(keep)};
  }

  bool all_monomial() const {
    for (const auto& g : gens)
      if (!g.is_monomial()) return false;
    return true;
  }
  int max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
  }
};

/// Dense square matrix over the coefficient field, row-major.
template <class F>
struct Matrix {
  int n = 0;
  std::vector<typename F::Elem> a;

  typename F::Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const typename F::Elem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

template <class F>
bool is_invertible(Matrix<F> m, const F& field) {
  int n = m.n;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!field.is_zero(m.at(row, col))) { pivot = row; break; }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
    auto inv = field.inv(m.at(col, col));
    for (int row = col + 1; row < n; ++row) {
      if (field.is_zero(m.at(row, col))) continue;
      auto factor = field.mul(m.at(row, col), inv);
      for (int j = col; j < n; ++j)
        m.at(row, j) = field.sub(m.at(row, j), field.mul(factor, m.at(col, j)));
    }
  }
  return true;
}

/// Ring automorphism x_i -> sum_j M[i][j] x_j applied to f.  M must be invertible.
template <class F>
Poly<F> apply_linear_change(const Poly<F>& f, const Matrix<F>& m) {
  const F& field = f.field();
  int n = f.ring()->nvars();
  if (m.n != n) throw error(errc::mismatched_rings, "matrix size does not match ring");
  if (!is_invertible(m, field)) throw error(errc::singular_matrix, "coordinate change is singular");

  std::vector<Poly<F>> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Term<F>> ts;
    for (int j = 0; j < n; ++j)
      if (!field.is_zero(m.at(i, j))) ts.push_back({m.at(i, j), Monomial::var(j, n)});
    images.emplace_back(f.ring(), field, f.order(), std::move(ts));
  }

  // memoized powers of the variable images
  std::vector<std::vector<Poly<F>>> pow(n);
  auto power = [&](int i, int e) -> const Poly<F>& {
    auto& ps = pow[i];
    if (ps.empty()) {
      std::vector<Term<F>> unit{{field.one(), Monomial::one(n)}};
      ps.emplace_back(f.ring(), field, f.order(), std::move(unit));
    }
    while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * images[i]);
    return ps[e];
  };

  Poly<F> out(f.ring(), field, f.order());
  for (const auto& t : f.terms()) {
    std::vector<Term<F>> unit{{t.coeff, Monomial::one(n)}};
    Poly<F> prod(f.ring(), field, f.order(), std::move(unit));
    for (int i = 0; i < n; ++i)
      if (t.mono[i] > 0) prod = prod * power(i, t.mono[i]);
    out = out + prod;
  }
  return out;
}

template <class F>
Ideal<F> apply_linear_change(const Ideal<F>& ideal, const Matrix<F>& m) {
  std::vector<Poly<F>> gens;
  gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens) gens.push_back(apply_linear_change(g, m));
  return Ideal<F>{ideal.ring, ideal.field, std::move(gens)};
}

/// Polynomial text: terms in stored order, "-" signs folded into the stream.
template <class F>
std::string poly_str(const Poly<F>& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c;
    bool negative = false;
    if constexpr (std::is_same_v<F, Rationals>) {
      Rat q = t.coeff;
      if (q < 0) { negative = true; q = -q; }
      c = q.get_str();
    } else {
      c = std::to_string(t.coeff);
    }
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    if (t.mono.is_one()) os << c;
    else if (c == "1") os << t.mono.str(names);
    else os << c << "*" << t.mono.str(names);
  }
  return os.str();
}

} // namespace cmreg
