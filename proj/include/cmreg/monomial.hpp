#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cmreg {

enum class TermOrder { degrevlex, lex };

/// Exponent vector over a fixed variable list x_1 > x_2 > ... > x_r (listed order).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_)
      if (x < 0) throw error(errc::internal, "negative exponent");
    deg_ = std::accumulate(e_.begin(), e_.end(), 0);
  }
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial var(int i, int nvars, int power = 1) {
    std::vector<int> e(nvars, 0);
    e[i] = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  /// largest variable index (0-based) with positive exponent; -1 for the unit monomial
  int max_index() const {
    for (int i = nvars() - 1; i >= 0; --i)
      if (e_[i] > 0) return i;
    return -1;
  }

  Monomial operator*(const Monomial& o) const {
    check(o);
    std::vector<int> r(e_);
    for (int i = 0; i < nvars(); ++i) r[i] += o.e_[i];
    return Monomial(std::move(r));
  }
  bool divides(const Monomial& o) const {
    check(o);
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  /// o / *this, defined when *this divides o
  Monomial divide_into(const Monomial& o) const {
    check(o);
    std::vector<int> r(o.e_);
    for (int i = 0; i < nvars(); ++i) {
      r[i] -= e_[i];
      if (r[i] < 0) throw error(errc::internal, "non-divisible quotient");
    }
    return Monomial(std::move(r));
  }
  Monomial lcm(const Monomial& o) const {
    check(o);
    std::vector<int> r(nvars());
    for (int i = 0; i < nvars(); ++i) r[i] = std::max(e_[i], o.e_[i]);
    return Monomial(std::move(r));
  }
  Monomial gcd(const Monomial& o) const {
    check(o);
    std::vector<int> r(nvars());
    for (int i = 0; i < nvars(); ++i) r[i] = std::min(e_[i], o.e_[i]);
    return Monomial(std::move(r));
  }
  bool coprime(const Monomial& o) const {
    check(o);
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }
  /// replace one factor x_i by x_j (the elementary Borel move when j < i)
  Monomial swap_var(int i, int j) const {
    std::vector<int> r(e_);
    if (r[i] <= 0) throw error(errc::internal, "variable not present");
    --r[i];
    ++r[j];
    return Monomial(std::move(r));
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  /// container ordering only; term-order comparisons go through cmp_monomials
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

  std::string str(const std::vector<std::string>& names) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
  }

private:
  void check(const Monomial& o) const {
    if (o.nvars() != nvars()) throw error(errc::mismatched_rings, "monomials from different rings");
  }
  std::vector<int> e_;
  int deg_ = 0;
};

/// Total order on monomials: negative when u < v, zero when equal, positive when u > v.
/// degrevlex: higher total degree wins; on a tie the last nonzero entry of
/// exp(u) - exp(v) negative makes u larger.  lex: the first nonzero entry of
/// exp(u) - exp(v) positive makes u larger.
inline int cmp_monomials(const Monomial& u, const Monomial& v, TermOrder order) {
  if (u.nvars() != v.nvars()) throw error(errc::mismatched_rings, "monomials from different rings");
  int n = u.nvars();
  if (order == TermOrder::degrevlex) {
    if (u.degree() != v.degree()) return u.degree() < v.degree() ? -1 : 1;
    for (int i = n - 1; i >= 0; --i) {
      int d = u[i] - v[i];
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }
  for (int i = 0; i < n; ++i) {
    int d = u[i] - v[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

struct MonomialCmp {
  TermOrder order = TermOrder::degrevlex;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_monomials(a, b, order) < 0;
  }
};

/// All monomials of the given total degree, in descending lex order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> cur(nvars, 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == nvars - 1) {
      cur[i] = rem;
      out.emplace_back(cur);
      cur[i] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, rem - e);
    }
    cur[i] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial(std::vector<int>{}));
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

} // namespace cmreg
