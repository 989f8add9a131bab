#pragma once

#include <vector>

#include "arith.hpp"

namespace cmreg {

/// Dense univariate polynomial with exact rational coefficients, lowest degree first.
/// The zero polynomial is the empty coefficient vector; degree() of zero is -1.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& a) { return RatPoly(std::vector<Rat>{a}); }
  static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& operator[](std::size_t i) const { return c_[i]; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& lc() const { return c_.back(); }

  RatPoly operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
  }
  RatPoly operator-(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return RatPoly(std::move(r));
  }
  RatPoly operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
  }
  RatPoly operator*(const Rat& a) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= a;
    return RatPoly(std::move(r));
  }
  RatPoly operator/(const Rat& a) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x /= a;
    return RatPoly(std::move(r));
  }
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  Rat eval(const Rat& t) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
  }
  Rat eval(long n) const { return eval(Rat(n)); }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// C(P, k) = P(P-1)...(P-k+1)/k! expanded symbolically; C(P, 0) = 1.
inline RatPoly binomial_poly(const RatPoly& p, long k) {
  if (k < 0) return RatPoly();
  RatPoly r = RatPoly::constant(Rat(1));
  for (long i = 0; i < k; ++i) r = r * (p - RatPoly::constant(Rat(i)));
  return r / Rat(factorial(k));
}

} // namespace cmreg
