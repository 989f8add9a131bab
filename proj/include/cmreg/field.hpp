#pragma once

#include <cstdint>

#include "arith.hpp"

namespace cmreg {

/// Runtime description of a coefficient field: characteristic 0 means the rationals,
/// a prime p means Z/p.
struct FieldDesc {
  unsigned long characteristic = 0;
  bool operator==(const FieldDesc& o) const { return characteristic == o.characteristic; }
};

struct Rationals {
  using Elem = Rat;

  unsigned long characteristic() const { return 0; }
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long n) const { return Rat(n); }
  Elem from_int(const Int& n) const { return Rat(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw error(errc::internal, "division by zero");
    return Rat(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

struct PrimeField {
  using Elem = unsigned long;

  unsigned long p = 2;

  PrimeField() = default;
  explicit PrimeField(unsigned long p_) : p(p_) {
    if (!is_prime(p_)) throw error(errc::usage, "characteristic must be 0 or a prime");
  }

  unsigned long characteristic() const { return p; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<Elem>(r);
  }
  Elem from_int(const Int& n) const {
    Int r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return r.get_ui();
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw error(errc::internal, "division by zero");
    // extended Euclid
    long t = 0, nt = 1;
    long r = static_cast<long>(p), nr = static_cast<long>(a);
    while (nr != 0) {
      long q = r / nr;
      long tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<long>(p);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
};

} // namespace cmreg
