#pragma once

#include <cstdint>
#include <map>

#include "rcn/rational.hpp"

namespace rcn {

/// A positive rational in factored form: sparse map prime -> non-zero exponent.
/// Keys iterate in ascending order; no key ever maps to zero.
class Monzo {
 public:
  Monzo() = default;
  static Monzo prime_power(std::uint64_t p, int e);

  int exponent(std::uint64_t p) const;
  /// Sets (or erases, when e == 0) one exponent. p must be prime.
  void set_exponent(std::uint64_t p, int e);
  const std::map<std::uint64_t, int>& exponents() const { return e_; }
  bool empty() const { return e_.empty(); }

  bool is_3limit() const;   // all primes in {2, 3}
  bool is_rough5() const;   // all primes >= 5
  Monzo part_2_3() const;   // the 2,3 component
  Monzo part_rough5() const;

  double log2_value() const;
  Monzo pow(int k) const;
  Monzo reciprocal() const;

  friend Monzo operator*(const Monzo& a, const Monzo& b);
  friend Monzo operator/(const Monzo& a, const Monzo& b);
  friend bool operator==(const Monzo& a, const Monzo& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monzo& a, const Monzo& b) { return !(a == b); }

 private:
  std::map<std::uint64_t, int> e_;
};

/// Prime factorization of n >= 1. Trial division by sieved primes with a
/// deterministic primality test on the cofactor; built for desk-scale inputs,
/// not cryptographic ones (factors beyond ~10^14 in a >64-bit cofactor are rejected).
Monzo factorize(const BigInt& n);
Monzo factorize(std::uint64_t n);

Monzo rational_to_monzo(const Rational& r);
Rational monzo_to_rational(const Monzo& m);

/// Interval size in cents, 1200 * log2(value), evaluated from the exponents.
double cents(const Monzo& m);
double cents(const Rational& r);

}  // namespace rcn
