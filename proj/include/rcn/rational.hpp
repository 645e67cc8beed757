#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace rcn {

using BigInt = mpz_class;

/// A strictly positive rational number kept in lowest terms.
class Rational {
 public:
  Rational() : q_(1) {}
  explicit Rational(long n);
  explicit Rational(const BigInt& n);
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  /// Accepts "num" or "num/den" with positive decimal integers.
  static Rational parse(const std::string& text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  double to_double() const { return q_.get_d(); }
  std::string str() const;

  Rational reciprocal() const;
  Rational pow(long k) const;

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ / b.q_));
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

}  // namespace rcn
