#include "rcn/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rcn {

namespace {

void require_positive(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (num <= 0 || den < 0) throw std::domain_error("Rational: value must be positive");
}

}  // namespace

Rational::Rational(long n) : q_(n) {
  if (n <= 0) throw std::domain_error("Rational: value must be positive");
}

Rational::Rational(const BigInt& n) : q_(n) {
  if (n <= 0) throw std::domain_error("Rational: value must be positive");
}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  require_positive(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: expected num or num/den, got '" + text + "'");
  }
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::reciprocal() const {
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(long k) const {
  if (k == 0) return Rational();
  const bool invert = k < 0;
  const unsigned long e = invert ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
  Rational out{BigInt(num), BigInt(den)};
  return invert ? out.reciprocal() : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rcn
