#include "rcn/monzo.hpp"

#include <cmath>
#include <stdexcept>

#include "rcn/primes.hpp"

namespace rcn {

namespace {

constexpr std::uint64_t kMaxTrialBound = 10'000'000;

// Growing prime cache for trial division; per thread, so factorize needs no locks
// and memoization stays observably invisible.
const std::vector<std::uint64_t>& trial_primes(std::uint64_t bound) {
  thread_local std::vector<std::uint64_t> cache;
  thread_local std::uint64_t cached_bound = 0;
  if (cached_bound < bound) {
    cache = primes_up_to(bound);
    cached_bound = bound;
  }
  return cache;
}

}  // namespace

Monzo Monzo::prime_power(std::uint64_t p, int e) {
  Monzo m;
  m.set_exponent(p, e);
  return m;
}

int Monzo::exponent(std::uint64_t p) const {
  auto it = e_.find(p);
  return it == e_.end() ? 0 : it->second;
}

void Monzo::set_exponent(std::uint64_t p, int e) {
  if (e == 0) {
    e_.erase(p);
    return;
  }
  if (!is_prime(p)) throw std::invalid_argument("Monzo: key must be prime");
  e_[p] = e;
}

bool Monzo::is_3limit() const {
  return e_.empty() || e_.rbegin()->first <= 3;
}

bool Monzo::is_rough5() const {
  return e_.empty() || e_.begin()->first >= 5;
}

Monzo Monzo::part_2_3() const {
  Monzo out;
  for (const auto& [p, e] : e_)
    if (p <= 3) out.e_[p] = e;
  return out;
}

Monzo Monzo::part_rough5() const {
  Monzo out;
  for (const auto& [p, e] : e_)
    if (p >= 5) out.e_[p] = e;
  return out;
}

double Monzo::log2_value() const {
  double sum = 0.0;
  for (const auto& [p, e] : e_) sum += e * std::log2(static_cast<double>(p));
  return sum;
}

Monzo Monzo::pow(int k) const {
  Monzo out;
  if (k == 0) return out;
  for (const auto& [p, e] : e_) out.e_[p] = e * k;
  return out;
}

Monzo Monzo::reciprocal() const { return pow(-1); }

Monzo operator*(const Monzo& a, const Monzo& b) {
  Monzo out = a;
  for (const auto& [p, e] : b.e_) {
    int combined = out.exponent(p) + e;
    if (combined == 0)
      out.e_.erase(p);
    else
      out.e_[p] = combined;
  }
  return out;
}

Monzo operator/(const Monzo& a, const Monzo& b) { return a * b.reciprocal(); }

Monzo factorize(const BigInt& n_in) {
  if (n_in < 1) throw std::invalid_argument("factorize: n must be a positive integer");
  Monzo m;
  BigInt n = n_in;
  if (n == 1) return m;

  // If the cofactor fits in 64 bits and is prime, we are done immediately.
  auto prime_cofactor = [&]() -> std::uint64_t {
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 63) return 0;
    std::uint64_t v = mpz_get_ui(n.get_mpz_t());
    return v > 1 && is_prime(v) ? v : 0;
  };

  std::uint64_t bound = 1u << 12;
  std::size_t next_index = 0;
  while (n != 1) {
    if (std::uint64_t v = prime_cofactor()) {
      m.set_exponent(v, m.exponent(v) + 1);
      return m;
    }
    const auto& primes = trial_primes(bound);
    for (; next_index < primes.size(); ++next_index) {
      const std::uint64_t p = primes[next_index];
      if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) {
        // remaining cofactor is prime and below p^2 <= 10^14
        m.set_exponent(mpz_get_ui(n.get_mpz_t()), 1);
        return m;
      }
      if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        int e = 0;
        do {
          mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
          ++e;
        } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
        m.set_exponent(p, e);
        if (n == 1) return m;
        if (std::uint64_t v = prime_cofactor()) {
          m.set_exponent(v, m.exponent(v) + 1);
          return m;
        }
      }
    }
    if (bound >= kMaxTrialBound)
      throw std::domain_error("factorize: cofactor exceeds desk-scale factoring range");
    bound = std::min<std::uint64_t>(bound * 32, kMaxTrialBound);
  }
  return m;
}

Monzo factorize(std::uint64_t n) {
  BigInt big;
  mpz_set_ui(big.get_mpz_t(), n);
  return factorize(big);
}

Monzo rational_to_monzo(const Rational& r) {
  return factorize(r.num()) / factorize(r.den());
}

Rational monzo_to_rational(const Monzo& m) {
  BigInt num = 1, den = 1, power;
  for (const auto& [p, e] : m.exponents()) {
    mpz_ui_pow_ui(power.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e));
    if (e > 0)
      num *= power;
    else
      den *= power;
  }
  return Rational(num, den);
}

double cents(const Monzo& m) { return 1200.0 * m.log2_value(); }

double cents(const Rational& r) { return cents(rational_to_monzo(r)); }

}  // namespace rcn
