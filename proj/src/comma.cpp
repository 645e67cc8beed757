#include "rcn/comma.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rcn/primes.hpp"

namespace rcn {

namespace {

const double kLog2Of3 = std::log2(3.0);

double log2_of(std::uint64_t p) { return std::log2(static_cast<double>(p)); }

// round half away from zero; half-integer arguments cannot occur for prime inputs
long round_half_away(double x) { return std::llround(x); }

void require_comma_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p))
    throw std::domain_error("no prime comma defined for 2, 3, or composites (p = " +
                            std::to_string(p) + ")");
}

PrimeComma finish(CandidateComma c, Algorithm algo) {
  PrimeComma out;
  static_cast<CandidateComma&>(out) = std::move(c);
  out.algorithm = algo;
  out.label = label_of_fifth_index(-out.b);
  return out;
}

// Signed octave size of 2^a 3^b p without building the fraction.
double log2_candidate(std::uint64_t p, int a, int b) {
  return a + b * kLog2Of3 + log2_of(p);
}

}  // namespace

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::DR: return "DR";
    case Algorithm::SAG: return "SAG";
    case Algorithm::KG2: return "KG2";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  std::string t;
  for (char ch : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (t == "dr") return Algorithm::DR;
  if (t == "sag") return Algorithm::SAG;
  if (t == "kg2") return Algorithm::KG2;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "' (expected dr, sag or kg2)");
}

int best_two_exponent(std::uint64_t p, int b) {
  return static_cast<int>(round_half_away(-log2_of(p) - b * kLog2Of3));
}

CandidateComma candidate_comma(std::uint64_t p, int b) {
  if (p != 1) require_comma_prime(p);
  CandidateComma c;
  c.p = p;
  c.b = b;
  c.a = best_two_exponent(p, b);
  const double size = log2_candidate(p, c.a, c.b);
  c.cents = 1200.0 * size;
  c.ao = std::fabs(size);
  c.lcy = std::abs(c.a) + std::abs(c.b) * kLog2Of3 + log2_of(p);
  c.cm = c.ao * c.lcy;
  Monzo m = Monzo::prime_power(2, c.a) * Monzo::prime_power(3, c.b);
  if (p != 1) m = m * Monzo::prime_power(p, 1);
  c.value = monzo_to_rational(m);
  return c;
}

DrRange dr_range(std::uint64_t p) {
  require_comma_prime(p);
  const double log3_p = log2_of(p) / kLog2Of3;
  const double b_mid = -log3_p / 2.0;
  DrRange r;
  r.sr_min = static_cast<int>(round_half_away(b_mid - 5.5));
  r.sr_max = static_cast<int>(round_half_away(b_mid + 5.5));
  r.pr_min = static_cast<int>(std::ceil(-log3_p - 1.0 / (2.0 * kLog2Of3)));
  r.b_min = std::min(r.sr_min, r.pr_min);
  r.b_max = std::max(r.sr_max, 0);
  return r;
}

PrimeComma dr_comma(std::uint64_t p) {
  const DrRange range = dr_range(p);
  bool have_best = false;
  int best_b = 0;
  double best_cm = 0.0, best_lcy = 0.0;
  for (int b = range.b_min; b <= range.b_max; ++b) {
    const int a = best_two_exponent(p, b);
    const double ao = std::fabs(log2_candidate(p, a, b));
    const double lcy = std::abs(a) + std::abs(b) * kLog2Of3 + log2_of(p);
    const double cm = ao * lcy;
    bool better;
    if (!have_best) {
      better = true;
    } else if (cm < best_cm - 1e-12) {
      better = true;
    } else if (cm > best_cm + 1e-12) {
      better = false;
    } else if (lcy < best_lcy - 1e-12) {
      // near-tie on CM: prefer the simpler comma, then the larger b
      better = true;
    } else if (lcy > best_lcy + 1e-12) {
      better = false;
    } else {
      better = b > best_b;
    }
    if (better) {
      have_best = true;
      best_b = b;
      best_cm = cm;
      best_lcy = lcy;
    }
  }
  return finish(candidate_comma(p, best_b), Algorithm::DR);
}

double sag_cents_limit() { return 600.0 * (19.0 * kLog2Of3 - 30.0); }

PrimeComma sag_comma(std::uint64_t p) {
  require_comma_prime(p);
  const double limit = sag_cents_limit();
  CandidateComma zero = candidate_comma(p, 0);
  if (std::fabs(zero.cents) < limit) return finish(std::move(zero), Algorithm::SAG);
  for (int k = 1; k <= 6; ++k) {
    CandidateComma up = candidate_comma(p, k);
    CandidateComma down = candidate_comma(p, -k);
    const bool up_ok = std::fabs(up.cents) < limit;
    const bool down_ok = std::fabs(down.cents) < limit;
    if (up_ok && down_ok) {
      // both signs acceptable: take the smaller comma
      return finish(std::fabs(up.cents) <= std::fabs(down.cents) ? std::move(up) : std::move(down),
                    Algorithm::SAG);
    }
    if (up_ok) return finish(std::move(up), Algorithm::SAG);
    if (down_ok) return finish(std::move(down), Algorithm::SAG);
  }
  // unreachable: a 13-note Pythagorean net leaves no gap wider than 2 * 56.8 cents
  throw std::runtime_error("no SAG comma for p = " + std::to_string(p));
}

int sag_band_b(double c) {
  const double T = sag_cents_limit();
  const double cD = 1200.0 * (2.0 * kLog2Of3 - 3.0);   // 9/8
  const double cEb = 1200.0 * (5.0 - 3.0 * kLog2Of3);  // 32/27
  const double cF = 1200.0 * (2.0 - kLog2Of3);         // 4/3
  const double cG = 1200.0 * (kLog2Of3 - 1.0);         // 3/2
  const double cA = 1200.0 * (3.0 * kLog2Of3 - 4.0);   // 27/16
  const double cBb = 1200.0 * (4.0 - 2.0 * kLog2Of3);  // 16/9
  struct Band {
    double upper;
    int b;
  };
  const Band bands[] = {
      {T, 0},        {cD - T, 5},  {cD + T, -2}, {cEb + T, 3},   {cF - T, -4},
      {cF + T, 1},   {600.0, 6},   {cG - T, -6}, {cG + T, -1},   {cA - T, 4},
      {cBb - T, -3}, {cBb + T, 2}, {1200.0 - T, -5}, {1200.0, 0},
  };
  for (const Band& band : bands)
    if (c < band.upper) return band.b;
  throw std::invalid_argument("sag_band_b: cents must lie in [0, 1200)");
}

int kg2_band_b(double c) {
  struct Band {
    double upper;
    int b;
  };
  // Table of 50- and 100-cent ranges around the 12-EDO degrees.
  static constexpr Band bands[] = {
      {50, 0},   {150, 5},  {250, -2}, {350, 3},   {450, -4}, {550, 1},  {600, -6},
      {650, 6},  {750, -1}, {850, 4},  {950, -3},  {1050, 2}, {1150, -5}, {1200, 0},
  };
  for (const Band& band : bands)
    if (c < band.upper) return band.b;
  throw std::invalid_argument("kg2_band_b: cents must lie in [0, 1200)");
}

PrimeComma kg2_comma(std::uint64_t p) {
  require_comma_prime(p);
  double c = std::fmod(1200.0 * log2_of(p), 1200.0);
  if (c < 0) c += 1200.0;
  return finish(candidate_comma(p, kg2_band_b(c)), Algorithm::KG2);
}

PrimeComma prime_comma(std::uint64_t p, Algorithm algo) {
  switch (algo) {
    case Algorithm::DR: return dr_comma(p);
    case Algorithm::SAG: return sag_comma(p);
    case Algorithm::KG2: return kg2_comma(p);
  }
  throw std::logic_error("prime_comma: bad algorithm");
}

Monzo rough5_comma_monzo(const Monzo& rough, Algorithm algo) {
  if (!rough.is_rough5())
    throw std::domain_error("comma part must not contain 2 or 3");
  Monzo out;
  for (const auto& [p, e] : rough.exponents()) {
    const PrimeComma c = prime_comma(p, algo);
    const Monzo one = Monzo::prime_power(2, c.a) * Monzo::prime_power(3, c.b) *
                      Monzo::prime_power(p, 1);
    out = out * one.pow(e);
  }
  return out;
}

Rational rough5_comma_value(const Monzo& rough, Algorithm algo) {
  return monzo_to_rational(rough5_comma_monzo(rough, algo));
}

Rational rational_comma_value(const BigInt& x, const BigInt& y, Algorithm algo) {
  if (x < 1 || y < 1)
    throw std::domain_error("rational comma parts must be positive integers");
  Monzo mx = factorize(x), my = factorize(y);
  if (!mx.is_rough5() || !my.is_rough5())
    throw std::domain_error("comma part must not contain 2 or 3");
  return rough5_comma_value(mx / my, algo);
}

DivergenceMetrics divergence_metrics(std::uint64_t p, Algorithm algo) {
  const PrimeComma c = prime_comma(p, algo);
  return DivergenceMetrics{-c.b / log2_of(p), c.cents / log2_of(p)};
}

}  // namespace rcn
