#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rcn/monzo.hpp"
#include "rcn/primes.hpp"

using namespace rcn;

TEST_CASE("factorize basics") {
  CHECK(factorize(BigInt(1)).empty());

  Monzo m80 = factorize(BigInt(80));
  CHECK(m80.exponent(2) == 4);
  CHECK(m80.exponent(5) == 1);
  CHECK(m80.exponents().size() == 2);

  Monzo m81 = factorize(BigInt(81));
  CHECK(m81.exponent(3) == 4);
  CHECK(m81.exponents().size() == 1);

  Monzo syntonic = m80 / m81;
  CHECK(syntonic.exponent(2) == 4);
  CHECK(syntonic.exponent(3) == -4);
  CHECK(syntonic.exponent(5) == 1);

  Monzo m = factorize(BigInt(531441));
  CHECK(m.exponent(3) == 12);
  CHECK(m.exponents().size() == 1);

  CHECK_THROWS_AS(factorize(BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(factorize(BigInt(-6)), std::invalid_argument);
}

TEST_CASE("monzo keys iterate ascending") {
  Monzo m = factorize(BigInt(2 * 3 * 25 * 49 * 11));
  std::uint64_t prev = 0;
  for (const auto& [p, e] : m.exponents()) {
    CHECK(p > prev);
    CHECK(e != 0);
    prev = p;
  }
}

TEST_CASE("monzo <-> rational") {
  CHECK(monzo_to_rational(Monzo{}) == Rational(1, 1));

  Monzo m;
  m.set_exponent(2, -1);
  m.set_exponent(11, -3);
  m.set_exponent(13, 5);
  CHECK(monzo_to_rational(m) == Rational(371293, 2662));
  CHECK(rational_to_monzo(Rational(371293, 2662)) == m);

  Monzo syntonic;
  syntonic.set_exponent(2, 4);
  syntonic.set_exponent(3, -4);
  syntonic.set_exponent(5, 1);
  CHECK(monzo_to_rational(syntonic) == Rational(80, 81));
}

TEST_CASE("rational arithmetic is exact and reduced") {
  Rational r = Rational(9, 8) * Rational(80, 81) * Rational(63, 64);
  CHECK(r == Rational(35, 32));
  CHECK(r.str() == "35/32");

  CHECK(Rational(20, 21) * Rational(1, 1) == Rational(20, 21));
  CHECK(Rational(20, 21) / (Rational(80, 81) / Rational(63, 64)) == Rational(243, 256));

  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2, 3).pow(0) == Rational(1, 1));
  CHECK(Rational(4, 2).str() == "2/1");

  CHECK_THROWS_AS(Rational(0, 5), std::domain_error);
  CHECK_THROWS_AS(Rational(-2, 5), std::domain_error);
  CHECK_THROWS_AS(Rational(2, 0), std::domain_error);
  CHECK(Rational::parse("80/81") == Rational(80, 81));
  CHECK(Rational::parse("7") == Rational(7, 1));
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("cents") {
  CHECK(cents(Rational(1, 1)) == doctest::Approx(0.0));
  CHECK(cents(Rational(2, 1)) == doctest::Approx(1200.0).epsilon(1e-12));
  CHECK(cents(Rational(531441, 524288)) == doctest::Approx(23.46).epsilon(0.0005));
  CHECK(cents(Rational(80, 81)) == doctest::Approx(-21.51).epsilon(0.0005));
}

TEST_CASE("prime utilities") {
  CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(0).empty());
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
  CHECK(is_prime(375787));
  CHECK(!is_prime(375786));
  CHECK(!is_prime(1));
  CHECK(!is_prime(0));
  CHECK(is_prime(2));
  CHECK(is_prime((1ULL << 61) - 1));  // Mersenne
  CHECK(!is_prime(3215031751ULL));    // strong pseudoprime to bases 2,3,5,7
  CHECK(next_prime(375779) == 375787);
  CHECK(next_prime(1) == 2);
  CHECK(next_prime(2) == 3);
}

TEST_CASE("is_rough5") {
  CHECK(is_rough5(1));
  CHECK(is_rough5(35));
  CHECK(!is_rough5(18));
  CHECK(is_rough5(5));
  CHECK(is_rough5(25));
  CHECK(!is_rough5(2));
  CHECK(!is_rough5(3));
  CHECK_THROWS_AS(is_rough5(0), std::invalid_argument);
}

TEST_CASE("round trip: rational -> monzo -> rational over random values") {
  std::mt19937_64 rng(20170305);
  std::uniform_int_distribution<long> dist(1, 999'999'999);
  for (int i = 0; i < 10'000; ++i) {
    Rational r(dist(rng), dist(rng));
    CHECK(monzo_to_rational(rational_to_monzo(r)) == r);
  }
}

TEST_CASE("monzo of a product is the sum of monzos") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dist(1, 1'000'000);
  for (int i = 0; i < 2'000; ++i) {
    Rational x(dist(rng), dist(rng)), y(dist(rng), dist(rng));
    CHECK(rational_to_monzo(x * y) == rational_to_monzo(x) * rational_to_monzo(y));
  }
}

TEST_CASE("results stay reduced") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(1, 100'000);
  for (int i = 0; i < 2'000; ++i) {
    Rational x(dist(rng), dist(rng)), y(dist(rng), dist(rng));
    Rational prod = x * y;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), prod.num().get_mpz_t(), prod.den().get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("cents is additive") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dist(1, 999'999'999);
  for (int i = 0; i < 2'000; ++i) {
    Rational x(dist(rng), dist(rng)), y(dist(rng), dist(rng));
    CHECK(std::fabs(cents(x * y) - (cents(x) + cents(y))) < 1e-9);
  }
}
