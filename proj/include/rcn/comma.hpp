#pragma once

#include <cstdint>
#include <string_view>

#include "rcn/pythagorean.hpp"

namespace rcn {

/// Selector for the prime-comma assignment algorithm.
enum class Algorithm { DR, SAG, KG2 };

const char* algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view text);  // case-insensitive "dr"/"sag"/"kg2"

/// One candidate comma 2^a 3^b p with its size and complexity metrics.
/// ao and lcy are in octaves, cents is the signed size, cm = ao * lcy.
struct CandidateComma {
  std::uint64_t p = 1;
  int a = 0;
  int b = 0;
  Rational value;
  double cents = 0.0;
  double ao = 0.0;
  double lcy = 0.0;
  double cm = 0.0;
};

/// The chosen comma for a prime, plus the label of the prime's pitch class.
/// The label's fifth index is -b: the paired Pythagorean 2^-a 3^-b names the prime.
struct PrimeComma : CandidateComma {
  Algorithm algorithm = Algorithm::DR;
  NoteLabel label;
};

/// The integer a minimizing |log2(2^a 3^b p)|.
int best_two_exponent(std::uint64_t p, int b);

/// Candidate comma for (p, b) with a = best_two_exponent(p, b).
/// p = 1 is accepted as the dummy probe series used for scans.
CandidateComma candidate_comma(std::uint64_t p, int b);

/// DR search range: the union of the secondary range SR (12 integers nearest
/// b_mid = -log3(p)/2) and the primary range PR = [pr_min, 0] (candidates that
/// keep p as the reduced numerator).
struct DrRange {
  int b_min, b_max;    // union actually searched
  int sr_min, sr_max;  // secondary range
  int pr_min;          // primary range is [pr_min, 0]
};
DrRange dr_range(std::uint64_t p);

PrimeComma dr_comma(std::uint64_t p);
PrimeComma sag_comma(std::uint64_t p);
PrimeComma kg2_comma(std::uint64_t p);
PrimeComma prime_comma(std::uint64_t p, Algorithm algo);

/// SAG acceptance threshold in cents: 600*(19*log2(3) - 30), the size of
/// (3^19 / 2^30)^(1/2), approximately 68.5725.
double sag_cents_limit();

/// Band lookups on the octave-reduced pitch of p, cents in [0, 1200).
/// Bands are lower-inclusive. sag_band_b mirrors the procedural search exactly.
int sag_band_b(double cents_in_octave);
int kg2_band_b(double cents_in_octave);

/// Value of the rational comma [x/y] for 5-rough x, y >= 1.
Rational rational_comma_value(const BigInt& x, const BigInt& y, Algorithm algo);

/// Product of prime commas [p]^e over a 5-rough monzo.
Rational rough5_comma_value(const Monzo& rough, Algorithm algo);

/// Same product in factored form, built exactly from each comma's (a, b, p).
Monzo rough5_comma_monzo(const Monzo& rough, Algorithm algo);

/// Per-octave divergence rates: epo3 = -b / log2(p) (label-offset orientation),
/// cspo = cents([p]) / log2(p).
struct DivergenceMetrics {
  double epo3;
  double cspo;
};
DivergenceMetrics divergence_metrics(std::uint64_t p, Algorithm algo);

}  // namespace rcn
