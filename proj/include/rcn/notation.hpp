#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rcn/comma.hpp"

namespace rcn {

enum class PrintStyle { Canonical, Shorthand5, Tilde };

/// One notated note L[x/y]_z, or a pitch class when octave is absent.
/// The comma parts are 5-rough and coprime; x = y = 1 is the identity comma.
struct RcnPitch {
  NoteLabel label;
  BigInt comma_num = 1;
  BigInt comma_den = 1;
  std::optional<int> octave = 4;
  friend bool operator==(const RcnPitch& a, const RcnPitch& b) {
    return a.label == b.label && a.comma_num == b.comma_num && a.comma_den == b.comma_den &&
           a.octave == b.octave;
  }
  friend bool operator!=(const RcnPitch& a, const RcnPitch& b) { return !(a == b); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Validates 5-roughness, reduces x/y to lowest terms.
RcnPitch make_pitch(NoteLabel label, BigInt comma_num, BigInt comma_den,
                    std::optional<int> octave);

std::string label_string(const NoteLabel& l);

/// Forward map: collect the prime factors >= 5 of r into the comma, divide
/// their comma values out, and notate the 3-limit remainder.
RcnPitch notate(const Rational& r, Algorithm algo);

/// Pitch-class variant for lattice work; the monzo's 2-exponent is ignored
/// for labeling and the result carries no octave.
RcnPitch notate_pitch_class(const Monzo& pitch_class, Algorithm algo);

/// Reverse map; requires an octave.
Rational frequency(const RcnPitch& pitch, Algorithm algo);

/// Notation in algorithm `from` re-notated under `to`, via the frequency.
RcnPitch translate(const RcnPitch& pitch, Algorithm from, Algorithm to);

std::string print(const RcnPitch& pitch, PrintStyle style = PrintStyle::Canonical);

RcnPitch parse(std::string_view text);              // octave required
RcnPitch parse_pitch_class(std::string_view text);  // octave optional

}  // namespace rcn
