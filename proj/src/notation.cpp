#include "rcn/notation.hpp"

#include <cctype>
#include <cstdlib>

namespace rcn {

namespace {

// exponent k with n == 5^k, if such k exists (k = 0 for n == 1)
std::optional<int> power_of_5(const BigInt& n) {
  BigInt v = n;
  int k = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), 5)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 5);
    ++k;
  }
  if (v == 1) return k;
  return std::nullopt;
}

bool rough5_big(const BigInt& n) {
  return !mpz_divisible_ui_p(n.get_mpz_t(), 2) && !mpz_divisible_ui_p(n.get_mpz_t(), 3);
}

RcnPitch notate_monzo(const Monzo& m, Algorithm algo, bool keep_octave) {
  const Monzo rough = m.part_rough5();
  BigInt x = 1, y = 1, power;
  for (const auto& [p, e] : rough.exponents()) {
    mpz_ui_pow_ui(power.get_mpz_t(), p,
                  static_cast<unsigned long>(e < 0 ? -static_cast<long>(e) : e));
    if (e > 0)
      x *= power;
    else
      y *= power;
  }
  const Monzo pyth = m / rough5_comma_monzo(rough, algo);
  RcnPitch out;
  if (keep_octave) {
    const PythNote note = pyth_note_from_monzo(pyth);
    out.label = note.label;
    out.octave = note.octave;
  } else {
    out.label = label_of_fifth_index(pyth.exponent(3));
    out.octave = std::nullopt;
  }
  out.comma_num = x;
  out.comma_den = y;
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("notation parse error at " + std::to_string(position) + ": " + message),
      position_(position) {}

RcnPitch make_pitch(NoteLabel label, BigInt comma_num, BigInt comma_den,
                    std::optional<int> octave) {
  if (comma_num < 1 || comma_den < 1)
    throw std::domain_error("comma parts must be positive integers");
  if (!rough5_big(comma_num) || !rough5_big(comma_den))
    throw std::domain_error("comma part must not contain 2 or 3");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), comma_num.get_mpz_t(), comma_den.get_mpz_t());
  RcnPitch out;
  out.label = label;
  out.comma_num = comma_num / g;
  out.comma_den = comma_den / g;
  out.octave = octave;
  return out;
}

std::string label_string(const NoteLabel& l) {
  std::string out(1, l.letter);
  out.append(static_cast<std::size_t>(std::abs(l.sharps)), l.sharps >= 0 ? '#' : 'b');
  out.append(static_cast<std::size_t>(std::abs(l.pyth_commas)), l.pyth_commas >= 0 ? 'p' : 'd');
  return out;
}

RcnPitch notate(const Rational& r, Algorithm algo) {
  return notate_monzo(rational_to_monzo(r), algo, /*keep_octave=*/true);
}

RcnPitch notate_pitch_class(const Monzo& pitch_class, Algorithm algo) {
  return notate_monzo(pitch_class, algo, /*keep_octave=*/false);
}

Rational frequency(const RcnPitch& pitch, Algorithm algo) {
  if (!pitch.octave)
    throw std::domain_error("pitch class has no octave; frequency undefined");
  const Rational pyth = rational_from_pyth_note(PythNote{pitch.label, *pitch.octave});
  return pyth * rational_comma_value(pitch.comma_num, pitch.comma_den, algo);
}

RcnPitch translate(const RcnPitch& pitch, Algorithm from, Algorithm to) {
  return notate(frequency(pitch, from), to);
}

std::string print(const RcnPitch& pitch, PrintStyle style) {
  std::string out = label_string(pitch.label);
  const bool identity = pitch.comma_num == 1 && pitch.comma_den == 1;
  if (!identity) {
    std::string comma;
    if (style == PrintStyle::Shorthand5) {
      if (auto k = power_of_5(pitch.comma_num); k && *k >= 1 && pitch.comma_den == 1)
        comma = std::string(static_cast<std::size_t>(*k / 2), '"') +
                std::string(static_cast<std::size_t>(*k % 2), '\'');
      else if (auto kd = power_of_5(pitch.comma_den); kd && *kd >= 1 && pitch.comma_num == 1)
        comma = std::string(static_cast<std::size_t>(*kd), '.');
    } else if (style == PrintStyle::Tilde) {
      if (pitch.comma_den == 1) comma = "~" + pitch.comma_num.get_str();
    }
    if (comma.empty()) {
      comma = "[" + pitch.comma_num.get_str();
      if (pitch.comma_den != 1) comma += "/" + pitch.comma_den.get_str();
      comma += "]";
    }
    out += comma;
  }
  if (pitch.octave) out += "_" + std::to_string(*pitch.octave);
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }
  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  BigInt read_uint(const char* what) {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) fail(std::string("expected ") + what);
    return BigInt(std::string(s.substr(start, pos - start)));
  }

  int read_octave() {
    std::size_t start = pos;
    if (peek() == '-' || peek() == '+') ++pos;
    std::size_t digits = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == digits) {
      pos = start;
      fail("expected octave number");
    }
    return std::atoi(std::string(s.substr(start, pos - start)).c_str());
  }
};

RcnPitch parse_impl(std::string_view text, bool octave_required) {
  Parser ps{text};
  if (ps.done()) ps.fail("empty notation");

  NoteLabel label;
  label.letter = ps.peek();
  if (label.letter < 'A' || label.letter > 'G') ps.fail("unknown note letter");
  ++ps.pos;

  if (ps.peek() == '#') {
    while (ps.peek() == '#') ++label.sharps, ++ps.pos;
    if (ps.peek() == 'b') ps.fail("mixed # and b accidentals");
  } else if (ps.peek() == 'b') {
    while (ps.peek() == 'b') --label.sharps, ++ps.pos;
    if (ps.peek() == '#') ps.fail("mixed # and b accidentals");
  }
  if (ps.peek() == 'p') {
    while (ps.peek() == 'p') ++label.pyth_commas, ++ps.pos;
    if (ps.peek() == 'd') ps.fail("mixed p and d marks");
  } else if (ps.peek() == 'd') {
    while (ps.peek() == 'd') --label.pyth_commas, ++ps.pos;
    if (ps.peek() == 'p') ps.fail("mixed p and d marks");
  }

  BigInt x = 1, y = 1;
  if (ps.peek() == '\'' || ps.peek() == '"') {
    int k = 0;
    while (ps.peek() == '\'' || ps.peek() == '"') k += ps.peek() == '"' ? 2 : 1, ++ps.pos;
    if (ps.peek() == '.') ps.fail("mixed otonal and utonal 5-marks");
    mpz_ui_pow_ui(x.get_mpz_t(), 5, static_cast<unsigned long>(k));
  } else if (ps.peek() == '.') {
    int k = 0;
    while (ps.peek() == '.') ++k, ++ps.pos;
    if (ps.peek() == '\'' || ps.peek() == '"') ps.fail("mixed otonal and utonal 5-marks");
    mpz_ui_pow_ui(y.get_mpz_t(), 5, static_cast<unsigned long>(k));
  }

  bool tilde = false;
  if (ps.peek() == '~') {
    ++ps.pos;
    std::size_t at = ps.pos;
    BigInt u = ps.read_uint("integer comma after ~");
    if (u == 0) throw ParseError("comma part must be positive", at);
    if (!rough5_big(u)) throw ParseError("comma part must be 5-rough (no factor 2 or 3)", at);
    x *= u;
    tilde = true;
  } else if (ps.peek() == '[') {
    ++ps.pos;
    std::size_t at = ps.pos;
    BigInt u = ps.read_uint("comma numerator");
    if (u == 0) throw ParseError("comma part must be positive", at);
    if (!rough5_big(u)) throw ParseError("comma part must be 5-rough (no factor 2 or 3)", at);
    x *= u;
    if (ps.peek() == '/') {
      ++ps.pos;
      at = ps.pos;
      BigInt v = ps.read_uint("comma denominator");
      if (v == 0) throw ParseError("comma part must be positive", at);
      if (!rough5_big(v)) throw ParseError("comma part must be 5-rough (no factor 2 or 3)", at);
      y *= v;
    }
    if (ps.peek() != ']') ps.fail("expected ']'");
    ++ps.pos;
  }

  std::optional<int> octave;
  if (ps.peek() == '_') {
    ++ps.pos;
    octave = ps.read_octave();
  } else if (!ps.done() && (std::isdigit(static_cast<unsigned char>(ps.peek())) ||
                            ps.peek() == '-' || ps.peek() == '+')) {
    if (tilde) ps.fail("'_' must separate a ~comma from the octave");
    octave = ps.read_octave();
  }
  if (!octave && octave_required) ps.fail("missing octave");
  if (!ps.done()) ps.fail("trailing characters");

  try {
    return make_pitch(label, x, y, octave);
  } catch (const std::domain_error& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

RcnPitch parse(std::string_view text) { return parse_impl(text, true); }

RcnPitch parse_pitch_class(std::string_view text) { return parse_impl(text, false); }

}  // namespace rcn
