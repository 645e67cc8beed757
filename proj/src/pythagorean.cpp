#include "rcn/pythagorean.hpp"

#include <stdexcept>

namespace rcn {

namespace {

constexpr char kFifthLetters[] = {'F', 'C', 'G', 'D', 'A', 'E', 'B'};

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int floor_mod(int a, int b) { return a - floor_div(a, b) * b; }

}  // namespace

int natural_fifth_index(char letter) {
  for (int i = 0; i < 7; ++i)
    if (kFifthLetters[i] == letter) return i - 1;
  throw std::invalid_argument(std::string("note letter must be A..G, got '") + letter + "'");
}

int fifth_index(const NoteLabel& l) {
  return natural_fifth_index(l.letter) + 7 * l.sharps + 12 * l.pyth_commas;
}

NoteLabel label_of_fifth_index(int k) {
  NoteLabel l;
  l.letter = kFifthLetters[floor_mod(k + 1, 7)];
  l.sharps = floor_div(k + 1, 7);
  l.pyth_commas = 0;
  return l;
}

int octave4_two_exponent(const NoteLabel& l) {
  // 2-exponents of the octave-4 naturals (Table 1: F=4/3, C=1/1, G=3/2, ...),
  // shifted by -11 per apotome 2^-11 3^7 and -19 per Pythagorean comma 2^-19 3^12.
  static constexpr int kNatural2Exp[] = {2, 0, -1, -3, -4, -6, -7};
  const int idx = natural_fifth_index(l.letter) + 1;
  return kNatural2Exp[idx] - 11 * l.sharps - 19 * l.pyth_commas;
}

Rational octave4_frequency(const NoteLabel& l) {
  Monzo m = Monzo::prime_power(2, octave4_two_exponent(l)) *
            Monzo::prime_power(3, fifth_index(l));
  return monzo_to_rational(m);
}

Rational rational_from_pyth_note(const PythNote& n) {
  Monzo m = Monzo::prime_power(2, octave4_two_exponent(n.label) + (n.octave - 4)) *
            Monzo::prime_power(3, fifth_index(n.label));
  return monzo_to_rational(m);
}

PythNote pyth_note_from_monzo(const Monzo& m) {
  if (!m.is_3limit())
    throw std::domain_error("pyth_note_from_rational: not 3-limit; use the RCN codec");
  const int a = m.exponent(2);
  const int b = m.exponent(3);
  PythNote n;
  n.label = label_of_fifth_index(b);
  n.octave = 4 + (a - octave4_two_exponent(n.label));
  return n;
}

PythNote pyth_note_from_rational(const Rational& r) {
  return pyth_note_from_monzo(rational_to_monzo(r));
}

NoteLabel normalize_pyth_commas(const NoteLabel& l, int window_lo, int window_hi) {
  if (window_hi - window_lo != 11)
    throw std::invalid_argument("normalize_pyth_commas: window must span exactly 12 fifth indices");
  const int total = fifth_index(l);
  const int in_window = window_lo + floor_mod(total - window_lo, 12);
  NoteLabel out = label_of_fifth_index(in_window);
  out.pyth_commas = (total - in_window) / 12;
  return out;
}

PythNote respell(const PythNote& n, int window_lo, int window_hi) {
  const int a = octave4_two_exponent(n.label) + (n.octave - 4);
  PythNote out;
  out.label = normalize_pyth_commas(n.label, window_lo, window_hi);
  out.octave = 4 + (a - octave4_two_exponent(out.label));
  return out;
}

NoteLabel simplify_remote_label(const NoteLabel& l) {
  int letter_part = natural_fifth_index(l.letter) + 7 * l.sharps;
  int commas = l.pyth_commas;
  while (letter_part > 10) {  // beyond A#
    letter_part -= 12;
    ++commas;
  }
  while (letter_part < -6) {  // below Gb
    letter_part += 12;
    --commas;
  }
  NoteLabel out = label_of_fifth_index(letter_part);
  out.pyth_commas = commas;
  return out;
}

}  // namespace rcn
