#pragma once

#include "rcn/monzo.hpp"

namespace rcn {

/// A modified-SPN pitch class label: letter plus accidental counts.
/// Sharps and flats never cancel here; distinct triples are distinct notations.
struct NoteLabel {
  char letter = 'C';   // 'A'..'G'
  int sharps = 0;      // > 0 for '#' marks, < 0 for 'b' marks
  int pyth_commas = 0; // > 0 for 'p' marks, < 0 for 'd' marks
  friend bool operator==(const NoteLabel&, const NoteLabel&) = default;
};

struct PythNote {
  NoteLabel label;
  int octave = 4;
  friend bool operator==(const PythNote&, const PythNote&) = default;
};

/// Fifth index of a natural letter: F,C,G,D,A,E,B -> -1..5.
int natural_fifth_index(char letter);

/// Fifth index (3-exponent of the pitch class): natural + 7*sharps + 12*pyth_commas.
int fifth_index(const NoteLabel& l);

/// The plain label (pyth_commas = 0) whose fifth index is k.
NoteLabel label_of_fifth_index(int k);

/// 2-exponent a of the label's octave-4 representative 2^a 3^fifth_index.
/// The octave digit is anchored to the natural letter, so accidentals and
/// p/d marks shift this representative without renumbering the octave.
int octave4_two_exponent(const NoteLabel& l);

Rational octave4_frequency(const NoteLabel& l);

Rational rational_from_pyth_note(const PythNote& n);

/// Inverse of rational_from_pyth_note; rejects anything with a prime factor >= 5.
PythNote pyth_note_from_rational(const Rational& r);
PythNote pyth_note_from_monzo(const Monzo& m);

/// Pitch-equal relabel whose (letter, sharps) part has fifth index inside
/// [window_lo, window_hi] (must span exactly 12), absorbing the rest into p/d marks.
NoteLabel normalize_pyth_commas(const NoteLabel& l, int window_lo = -5, int window_hi = 6);

/// Frequency-preserving rewrite of a note via normalize_pyth_commas; the octave
/// digit is recomputed from the anchoring rule, so e.g. B#3 becomes Cp4.
PythNote respell(const PythNote& n, int window_lo = -5, int window_hi = 6);

/// Folds remote letters into p/d shorthand: double-and-worse accidentals and the
/// awkward B#/E#/Cb/Fb region move by whole Pythagorean commas until the
/// (letter, sharps) part sits in Gb..A#. A### becomes Cpp, F### becomes G#p.
NoteLabel simplify_remote_label(const NoteLabel& l);

}  // namespace rcn
