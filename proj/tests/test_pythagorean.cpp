#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_data.hpp"
#include "rcn/notation.hpp"
#include "rcn/pythagorean.hpp"

using namespace rcn;

TEST_CASE("label of fifth index") {
  CHECK(label_of_fifth_index(0) == NoteLabel{'C', 0, 0});
  CHECK(label_of_fifth_index(12) == NoteLabel{'B', 1, 0});
  CHECK(label_of_fifth_index(-2) == NoteLabel{'B', -1, 0});
  CHECK(label_of_fifth_index(6) == NoteLabel{'F', 1, 0});
  CHECK(label_of_fifth_index(7) == NoteLabel{'C', 1, 0});
  CHECK(label_of_fifth_index(-5) == NoteLabel{'D', -1, 0});
  CHECK(label_of_fifth_index(24) == NoteLabel{'A', 3, 0});
}

TEST_CASE("fifth index of label") {
  CHECK(fifth_index(NoteLabel{'F', 1, 0}) == 6);
  CHECK(fifth_index(NoteLabel{'C', 0, 1}) == 12);  // Cp
  CHECK(fifth_index(NoteLabel{'C', 0, 0}) == 0);
  CHECK(fifth_index(NoteLabel{'B', 0, -1}) == -7);  // Bd
  CHECK_THROWS_AS(natural_fifth_index('H'), std::invalid_argument);
}

TEST_CASE("bijection over fifth indices") {
  for (int k = -100; k <= 100; ++k) CHECK(fifth_index(label_of_fifth_index(k)) == k);
}

TEST_CASE("note from rational") {
  CHECK(pyth_note_from_rational(Rational(3, 2)) == PythNote{{'G', 0, 0}, 4});
  CHECK(pyth_note_from_rational(Rational(2187, 2048)) == PythNote{{'C', 1, 0}, 4});
  CHECK(pyth_note_from_rational(Rational(531441, 524288)) == PythNote{{'B', 1, 0}, 3});
  CHECK_THROWS_AS(pyth_note_from_rational(Rational(5, 4)), std::domain_error);
}

TEST_CASE("rational from note") {
  CHECK(rational_from_pyth_note({{'E', 0, 0}, 4}) == Rational(81, 64));
  CHECK(rational_from_pyth_note({{'C', 0, 0}, 5}) == Rational(2, 1));
  CHECK(rational_from_pyth_note({{'G', -1, 0}, 4}) == Rational(1024, 729));
}

TEST_CASE("octave-4 golden table") {
  for (const auto& row : golden::kOctave4) {
    const RcnPitch pitch = parse(row.note);
    const Rational freq = rational_from_pyth_note({pitch.label, *pitch.octave});
    CHECK(freq.str() == row.fraction);
    CHECK(cents(freq) == doctest::Approx(row.cents).epsilon(0).scale(1).epsilon(0.01 / 1200));
  }
}

TEST_CASE("round trip over 2^a 3^b") {
  for (int a = -40; a <= 40; ++a)
    for (int b = -25; b <= 25; ++b) {
      Monzo m = Monzo::prime_power(2, a) * Monzo::prime_power(3, b);
      const Rational r = monzo_to_rational(m);
      CHECK(rational_from_pyth_note(pyth_note_from_rational(r)) == r);
    }
}

TEST_CASE("apotome law") {
  const Rational apotome(2187, 2048);
  for (int k = -15; k <= 15; ++k)
    for (int z : {-1, 3, 4, 7}) {
      NoteLabel l = label_of_fifth_index(k);
      NoteLabel sharped = l;
      ++sharped.sharps;
      CHECK(rational_from_pyth_note({sharped, z}) / rational_from_pyth_note({l, z}) == apotome);
    }
}

TEST_CASE("Pythagorean-comma law") {
  const Rational pyth_comma(531441, 524288);
  for (int k = -10; k <= 10; ++k)
    for (int c : {-2, 0, 3}) {
      NoteLabel l = label_of_fifth_index(k);
      l.pyth_commas = c;
      NoteLabel raised = l;
      ++raised.pyth_commas;
      CHECK(rational_from_pyth_note({raised, 4}) / rational_from_pyth_note({l, 4}) == pyth_comma);
    }
}

TEST_CASE("normalize into the default window") {
  CHECK(normalize_pyth_commas(NoteLabel{'B', 1, 0}) == NoteLabel{'C', 0, 1});   // B# -> Cp
  CHECK(normalize_pyth_commas(NoteLabel{'C', -1, 0}) == NoteLabel{'B', 0, -1}); // Cb -> Bd
  CHECK(normalize_pyth_commas(NoteLabel{'G', 0, 0}) == NoteLabel{'G', 0, 0});
  CHECK(normalize_pyth_commas(NoteLabel{'A', 2, 0}, -4, 7) == NoteLabel{'B', 0, 1});
  CHECK_THROWS_AS(normalize_pyth_commas(NoteLabel{'C', 0, 0}, 0, 5), std::invalid_argument);
}

TEST_CASE("normalize preserves the pitch class") {
  for (int k = -30; k <= 30; ++k) {
    NoteLabel l = label_of_fifth_index(k);
    CHECK(fifth_index(normalize_pyth_commas(l)) == k);
  }
}

TEST_CASE("respell recomputes the octave digit") {
  CHECK(respell({{'B', 1, 0}, 3}) == PythNote{{'C', 0, 1}, 4});   // B#3 = Cp4
  CHECK(respell({{'C', -1, 0}, 5}) == PythNote{{'B', 0, -1}, 4}); // Cb5 = Bd4
  for (int k = -20; k <= 20; ++k) {
    const PythNote n{label_of_fifth_index(k), 4};
    CHECK(rational_from_pyth_note(respell(n)) == rational_from_pyth_note(n));
  }
}

TEST_CASE("remote labels fold into p/d marks") {
  CHECK(simplify_remote_label(label_of_fifth_index(12)) == NoteLabel{'C', 0, 1});   // Cp
  CHECK(simplify_remote_label(label_of_fifth_index(17)) == NoteLabel{'B', 0, 1});   // Bp
  CHECK(simplify_remote_label(label_of_fifth_index(19)) == NoteLabel{'C', 1, 1});   // C#p
  CHECK(simplify_remote_label(label_of_fifth_index(20)) == NoteLabel{'G', 1, 1});   // G#p
  CHECK(simplify_remote_label(label_of_fifth_index(24)) == NoteLabel{'C', 0, 2});   // Cpp
  CHECK(simplify_remote_label(label_of_fifth_index(9)) == label_of_fifth_index(9)); // D# stays
  for (int k = -40; k <= 40; ++k)
    CHECK(fifth_index(simplify_remote_label(label_of_fifth_index(k))) == k);
}
