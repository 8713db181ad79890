#include "doctest.h"

#include <set>

#include "tritave/notation.hpp"
#include "tritave/scales.hpp"

using namespace tritave;

TEST_CASE("parse_note examples") {
  CHECK(parse_note("A'") == FreqRatio{-1, 1});
  CHECK(parse_note("D") == kUnison);
  CHECK(parse_note("Bb'^^") == FreqRatio{7, -2});
  CHECK(parse_note("A") == from_fraction(3, 4));
  CHECK(parse_note("G#") == from_fraction(729, 512));
  CHECK(parse_note("F,") == from_fraction(16, 27));
  CHECK(parse_note("Bvv") == from_fraction(27, 32) / power(kTritave, 2));
}

TEST_CASE("parse_note errors") {
  CHECK_THROWS_AS(parse_note(""), ParseError);
  CHECK_THROWS_AS(parse_note("H"), ParseError);
  CHECK_THROWS_AS(parse_note("A^v"), ParseError);
  CHECK_THROWS_AS(parse_note("Av^"), ParseError);
  CHECK_THROWS_AS(parse_note("A#"), ParseError);
  CHECK_THROWS_AS(parse_note("a"), ParseError);
  CHECK_THROWS_AS(parse_note("D "), ParseError);
}

TEST_CASE("Pyth-2-only names are rejected in Pyth-3") {
  CHECK_THROWS_WITH_AS(parse_note("G'"), doctest::Contains("Pyth-2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_note("C,"), doctest::Contains("Pyth-2"), ParseError);
}

TEST_CASE("name_of names the fundamental domain in scale-degree order") {
  const ScaleSystem& p3 = standard_system(SystemId::Pyth3);
  for (std::int64_t d = -9; d <= 9; ++d) {
    const FreqRatio r = just_note_at_degree(d, p3);
    CHECK(name_of(r).to_string() == kPyth3BaseNames[static_cast<std::size_t>(d + 9)]);
    CHECK(name_of(r).tritave_shift == 0);
  }
  CHECK_THROWS_AS(name_of({10, 0}), NotInSystemError);
  CHECK_THROWS_AS(name_of({-10, 6}), NotInSystemError);
}

TEST_CASE("parse and print are inverse for every name with |shift| <= 4") {
  int cases = 0;
  for (std::int64_t base = -9; base <= 9; ++base) {
    for (std::int64_t shift = -4; shift <= 4; ++shift) {
      const NoteName n{base, shift};
      const std::string text = n.to_string();
      CHECK(parse_note_name(text) == n);
      const FreqRatio r = to_ratio(n);
      CHECK(name_of(r) == n);
      CHECK(parse_note(text) == r);
      ++cases;
    }
  }
  CHECK(cases == 19 * 9);
}

TEST_CASE("Pyth-2 names") {
  CHECK(pyth2_name_of(kUnison) == "D");
  CHECK(pyth2_name_of(from_fraction(729, 512)) == "G#");
  CHECK(pyth2_name_of(FreqRatio{-10, 6}) == "G#,");
  CHECK(pyth2_name_of(from_fraction(3, 2)) == "A'");
  CHECK(parse_pyth2_note("C'") == from_fraction(16, 9));
  CHECK(parse_pyth2_note("E,,") == from_fraction(9, 32));
  CHECK_THROWS_AS(pyth2_name_of(FreqRatio{9, -6}), NotInSystemError);
  for (std::int64_t v = -5; v <= 6; ++v) {
    for (std::int64_t oct = -3; oct <= 3; ++oct) {
      const FreqRatio r = multiply(period_reduce({0, v}, standard_system(SystemId::Pyth2)).class_rep,
                                   power(kOctave, oct));
      CHECK(parse_pyth2_note(pyth2_name_of(r)) == r);
    }
  }
}

TEST_CASE("unicode rendering is display only") {
  CHECK(to_unicode("Bb'^^") == "B♭′^^");
  CHECK(to_unicode("F#v") == "F♯⌄");
  CHECK(to_unicode("D") == "D");
}

TEST_CASE("keyboard labels") {
  const auto labels = keyboard_labels();
  REQUIRE(labels.size() == 88);
  CHECK(labels.front().midi == 21);
  CHECK(labels.front().name.to_string() == "Bvv");
  CHECK(labels.front().scale_degree == -41);
  CHECK(labels[62 - 21].name.to_string() == "D");
  CHECK(labels[62 - 21].scale_degree == 0);
  CHECK(labels.back().name.to_string() == "Bb'^^");
  CHECK(labels.back().scale_degree == 46);
  std::set<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    names.insert(labels[i].name.to_string());
    if (i > 0) CHECK(labels[i].scale_degree == labels[i - 1].scale_degree + 1);
  }
  CHECK(names.size() == 88);
  CHECK(labels[0].color == KeyColor::White);  // A0
  CHECK(labels[1].color == KeyColor::Black);  // Bb0
  CHECK_THROWS(keyboard_labels(-1, 10));
  CHECK_THROWS(keyboard_labels(50, 40));
}

TEST_CASE("tritave-periodic keyboard colours") {
  CHECK(key_color_by_harmonic_degree(0) == KeyColor::White);
  CHECK(key_color_by_harmonic_degree(-7) == KeyColor::Black);
  CHECK(key_color_by_harmonic_degree(5) == KeyColor::White);
  CHECK_THROWS(key_color_by_harmonic_degree(10));
  int white = 0;
  for (std::int64_t h = -9; h <= 9; ++h) white += key_color_by_harmonic_degree(h) == KeyColor::White;
  CHECK(white == 11);
}
