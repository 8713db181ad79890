#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "tritave/harmony.hpp"
#include "tritave/notation.hpp"

using namespace tritave;

namespace {

Chord chord(std::string_view a, std::string_view b, std::string_view c) {
  const std::array<FreqRatio, 3> notes{parse_note(a), parse_note(b), parse_note(c)};
  return Chord::from_notes(notes);
}

Chord456 chord456(std::string_view a, std::string_view b, std::string_view c) {
  const std::array<FreqRatio, 3> notes{parse_pyth2_note(a), parse_pyth2_note(b), parse_pyth2_note(c)};
  return Chord456::from_pyth2_notes(notes);
}

Chord chord_of(FreqRatio a, FreqRatio b, FreqRatio c) {
  const std::array<FreqRatio, 3> notes{a, b, c};
  return Chord::from_notes(notes);
}

Chord transpose(const Chord& c, FreqRatio by) { return chord_of(c.notes[0] * by, c.notes[1] * by, c.notes[2] * by); }

// a:b:c by plain integer arithmetic on fractions relative to the lowest note.
std::array<std::int64_t, 3> ratio_oracle(std::array<std::array<std::int64_t, 2>, 3> f) {
  std::int64_t den = 1;
  for (const auto& x : f) den = std::lcm(den, x[1]);
  std::array<std::int64_t, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = f[i][0] * (den / f[i][1]);
  const std::int64_t g = std::gcd(out[0], std::gcd(out[1], out[2]));
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace

TEST_CASE("classification") {
  CHECK(classify(chord("A", "E", "A'")) == ChordQuality::Major);
  CHECK(classify(chord("A", "D", "A'")) == ChordQuality::Minor);
  CHECK(classify(chord("A", "D", "G")) == ChordQuality::Diminished);
  CHECK(classify(chord("A", "E", "B'")) == ChordQuality::Augmented);
  CHECK(classify(chord("A", "C", "E")) == ChordQuality::Other);
  CHECK(classify(chord456("C", "E", "G")) == ChordQuality::Major);
  CHECK(classify(chord456("A", "C", "E")) == ChordQuality::Minor);
  CHECK(classify(chord456("C", "E", "G#")) == ChordQuality::Augmented);
  CHECK(classify(chord456("B", "D", "F")) == ChordQuality::Diminished);
  CHECK(classify(chord456("C", "F", "A'")) == ChordQuality::Other);
}

TEST_CASE("chords need three distinct notes") {
  const std::array<FreqRatio, 2> two{kUnison, kFifth};
  CHECK_THROWS_AS(Chord::from_notes(two), ChordError);
  const std::array<FreqRatio, 3> dup{kUnison, kUnison, kFifth};
  CHECK_THROWS_AS(Chord::from_notes(dup), ChordError);
  // Input order does not matter.
  CHECK(chord("A'", "A", "E") == chord("A", "E", "A'"));
}

TEST_CASE("inversions") {
  const Chord tonic = chord("A", "E", "A'");
  CHECK(invert(tonic, Inversion::First) == chord("E", "A'", "A^"));
  CHECK(invert(invert(invert(tonic, Inversion::First), Inversion::First), Inversion::First) ==
        chord("A^", "E^", "A'^"));
  CHECK(classify(invert(tonic, Inversion::First)) == ChordQuality::Minor);
  CHECK(classify(invert(invert(tonic, Inversion::First), Inversion::First)) == ChordQuality::Augmented);

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> exp(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const FreqRatio root{exp(rng), exp(rng)};
    const Chord c = transpose(tonic, root / tonic.lowest());
    CHECK(invert(invert(c, Inversion::First), Inversion::Second) == c);
    const Chord three = invert(invert(invert(c, Inversion::First), Inversion::First), Inversion::First);
    CHECK(three == transpose(c, kTritave));
  }

  const Chord456 c = chord456("C", "E", "G");
  CHECK(invert(c, Inversion::First) == chord456("E", "G", "C'"));
  CHECK(invert(c, Inversion::Second) == chord456("G,", "C", "E"));
}

TEST_CASE("circle shifts") {
  const Chord tonic = chord("A", "E", "A'");
  CHECK(shift_in_circle(tonic, 0) == tonic);
  const Chord dom = shift_in_circle(tonic, 1);
  CHECK(dom.notes[0] == parse_pyth2_note("A'"));
  CHECK(same_mod_tritave(dom, chord("A", "D", "A'")));
  CHECK(same_mod_tritave(shift_in_circle(tonic, -1), chord("A", "E", "B'")));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> exp(-20, 20);
  for (int i = 0; i < 100; ++i) {
    const Chord c = transpose(tonic, FreqRatio{exp(rng), exp(rng)});
    const std::int64_t k = exp(rng);
    CHECK(shift_in_circle(shift_in_circle(c, k), -k) == c);
  }
  CHECK(shift_in_circle(chord456("C", "E", "G"), 1) == chord456("G", "B'", "D'"));
}

TEST_CASE("domain reduction") {
  const FreqRatio a = parse_note("A");
  const std::array<FreqRatio, 3> dominant{parse_pyth2_note("A'"), parse_pyth2_note("E'"), parse_pyth2_note("A''")};
  CHECK(reduce_chord_to_domain(Chord::from_notes(dominant), a) == chord("A", "D", "A'"));
  const std::array<FreqRatio, 3> sub{parse_pyth2_note("A,"), parse_pyth2_note("E,"), parse_pyth2_note("A")};
  CHECK(reduce_chord_to_domain(Chord::from_notes(sub), a) == chord("A", "E", "B'"));
  CHECK(reduce_chord_to_domain(chord("A", "E", "A'"), a) == chord("A", "E", "A'"));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> exp(-25, 25);
  for (int i = 0; i < 200; ++i) {
    std::array<FreqRatio, 3> n{};
    std::set<std::int64_t> us;
    for (auto& x : n) {
      do {
        x = FreqRatio{exp(rng), exp(rng)};
      } while (!us.insert(x.u).second);
    }
    const Chord c = Chord::from_notes(n);
    const FreqRatio root{exp(rng), exp(rng)};
    const Chord r = reduce_chord_to_domain(c, root);
    CHECK(reduce_chord_to_domain(r, root) == r);
    CHECK(same_mod_tritave(r, c));
    for (const FreqRatio x : r.notes) {
      CHECK(compare_pitch(x, root) != std::strong_ordering::less);
      CHECK(compare_pitch(x, root * kTritave) == std::strong_ordering::less);
    }
  }
}

TEST_CASE("reduced dominant equals the P-image modulo the tritave") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> exp(-30, 30);
  for (int i = 0; i < 200; ++i) {
    const Triad234 t{{exp(rng), exp(rng)}, TriadQuality::Major};
    const Chord tonic = Chord::from_triad(t);
    const Chord dom = reduce_chord_to_domain(shift_in_circle(tonic, 1), tonic.lowest());
    CHECK(same_mod_tritave(dom, Chord::from_triad(apply_plr(t, PlrMove::P))));
  }
}

TEST_CASE("P moves change the middle note by a whole tone") {
  const Triad234 t{parse_note("A"), TriadQuality::Major};
  const auto before = t.notes();
  const auto after = apply_plr(t, PlrMove::P).notes();
  CHECK(before[1] / after[1] == kWholeTone);
}

TEST_CASE("basic and cadence sequences") {
  const Chord tonic = chord("A", "E", "A'");
  const auto seq = basic_sequence(tonic);
  REQUIRE(seq.size() == 4);
  CHECK(seq[0] == tonic);
  CHECK(seq[1] == chord("A", "E", "B'"));
  CHECK(seq[2] == chord("A", "D", "A'"));
  CHECK(seq[3] == tonic);

  const auto cad = cadence_sequence(tonic);
  REQUIRE(cad.size() == 4);
  CHECK(cad.front() == tonic);
  CHECK(cad.back() == tonic);
  CHECK(cad[1] == seq[2]);
  // Second dominant by exponent arithmetic: notes times 4, tritave-reduced above A.
  const FreqRatio a = parse_note("A");
  std::array<FreqRatio, 3> expected{};
  for (std::size_t i = 0; i < 3; ++i) {
    FreqRatio x = tonic.notes[i] * power(kOctave, 2);
    x.v = a.v;
    while (compare_pitch(x, a) == std::strong_ordering::less) x = x * kTritave;
    while (compare_pitch(x, a * kTritave) != std::strong_ordering::less) x = x / kTritave;
    expected[i] = x;
  }
  CHECK(cad[2] == Chord::from_notes(expected));
  CHECK(cad[2] == chord("D", "A'", "G,^"));
  std::set<std::int64_t> t_classes, d_classes;
  for (const auto x : tonic.notes) t_classes.insert(note_class_234(x));
  for (const auto x : cad[2].notes) d_classes.insert(note_class_234(x));
  int differing = 0;
  for (const auto x : d_classes) differing += t_classes.contains(x) ? 0 : 1;
  CHECK(differing >= 1);
  CHECK(differing <= 3);

  CHECK_THROWS_WITH_AS(basic_sequence(chord("A", "D", "A'")), "basic sequence defined for major tonic", ChordError);
  CHECK_THROWS_AS(cadence_sequence(chord("A", "D", "A'")), ChordError);
}

TEST_CASE("sequences are transposition covariant") {
  const Chord tonic = chord("A", "E", "A'");
  const auto base = basic_sequence(tonic);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> exp(-15, 15);
  for (int i = 0; i < 50; ++i) {
    const FreqRatio by{exp(rng), exp(rng)};
    const auto moved = basic_sequence(transpose(tonic, by));
    for (std::size_t k = 0; k < 4; ++k) CHECK(moved[k] == transpose(base[k], by));
  }
}

TEST_CASE("4:5:6 sequences") {
  const Chord456 tonic = chord456("C", "E", "G");
  const auto seq = basic_sequence(tonic);
  REQUIRE(seq.size() == 4);
  CHECK(seq[1] == chord456("C", "F", "A'"));
  CHECK(seq[2] == chord456("B", "D", "G"));
  CHECK(seq[3] == tonic);
  const auto cad = cadence_sequence(tonic);
  CHECK(cad[1] == seq[2]);
  CHECK(cad[2] == chord456("D", "F#", "A'"));
  CHECK(seq[1].to_string() == "C-F-A'");
}

TEST_CASE("triad recognition") {
  const auto t = as_triad(chord("A", "E", "A'"));
  REQUIRE(t.has_value());
  CHECK(*t == Triad234{parse_note("A"), TriadQuality::Major});
  CHECK_FALSE(as_triad(chord("A", "E", "B'")).has_value());
  const auto u = as_triad(chord456("E", "G", "C'"));
  REQUIRE(u.has_value());
  CHECK(*u == Triad456{0, TriadQuality::Major});
  CHECK_FALSE(as_triad(chord456("C", "E", "G#")).has_value());
}

TEST_CASE("equivalences") {
  CHECK(same_mod_tritave(chord("A", "E", "A'"), chord("E", "A'", "A^")));
  CHECK_FALSE(same_mod_tritave(chord("A", "E", "A'"), chord("A", "D", "A'")));
  const Chord c = chord("A", "E", "A'");
  const Chord shifted = chord_of(c.notes[0] * kComma, c.notes[1], c.notes[2] * kTritave);
  CHECK_FALSE(same_mod_tritave(c, shifted));
  CHECK(same_mod_tritave_and_comma(c, shifted));
}

TEST_CASE("2:3:4 purity (four rows)") {
  struct Row {
    std::array<std::string_view, 3> notes;
    std::array<std::int64_t, 3> ratio;
    std::int64_t d_b, d_o;
    std::string_view base, overtone;
  };
  const Row rows[] = {{{"A", "E", "A'"}, {2, 3, 4}, 2, 3, "Ev", "A'^"},
                      {{"A", "D", "A'"}, {3, 4, 6}, 3, 2, "Av", "D^"},
                      {{"A", "E", "B'"}, {4, 6, 9}, 4, 4, "B'vv", "A^^"},
                      {{"A", "D", "G"}, {9, 12, 16}, 9, 9, "Avv", "G^^"}};
  for (const Row& r : rows) {
    const Chord c = chord(r.notes[0], r.notes[1], r.notes[2]);
    const PurityReport p = purity(c);
    CHECK(p.ratio == r.ratio);
    CHECK(p.d_base == r.d_b);
    CHECK(p.d_overtone == r.d_o);
    CHECK(p.d_base == p.ratio[0]);
    CHECK(p.d_overtone == std::lcm(p.ratio[0], std::lcm(p.ratio[1], p.ratio[2])) / p.ratio[2]);
    REQUIRE(p.base_note.has_value());
    CHECK(name_of(*p.base_note).to_string() == r.base);
    CHECK(name_of(*p.overtone_note).to_string() == r.overtone);
    // Every chord note is an integer multiple of the base note.
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(to_fraction(c.notes[i] / *p.base_note).numerator == p.ratio[i]);
      CHECK(to_fraction(c.notes[i] / *p.base_note).denominator == 1);
    }
  }
}

TEST_CASE("4:5:6 purity (eight rows)") {
  struct Row {
    std::array<std::string_view, 3> notes;
    std::array<std::array<std::int64_t, 2>, 3> just;  // independent just ratios to the lowest note
    std::int64_t d_b, d_o;
  };
  const Row rows[] = {
      {{"C", "E", "G"}, {{{1, 1}, {5, 4}, {3, 2}}}, 4, 10},
      {{"E", "G", "C'"}, {{{1, 1}, {6, 5}, {8, 5}}}, 5, 15},
      {{"G", "C'", "E'"}, {{{1, 1}, {4, 3}, {5, 3}}}, 3, 12},
      {{"A", "C", "E"}, {{{1, 1}, {6, 5}, {3, 2}}}, 10, 4},
      {{"C", "E", "A'"}, {{{1, 1}, {5, 4}, {5, 3}}}, 12, 3},
      {{"E", "A'", "C'"}, {{{1, 1}, {4, 3}, {8, 5}}}, 15, 5},
      {{"C", "E", "G#"}, {{{1, 1}, {5, 4}, {25, 16}}}, 16, 16},
      {{"B", "D", "F"}, {{{1, 1}, {6, 5}, {36, 25}}}, 25, 25}};
  for (const Row& r : rows) {
    const PurityReport p = purity(chord456(r.notes[0], r.notes[1], r.notes[2]));
    CHECK(p.ratio == ratio_oracle(r.just));
    CHECK(p.d_base == r.d_b);
    CHECK(p.d_overtone == r.d_o);
    CHECK_FALSE(p.base_note.has_value());
  }
}

TEST_CASE("2:3:4 chords are purer than 4:5:6 minor chords") {
  for (const auto& c : {chord("A", "E", "A'"), chord("A", "D", "A'"), chord("A", "E", "B'")}) {
    const PurityReport p = purity(c);
    CHECK(p.d_base <= 4);
    CHECK(p.d_overtone <= 4);
  }
  for (const auto& c : {chord456("A", "C", "E"), chord456("C", "E", "A'"), chord456("E", "A'", "C'")}) {
    CHECK(purity(c).d_base >= 10);
  }
}

TEST_CASE("purity input checks") {
  CHECK_THROWS_AS(purity(chord456("C", "D", "E")), ChordError);
  CHECK_THROWS_AS(purity_of_ratios({{{1, 1}, {0, 1}, {2, 1}}}), ChordError);
}
