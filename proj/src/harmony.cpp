#include "tritave/harmony.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "tritave/notation.hpp"
#include "tritave/scales.hpp"

namespace tritave {

namespace {

constexpr std::int64_t kOctaveSemitones = 12;
constexpr std::int64_t kFifthSemitones = 7;

bool pitch_less(FreqRatio a, FreqRatio b) { return compare_pitch(a, b) == std::strong_ordering::less; }

std::int64_t pc_of(std::int64_t semitone) { return ((semitone % 12) + 12) % 12; }

std::int64_t to_int64(const BigInt& n) {
  if (n > std::numeric_limits<std::int64_t>::max()) throw OverflowError("purity ratio exceeds 64 bits");
  return n.convert_to<std::int64_t>();
}

std::string joined(const std::array<std::string, 3>& parts) {
  return parts[0] + "-" + parts[1] + "-" + parts[2];
}

template <typename C>
void require_major(const C& tonic) {
  if (classify(tonic) != ChordQuality::Major) throw ChordError("basic sequence defined for major tonic");
}

}  // namespace

std::string_view to_string(ChordQuality quality) {
  switch (quality) {
    case ChordQuality::Major: return "Major";
    case ChordQuality::Minor: return "Minor";
    case ChordQuality::Augmented: return "Augmented";
    case ChordQuality::Diminished: return "Diminished";
    case ChordQuality::Other: return "Other";
  }
  return "Other";
}

Chord Chord::from_notes(std::span<const FreqRatio> notes) {
  if (notes.size() != 3) {
    throw ChordError("a chord needs exactly 3 notes, got " + std::to_string(notes.size()));
  }
  Chord c{{notes[0], notes[1], notes[2]}};
  std::sort(c.notes.begin(), c.notes.end(), pitch_less);
  if (c.notes[0] == c.notes[1] || c.notes[1] == c.notes[2]) throw ChordError("chord notes must be distinct");
  return c;
}

Chord Chord::from_triad(const Triad234& triad) {
  const auto notes = triad.notes();
  return from_notes(notes);
}

std::string Chord::to_string() const {
  return joined({name_of(notes[0]).to_string(), name_of(notes[1]).to_string(),
                 name_of(notes[2]).to_string()});
}

Chord456 Chord456::from_semitones(std::span<const std::int64_t> semitones) {
  if (semitones.size() != 3) {
    throw ChordError("a chord needs exactly 3 notes, got " + std::to_string(semitones.size()));
  }
  Chord456 c{{semitones[0], semitones[1], semitones[2]}};
  std::sort(c.semitones.begin(), c.semitones.end());
  if (c.semitones[0] == c.semitones[1] || c.semitones[1] == c.semitones[2]) {
    throw ChordError("chord notes must be distinct");
  }
  return c;
}

Chord456 Chord456::from_pyth2_notes(std::span<const FreqRatio> notes) {
  std::vector<std::int64_t> degrees;
  for (const FreqRatio n : notes) degrees.push_back(std::llround(cents(n).value / 100.0));
  return from_semitones(degrees);
}

std::string Chord456::to_string() const {
  // Pyth-2 spelling with octave marks relative to the D-centred window.
  std::array<std::string, 3> names;
  for (std::size_t i = 0; i < 3; ++i) {
    names[i] = pyth2_name_of(just_note_at_degree(semitones[i], standard_system(SystemId::Pyth2)));
  }
  return joined(names);
}

ChordQuality classify(const Chord& c) {
  const FreqRatio lower = c.notes[1] / c.notes[0];
  const FreqRatio upper = c.notes[2] / c.notes[1];
  if (lower == kFifth && upper == kFourth) return ChordQuality::Major;
  if (lower == kFourth && upper == kFifth) return ChordQuality::Minor;
  if (lower == kFifth && upper == kFifth) return ChordQuality::Augmented;
  if (lower == kFourth && upper == kFourth) return ChordQuality::Diminished;
  return ChordQuality::Other;
}

ChordQuality classify(const Chord456& c) {
  const std::int64_t lower = c.semitones[1] - c.semitones[0];
  const std::int64_t upper = c.semitones[2] - c.semitones[1];
  if (lower == 4 && upper == 3) return ChordQuality::Major;
  if (lower == 3 && upper == 4) return ChordQuality::Minor;
  if (lower == 4 && upper == 4) return ChordQuality::Augmented;
  if (lower == 3 && upper == 3) return ChordQuality::Diminished;
  return ChordQuality::Other;
}

Chord invert(const Chord& c, Inversion direction) {
  auto notes = c.notes;
  if (direction == Inversion::First) {
    notes[0] = notes[0] * kTritave;
  } else {
    notes[2] = notes[2] / kTritave;
  }
  return Chord::from_notes(notes);
}

Chord456 invert(const Chord456& c, Inversion direction) {
  auto s = c.semitones;
  if (direction == Inversion::First) {
    s[0] += kOctaveSemitones;
  } else {
    s[2] -= kOctaveSemitones;
  }
  return Chord456::from_semitones(s);
}

Chord shift_in_circle(const Chord& c, std::int64_t steps) {
  const FreqRatio by = power(kOctave, steps);
  return Chord{{c.notes[0] * by, c.notes[1] * by, c.notes[2] * by}};
}

Chord456 shift_in_circle(const Chord456& c, std::int64_t steps) {
  const std::int64_t by = kFifthSemitones * steps;
  return Chord456{{c.semitones[0] + by, c.semitones[1] + by, c.semitones[2] + by}};
}

Chord reduce_chord_to_domain(const Chord& c, FreqRatio register_root) {
  std::array<FreqRatio, 3> notes = c.notes;
  const FreqRatio ceiling = register_root * kTritave;
  for (FreqRatio& n : notes) {
    // Tritave shifts keep u; only v moves.
    n.v += register_root.v - n.v;
    while (compare_pitch(n, register_root) == std::strong_ordering::less) n = n * kTritave;
    while (compare_pitch(n, ceiling) != std::strong_ordering::less) n = n / kTritave;
  }
  return Chord::from_notes(notes);
}

Chord456 reduce_chord_to_domain(const Chord456& c, const Chord456& tonic) {
  std::array<std::int64_t, 3> pcs{};
  for (std::size_t i = 0; i < 3; ++i) pcs[i] = pc_of(c.semitones[i]);

  std::optional<Chord456> best;
  std::tuple<std::int64_t, std::int64_t, std::int64_t> best_key{};
  for (std::size_t lowest = 0; lowest < 3; ++lowest) {
    for (std::int64_t base = tonic.semitones[0] - kOctaveSemitones;
         base <= tonic.semitones[0] + kOctaveSemitones; ++base) {
      if (pc_of(base) != pcs[lowest]) continue;
      // Closed position: remaining notes are the next occurrences above base.
      std::array<std::int64_t, 3> voicing{base, 0, 0};
      std::size_t k = 1;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j == lowest) continue;
        voicing[k++] = base + ((pcs[j] - pc_of(base) + 12) % 12);
      }
      std::sort(voicing.begin(), voicing.end());
      // Total voice movement, then the largest single move, then the lower bass.
      std::int64_t cost = 0;
      std::int64_t widest = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        const std::int64_t move = std::llabs(voicing[i] - tonic.semitones[i]);
        cost += move;
        widest = std::max(widest, move);
      }
      const auto key = std::tuple{cost, widest, voicing[0]};
      if (!best || key < best_key) {
        best_key = key;
        best = Chord456::from_semitones(voicing);
      }
    }
  }
  if (!best) throw ChordError("no voicing found");
  return *best;
}

std::vector<Chord> basic_sequence(const Chord& tonic) {
  require_major(tonic);
  const FreqRatio root = tonic.lowest();
  return {tonic, reduce_chord_to_domain(shift_in_circle(tonic, -1), root),
          reduce_chord_to_domain(shift_in_circle(tonic, 1), root), tonic};
}

std::vector<Chord456> basic_sequence(const Chord456& tonic) {
  require_major(tonic);
  return {tonic, reduce_chord_to_domain(shift_in_circle(tonic, -1), tonic),
          reduce_chord_to_domain(shift_in_circle(tonic, 1), tonic), tonic};
}

std::vector<Chord> cadence_sequence(const Chord& tonic) {
  require_major(tonic);
  const FreqRatio root = tonic.lowest();
  return {tonic, reduce_chord_to_domain(shift_in_circle(tonic, 1), root),
          reduce_chord_to_domain(shift_in_circle(tonic, 2), root), tonic};
}

std::vector<Chord456> cadence_sequence(const Chord456& tonic) {
  require_major(tonic);
  return {tonic, reduce_chord_to_domain(shift_in_circle(tonic, 1), tonic),
          reduce_chord_to_domain(shift_in_circle(tonic, 2), tonic), tonic};
}

std::optional<Triad234> as_triad(const Chord& c) {
  if (c.notes[2] != c.notes[0] * kOctave) return std::nullopt;
  const FreqRatio middle = c.notes[1] / c.notes[0];
  if (middle == kFifth) return Triad234{c.notes[0], TriadQuality::Major};
  if (middle == kFourth) return Triad234{c.notes[0], TriadQuality::Minor};
  return std::nullopt;
}

std::optional<Triad456> as_triad(const Chord456& c) {
  std::array<int, 3> pcs{};
  // Semitones count from D; pitch classes from C.
  for (std::size_t i = 0; i < 3; ++i) pcs[i] = static_cast<int>(pc_of(c.semitones[i] + 2));
  std::sort(pcs.begin(), pcs.end());
  for (const int root : pcs) {
    for (const TriadQuality q : {TriadQuality::Major, TriadQuality::Minor}) {
      auto candidate = Triad456{root, q}.pitch_classes();
      std::sort(candidate.begin(), candidate.end());
      if (candidate == pcs) return Triad456{root, q};
    }
  }
  return std::nullopt;
}

bool same_mod_tritave(const Chord& a, const Chord& b) {
  std::array<std::int64_t, 3> x{}, y{};
  for (std::size_t i = 0; i < 3; ++i) {
    x[i] = a.notes[i].u;
    y[i] = b.notes[i].u;
  }
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool same_mod_tritave_and_comma(const Chord& a, const Chord& b) {
  std::array<std::int64_t, 3> x{}, y{};
  for (std::size_t i = 0; i < 3; ++i) {
    x[i] = note_class_234(a.notes[i]);
    y[i] = note_class_234(b.notes[i]);
  }
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

PurityReport purity_of_ratios(const std::array<std::array<std::int64_t, 2>, 3>& notes) {
  for (const auto& [n, d] : notes) {
    if (n < 1 || d < 1) throw ChordError("purity needs positive ratios");
  }
  // Clear denominators relative to the lowest note, then divide by the gcd.
  BigInt common = 1;
  for (const auto& [n, d] : notes) common = boost::multiprecision::lcm(common, BigInt(d));
  std::array<BigInt, 3> ints;
  for (std::size_t i = 0; i < 3; ++i) ints[i] = BigInt(notes[i][0]) * (common / notes[i][1]);
  const BigInt g = boost::multiprecision::gcd(ints[0], boost::multiprecision::gcd(ints[1], ints[2]));
  for (BigInt& x : ints) x /= g;
  if (!(ints[0] < ints[1] && ints[1] < ints[2])) throw ChordError("purity needs strictly ascending notes");

  const BigInt l = boost::multiprecision::lcm(ints[0], boost::multiprecision::lcm(ints[1], ints[2]));
  PurityReport report;
  for (std::size_t i = 0; i < 3; ++i) {
    report.ratio[i] = to_int64(ints[i]);
    report.reciprocal_denominators[i] = to_int64(l / ints[i]);
  }
  report.d_base = report.ratio[0];
  report.d_overtone = report.reciprocal_denominators[2];
  return report;
}

PurityReport purity(const Chord& c) {
  std::array<std::array<std::int64_t, 2>, 3> rel{};
  for (std::size_t i = 0; i < 3; ++i) {
    const Fraction f = to_fraction(c.notes[i] / c.lowest());
    rel[i] = {to_int64(f.numerator), to_int64(f.denominator)};
  }
  PurityReport report = purity_of_ratios(rel);
  const FreqRatio a = from_fraction(static_cast<std::uint64_t>(report.d_base), 1);
  const FreqRatio d_o = from_fraction(static_cast<std::uint64_t>(report.d_overtone), 1);
  report.base_note = c.lowest() / a;
  report.overtone_note = c.highest() * d_o;
  return report;
}

PurityReport purity(const Chord456& c) {
  static const std::map<std::int64_t, std::array<std::int64_t, 2>> kJustSteps = {
      {3, {6, 5}}, {4, {5, 4}}, {5, {4, 3}}};
  std::array<std::array<std::int64_t, 2>, 3> rel{{{1, 1}, {1, 1}, {1, 1}}};
  for (std::size_t i = 1; i < 3; ++i) {
    const std::int64_t step = c.semitones[i] - c.semitones[i - 1];
    const auto it = kJustSteps.find(step);
    if (it == kJustSteps.end()) {
      throw ChordError("no just 4:5:6 interval for a step of " + std::to_string(step) + " semitones");
    }
    std::int64_t n = rel[i - 1][0] * it->second[0];
    std::int64_t d = rel[i - 1][1] * it->second[1];
    const std::int64_t g = std::gcd(n, d);
    rel[i] = {n / g, d / g};
  }
  return purity_of_ratios(rel);
}

}  // namespace tritave
