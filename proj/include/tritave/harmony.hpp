/**
 * @file harmony.hpp
 * @brief Chord classification, inversions, circle shifts, the basic and
 *        cadence sequences, and the d_B / d_O purity measures.
 *
 * Chord is a 2:3:4-system chord of three Pyth notes with register. Chord456
 * is a 12-EDO chord in semitones above D (the Pyth-2 scale degree), so the
 * same note names serve both systems.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tritave/ratio.hpp"
#include "tritave/tonnetz.hpp"

namespace tritave {

class ChordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ChordQuality { Major, Minor, Augmented, Diminished, Other };
enum class Inversion { First, Second };

std::string_view to_string(ChordQuality quality);

struct Chord {
  std::array<FreqRatio, 3> notes;  ///< strictly ascending in pitch

  /// Sorts by pitch; throws ChordError unless exactly three distinct notes.
  static Chord from_notes(std::span<const FreqRatio> notes);
  static Chord from_triad(const Triad234& triad);

  [[nodiscard]] FreqRatio lowest() const { return notes[0]; }
  [[nodiscard]] FreqRatio highest() const { return notes[2]; }
  [[nodiscard]] std::string to_string() const;  ///< "A-E-A'"
  friend bool operator==(const Chord&, const Chord&) = default;
};

struct Chord456 {
  std::array<std::int64_t, 3> semitones;  ///< strictly ascending, D = 0

  static Chord456 from_semitones(std::span<const std::int64_t> semitones);
  /// Pyth-2 notes mapped to their 12-EDO scale degrees.
  static Chord456 from_pyth2_notes(std::span<const FreqRatio> notes);

  [[nodiscard]] std::string to_string() const;  ///< "C-E-G"
  friend bool operator==(const Chord456&, const Chord456&) = default;
};

ChordQuality classify(const Chord& c);
ChordQuality classify(const Chord456& c);

/// First: lowest note up one period. Second: highest note down one period.
/// The period is the tritave for Chord and the octave for Chord456.
Chord invert(const Chord& c, Inversion direction);
Chord456 invert(const Chord456& c, Inversion direction);

/// Every note moved along the circle of octaves (2:3:4) or fifths (4:5:6);
/// +1 is the dominant, -1 the subdominant. No reduction is applied.
Chord shift_in_circle(const Chord& c, std::int64_t steps);
Chord456 shift_in_circle(const Chord456& c, std::int64_t steps);

/// Tritave-shifts each note into [register_root, 3 * register_root).
Chord reduce_chord_to_domain(const Chord& c, FreqRatio register_root);
/// Octave-shifts into the closed-position voicing nearest to the tonic.
Chord456 reduce_chord_to_domain(const Chord456& c, const Chord456& tonic);

/// [tonic, subdominant, dominant, tonic], reduced; tonic must be major.
std::vector<Chord> basic_sequence(const Chord& tonic);
std::vector<Chord456> basic_sequence(const Chord456& tonic);
/// [tonic, dominant, second dominant, tonic], reduced; tonic must be major.
std::vector<Chord> cadence_sequence(const Chord& tonic);
std::vector<Chord456> cadence_sequence(const Chord456& tonic);

/// The PLR triad a chord spells, if any. 2:3:4 chords must be in root
/// position (r, r*3/2 or r*4/3, 2r); 4:5:6 chords match by pitch-class set.
std::optional<Triad234> as_triad(const Chord& c);
std::optional<Triad456> as_triad(const Chord456& c);

/// Equal as multisets of tritave classes (mu_2).
bool same_mod_tritave(const Chord& a, const Chord& b);
/// Equal as multisets of finite-Tonnetz classes (mu_2 mod 19).
bool same_mod_tritave_and_comma(const Chord& a, const Chord& b);

struct PurityReport {
  std::array<std::int64_t, 3> ratio{};  ///< coprime a:b:c
  /// Reciprocal form 1/x : 1/y : 1/z with the common overtone at 1.
  std::array<std::int64_t, 3> reciprocal_denominators{};
  std::int64_t d_base = 0;      ///< a
  std::int64_t d_overtone = 0;  ///< lcm(a, b, c) / c
  /// Common base note and first common overtone (2:3:4 chords only).
  std::optional<FreqRatio> base_note;
  std::optional<FreqRatio> overtone_note;
};

/// Purity of three ascending positive rationals given as numerator/denominator.
PurityReport purity_of_ratios(const std::array<std::array<std::int64_t, 2>, 3>& notes);
PurityReport purity(const Chord& c);
/// 4:5:6 chords are tuned justly: 3 semitones = 6/5, 4 = 5/4, 5 = 4/3.
PurityReport purity(const Chord456& c);

}  // namespace tritave
