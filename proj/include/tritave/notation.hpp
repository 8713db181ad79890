/**
 * @file notation.hpp
 * @brief Unique Pyth-3 note names, their parser, Pyth-2 display names and
 *        the 88-key keyboard labelling.
 *
 * ASCII grammar for Pyth-3 names:
 *
 *     NAME  := BASE ('^'* | 'v'*)
 *     BASE  := one of F, F#, G, Ab A Bb B C C# D Eb E F F# G G# A' Bb' B'
 *
 * ',' and '\'' are part of the base (one octave below/above the Pyth-2
 * note); '^' and 'v' shift by whole tritaves. Pyth-2 names use a letter,
 * optional '#'/'b', then any number of '\'' (octaves up) or ',' (down).
 */
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tritave/ratio.hpp"

namespace tritave {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A note with harmonic degree outside the Pyth-3 range has no name.
class NotInSystemError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The 19 fundamental-domain names ordered by scale degree -9..9.
inline constexpr std::array<std::string_view, 19> kPyth3BaseNames = {
    "F,", "F#,", "G,", "Ab", "A", "Bb", "B", "C", "C#", "D",
    "Eb", "E",   "F",  "F#", "G", "G#", "A'", "Bb'", "B'"};

/// The 12 Pyth-2 names ordered by scale degree -5..6.
inline constexpr std::array<std::string_view, 12> kPyth2BaseNames = {
    "A", "Bb", "B", "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#"};

struct NoteName {
  std::int64_t base_degree = 0;    ///< scale degree of the base, in [-9, 9]
  std::int64_t tritave_shift = 0;  ///< hats if positive, checks if negative

  [[nodiscard]] std::string_view base() const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const NoteName&, const NoteName&) = default;
};

/// Requires mu_2(r) in [-9, 9]; throws NotInSystemError otherwise.
NoteName name_of(FreqRatio r);
FreqRatio to_ratio(const NoteName& name);

NoteName parse_note_name(std::string_view text);
FreqRatio parse_note(std::string_view text);

/// Pyth-2 display name; requires mu_3(r) in [-5, 6].
std::string pyth2_name_of(FreqRatio r);
FreqRatio parse_pyth2_note(std::string_view text);

/// Display-only rendering with sharp/flat signs and prime marks.
std::string to_unicode(std::string_view ascii_name);

enum class KeyColor { White, Black };

struct KeyLabel {
  int midi = 0;
  NoteName name;
  std::int64_t scale_degree = 0;
  KeyColor color = KeyColor::White;
};

/// MIDI note of scale degree 0 (D4).
inline constexpr int kMidiAnchor = 62;

/// Standard piano geometry.
KeyColor piano_key_color(int midi);

std::vector<KeyLabel> keyboard_labels(int midi_lo = 21, int midi_hi = 108);

/// The tritave-periodic keyboard: white iff |h| <= 5.
KeyColor key_color_by_harmonic_degree(std::int64_t harmonic);

}  // namespace tritave
