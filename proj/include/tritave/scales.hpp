/**
 * @file scales.hpp
 * @brief Pyth-2, Pyth-3, 12-EDO and 19-EDT: enharmonic reduction, period
 *        reduction, degree maps and the just-vs-equal comparison tables.
 *
 * Both Pythagorean systems are generated from a comma 3^a / 2^b (a, b > 0).
 * The octave-based system has a notes per octave and the tritave-based one
 * b notes per tritave; with the Pythagorean comma that gives 12 and 19.
 */
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tritave/ratio.hpp"

namespace tritave {

enum class SystemId { Pyth2, Pyth3, Edo12, Edt19 };
enum class Intonation { Just, Equal };

/// Closed integer interval [lo, hi].
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  [[nodiscard]] constexpr bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  [[nodiscard]] constexpr std::int64_t size() const { return hi - lo + 1; }
  friend constexpr bool operator==(const IntRange&, const IntRange&) = default;
};

struct ScaleSystem {
  SystemId id = SystemId::Pyth3;
  FreqRatio period = kTritave;
  std::int64_t notes_per_period = 19;
  /// Admissible harmonic degrees (mu_3 for octave systems, mu_2 for tritave systems).
  IntRange harmonic_range{-9, 9};
  /// Scale degrees of the notes inside the fundamental domain.
  IntRange degree_window{-9, 9};
  /// Scale degree of one harmonic step (the fifth resp. the octave).
  std::int64_t degree_multiplier = 12;
  std::int64_t degree_multiplier_inv = 8;
  FreqRatio comma = kComma;

  [[nodiscard]] bool octave_based() const { return period == kOctave; }
  /// Harmonic degree of r in this system.
  [[nodiscard]] std::int64_t harmonic_degree(FreqRatio r) const { return octave_based() ? r.v : r.u; }
};

/// Builds a system descriptor from a comma; throws if the comma does not
/// generate a valid degree map.
ScaleSystem make_system(SystemId id, FreqRatio comma = kComma);
/// The standard descriptors (Pythagorean comma).
const ScaleSystem& standard_system(SystemId id);

/// D4 = scale degree 0; an 88-key piano spans degrees [-41, 46].
inline constexpr IntRange kPianoDegrees{-41, 46};

struct CommaReduction {
  FreqRatio reduced;
  std::int64_t comma_power = 0;  ///< reduced = r * comma^comma_power
};

/// Enharmonic reduction: moves r by a power of the comma until its harmonic
/// degree lies in the system's harmonic range.
CommaReduction reduce_to_fundamental(FreqRatio r, const ScaleSystem& system);

struct PeriodReduction {
  FreqRatio class_rep;
  std::int64_t period_shift = 0;  ///< class_rep = r * period^(-period_shift)
};

/// Octave/tritave reduction into the fundamental domain, I2 = (k/sqrt2, k*sqrt2]
/// or I3 = (1/sqrt3, sqrt3]. The harmonic degree is unchanged.
PeriodReduction period_reduce(FreqRatio r, const ScaleSystem& system);
/// Exact membership test for the half-open fundamental domain.
bool in_fundamental_domain(FreqRatio r, const ScaleSystem& system);

std::int64_t harmonic_to_scale_degree(std::int64_t harmonic, const ScaleSystem& system);
std::int64_t scale_to_harmonic_degree(std::int64_t degree, const ScaleSystem& system);

/// The just note at an absolute scale degree (fundamental-domain note shifted
/// by whole periods).
FreqRatio just_note_at_degree(std::int64_t degree, const ScaleSystem& system);
/// Equal-tempered pitch of a scale degree: degree/N periods.
Cents equal_pitch_at_degree(std::int64_t degree, const ScaleSystem& system);

using Pitch = std::variant<FreqRatio, Cents>;
Pitch note_at_scale_degree(std::int64_t degree, const ScaleSystem& system, Intonation intonation);

/// Floor division and modulus reduced into [lo, lo + n).
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t wrap_into(std::int64_t x, IntRange window);

enum class TablePair { Pyth2VsEdo12, Pyth3VsEdt19 };

struct ScaleRow {
  std::int64_t scale_degree = 0;
  bool boundary = false;  ///< parenthesised row outside the degree window
  std::string note;       ///< ASCII note name in the system's own notation
  FreqRatio just_ratio;
  std::int64_t harmonic_degree = 0;
  std::int64_t exponent_numerator = 0;  ///< equal pitch = period^(num/den)
  std::int64_t exponent_denominator = 1;
  Cents equal_pitch;
  double deviation_cents = 0.0;
};

std::vector<ScaleRow> deviation_table(TablePair pair, FreqRatio comma = kComma);

struct DifferenceRow {
  std::int64_t scale_degree = 0;
  FreqRatio pyth3_note;
  FreqRatio pyth2_note;
  FreqRatio quotient;  ///< pyth3 / pyth2, always a power of the comma
  std::string pyth3_name;
  std::string pyth2_name;
};

/// Scale degrees in [lo, hi] whose just pitches differ between Pyth-2 and Pyth-3.
std::vector<DifferenceRow> pyth2_pyth3_differences(std::int64_t degree_lo, std::int64_t degree_hi,
                                                   FreqRatio comma = kComma);

}  // namespace tritave
