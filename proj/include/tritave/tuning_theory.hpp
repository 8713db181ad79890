/**
 * @file tuning_theory.hpp
 * @brief How many notes per tritave: continued-fraction expansion of
 *        log 2 / log 3 and the commas of its convergents.
 *
 * A convergent p/q says that q notes per tritave put the octave at step p,
 * since 2^q ~ 3^p. 12/19 gives Pyth-3 and the Pythagorean comma; 53/84
 * corresponds to the octave-based 53-note scale generated by the fifth.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "tritave/ratio.hpp"

namespace tritave {

inline constexpr int kMaxContinuedFractionTerms = 20;

struct Convergent {
  std::int64_t p = 0;  ///< octave position
  std::int64_t q = 1;  ///< notes per tritave

  [[nodiscard]] double value() const { return static_cast<double>(p) / static_cast<double>(q); }
  friend constexpr bool operator==(const Convergent&, const Convergent&) = default;
};

/// Partial quotients of log 2 / log 3 after the leading 0; 1 <= count <= 20.
std::vector<std::int64_t> cf_coefficients(int count);

/// Convergents of the same expansion, starting with 1/1.
std::vector<Convergent> convergents(int count);

struct CommaInfo {
  FreqRatio ratio;  ///< 3^p / 2^q
  Cents size;       ///< absolute size in cents
};

CommaInfo comma_for(std::int64_t p, std::int64_t q);

}  // namespace tritave
