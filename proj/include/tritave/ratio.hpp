/**
 * @file ratio.hpp
 * @brief Exact frequency ratios of the form 2^u * 3^v.
 *
 * Every note in the Pythagorean systems is a product of powers of two and
 * three relative to the base note D. FreqRatio stores the two exponents and
 * never rounds; floating point appears only when converting to cents.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tritave {

using BigInt = boost::multiprecision::cpp_int;

/// Input had a prime factor other than 2 or 3.
class NotSmoothError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// 2^u * 3^v. Ordering is lexicographic on (u, v), not by pitch; use
/// compare_pitch() for frequency order.
struct FreqRatio {
  std::int64_t u = 0;  ///< 2-adic valuation
  std::int64_t v = 0;  ///< 3-adic valuation

  friend constexpr bool operator==(const FreqRatio&, const FreqRatio&) = default;
  friend constexpr auto operator<=>(const FreqRatio&, const FreqRatio&) = default;
};

struct Cents {
  double value = 0.0;

  friend constexpr Cents operator+(Cents a, Cents b) { return {a.value + b.value}; }
  friend constexpr Cents operator-(Cents a, Cents b) { return {a.value - b.value}; }
  friend constexpr auto operator<=>(const Cents&, const Cents&) = default;
};

/// Exact reduced fraction numerator/denominator.
struct Fraction {
  BigInt numerator = 1;
  BigInt denominator = 1;

  /// "243/256", or "3" when the denominator is one.
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

inline constexpr FreqRatio kUnison{0, 0};
inline constexpr FreqRatio kOctave{1, 0};
inline constexpr FreqRatio kTritave{0, 1};
inline constexpr FreqRatio kFifth{-1, 1};
inline constexpr FreqRatio kFourth{2, -1};
inline constexpr FreqRatio kWholeTone{-3, 2};
/// Pythagorean comma 3^12 / 2^19.
inline constexpr FreqRatio kComma{-19, 12};

/// log2(3) at long double precision, computed once.
long double log2_of_3();

FreqRatio from_fraction(std::uint64_t numerator, std::uint64_t denominator);
FreqRatio from_fraction(const BigInt& numerator, const BigInt& denominator);

FreqRatio multiply(FreqRatio a, FreqRatio b);
FreqRatio inverse(FreqRatio r);
FreqRatio divide(FreqRatio a, FreqRatio b);
/// r^k with overflow checking.
FreqRatio power(FreqRatio r, std::int64_t k);

inline FreqRatio operator*(FreqRatio a, FreqRatio b) { return multiply(a, b); }
inline FreqRatio operator/(FreqRatio a, FreqRatio b) { return divide(a, b); }

Cents cents(FreqRatio r);

Fraction to_fraction(FreqRatio r);

/// Exact frequency comparison of two ratios (big-integer, no logarithms).
std::strong_ordering compare_pitch(FreqRatio a, FreqRatio b);

/// "2^-2*3^1" style monomial text.
std::string to_monzo_string(FreqRatio r);

}  // namespace tritave

template <>
struct std::hash<tritave::FreqRatio> {
  std::size_t operator()(const tritave::FreqRatio& r) const noexcept {
    const auto hu = std::hash<std::int64_t>{}(r.u);
    const auto hv = std::hash<std::int64_t>{}(r.v);
    return hu ^ (hv + 0x9e3779b97f4a7c15ULL + (hu << 6) + (hu >> 2));
  }
};
