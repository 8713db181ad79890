#include "tritave/ratio.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace tritave {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("exponent overflow");
  return out;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("exponent overflow");
  return -a;
}

// Strips factors of p from n, returning the multiplicity.
std::int64_t strip(BigInt& n, unsigned p) {
  std::int64_t count = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++count;
  }
  return count;
}

BigInt pow_big(unsigned base, std::int64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace

std::string Fraction::to_string() const {
  if (denominator == 1) return numerator.str();
  return numerator.str() + "/" + denominator.str();
}

long double log2_of_3() {
  static const long double value = std::log2(3.0L);
  return value;
}

FreqRatio from_fraction(const BigInt& numerator, const BigInt& denominator) {
  if (numerator < 1 || denominator < 1) {
    throw std::invalid_argument("numerator and denominator must be positive");
  }
  BigInt num = numerator;
  BigInt den = denominator;
  const std::int64_t u = strip(num, 2) - strip(den, 2);
  const std::int64_t v = strip(num, 3) - strip(den, 3);
  // Whatever remains must cancel; a reduced 3-smooth fraction leaves 1/1.
  if (num != den) throw NotSmoothError("not 3-smooth: " + numerator.str() + "/" + denominator.str());
  return {u, v};
}

FreqRatio from_fraction(std::uint64_t numerator, std::uint64_t denominator) {
  return from_fraction(BigInt(numerator), BigInt(denominator));
}

FreqRatio multiply(FreqRatio a, FreqRatio b) {
  return {checked_add(a.u, b.u), checked_add(a.v, b.v)};
}

FreqRatio inverse(FreqRatio r) { return {checked_neg(r.u), checked_neg(r.v)}; }

FreqRatio divide(FreqRatio a, FreqRatio b) { return multiply(a, inverse(b)); }

FreqRatio power(FreqRatio r, std::int64_t k) {
  return {checked_mul(r.u, k), checked_mul(r.v, k)};
}

Cents cents(FreqRatio r) {
  const long double c = 1200.0L * (static_cast<long double>(r.u) +
                                   static_cast<long double>(r.v) * log2_of_3());
  return {static_cast<double>(c)};
}

Fraction to_fraction(FreqRatio r) {
  Fraction f;
  f.numerator = (r.u > 0 ? pow_big(2, r.u) : BigInt(1)) * (r.v > 0 ? pow_big(3, r.v) : BigInt(1));
  f.denominator = (r.u < 0 ? pow_big(2, -r.u) : BigInt(1)) * (r.v < 0 ? pow_big(3, -r.v) : BigInt(1));
  return f;
}

std::strong_ordering compare_pitch(FreqRatio a, FreqRatio b) {
  if (a == b) return std::strong_ordering::equal;
  const Fraction q = to_fraction(divide(a, b));
  if (q.numerator < q.denominator) return std::strong_ordering::less;
  if (q.numerator > q.denominator) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_monzo_string(FreqRatio r) {
  return "2^" + std::to_string(r.u) + "*3^" + std::to_string(r.v);
}

}  // namespace tritave
