#include "tritave/tuning_theory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace tritave {

namespace {

using Real = boost::multiprecision::cpp_bin_float_100;

void check_count(int count) {
  if (count < 1 || count > kMaxContinuedFractionTerms) {
    throw std::invalid_argument("count must be in [1, " + std::to_string(kMaxContinuedFractionTerms) + "]");
  }
}

}  // namespace

// Interval expansion: both ends of a bracket around log 2 / log 3 are
// expanded in lockstep and every emitted quotient must agree on both ends.
// With 100 significant digits the bracket stays far narrower than needed for
// 20 terms; disagreement would throw rather than emit a wrong digit.
std::vector<std::int64_t> cf_coefficients(int count) {
  check_count(count);
  const Real x = log(Real(2)) / log(Real(3));
  const Real slack = Real("1e-95");
  Real lo = x - slack;
  Real hi = x + slack;
  std::vector<std::int64_t> out;
  // Leading zero term.
  if (floor(lo) != 0 || floor(hi) != 0) throw std::logic_error("log2/log3 bracket out of (0, 1)");
  for (int i = 0; i < count; ++i) {
    // Reciprocal swaps the ends of the bracket.
    const Real next_lo = 1 / hi;
    const Real next_hi = 1 / lo;
    const Real a_lo = floor(next_lo);
    const Real a_hi = floor(next_hi);
    if (a_lo != a_hi) throw std::runtime_error("continued fraction precision exhausted");
    out.push_back(a_lo.convert_to<std::int64_t>());
    lo = next_lo - a_lo;
    hi = next_hi - a_hi;
  }
  return out;
}

std::vector<Convergent> convergents(int count) {
  const auto terms = cf_coefficients(count);
  // [0; a1, a2, ...] with h_{-1} = 1, h_0 = 0, k_{-1} = 0, k_0 = 1.
  std::int64_t h_prev = 1, h = 0;
  std::int64_t k_prev = 0, k = 1;
  std::vector<Convergent> out;
  out.reserve(terms.size());
  for (const std::int64_t a : terms) {
    std::tie(h_prev, h) = std::pair{h, a * h + h_prev};
    std::tie(k_prev, k) = std::pair{k, a * k + k_prev};
    out.push_back({h, k});
  }
  return out;
}

CommaInfo comma_for(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw std::invalid_argument("comma_for requires p, q >= 1");
  const FreqRatio ratio{-q, p};
  return {ratio, {std::fabs(cents(ratio).value)}};
}

}  // namespace tritave
