#include "tritave/scales.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tritave/notation.hpp"

namespace tritave {

namespace {

std::int64_t mod_inverse(std::int64_t b, std::int64_t n) {
  // Extended Euclid on (b mod n, n).
  std::int64_t r0 = ((b % n) + n) % n, r1 = n;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) throw std::invalid_argument("degree multiplier has no inverse modulo period size");
  return ((s0 % n) + n) % n;
}

bool is_tritave_system(SystemId id) { return id == SystemId::Pyth3 || id == SystemId::Edt19; }

// Center of the fundamental domain: kappa for Pyth-2, 1 for Pyth-3.
FreqRatio domain_center(const ScaleSystem& system) {
  return system.octave_based() ? system.comma : kUnison;
}

// r^2 / center^2, the quantity compared against (1/P, P].
FreqRatio squared_offset(FreqRatio r, const ScaleSystem& system) {
  return power(r, 2) / power(domain_center(system), 2);
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t wrap_into(std::int64_t x, IntRange window) {
  const std::int64_t n = window.size();
  return window.lo + (x - window.lo - n * floor_div(x - window.lo, n));
}

ScaleSystem make_system(SystemId id, FreqRatio comma) {
  if (comma.u >= 0 || comma.v <= 0) {
    throw std::invalid_argument("comma must have the form 3^a / 2^b with a, b > 0");
  }
  ScaleSystem s;
  s.id = id;
  s.comma = comma;
  if (is_tritave_system(id)) {
    s.period = kTritave;
    s.notes_per_period = -comma.u;
    s.degree_multiplier = comma.v % s.notes_per_period;
  } else {
    s.period = kOctave;
    s.notes_per_period = comma.v;
    s.degree_multiplier = (-comma.u) % s.notes_per_period;
  }
  if (s.notes_per_period < 2) throw std::invalid_argument("comma yields fewer than two notes per period");
  s.degree_multiplier_inv = mod_inverse(s.degree_multiplier, s.notes_per_period);
  const std::int64_t lo = -((s.notes_per_period - 1) / 2);
  s.harmonic_range = {lo, lo + s.notes_per_period - 1};
  s.degree_window = s.harmonic_range;
  return s;
}

const ScaleSystem& standard_system(SystemId id) {
  static const ScaleSystem pyth2 = make_system(SystemId::Pyth2);
  static const ScaleSystem pyth3 = make_system(SystemId::Pyth3);
  static const ScaleSystem edo12 = make_system(SystemId::Edo12);
  static const ScaleSystem edt19 = make_system(SystemId::Edt19);
  switch (id) {
    case SystemId::Pyth2: return pyth2;
    case SystemId::Pyth3: return pyth3;
    case SystemId::Edo12: return edo12;
    case SystemId::Edt19: return edt19;
  }
  throw std::invalid_argument("unknown system");
}

CommaReduction reduce_to_fundamental(FreqRatio r, const ScaleSystem& system) {
  const std::int64_t h = system.harmonic_degree(r);
  const std::int64_t step = system.harmonic_degree(system.comma);  // -19 or +12
  const std::int64_t n = system.notes_per_period;
  const std::int64_t q = floor_div(h - system.harmonic_range.lo, n);
  // h + m * step lands in the range when m * step = -q * n.
  const std::int64_t m = step < 0 ? q : -q;
  return {multiply(r, power(system.comma, m)), m};
}

bool in_fundamental_domain(FreqRatio r, const ScaleSystem& system) {
  const FreqRatio y = squared_offset(r, system);
  return compare_pitch(y, inverse(system.period)) == std::strong_ordering::greater &&
         compare_pitch(y, system.period) != std::strong_ordering::greater;
}

PeriodReduction period_reduce(FreqRatio r, const ScaleSystem& system) {
  const FreqRatio y = squared_offset(r, system);
  const FreqRatio p2 = power(system.period, 2);
  // Float estimate first, then exact correction at the boundaries.
  auto k = static_cast<std::int64_t>(std::llround(cents(y).value / cents(p2).value));
  auto shifted = [&](std::int64_t shift) { return divide(y, power(p2, shift)); };
  while (compare_pitch(shifted(k), system.period) == std::strong_ordering::greater) ++k;
  while (compare_pitch(shifted(k), inverse(system.period)) != std::strong_ordering::greater) --k;
  return {divide(r, power(system.period, k)), k};
}

std::int64_t harmonic_to_scale_degree(std::int64_t harmonic, const ScaleSystem& system) {
  if (!system.harmonic_range.contains(harmonic)) {
    throw std::out_of_range("harmonic degree " + std::to_string(harmonic) + " outside range");
  }
  return wrap_into(system.degree_multiplier * harmonic, system.degree_window);
}

std::int64_t scale_to_harmonic_degree(std::int64_t degree, const ScaleSystem& system) {
  if (!system.degree_window.contains(degree)) {
    throw std::out_of_range("scale degree " + std::to_string(degree) + " outside window");
  }
  return wrap_into(system.degree_multiplier_inv * degree, system.harmonic_range);
}

FreqRatio just_note_at_degree(std::int64_t degree, const ScaleSystem& system) {
  const std::int64_t n = system.notes_per_period;
  const std::int64_t periods = floor_div(degree - system.degree_window.lo, n);
  const std::int64_t s = degree - periods * n;
  const std::int64_t h = scale_to_harmonic_degree(s, system);
  const FreqRatio generator = system.octave_based() ? FreqRatio{0, h} : FreqRatio{h, 0};
  const FreqRatio base = period_reduce(generator, system).class_rep;
  return multiply(base, power(system.period, periods));
}

Cents equal_pitch_at_degree(std::int64_t degree, const ScaleSystem& system) {
  const long double period_cents =
      system.octave_based() ? 1200.0L : 1200.0L * log2_of_3();
  return {static_cast<double>(period_cents * static_cast<long double>(degree) /
                              static_cast<long double>(system.notes_per_period))};
}

Pitch note_at_scale_degree(std::int64_t degree, const ScaleSystem& system, Intonation intonation) {
  if (intonation == Intonation::Just) return just_note_at_degree(degree, system);
  return equal_pitch_at_degree(degree, system);
}

namespace {

// Names exist only for the standard 12/19-note systems.
std::string name_in_system(FreqRatio r, const ScaleSystem& system) {
  if (system.comma != kComma) return "?";
  // The Pyth-2 boundary row lies outside the Pyth-2 names; its Pyth-3 name
  // (Ab) is the conventional spelling.
  if (system.octave_based() && system.harmonic_range.contains(r.v)) return pyth2_name_of(r);
  return name_of(r).to_string();
}

ScaleRow make_row(std::int64_t degree, FreqRatio ratio, bool boundary, const ScaleSystem& system) {
  ScaleRow row;
  row.scale_degree = degree;
  row.boundary = boundary;
  row.just_ratio = ratio;
  row.harmonic_degree = system.harmonic_degree(ratio);
  row.exponent_numerator = degree;
  row.exponent_denominator = system.notes_per_period;
  row.equal_pitch = equal_pitch_at_degree(degree, system);
  row.deviation_cents = (cents(ratio) - row.equal_pitch).value;
  row.note = name_in_system(ratio, system);
  return row;
}

}  // namespace

std::vector<ScaleRow> deviation_table(TablePair pair, FreqRatio comma) {
  std::vector<ScaleRow> rows;
  if (pair == TablePair::Pyth2VsEdo12) {
    const ScaleSystem system = make_system(SystemId::Pyth2, comma);
    // Boundary row: the first harmonic degree below the range, i.e. the flat
    // spelling that the range excludes in favour of its sharp enharmonic.
    // It is printed one degree below the window.
    const std::int64_t h = system.harmonic_range.lo - 1;
    const std::int64_t degree = system.degree_window.lo - 1;
    const FreqRatio reduced = period_reduce({0, h}, system).class_rep;
    const auto step = equal_pitch_at_degree(1, system).value;
    const auto reduced_degree = static_cast<std::int64_t>(std::llround(cents(reduced).value / step));
    const std::int64_t shift = floor_div(degree - reduced_degree + system.notes_per_period / 2,
                                         system.notes_per_period);
    rows.push_back(make_row(degree, multiply(reduced, power(system.period, shift)), true, system));
    for (std::int64_t n = system.degree_window.lo; n <= system.degree_window.hi; ++n) {
      rows.push_back(make_row(n, just_note_at_degree(n, system), false, system));
    }
  } else {
    const ScaleSystem system = make_system(SystemId::Pyth3, comma);
    const std::int64_t lo = system.degree_window.lo - 1;
    const std::int64_t hi = system.degree_window.hi + 1;
    for (std::int64_t n = lo; n <= hi; ++n) {
      const bool boundary = !system.degree_window.contains(n);
      rows.push_back(make_row(n, just_note_at_degree(n, system), boundary, system));
    }
  }
  return rows;
}

std::vector<DifferenceRow> pyth2_pyth3_differences(std::int64_t degree_lo, std::int64_t degree_hi,
                                                   FreqRatio comma) {
  if (degree_lo > degree_hi) throw std::invalid_argument("degree_lo must not exceed degree_hi");
  const ScaleSystem pyth2 = make_system(SystemId::Pyth2, comma);
  const ScaleSystem pyth3 = make_system(SystemId::Pyth3, comma);
  std::vector<DifferenceRow> rows;
  for (std::int64_t n = degree_lo; n <= degree_hi; ++n) {
    const FreqRatio p3 = just_note_at_degree(n, pyth3);
    const FreqRatio p2 = just_note_at_degree(n, pyth2);
    if (p3 == p2) continue;
    rows.push_back({n, p3, p2, divide(p3, p2), name_in_system(p3, pyth3),
                    name_in_system(p2, pyth2)});
  }
  return rows;
}

}  // namespace tritave
