#include "tritave/notation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "tritave/scales.hpp"

namespace tritave {

namespace {

const ScaleSystem& pyth3() { return standard_system(SystemId::Pyth3); }
const ScaleSystem& pyth2() { return standard_system(SystemId::Pyth2); }

struct SplitName {
  std::string base;
  std::string_view marks;
};

// Letter, optional accidental, then everything else.
SplitName split_letter(std::string_view text) {
  if (text.empty()) throw ParseError("empty note name");
  if (text.front() < 'A' || text.front() > 'G') {
    throw ParseError("note name must start with a letter A-G: '" + std::string(text) + "'");
  }
  std::size_t i = 1;
  if (i < text.size() && (text[i] == '#' || text[i] == 'b')) ++i;
  return {std::string(text.substr(0, i)), text.substr(i)};
}

// Counts a run of one repeated character; throws if other characters follow.
std::int64_t count_run(std::string_view marks, char up, char down, std::string_view whole) {
  if (marks.empty()) return 0;
  const char c = marks.front();
  if (c != up && c != down) {
    throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + std::string(whole) + "'");
  }
  if (marks.find_first_not_of(c) != std::string_view::npos) {
    throw ParseError("mixed or trailing marks in '" + std::string(whole) + "'");
  }
  const auto n = static_cast<std::int64_t>(marks.size());
  return c == up ? n : -n;
}

template <std::size_t N>
std::int64_t index_of(const std::array<std::string_view, N>& names, std::string_view name) {
  const auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<std::int64_t>(it - names.begin());
}

}  // namespace

std::string_view NoteName::base() const {
  return kPyth3BaseNames.at(static_cast<std::size_t>(base_degree + 9));
}

std::string NoteName::to_string() const {
  std::string out(base());
  out.append(static_cast<std::size_t>(std::llabs(tritave_shift)), tritave_shift > 0 ? '^' : 'v');
  return out;
}

NoteName name_of(FreqRatio r) {
  const ScaleSystem& system = pyth3();
  if (!system.harmonic_range.contains(r.u)) {
    throw NotInSystemError("not in Pyth-3 (harmonic degree " + std::to_string(r.u) +
                           "); reduce first");
  }
  const std::int64_t degree = harmonic_to_scale_degree(r.u, system);
  const FreqRatio base = just_note_at_degree(degree, system);
  return {degree, r.v - base.v};
}

FreqRatio to_ratio(const NoteName& name) {
  return multiply(just_note_at_degree(name.base_degree, pyth3()), power(kTritave, name.tritave_shift));
}

NoteName parse_note_name(std::string_view text) {
  auto [base, rest] = split_letter(text);
  if (!rest.empty() && (rest.front() == ',' || rest.front() == '\'')) {
    base.push_back(rest.front());
    rest.remove_prefix(1);
  }
  const std::int64_t index = index_of(kPyth3BaseNames, base);
  if (index < 0) {
    const bool has_mark = base.back() == ',' || base.back() == '\'';
    if (has_mark && index_of(kPyth2BaseNames, std::string_view(base).substr(0, base.size() - 1)) >= 0) {
      throw ParseError("'" + base + "' is Pyth-2 notation; not a Pyth-3 name");
    }
    throw ParseError("unknown base name '" + base + "'");
  }
  return {index - 9, count_run(rest, '^', 'v', text)};
}

FreqRatio parse_note(std::string_view text) { return to_ratio(parse_note_name(text)); }

std::string pyth2_name_of(FreqRatio r) {
  const ScaleSystem& system = pyth2();
  if (!system.harmonic_range.contains(r.v)) {
    throw NotInSystemError("not in Pyth-2 (harmonic degree " + std::to_string(r.v) + ")");
  }
  const std::int64_t degree = harmonic_to_scale_degree(r.v, system);
  const FreqRatio base = just_note_at_degree(degree, system);
  const std::int64_t octaves = r.u - base.u;
  std::string out(kPyth2BaseNames.at(static_cast<std::size_t>(degree + 5)));
  out.append(static_cast<std::size_t>(std::llabs(octaves)), octaves > 0 ? '\'' : ',');
  return out;
}

FreqRatio parse_pyth2_note(std::string_view text) {
  const auto [base, rest] = split_letter(text);
  const std::int64_t index = index_of(kPyth2BaseNames, base);
  if (index < 0) throw ParseError("unknown Pyth-2 name '" + base + "'");
  const std::int64_t octaves = count_run(rest, '\'', ',', text);
  return multiply(just_note_at_degree(index - 5, pyth2()), power(kOctave, octaves));
}

std::string to_unicode(std::string_view ascii_name) {
  std::string out;
  for (std::size_t i = 0; i < ascii_name.size(); ++i) {
    const char c = ascii_name[i];
    // A 'b' directly after the letter is a flat; elsewhere there is none.
    if (c == 'b' && i == 1) {
      out += "♭";
    } else if (c == '#') {
      out += "♯";
    } else if (c == '\'') {
      out += "′";
    } else if (c == 'v') {
      out += "⌄";
    } else {
      out += c;
    }
  }
  return out;
}

KeyColor piano_key_color(int midi) {
  switch (((midi % 12) + 12) % 12) {
    case 1: case 3: case 6: case 8: case 10: return KeyColor::Black;
    default: return KeyColor::White;
  }
}

std::vector<KeyLabel> keyboard_labels(int midi_lo, int midi_hi) {
  if (midi_lo < 0 || midi_hi > 127 || midi_lo > midi_hi) {
    throw std::invalid_argument("MIDI range must satisfy 0 <= lo <= hi <= 127");
  }
  std::vector<KeyLabel> labels;
  labels.reserve(static_cast<std::size_t>(midi_hi - midi_lo + 1));
  for (int midi = midi_lo; midi <= midi_hi; ++midi) {
    const std::int64_t degree = midi - kMidiAnchor;
    const std::int64_t shift = floor_div(degree + 9, 19);
    labels.push_back({midi, NoteName{degree - 19 * shift, shift}, degree, piano_key_color(midi)});
  }
  return labels;
}

KeyColor key_color_by_harmonic_degree(std::int64_t harmonic) {
  if (!pyth3().harmonic_range.contains(harmonic)) {
    throw std::out_of_range("harmonic degree " + std::to_string(harmonic) + " outside [-9, 9]");
  }
  return std::llabs(harmonic) <= 5 ? KeyColor::White : KeyColor::Black;
}

}  // namespace tritave
