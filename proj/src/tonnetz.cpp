#include "tritave/tonnetz.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "tritave/scales.hpp"

namespace tritave {

namespace {

int pc_mod(int x) { return ((x % 12) + 12) % 12; }

template <typename Triad>
Triad flip(const Triad& t, auto root) {
  const TriadQuality q = t.quality == TriadQuality::Major ? TriadQuality::Minor : TriadQuality::Major;
  return {root, q};
}

// Breadth-first search over triads. Each level records the classes seen in
// any triad reachable within that many moves.
template <typename Triad, typename ClassesOf>
std::vector<ReachLevel> reach(const Triad& start, int max_moves, ClassesOf classes_of) {
  if (max_moves < 0 || max_moves > kMaxReachMoves) {
    throw std::invalid_argument("max_moves must be in [0, " + std::to_string(kMaxReachMoves) + "]");
  }
  std::set<Triad> visited{start};
  std::vector<Triad> frontier{start};
  std::set<std::int64_t> classes;
  std::vector<ReachLevel> levels;
  for (int k = 0; k <= max_moves; ++k) {
    for (const Triad& t : frontier) {
      for (const std::int64_t c : classes_of(t)) classes.insert(c);
    }
    levels.push_back({k, static_cast<int>(classes.size()), classes});
    std::vector<Triad> next;
    for (const Triad& t : frontier) {
      for (const PlrMove m : {PlrMove::P, PlrMove::L, PlrMove::R}) {
        const Triad n = apply_plr(t, m);
        if (visited.insert(n).second) next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  return levels;
}

}  // namespace

std::array<FreqRatio, 3> Triad234::notes() const {
  const FreqRatio middle = quality == TriadQuality::Major ? kFifth : kFourth;
  return {root, root * middle, root * kOctave};
}

std::array<int, 3> Triad456::pitch_classes() const {
  const int third = quality == TriadQuality::Major ? 4 : 3;
  return {pc_mod(root_pc), pc_mod(root_pc + third), pc_mod(root_pc + 7)};
}

// P keeps the octave, R the fifth, L the fourth.
Triad234 apply_plr(const Triad234& t, PlrMove move) {
  const bool major = t.quality == TriadQuality::Major;
  switch (move) {
    case PlrMove::P: return flip(t, t.root);
    case PlrMove::R: return flip(t, major ? t.root / kFourth : t.root * kFourth);
    case PlrMove::L: return flip(t, major ? t.root * kFifth : t.root / kFifth);
  }
  throw std::invalid_argument("unknown PLR move");
}

Triad456 apply_plr(const Triad456& t, PlrMove move) {
  const bool major = t.quality == TriadQuality::Major;
  switch (move) {
    case PlrMove::P: return flip(t, t.root_pc);
    case PlrMove::R: return flip(t, pc_mod(t.root_pc + (major ? 9 : 3)));
    case PlrMove::L: return flip(t, pc_mod(t.root_pc + (major ? 4 : 8)));
  }
  throw std::invalid_argument("unknown PLR move");
}

std::vector<PlrMove> parse_moves(std::string_view moves) {
  std::vector<PlrMove> out;
  for (const char c : moves) {
    switch (c) {
      case 'P': out.push_back(PlrMove::P); break;
      case 'L': out.push_back(PlrMove::L); break;
      case 'R': out.push_back(PlrMove::R); break;
      default: throw std::invalid_argument(std::string("unknown PLR move '") + c + "'");
    }
  }
  return out;
}

Triad234 apply_moves(Triad234 t, const std::vector<PlrMove>& moves) {
  for (const PlrMove m : moves) t = apply_plr(t, m);
  return t;
}

Triad456 apply_moves(Triad456 t, const std::vector<PlrMove>& moves) {
  for (const PlrMove m : moves) t = apply_plr(t, m);
  return t;
}

char to_char(PlrMove move) {
  switch (move) {
    case PlrMove::P: return 'P';
    case PlrMove::L: return 'L';
    case PlrMove::R: return 'R';
  }
  return '?';
}

std::string_view to_string(TriadQuality quality) {
  return quality == TriadQuality::Major ? "major" : "minor";
}

std::int64_t note_class_234(FreqRatio note) {
  return wrap_into(note.u, standard_system(SystemId::Pyth3).harmonic_range);
}

std::vector<ReachLevel> reachable_note_classes(const Triad234& start, int max_moves) {
  return reach(start, max_moves, [](const Triad234& t) {
    std::vector<std::int64_t> out;
    for (const FreqRatio n : t.notes()) out.push_back(note_class_234(n));
    return out;
  });
}

std::vector<ReachLevel> reachable_note_classes(const Triad456& start, int max_moves) {
  return reach(start, max_moves, [](const Triad456& t) {
    const auto pcs = t.pitch_classes();
    return std::vector<std::int64_t>(pcs.begin(), pcs.end());
  });
}

LatticePoint lattice_point(FreqRatio note) { return {2 * note.u + 3 * note.v, note.v}; }

std::array<LatticePoint, 3> lattice_coordinates(const Triad234& t) {
  const auto notes = t.notes();
  return {lattice_point(notes[0]), lattice_point(notes[1]), lattice_point(notes[2])};
}

std::string_view pitch_class_name(int pc) {
  static constexpr std::array<std::string_view, 12> kNames = {
      "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B"};
  return kNames[static_cast<std::size_t>(pc_mod(pc))];
}

}  // namespace tritave
