/**
 * @file tonnetz.hpp
 * @brief The 4:5:6 and 2:3:4 Tonnetz lattices, PLR moves and reachability.
 *
 * 2:3:4 triads live in the infinite lattice of Pyth notes: octaves run
 * horizontally, fifths up-diagonally and fourths down-diagonally. 4:5:6
 * triads are 12-EDO pitch classes (C = 0) in the usual neo-Riemannian
 * setting.
 *
 * Reachability counts note classes. For 2:3:4 a class is a note up to
 * tritave and comma equivalence (mu_2 mod 19), which is the finite torus
 * Tonnetz of 19-EDT; the count therefore saturates at exactly 19.
 */
#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tritave/ratio.hpp"

namespace tritave {

enum class TonnetzSystem { Harmony456, Harmony234 };
enum class TriadQuality { Major, Minor };
enum class PlrMove { P, L, R };

/// 2:3:4 triad: Major(r) = {r, 3r/2, 2r}, Minor(r) = {r, 4r/3, 2r}.
struct Triad234 {
  FreqRatio root;
  TriadQuality quality = TriadQuality::Major;

  [[nodiscard]] std::array<FreqRatio, 3> notes() const;
  friend constexpr bool operator==(const Triad234&, const Triad234&) = default;
  friend constexpr auto operator<=>(const Triad234&, const Triad234&) = default;
};

/// 4:5:6 triad on pitch classes: Major(c) = {c, c+4, c+7}, Minor(c) = {c, c+3, c+7}.
struct Triad456 {
  int root_pc = 0;
  TriadQuality quality = TriadQuality::Major;

  [[nodiscard]] std::array<int, 3> pitch_classes() const;
  friend constexpr bool operator==(const Triad456&, const Triad456&) = default;
  friend constexpr auto operator<=>(const Triad456&, const Triad456&) = default;
};

Triad234 apply_plr(const Triad234& t, PlrMove move);
Triad456 apply_plr(const Triad456& t, PlrMove move);

/// Moves applied left to right, e.g. "PL" applies P first.
std::vector<PlrMove> parse_moves(std::string_view moves);
Triad234 apply_moves(Triad234 t, const std::vector<PlrMove>& moves);
Triad456 apply_moves(Triad456 t, const std::vector<PlrMove>& moves);

char to_char(PlrMove move);
std::string_view to_string(TriadQuality quality);

/// Class of a 2:3:4 note in the finite Tonnetz: mu_2 reduced into [-9, 9].
std::int64_t note_class_234(FreqRatio note);

struct ReachLevel {
  int moves = 0;
  int count = 0;
  std::set<std::int64_t> classes;  ///< note classes (2:3:4) or pitch classes (4:5:6)
};

inline constexpr int kMaxReachMoves = 12;

std::vector<ReachLevel> reachable_note_classes(const Triad234& start, int max_moves);
std::vector<ReachLevel> reachable_note_classes(const Triad456& start, int max_moves);

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Plane embedding: octave = (+2, 0), fifth = (+1, +1), fourth = (+1, -1).
LatticePoint lattice_point(FreqRatio note);
/// Vertices in the order root, middle, top.
std::array<LatticePoint, 3> lattice_coordinates(const Triad234& t);

/// 12-EDO pitch class name (C = 0) using the Pyth-2 spellings.
std::string_view pitch_class_name(int pc);

}  // namespace tritave
