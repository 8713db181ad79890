/**
 * @file export.hpp
 * @brief Scala .scl files, CSV/JSON tables, progression files, DOT Tonnetz
 *        paths and the table-verification report.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tritave/harmony.hpp"
#include "tritave/notation.hpp"
#include "tritave/ratio.hpp"

namespace tritave {

// ---------------------------------------------------------------------------
// Scala

enum class SclScale { Pyth3Just, Edt19, Pyth2Just, Edo12 };

std::optional<SclScale> parse_scl_scale(std::string_view text);
std::string_view to_string(SclScale scale);

/// Pitches of degrees 1..N in cents; the last entry is the period.
std::vector<double> scale_cents(SclScale scale);

/// Line 1 description, line 2 note count, then degrees 1..N with the period
/// last. Just pitches are "N/D", equal pitches cents with five decimals.
std::string emit_scl(SclScale scale, std::string_view description);

struct SclFile {
  std::string description;
  std::vector<double> cents;  ///< one per pitch line
};

/// Minimal reader: skips '!' comments, accepts "N/D", integers and decimals.
SclFile parse_scl(std::string_view text);

// ---------------------------------------------------------------------------
// Tables

enum class TableId { T1, T2, Diff, PLR456, PLR234, Purity234, Purity456 };
enum class TableFormat { Csv, Json };

inline constexpr TableId kAllTables[] = {TableId::T1,     TableId::T2,        TableId::Diff,
                                         TableId::PLR456, TableId::PLR234,    TableId::Purity234,
                                         TableId::Purity456};

std::optional<TableId> parse_table_id(std::string_view text);
std::string_view to_string(TableId id);

struct TableCell {
  std::string text;
  bool integer = false;  ///< rendered as a JSON number
};

struct TableData {
  std::vector<std::string> header;
  std::vector<std::vector<TableCell>> rows;
};

struct TableOptions {
  FreqRatio comma = kComma;
  std::int64_t diff_lo = -41;  ///< degree range of the Diff table
  std::int64_t diff_hi = 46;
};

TableData build_table(TableId id, const TableOptions& options = {});
std::string render_csv(const TableData& table);
std::string render_json(TableId id, const TableData& table);
std::string emit_table(TableId id, TableFormat format, const TableOptions& options = {});

/// Deviation text: sign and two decimals.
std::string format_deviation(double cents_value);

// ---------------------------------------------------------------------------
// Progressions and DOT

class ProgressionError : public ParseError {
 public:
  ProgressionError(int line, const std::string& message);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

struct ProgressionChord {
  int line = 0;
  Chord chord;
  ChordQuality quality = ChordQuality::Other;
};

/// Three Pyth-3 note names per line; '#' at the start of a token begins a
/// comment. Blank lines are ignored.
std::vector<ProgressionChord> parse_progression(std::string_view text);

struct DotOutput {
  std::string text;
  std::vector<int> flagged_lines;  ///< source lines of chords classified as Other
};

/// One node per note (sorted by exponent vector), one cluster per chord with
/// a circled-number centroid, and a chain of edges between centroids.
DotOutput emit_tonnetz_path(const std::vector<ProgressionChord>& progression);

// ---------------------------------------------------------------------------
// Verification

struct VerifyConfig {
  FreqRatio comma = kComma;
};

struct VerifyCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifySection {
  std::string name;
  bool table = false;  ///< a golden table rather than a spot check
  std::vector<VerifyCheck> checks;
  std::string error;  ///< set when the section threw

  [[nodiscard]] bool passed() const;
};

struct VerifyReport {
  std::vector<VerifySection> sections;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] int table_sections() const;
  [[nodiscard]] const VerifySection* find(std::string_view name) const;
};

VerifyReport verify_tables(const VerifyConfig& config = {});
/// One line per section, failing checks listed beneath.
std::string format_report(const VerifyReport& report);

}  // namespace tritave
