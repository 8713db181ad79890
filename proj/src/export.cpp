#include "tritave/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "tritave/scales.hpp"
#include "tritave/tonnetz.hpp"
#include "tritave/tuning_theory.hpp"

namespace tritave {

namespace {

std::string printf_double(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

std::string fraction_text(FreqRatio r) {
  const Fraction f = to_fraction(r);
  return f.numerator.str() + "/" + f.denominator.str();
}

TableCell text(std::string s) { return {std::move(s), false}; }
TableCell integer(std::int64_t n) { return {std::to_string(n), true}; }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (const char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

const ScaleSystem& system_of(SclScale scale) {
  switch (scale) {
    case SclScale::Pyth3Just:
    case SclScale::Edt19: return standard_system(SystemId::Pyth3);
    case SclScale::Pyth2Just:
    case SclScale::Edo12: return standard_system(SystemId::Pyth2);
  }
  throw std::invalid_argument("unknown scale");
}

bool is_just(SclScale scale) { return scale == SclScale::Pyth3Just || scale == SclScale::Pyth2Just; }

// Name of a finite-Tonnetz note class (harmonic degree in [-9, 9]).
std::string class_name_234(std::int64_t harmonic) {
  const std::int64_t degree = harmonic_to_scale_degree(harmonic, standard_system(SystemId::Pyth3));
  return std::string(kPyth3BaseNames.at(static_cast<std::size_t>(degree + 9)));
}

std::string ratio_text(const std::array<std::int64_t, 3>& r) {
  return std::to_string(r[0]) + ":" + std::to_string(r[1]) + ":" + std::to_string(r[2]);
}

std::string reciprocal_text(const std::array<std::int64_t, 3>& d) {
  return "1/" + std::to_string(d[0]) + ":1/" + std::to_string(d[1]) + ":1/" + std::to_string(d[2]);
}

struct PurityRow {
  std::string_view label;
  std::string_view notes;
};

constexpr PurityRow kPurity234Rows[] = {
    {"", "A E A'"}, {"", "A D A'"}, {"", "A E B'"}, {"", "A D G"}};

constexpr PurityRow kPurity456Rows[] = {
    {"Major", "C E G"},        {"Major, 1st inv.", "E G C'"}, {"Major, 2nd inv.", "G C' E'"},
    {"Minor", "A C E"},        {"Minor, 1st inv.", "C E A'"}, {"Minor, 2nd inv.", "E A' C'"},
    {"Augmented", "C E G#"},   {"Diminished", "B D F"}};

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Chord chord_from_names(std::string_view names) {
  std::vector<FreqRatio> notes;
  for (const auto& w : split_words(names)) notes.push_back(parse_note(w));
  return Chord::from_notes(notes);
}

Chord456 chord456_from_names(std::string_view names) {
  std::vector<FreqRatio> notes;
  for (const auto& w : split_words(names)) notes.push_back(parse_pyth2_note(w));
  return Chord456::from_pyth2_notes(notes);
}

TableData deviation_table_data(TablePair pair, const TableOptions& options) {
  TableData t;
  t.header = {"degree", "boundary",       "note",        "ratio",          "monzo",
              "harmonic_degree", "equal_exponent", "equal_value", "deviation_cents"};
  for (const ScaleRow& row : deviation_table(pair, options.comma)) {
    const double equal_value = std::pow(2.0, row.equal_pitch.value / 1200.0);
    t.rows.push_back({integer(row.scale_degree), text(row.boundary ? "true" : "false"), text(row.note),
                      text(fraction_text(row.just_ratio)), text(to_monzo_string(row.just_ratio)),
                      integer(row.harmonic_degree),
                      text(std::to_string(row.exponent_numerator) + "/" +
                           std::to_string(row.exponent_denominator)),
                      text(printf_double("%.4f", equal_value)), text(format_deviation(row.deviation_cents))});
  }
  return t;
}

TableData diff_table_data(const TableOptions& options) {
  TableData t;
  t.header = {"degree", "pyth3_note", "pyth2_note", "pyth3_ratio", "pyth2_ratio", "quotient", "comma_power"};
  if (options.diff_lo > options.diff_hi) return t;
  for (const DifferenceRow& row : pyth2_pyth3_differences(options.diff_lo, options.diff_hi, options.comma)) {
    const std::int64_t k = options.comma.v != 0 ? row.quotient.v / options.comma.v : 0;
    t.rows.push_back({integer(row.scale_degree), text(row.pyth3_name), text(row.pyth2_name),
                      text(fraction_text(row.pyth3_note)), text(fraction_text(row.pyth2_note)),
                      text(fraction_text(row.quotient)), integer(k)});
  }
  return t;
}

template <typename NameOf>
TableData reach_table_data(const std::vector<ReachLevel>& levels, const std::vector<std::int64_t>& universe,
                           NameOf name_of_class) {
  TableData t;
  t.header = {"moves", "count", "unreached"};
  for (const ReachLevel& level : levels) {
    std::vector<std::string> missing;
    for (const std::int64_t c : universe) {
      if (!level.classes.contains(c)) missing.push_back(name_of_class(c));
    }
    t.rows.push_back({integer(level.moves), integer(level.count), text(join(missing, " "))});
  }
  return t;
}

TableData plr456_data() {
  std::vector<std::int64_t> universe(12);
  for (int i = 0; i < 12; ++i) universe[static_cast<std::size_t>(i)] = i;
  return reach_table_data(reachable_note_classes(Triad456{0, TriadQuality::Major}, 3), universe,
                          [](std::int64_t pc) { return std::string(pitch_class_name(static_cast<int>(pc))); });
}

TableData plr234_data() {
  // Class universe ordered by scale degree, matching the name order.
  std::vector<std::int64_t> universe;
  const ScaleSystem& pyth3 = standard_system(SystemId::Pyth3);
  for (std::int64_t d = pyth3.degree_window.lo; d <= pyth3.degree_window.hi; ++d) {
    universe.push_back(scale_to_harmonic_degree(d, pyth3));
  }
  const Triad234 tonic{parse_note("A"), TriadQuality::Major};
  return reach_table_data(reachable_note_classes(tonic, 8), universe, class_name_234);
}

TableData purity234_data() {
  TableData t;
  t.header = {"type", "chord", "ratio", "reciprocal", "d_B", "base_note", "base_ratio",
              "d_O",  "overtone_note", "overtone_ratio"};
  for (const PurityRow& row : kPurity234Rows) {
    const Chord chord = chord_from_names(row.notes);
    const PurityReport p = purity(chord);
    t.rows.push_back({text(std::string(to_string(classify(chord)))), text(chord.to_string()),
                      text(ratio_text(p.ratio)), text(reciprocal_text(p.reciprocal_denominators)),
                      integer(p.d_base), text(name_of(*p.base_note).to_string()),
                      text(fraction_text(*p.base_note)), integer(p.d_overtone),
                      text(name_of(*p.overtone_note).to_string()), text(fraction_text(*p.overtone_note))});
  }
  return t;
}

TableData purity456_data() {
  TableData t;
  t.header = {"type", "chord", "ratio", "reciprocal", "d_B", "d_O"};
  for (const PurityRow& row : kPurity456Rows) {
    const Chord456 chord = chord456_from_names(row.notes);
    const PurityReport p = purity(chord);
    t.rows.push_back({text(std::string(row.label)), text(chord.to_string()), text(ratio_text(p.ratio)),
                      text(reciprocal_text(p.reciprocal_denominators)), integer(p.d_base),
                      integer(p.d_overtone)});
  }
  return t;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (const char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      return false;
    }
    if (extra > 0 && i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

/// ①..⑳ for the first twenty chords, then "(n)".
std::string circled_number(std::size_t n) {
  if (n >= 1 && n <= 20) {
    std::string out = "\xE2\x91";
    out += static_cast<char>(0xA0 + n - 1);
    return out;
  }
  return "(" + std::to_string(n) + ")";
}

std::string node_id(FreqRatio note) {
  auto part = [](std::int64_t x) { return (x < 0 ? "m" : "") + std::to_string(std::llabs(x)); };
  return "n_" + part(note.u) + "_" + part(note.v);
}

// Lattice units to DOT inches.
constexpr double kDotScaleX = 0.6;
constexpr double kDotScaleY = 1.0;

std::string dot_pos(double x, double y) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f,%.2f!", x * kDotScaleX, y * kDotScaleY);
  return buf;
}

// ---- verification helpers --------------------------------------------------

void expect_eq(VerifySection& s, std::string name, const std::string& expected, const std::string& computed) {
  s.checks.push_back({std::move(name), expected, computed, expected == computed});
}

void expect_near(VerifySection& s, std::string name, double expected, double computed, double tol) {
  s.checks.push_back({std::move(name), printf_double("%.4f", expected), printf_double("%.4f", computed),
                      std::fabs(expected - computed) <= tol});
}

template <typename Body>
VerifySection run_section(std::string name, bool table, Body body) {
  VerifySection s;
  s.name = std::move(name);
  s.table = table;
  try {
    body(s);
  } catch (const std::exception& e) {
    s.error = e.what();
  }
  return s;
}

struct GoldenScaleRow {
  std::int64_t degree;
  std::string_view note;
  std::string_view ratio;
  std::int64_t harmonic;
  double deviation;
};

// Reference values of the two deviation tables; the first row of
// each and the last row of the second are the parenthesised boundary rows.
constexpr GoldenScaleRow kTable1[] = {
    {-6, "Ab", "512/729", -6, -11.73}, {-5, "A", "3/4", 1, 1.96},        {-4, "Bb", "64/81", -4, -7.82},
    {-3, "B", "27/32", 3, 5.87},       {-2, "C", "8/9", -2, -3.91},      {-1, "C#", "243/256", 5, 9.78},
    {0, "D", "1/1", 0, 0.0},           {1, "Eb", "256/243", -5, -9.78}, {2, "E", "9/8", 2, 3.91},
    {3, "F", "32/27", -3, -5.87},      {4, "F#", "81/64", 4, 7.82},      {5, "G", "4/3", -1, -1.96},
    {6, "G#", "729/512", 6, 11.73}};

constexpr GoldenScaleRow kTable2[] = {
    {-10, "B'v", "9/16", -4, 4.94},   {-9, "F,", "16/27", 4, -4.94},     {-8, "F#,", "81/128", -7, 8.64},
    {-7, "G,", "2/3", 1, -1.23},      {-6, "Ab", "512/729", 9, -11.11},  {-5, "A", "3/4", -2, 2.47},
    {-4, "Bb", "64/81", 6, -7.41},    {-3, "B", "27/32", -5, 6.17},      {-2, "C", "8/9", 3, -3.70},
    {-1, "C#", "243/256", -8, 9.88},  {0, "D", "1/1", 0, 0.0},           {1, "Eb", "256/243", 8, -9.88},
    {2, "E", "9/8", -3, 3.70},        {3, "F", "32/27", 5, -6.17},       {4, "F#", "81/64", -6, 7.41},
    {5, "G", "4/3", 2, -2.47},        {6, "G#", "729/512", -9, 11.11},   {7, "A'", "3/2", -1, 1.24},
    {8, "Bb'", "128/81", 7, -8.64},   {9, "B'", "27/16", -4, 4.94},      {10, "F,^", "16/9", 4, -4.94}};

constexpr double kDeviationTolerance = 0.01;

void verify_scale_table(VerifySection& s, TablePair pair, std::span<const GoldenScaleRow> golden,
                        FreqRatio comma) {
  const auto rows = deviation_table(pair, comma);
  expect_eq(s, "row count", std::to_string(golden.size()), std::to_string(rows.size()));
  for (std::size_t i = 0; i < std::min(rows.size(), golden.size()); ++i) {
    const auto& g = golden[i];
    const auto& r = rows[i];
    const std::string tag = "degree " + std::to_string(g.degree);
    expect_eq(s, tag + " degree", std::to_string(g.degree), std::to_string(r.scale_degree));
    expect_eq(s, tag + " note", std::string(g.note), r.note);
    expect_eq(s, tag + " ratio", std::string(g.ratio), fraction_text(r.just_ratio));
    expect_eq(s, tag + " harmonic degree", std::to_string(g.harmonic), std::to_string(r.harmonic_degree));
    expect_near(s, tag + " deviation", g.deviation, r.deviation_cents, kDeviationTolerance);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Scala

std::optional<SclScale> parse_scl_scale(std::string_view text) {
  if (text == "pyth3" || text == "pyth3-just") return SclScale::Pyth3Just;
  if (text == "edt19" || text == "19-edt") return SclScale::Edt19;
  if (text == "pyth2" || text == "pyth2-just") return SclScale::Pyth2Just;
  if (text == "edo12" || text == "12-edo") return SclScale::Edo12;
  return std::nullopt;
}

std::string_view to_string(SclScale scale) {
  switch (scale) {
    case SclScale::Pyth3Just: return "pyth3";
    case SclScale::Edt19: return "edt19";
    case SclScale::Pyth2Just: return "pyth2";
    case SclScale::Edo12: return "edo12";
  }
  return "?";
}

std::vector<double> scale_cents(SclScale scale) {
  const ScaleSystem& system = system_of(scale);
  std::vector<double> out;
  for (std::int64_t d = 1; d <= system.notes_per_period; ++d) {
    out.push_back(is_just(scale) ? cents(just_note_at_degree(d, system)).value
                                 : equal_pitch_at_degree(d, system).value);
  }
  return out;
}

std::string emit_scl(SclScale scale, std::string_view description) {
  const ScaleSystem& system = system_of(scale);
  std::string desc(description);
  std::replace_if(desc.begin(), desc.end(), [](char c) { return c == '\n' || c == '\r'; }, ' ');

  std::string out = desc + "\n" + std::to_string(system.notes_per_period) + "\n";
  for (std::int64_t d = 1; d <= system.notes_per_period; ++d) {
    if (is_just(scale)) {
      out += fraction_text(just_note_at_degree(d, system));
    } else {
      out += printf_double("%.5f", equal_pitch_at_degree(d, system).value);
    }
    out += '\n';
  }
  return out;
}

SclFile parse_scl(std::string_view text) {
  SclFile file;
  std::optional<std::size_t> expected;
  bool have_description = false;
  for (const std::string& raw : split_lines(text)) {
    if (!raw.empty() && raw[0] == '!') continue;
    if (!have_description) {
      file.description = raw;
      have_description = true;
      continue;
    }
    const std::string_view line = trim(raw);
    const std::string_view token = line.substr(0, line.find_first_of(" \t"));
    if (!expected) {
      std::size_t count = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), count);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("bad note count '" + std::string(token) + "'");
      }
      expected = count;
      continue;
    }
    if (token.empty()) continue;
    if (token.find('.') != std::string_view::npos) {
      double value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("bad cents value '" + std::string(token) + "'");
      }
      file.cents.push_back(value);
    } else {
      const auto slash = token.find('/');
      const std::string_view num_text = token.substr(0, slash);
      const std::string_view den_text = slash == std::string_view::npos ? "1" : token.substr(slash + 1);
      std::uint64_t num = 0, den = 0;
      const auto r1 = std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
      const auto r2 = std::from_chars(den_text.data(), den_text.data() + den_text.size(), den);
      if (r1.ec != std::errc() || r1.ptr != num_text.data() + num_text.size() || r2.ec != std::errc() ||
          r2.ptr != den_text.data() + den_text.size() || num == 0 || den == 0) {
        throw ParseError("bad ratio '" + std::string(token) + "'");
      }
      file.cents.push_back(static_cast<double>(
          1200.0L * std::log2(static_cast<long double>(num) / static_cast<long double>(den))));
    }
  }
  if (!expected) throw ParseError("missing note count");
  if (file.cents.size() != *expected) {
    throw ParseError("expected " + std::to_string(*expected) + " pitches, found " +
                     std::to_string(file.cents.size()));
  }
  return file;
}

// ---------------------------------------------------------------------------
// Tables

std::optional<TableId> parse_table_id(std::string_view text) {
  for (const TableId id : kAllTables) {
    std::string name(to_string(id));
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (text == name || text == lower) return id;
  }
  return std::nullopt;
}

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::T1: return "T1";
    case TableId::T2: return "T2";
    case TableId::Diff: return "Diff";
    case TableId::PLR456: return "PLR456";
    case TableId::PLR234: return "PLR234";
    case TableId::Purity234: return "Purity234";
    case TableId::Purity456: return "Purity456";
  }
  return "?";
}

std::string format_deviation(double cents_value) {
  // Values that round to zero print unsigned rather than as -0.00.
  if (std::fabs(cents_value) < 0.005) return "0.00";
  return printf_double("%+.2f", cents_value);
}

TableData build_table(TableId id, const TableOptions& options) {
  switch (id) {
    case TableId::T1: return deviation_table_data(TablePair::Pyth2VsEdo12, options);
    case TableId::T2: return deviation_table_data(TablePair::Pyth3VsEdt19, options);
    case TableId::Diff: return diff_table_data(options);
    case TableId::PLR456: return plr456_data();
    case TableId::PLR234: return plr234_data();
    case TableId::Purity234: return purity234_data();
    case TableId::Purity456: return purity456_data();
  }
  throw std::invalid_argument("unknown table");
}

std::string render_csv(const TableData& table) {
  std::string out;
  std::vector<std::string> cells;
  for (const auto& h : table.header) cells.push_back(csv_escape(h));
  out += join(cells, ",") + "\n";
  for (const auto& row : table.rows) {
    cells.clear();
    for (const auto& c : row) cells.push_back(csv_escape(c.text));
    out += join(cells, ",") + "\n";
  }
  return out;
}

std::string render_json(TableId id, const TableData& table) {
  nlohmann::ordered_json doc;
  doc["table"] = std::string(to_string(id));
  doc["columns"] = table.header;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i) {
      if (row[i].integer) {
        obj[table.header[i]] = std::stoll(row[i].text);
      } else {
        obj[table.header[i]] = row[i].text;
      }
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string emit_table(TableId id, TableFormat format, const TableOptions& options) {
  const TableData data = build_table(id, options);
  return format == TableFormat::Csv ? render_csv(data) : render_json(id, data);
}

// ---------------------------------------------------------------------------
// Progressions and DOT

ProgressionError::ProgressionError(int line, const std::string& message)
    : ParseError("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<ProgressionChord> parse_progression(std::string_view text) {
  if (!valid_utf8(text)) throw ProgressionError(0, "input is not valid UTF-8");
  std::vector<ProgressionChord> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++line_no;
    std::vector<std::string> tokens;
    for (const auto& w : split_words(text.substr(start, end - start))) {
      if (w.front() == '#') break;
      tokens.push_back(w);
    }
    start = end + 1;
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw ProgressionError(line_no, "expected 3 note names, got " + std::to_string(tokens.size()));
    }
    try {
      std::vector<FreqRatio> notes;
      for (const auto& t : tokens) notes.push_back(parse_note(t));
      const Chord chord = Chord::from_notes(notes);
      out.push_back({line_no, chord, classify(chord)});
    } catch (const std::exception& e) {
      throw ProgressionError(line_no, e.what());
    }
  }
  return out;
}

DotOutput emit_tonnetz_path(const std::vector<ProgressionChord>& progression) {
  DotOutput result;
  std::set<FreqRatio> notes;
  for (const auto& pc : progression) notes.insert(pc.chord.notes.begin(), pc.chord.notes.end());

  std::string& out = result.text;
  out += "digraph tonnetz {\n";
  out += "  graph [layout=neato, overlap=true, splines=true];\n";
  out += "  node [shape=circle, fontsize=12];\n";
  for (const FreqRatio n : notes) {
    const LatticePoint p = lattice_point(n);
    out += "  \"" + node_id(n) + "\" [label=\"" + name_of(n).to_string() + "\", pos=\"" +
           dot_pos(static_cast<double>(p.x), static_cast<double>(p.y)) + "\"];\n";
  }
  for (std::size_t i = 0; i < progression.size(); ++i) {
    const auto& pc = progression[i];
    const std::string id = "chord_" + std::to_string(i + 1);
    const bool flagged = pc.quality == ChordQuality::Other;
    if (flagged) result.flagged_lines.push_back(pc.line);
    double cx = 0, cy = 0;
    for (const FreqRatio n : pc.chord.notes) {
      const LatticePoint p = lattice_point(n);
      cx += static_cast<double>(p.x) / 3.0;
      cy += static_cast<double>(p.y) / 3.0;
    }
    std::string label = circled_number(i + 1);
    if (flagged) label += " Other";
    out += "  subgraph cluster_" + id + " {\n";
    out += "    label=\"" + label + "\";\n";
    out += "    style=filled;\n";
    out += std::string("    fillcolor=\"") + (flagged ? "#f4c7c3" : "#dfe9f6") + "\";\n";
    out += "    \"" + id + "\" [shape=plaintext, label=\"" + label + "\", pos=\"" + dot_pos(cx, cy) + "\"];\n";
    out += "  }\n";
    for (const FreqRatio n : pc.chord.notes) {
      out += "  \"" + id + "\" -> \"" + node_id(n) + "\" [dir=none, style=dotted];\n";
    }
  }
  for (std::size_t i = 1; i < progression.size(); ++i) {
    out += "  \"chord_" + std::to_string(i) + "\" -> \"chord_" + std::to_string(i + 1) + "\" [style=bold];\n";
  }
  out += "}\n";
  return result;
}

// ---------------------------------------------------------------------------
// Verification

bool VerifySection::passed() const {
  return error.empty() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

bool VerifyReport::passed() const {
  return std::all_of(sections.begin(), sections.end(), [](const VerifySection& s) { return s.passed(); });
}

int VerifyReport::table_sections() const {
  return static_cast<int>(std::count_if(sections.begin(), sections.end(), [](const VerifySection& s) { return s.table; }));
}

const VerifySection* VerifyReport::find(std::string_view name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

VerifyReport verify_tables(const VerifyConfig& config) {
  VerifyReport report;
  const FreqRatio comma = config.comma;
  TableOptions options;
  options.comma = comma;

  report.sections.push_back(run_section("T1", true, [&](VerifySection& s) {
    verify_scale_table(s, TablePair::Pyth2VsEdo12, kTable1, comma);
  }));
  report.sections.push_back(run_section("T2", true, [&](VerifySection& s) {
    verify_scale_table(s, TablePair::Pyth3VsEdt19, kTable2, comma);
  }));

  report.sections.push_back(run_section("Diff", true, [&](VerifySection& s) {
    const std::vector<std::int64_t> degrees = {-37, -30, -25, -18, -6, 25, 37, 44};
    const std::vector<std::string> pyth3 = {"Ebvv", "Bb'vv", "Abv", "Ebv", "Ab", "G#^", "C#^^", "G#^^"};
    const std::vector<std::string> pyth2 = {"C#,,,", "G#,,,", "C#,,", "G#,,", "G#,", "Eb''", "Eb'''", "Bb''''"};
    const TableData t = build_table(TableId::Diff, options);
    expect_eq(s, "row count", std::to_string(degrees.size()), std::to_string(t.rows.size()));
    for (std::size_t i = 0; i < std::min(degrees.size(), t.rows.size()); ++i) {
      const auto& row = t.rows[i];
      const std::string tag = "row " + std::to_string(i + 1);
      expect_eq(s, tag + " degree", std::to_string(degrees[i]), row[0].text);
      expect_eq(s, tag + " Pyth-3 note", pyth3[i], row[1].text);
      expect_eq(s, tag + " Pyth-2 note", pyth2[i], row[2].text);
      expect_eq(s, tag + " comma power", i < 5 ? "-1" : "1", row[6].text);
    }
  }));

  report.sections.push_back(run_section("PLR456", true, [&](VerifySection& s) {
    const TableData t = build_table(TableId::PLR456, options);
    const std::vector<std::string> counts = {"3", "6", "11", "12"};
    expect_eq(s, "row count", "4", std::to_string(t.rows.size()));
    for (std::size_t k = 0; k < std::min(counts.size(), t.rows.size()); ++k) {
      expect_eq(s, "k=" + std::to_string(k), counts[k], t.rows[k][1].text);
    }
    if (t.rows.size() > 2) expect_eq(s, "unreached at k=2", "F#", t.rows[2][2].text);
  }));

  report.sections.push_back(run_section("PLR234", true, [&](VerifySection& s) {
    const TableData t = build_table(TableId::PLR234, options);
    expect_eq(s, "row count", "9", std::to_string(t.rows.size()));
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
      expect_eq(s, "k=" + std::to_string(k), std::to_string(3 + 2 * k), t.rows[k][1].text);
    }
  }));

  report.sections.push_back(run_section("Purity234", true, [&](VerifySection& s) {
    struct Golden {
      std::string_view type, ratio, reciprocal, d_b, base, d_o, overtone;
    };
    constexpr Golden golden[] = {
        {"Major", "2:3:4", "1/6:1/4:1/3", "2", "Ev", "3", "A'^"},
        {"Minor", "3:4:6", "1/4:1/3:1/2", "3", "Av", "2", "D^"},
        {"Augmented", "4:6:9", "1/9:1/6:1/4", "4", "B'vv", "4", "A^^"},
        {"Diminished", "9:12:16", "1/16:1/12:1/9", "9", "Avv", "9", "G^^"}};
    const TableData t = build_table(TableId::Purity234, options);
    expect_eq(s, "row count", "4", std::to_string(t.rows.size()));
    for (std::size_t i = 0; i < std::min<std::size_t>(4, t.rows.size()); ++i) {
      const auto& g = golden[i];
      const auto& row = t.rows[i];
      const std::string tag = std::string(g.type);
      expect_eq(s, tag + " type", std::string(g.type), row[0].text);
      expect_eq(s, tag + " ratio", std::string(g.ratio), row[2].text);
      expect_eq(s, tag + " reciprocal", std::string(g.reciprocal), row[3].text);
      expect_eq(s, tag + " d_B", std::string(g.d_b), row[4].text);
      expect_eq(s, tag + " base note", std::string(g.base), row[5].text);
      expect_eq(s, tag + " d_O", std::string(g.d_o), row[7].text);
      expect_eq(s, tag + " overtone", std::string(g.overtone), row[8].text);
    }
  }));

  report.sections.push_back(run_section("Purity456", true, [&](VerifySection& s) {
    struct Golden {
      std::string_view ratio, reciprocal, d_b, d_o;
    };
    constexpr Golden golden[] = {
        {"4:5:6", "1/15:1/12:1/10", "4", "10"},    {"5:6:8", "1/24:1/20:1/15", "5", "15"},
        {"3:4:5", "1/20:1/15:1/12", "3", "12"},    {"10:12:15", "1/6:1/5:1/4", "10", "4"},
        {"12:15:20", "1/5:1/4:1/3", "12", "3"},    {"15:20:24", "1/8:1/6:1/5", "15", "5"},
        {"16:20:25", "1/25:1/20:1/16", "16", "16"}, {"25:30:36", "1/36:1/30:1/25", "25", "25"}};
    const TableData t = build_table(TableId::Purity456, options);
    expect_eq(s, "row count", "8", std::to_string(t.rows.size()));
    for (std::size_t i = 0; i < std::min<std::size_t>(8, t.rows.size()); ++i) {
      const auto& g = golden[i];
      const auto& row = t.rows[i];
      const std::string tag = row[1].text;
      expect_eq(s, tag + " ratio", std::string(g.ratio), row[2].text);
      expect_eq(s, tag + " reciprocal", std::string(g.reciprocal), row[3].text);
      expect_eq(s, tag + " d_B", std::string(g.d_b), row[4].text);
      expect_eq(s, tag + " d_O", std::string(g.d_o), row[5].text);
    }
  }));

  report.sections.push_back(run_section("Comma", false, [&](VerifySection& s) {
    expect_eq(s, "3^12/2^19", "531441/524288", fraction_text(comma));
    expect_near(s, "cents", 23.460, cents(comma).value, 0.001);
  }));

  report.sections.push_back(run_section("Continued fraction", false, [&](VerifySection& s) {
    const auto terms = cf_coefficients(8);
    std::vector<std::string> parts;
    for (const auto a : terms) parts.push_back(std::to_string(a));
    expect_eq(s, "prefix", "1 1 1 2 2 3 1 5", join(parts, " "));
    const auto c = convergents(7);
    expect_eq(s, "convergent 5", "12/19", std::to_string(c[4].p) + "/" + std::to_string(c[4].q));
    expect_eq(s, "convergent 7", "53/84", std::to_string(c[6].p) + "/" + std::to_string(c[6].q));
  }));

  report.sections.push_back(run_section("Keyboard", false, [&](VerifySection& s) {
    const auto labels = keyboard_labels();
    std::set<std::string> names;
    for (const auto& l : labels) names.insert(l.name.to_string());
    expect_eq(s, "keys", "88", std::to_string(labels.size()));
    expect_eq(s, "distinct names", "88", std::to_string(names.size()));
    expect_eq(s, "MIDI 21", "Bvv", labels.front().name.to_string());
    expect_eq(s, "MIDI 62", "D", labels[62 - 21].name.to_string());
    expect_eq(s, "MIDI 108", "Bb'^^", labels.back().name.to_string());
    int white = 0;
    for (std::int64_t h = -9; h <= 9; ++h) white += key_color_by_harmonic_degree(h) == KeyColor::White;
    expect_eq(s, "white/black per tritave", "11/8", std::to_string(white) + "/" + std::to_string(19 - white));
  }));

  report.sections.push_back(run_section("Equal temperaments", false, [&](VerifySection& s) {
    const ScaleSystem& edo = standard_system(SystemId::Pyth2);
    const ScaleSystem& edt = standard_system(SystemId::Pyth3);
    const double gap = equal_pitch_at_degree(1, edt).value - equal_pitch_at_degree(1, edo).value;
    expect_near(s, "per-step gap", 0.103, gap, 0.001);
    double max_gap = 0;
    for (std::int64_t d = kPianoDegrees.lo; d <= kPianoDegrees.hi; ++d) {
      max_gap = std::max(max_gap, std::fabs(equal_pitch_at_degree(d, edt).value - equal_pitch_at_degree(d, edo).value));
    }
    s.checks.push_back({"max 12-EDO vs 19-EDT on the piano", "< 5", printf_double("%.4f", max_gap), max_gap < 5.0});
    double max_dev = 0;
    for (const auto& row : deviation_table(TablePair::Pyth3VsEdt19)) {
      max_dev = std::max(max_dev, std::fabs(row.deviation_cents));
    }
    s.checks.push_back({"max Pyth-3 vs 19-EDT", "<= 11.12", printf_double("%.4f", max_dev), max_dev <= 11.12});
  }));

  return report;
}

std::string format_report(const VerifyReport& report) {
  std::string out;
  for (const auto& s : report.sections) {
    const std::size_t passed =
        static_cast<std::size_t>(std::count_if(s.checks.begin(), s.checks.end(), [](const VerifyCheck& c) { return c.pass; }));
    out += std::string(s.passed() ? "PASS" : "FAIL") + "  " + s.name + " (" + std::to_string(passed) + "/" +
           std::to_string(s.checks.size()) + " checks)\n";
    if (!s.error.empty()) out += "      error: " + s.error + "\n";
    for (const auto& c : s.checks) {
      if (!c.pass) out += "      " + c.name + ": expected " + c.expected + ", computed " + c.computed + "\n";
    }
  }
  out += report.passed() ? "verify: all sections passed\n" : "verify: FAILED\n";
  return out;
}

}  // namespace tritave
