#include "doctest.h"

#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "tritave/export.hpp"

using namespace tritave;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string read_sample() {
  std::ifstream in(std::string(TRITAVE_DATA_DIR) + "/ave_16b_21a.prog");
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("scl layout") {
  const auto lines = lines_of(emit_scl(SclScale::Pyth3Just, "Pyth-3 just"));
  REQUIRE(lines.size() == 21);
  CHECK(lines[0] == "Pyth-3 just");
  CHECK(lines[1] == "19");
  CHECK(lines[7 + 1] == "3/2");
  CHECK(lines.back() == "3/1");

  const auto edt = lines_of(emit_scl(SclScale::Edt19, "19-EDT"));
  CHECK(edt[1] == "19");
  CHECK(std::fabs(std::stod(edt[2]) - oracle::kEdt19StepCents) < 1e-5);
  CHECK(edt[2] == "100.10289");
  CHECK(edt.back() == "1901.95500");

  const auto p2 = lines_of(emit_scl(SclScale::Pyth2Just, "Pyth-2"));
  CHECK(p2[1] == "12");
  CHECK(p2.back() == "2/1");
  const auto edo = lines_of(emit_scl(SclScale::Edo12, "12-EDO"));
  CHECK(edo[2] == "100.00000");
  CHECK(edo.back() == "1200.00000");

  // Newlines in the description cannot break the layout.
  CHECK(lines_of(emit_scl(SclScale::Edo12, "a\nb"))[0] == "a b");
}

TEST_CASE("scl round trip") {
  for (const SclScale s : {SclScale::Pyth3Just, SclScale::Edt19, SclScale::Pyth2Just, SclScale::Edo12}) {
    const SclFile f = parse_scl(emit_scl(s, "x"));
    const auto source = scale_cents(s);
    REQUIRE(f.cents.size() == source.size());
    for (std::size_t i = 0; i < source.size(); ++i) CHECK(std::fabs(f.cents[i] - source[i]) < 1e-4);
    CHECK(emit_scl(s, "x") == emit_scl(s, "x"));
  }
}

TEST_CASE("scl reader accepts comments and rejects bad input") {
  const SclFile f = parse_scl("! test.scl\n!\nmy scale\n 2\n!\n 3/2\n 1200.0 cents\n");
  CHECK(f.description == "my scale");
  REQUIRE(f.cents.size() == 2);
  CHECK(f.cents[0] == doctest::Approx(701.955).epsilon(1e-6));
  CHECK(f.cents[1] == doctest::Approx(1200.0));
  CHECK_THROWS_AS(parse_scl("d\n3\n1/1\n"), ParseError);
  CHECK_THROWS_AS(parse_scl("d\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_scl("d\n1\n0/1\n"), ParseError);
  CHECK_THROWS_AS(parse_scl("d\n"), ParseError);
}

TEST_CASE("table CSV examples") {
  const std::string t2 = emit_table(TableId::T2, TableFormat::Csv);
  const auto rows = lines_of(t2);
  CHECK(rows.size() == 22);
  bool found = false;
  for (const auto& r : rows) {
    if (r.rfind("6,", 0) == 0) {
      CHECK(r.find("729/512") != std::string::npos);
      CHECK(r.find("+11.11") != std::string::npos);
      found = true;
    }
  }
  CHECK(found);
  CHECK(t2.find("-0.00") == std::string::npos);

  const auto plr = lines_of(emit_table(TableId::PLR234, TableFormat::Csv));
  CHECK(plr.back().rfind("8,19", 0) == 0);

  TableOptions empty;
  empty.diff_lo = 0;
  empty.diff_hi = 5;
  CHECK(lines_of(emit_table(TableId::Diff, TableFormat::Csv, empty)).size() == 1);
  empty.diff_lo = 5;
  empty.diff_hi = 0;
  CHECK(lines_of(emit_table(TableId::Diff, TableFormat::Csv, empty)).size() == 1);
}

TEST_CASE("CSV quoting") {
  const std::string csv = emit_table(TableId::Purity456, TableFormat::Csv);
  CHECK(csv.find("\"Major, 1st inv.\",E-G-C',5:6:8") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("tables are byte-stable and JSON mirrors CSV") {
  for (const TableId id : kAllTables) {
    const std::string a = emit_table(id, TableFormat::Csv);
    CHECK(a == emit_table(id, TableFormat::Csv));
    const std::string j = emit_table(id, TableFormat::Json);
    CHECK(j == emit_table(id, TableFormat::Json));
    const auto doc = nlohmann::json::parse(j);
    CHECK(doc["table"] == std::string(to_string(id)));
    CHECK(doc["rows"].size() + 1 == lines_of(a).size());
  }
  const auto doc = nlohmann::json::parse(emit_table(TableId::PLR456, TableFormat::Json));
  CHECK(doc["rows"][2]["count"] == 11);
  CHECK(doc["rows"][2]["unreached"] == "F#");
}

TEST_CASE("table ids") {
  CHECK(parse_table_id("T1") == TableId::T1);
  CHECK(parse_table_id("purity456") == TableId::Purity456);
  CHECK_FALSE(parse_table_id("T9").has_value());
  CHECK(format_deviation(-0.001) == "0.00");
  CHECK(format_deviation(1.2347) == "+1.23");
  CHECK(format_deviation(-11.1111) == "-11.11");
}

TEST_CASE("progression parsing") {
  const auto prog = parse_progression("# header\nA E A'   # tonic\n\n  A D A'\n");
  REQUIRE(prog.size() == 2);
  CHECK(prog[0].line == 2);
  CHECK(prog[0].quality == ChordQuality::Major);
  CHECK(prog[1].line == 4);
  CHECK(prog[1].quality == ChordQuality::Minor);
  // '#' inside a token is a sharp.
  CHECK(parse_progression("F# C# F#^\n")[0].chord.notes[1] == parse_note("F#"));

  try {
    parse_progression("A E A'\nA E\n");
    FAIL("expected an error");
  } catch (const ProgressionError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_progression("A E A'\n\nA Q A'\n");
    FAIL("expected an error");
  } catch (const ProgressionError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_progression("A A A\n"), ProgressionError);
  CHECK_THROWS_AS(parse_progression("A E \xFF\n"), ProgressionError);
}

TEST_CASE("DOT Tonnetz path for the sample progression") {
  const auto prog = parse_progression(read_sample());
  REQUIRE(prog.size() == 10);
  for (const auto& pc : prog) CHECK(pc.quality != ChordQuality::Other);
  const DotOutput dot = emit_tonnetz_path(prog);
  CHECK(count(dot.text, "subgraph cluster_chord_") == 10);
  CHECK(count(dot.text, "[style=bold]") == 9);
  CHECK(dot.flagged_lines.empty());
  CHECK(dot.text.find("\xE2\x91\xA0") != std::string::npos);  // circled one
  CHECK(dot.text.find("\xE2\x91\xA9") != std::string::npos);  // circled ten
  CHECK(dot.text == emit_tonnetz_path(prog).text);
  CHECK(dot.text.rfind("digraph tonnetz {", 0) == 0);
}

TEST_CASE("DOT nodes are sorted by exponent vector") {
  const DotOutput dot = emit_tonnetz_path(parse_progression("A E A'\nA D A'\n"));
  const std::regex node(R"re("n_(m?)(\d+)_(m?)(\d+)" \[label)re");
  std::vector<std::pair<long, long>> order;
  for (auto it = std::sregex_iterator(dot.text.begin(), dot.text.end(), node); it != std::sregex_iterator(); ++it) {
    const long u = std::stol((*it)[2]) * ((*it)[1] == "m" ? -1 : 1);
    const long v = std::stol((*it)[4]) * ((*it)[3] == "m" ? -1 : 1);
    order.emplace_back(u, v);
  }
  CHECK(order.size() == 4);
  CHECK(std::is_sorted(order.begin(), order.end()));
}

TEST_CASE("DOT edge cases") {
  const DotOutput one = emit_tonnetz_path(parse_progression("A E A'\n"));
  CHECK(count(one.text, "subgraph cluster_chord_") == 1);
  CHECK(count(one.text, "[style=bold]") == 0);

  const DotOutput other = emit_tonnetz_path(parse_progression("A E A'\nA C E\n"));
  CHECK(other.flagged_lines == std::vector<int>{2});
  CHECK(other.text.find("Other") != std::string::npos);

  // The basic sequence as a progression touches five note classes.
  std::string text;
  for (const auto& c : basic_sequence(Chord::from_notes(std::array{parse_note("A"), parse_note("E"), parse_note("A'")}))) {
    text += c.to_string() + "\n";
  }
  for (auto& ch : text) {
    if (ch == '-') ch = ' ';
  }
  const auto prog = parse_progression(text);
  CHECK(count(emit_tonnetz_path(prog).text, "subgraph cluster_chord_") == 4);
  std::set<std::int64_t> classes;
  for (const auto& pc : prog) {
    for (const auto n : pc.chord.notes) classes.insert(n.u);
  }
  CHECK(classes.size() == 5);
}

TEST_CASE("verify passes and fails under a mutated comma") {
  const VerifyReport ok = verify_tables();
  CHECK(ok.passed());
  CHECK(ok.table_sections() == 7);
  for (const auto& s : ok.sections) {
    INFO(s.name);
    CHECK(s.passed());
  }

  const VerifyReport bad = verify_tables(VerifyConfig{FreqRatio{-19, 11}});
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.find("T1") != nullptr);
  CHECK_FALSE(bad.find("T1")->passed());
  CHECK_FALSE(bad.find("T2")->passed());

  const VerifyReport odd = verify_tables(VerifyConfig{FreqRatio{-84, 53}});
  CHECK_FALSE(odd.find("T1")->passed());
  CHECK_FALSE(odd.find("T2")->passed());
  CHECK(format_report(ok).find("verify: all sections passed") != std::string::npos);
}
