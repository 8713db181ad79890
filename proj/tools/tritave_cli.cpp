/**
 * @file tritave_cli.cpp
 * @brief Command-line front end: scales, note names, keyboard, convergents,
 *        PLR moves, sequences, purity, tables, Tonnetz paths and verify.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
 */
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tritave/export.hpp"
#include "tritave/harmony.hpp"
#include "tritave/notation.hpp"
#include "tritave/scales.hpp"
#include "tritave/tonnetz.hpp"
#include "tritave/tuning_theory.hpp"

namespace {

using namespace tritave;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

bool g_unicode = false;

std::string display(const std::string& ascii) {
  if (!g_unicode) return ascii;
  // Chords are rendered "A-E-A'"; convert each note separately.
  std::string out;
  std::string note;
  for (const char c : ascii) {
    if (c == '-') {
      out += to_unicode(note) + "-";
      note.clear();
    } else {
      note += c;
    }
  }
  return out + to_unicode(note);
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string fraction_text(FreqRatio r) {
  const Fraction f = to_fraction(r);
  return f.numerator.str() + "/" + f.denominator.str();
}

bool all_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

/// "N/D", "N" or a Pyth-3 note name.
FreqRatio parse_ratio_or_note(const std::string& text, bool pyth2) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (all_digits(num) && all_digits(den)) return from_fraction(BigInt(num), BigInt(den));
  return pyth2 ? parse_pyth2_note(text) : parse_note(text);
}

bool is_456(const std::string& system) {
  if (system == "456") return true;
  if (system == "234") return false;
  throw std::invalid_argument("--system must be 234 or 456");
}

std::vector<FreqRatio> parse_notes(const std::vector<std::string>& names, bool pyth2) {
  std::vector<FreqRatio> notes;
  for (const auto& n : names) notes.push_back(pyth2 ? parse_pyth2_note(n) : parse_note(n));
  return notes;
}

std::string triad_text(const Triad234& t) {
  return display(Chord::from_triad(t).to_string()) + " (" + std::string(to_string(t.quality)) + ")";
}

std::string triad_text(const Triad456& t) {
  const auto pcs = t.pitch_classes();
  return display(std::string(pitch_class_name(pcs[0])) + "-" + std::string(pitch_class_name(pcs[1])) + "-" +
                 std::string(pitch_class_name(pcs[2]))) +
         " (" + std::string(to_string(t.quality)) + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- subcommand bodies ------------------------------------------------------

int cmd_scale(const std::string& which, bool scl, const std::string& description) {
  const auto scale = parse_scl_scale(which);
  if (!scale) throw std::invalid_argument("unknown scale '" + which + "'");
  if (scl) {
    std::cout << emit_scl(*scale, description.empty() ? std::string(to_string(*scale)) : description);
    return kExitOk;
  }
  const bool just = *scale == SclScale::Pyth3Just || *scale == SclScale::Pyth2Just;
  const bool tritave = *scale == SclScale::Pyth3Just || *scale == SclScale::Edt19;
  const ScaleSystem& system = standard_system(tritave ? SystemId::Pyth3 : SystemId::Pyth2);
  for (std::int64_t d = system.degree_window.lo; d <= system.degree_window.hi; ++d) {
    std::cout << d << '\t';
    if (just) {
      const FreqRatio r = just_note_at_degree(d, system);
      const std::string name = tritave ? name_of(r).to_string() : pyth2_name_of(r);
      std::cout << display(name) << '\t' << fraction_text(r) << '\t' << fixed(cents(r).value, 3) << '\n';
    } else {
      std::cout << fixed(equal_pitch_at_degree(d, system).value, 3) << '\n';
    }
  }
  return kExitOk;
}

int cmd_reduce(const std::string& input, const std::string& system_name) {
  const bool pyth2 = system_name == "pyth2";
  if (!pyth2 && system_name != "pyth3") throw std::invalid_argument("--system must be pyth3 or pyth2");
  const ScaleSystem& system = standard_system(pyth2 ? SystemId::Pyth2 : SystemId::Pyth3);
  const FreqRatio r = parse_ratio_or_note(input, pyth2);
  const CommaReduction cr = reduce_to_fundamental(r, system);
  const PeriodReduction pr = period_reduce(cr.reduced, system);
  const auto name = [&](FreqRatio x) { return display(pyth2 ? pyth2_name_of(x) : name_of(x).to_string()); };
  std::cout << "input:            " << fraction_text(r) << "  [" << to_monzo_string(r) << "]\n";
  std::cout << "harmonic degree:  " << system.harmonic_degree(r) << '\n';
  std::cout << "enharmonic:       " << fraction_text(cr.reduced) << "  " << name(cr.reduced)
            << "  (comma power " << cr.comma_power << ")\n";
  std::cout << "class rep:        " << fraction_text(pr.class_rep) << "  " << name(pr.class_rep)
            << "  (period shift " << pr.period_shift << ")\n";
  return kExitOk;
}

int cmd_keyboard(int lo, int hi) {
  for (const KeyLabel& k : keyboard_labels(lo, hi)) {
    std::cout << k.midi << '\t' << display(k.name.to_string()) << '\t' << k.scale_degree << '\t'
              << (k.color == KeyColor::White ? "white" : "black") << '\n';
  }
  return kExitOk;
}

int cmd_convergents(int n) {
  const auto terms = cf_coefficients(n);
  const auto conv = convergents(n);
  std::cout << "k\ta_k\tp/q\tcomma_cents\n";
  for (std::size_t i = 0; i < conv.size(); ++i) {
    std::cout << i + 1 << '\t' << terms[i] << '\t' << conv[i].p << '/' << conv[i].q << '\t'
              << fixed(comma_for(conv[i].p, conv[i].q).size.value, 3) << '\n';
  }
  return kExitOk;
}

int cmd_plr(const std::vector<std::string>& notes, const std::string& moves_text, const std::string& system) {
  const auto moves = parse_moves(moves_text);
  if (is_456(system)) {
    const auto triad = as_triad(Chord456::from_pyth2_notes(parse_notes(notes, true)));
    if (!triad) throw std::invalid_argument("not a major or minor triad");
    Triad456 t = *triad;
    std::cout << triad_text(t) << '\n';
    for (const PlrMove m : moves) {
      t = apply_plr(t, m);
      std::cout << to_char(m) << "  " << triad_text(t) << '\n';
    }
  } else {
    const auto triad = as_triad(Chord::from_notes(parse_notes(notes, false)));
    if (!triad) throw std::invalid_argument("not a root-position 2:3:4 major or minor triad");
    Triad234 t = *triad;
    std::cout << triad_text(t) << '\n';
    for (const PlrMove m : moves) {
      t = apply_plr(t, m);
      std::cout << to_char(m) << "  " << triad_text(t) << '\n';
    }
  }
  return kExitOk;
}

int cmd_reach(const std::string& system, int k) {
  const bool h456 = is_456(system);
  const int max_moves = k >= 0 ? k : (h456 ? 3 : 8);
  const auto levels = h456 ? reachable_note_classes(Triad456{0, TriadQuality::Major}, max_moves)
                           : reachable_note_classes(Triad234{parse_note("A"), TriadQuality::Major}, max_moves);
  std::cout << "moves\tcount\n";
  for (const auto& level : levels) std::cout << level.moves << '\t' << level.count << '\n';
  return kExitOk;
}

int cmd_sequence(const std::vector<std::string>& notes, bool cadence, const std::string& system) {
  if (is_456(system)) {
    const Chord456 tonic = Chord456::from_pyth2_notes(parse_notes(notes, true));
    for (const auto& c : cadence ? cadence_sequence(tonic) : basic_sequence(tonic)) {
      std::cout << display(c.to_string()) << "  " << to_string(classify(c)) << '\n';
    }
  } else {
    const Chord tonic = Chord::from_notes(parse_notes(notes, false));
    for (const auto& c : cadence ? cadence_sequence(tonic) : basic_sequence(tonic)) {
      std::cout << display(c.to_string()) << "  " << to_string(classify(c)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_purity(const std::vector<std::string>& notes, const std::string& system) {
  PurityReport p;
  std::string chord_text;
  std::string quality;
  if (is_456(system)) {
    const Chord456 c = Chord456::from_pyth2_notes(parse_notes(notes, true));
    p = purity(c);
    chord_text = c.to_string();
    quality = to_string(classify(c));
  } else {
    const Chord c = Chord::from_notes(parse_notes(notes, false));
    p = purity(c);
    chord_text = c.to_string();
    quality = to_string(classify(c));
  }
  std::cout << "chord:      " << display(chord_text) << "  " << quality << '\n';
  std::cout << "ratio:      " << p.ratio[0] << ':' << p.ratio[1] << ':' << p.ratio[2] << '\n';
  std::cout << "reciprocal: 1/" << p.reciprocal_denominators[0] << ":1/" << p.reciprocal_denominators[1]
            << ":1/" << p.reciprocal_denominators[2] << '\n';
  std::cout << "d_B:        " << p.d_base;
  if (p.base_note) std::cout << "  base " << display(name_of(*p.base_note).to_string()) << " = " << fraction_text(*p.base_note);
  std::cout << "\nd_O:        " << p.d_overtone;
  if (p.overtone_note) {
    std::cout << "  overtone " << display(name_of(*p.overtone_note).to_string()) << " = "
              << fraction_text(*p.overtone_note);
  }
  std::cout << '\n';
  return kExitOk;
}

int cmd_tonnetz_path(const std::string& path, bool dot) {
  const auto progression = parse_progression(read_file(path));
  if (dot) {
    const DotOutput out = emit_tonnetz_path(progression);
    std::cout << out.text;
    for (const int line : out.flagged_lines) {
      std::cerr << "warning: line " << line << ": chord is not major, minor, augmented or diminished\n";
    }
    return kExitOk;
  }
  for (std::size_t i = 0; i < progression.size(); ++i) {
    const auto& pc = progression[i];
    std::cout << i + 1 << '\t' << display(pc.chord.to_string()) << '\t' << to_string(pc.quality) << '\n';
  }
  return kExitOk;
}

int cmd_table(const std::string& which, const std::string& format, std::int64_t lo, std::int64_t hi) {
  const auto id = parse_table_id(which);
  if (!id) throw std::invalid_argument("unknown table '" + which + "'");
  if (format != "csv" && format != "json") throw std::invalid_argument("--format must be csv or json");
  TableOptions options;
  options.diff_lo = lo;
  options.diff_hi = hi;
  std::cout << emit_table(*id, format == "csv" ? TableFormat::Csv : TableFormat::Json, options);
  return kExitOk;
}

FreqRatio parse_comma(const std::string& text) {
  const auto comma_pos = text.find(',');
  if (comma_pos == std::string::npos) throw ParseError("--comma expects U,V");
  try {
    std::size_t used_u = 0, used_v = 0;
    const std::string u = text.substr(0, comma_pos);
    const std::string v = text.substr(comma_pos + 1);
    const FreqRatio r{std::stoll(u, &used_u), std::stoll(v, &used_v)};
    if (used_u != u.size() || used_v != v.size()) throw ParseError("--comma expects U,V");
    return r;
  } catch (const std::logic_error&) {
    throw ParseError("--comma expects integers U,V");
  }
}

int cmd_verify(const std::string& comma_text) {
  VerifyConfig config;
  if (!comma_text.empty()) config.comma = parse_comma(comma_text);
  const VerifyReport report = verify_tables(config);
  std::cout << format_report(report);
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tritave: tritave-based Pythagorean scales, 2:3:4 harmony and the Tonnetz"};
  app.add_flag("--unicode", g_unicode, "Render note names with Unicode accidentals and marks");
  app.require_subcommand(1);

  std::function<int()> action;

  std::string scale_which = "pyth3", scale_description;
  bool scale_scl = false;
  auto* scale = app.add_subcommand("scale", "Print a scale, or emit it as a Scala .scl file");
  scale->add_option("--system", scale_which, "pyth3, edt19, pyth2 or edo12")->capture_default_str();
  scale->add_flag("--scl", scale_scl, "Emit Scala .scl text");
  scale->add_option("--description", scale_description, "Description line of the .scl file");
  scale->callback([&] { action = [&] { return cmd_scale(scale_which, scale_scl, scale_description); }; });

  std::string reduce_input, reduce_system = "pyth3";
  auto* reduce = app.add_subcommand("reduce", "Enharmonic and period reduction of a ratio or note");
  reduce->add_option("input", reduce_input, "Ratio N/D or note name")->required();
  reduce->add_option("--system", reduce_system, "pyth3 or pyth2")->capture_default_str();
  reduce->callback([&] { action = [&] { return cmd_reduce(reduce_input, reduce_system); }; });

  std::string name_input;
  auto* name = app.add_subcommand("name", "Pyth-3 name of a ratio");
  name->add_option("ratio", name_input, "Ratio N/D")->required();
  name->callback([&] {
    action = [&] {
      std::cout << display(name_of(parse_ratio_or_note(name_input, false)).to_string()) << '\n';
      return kExitOk;
    };
  });

  int kb_lo = 21, kb_hi = 108;
  auto* keyboard = app.add_subcommand("keyboard", "Pyth-3 labels for piano keys");
  keyboard->add_option("--lo", kb_lo, "Lowest MIDI note")->capture_default_str();
  keyboard->add_option("--hi", kb_hi, "Highest MIDI note")->capture_default_str();
  keyboard->callback([&] { action = [&] { return cmd_keyboard(kb_lo, kb_hi); }; });

  int conv_n = 10;
  auto* conv = app.add_subcommand("convergents", "Convergents of log 2 / log 3");
  conv->add_option("-n", conv_n, "Number of terms (1..20)")->capture_default_str()->check(CLI::Range(1, 20));
  conv->callback([&] { action = [&] { return cmd_convergents(conv_n); }; });

  std::vector<std::string> plr_args;
  std::string plr_system = "234";
  auto* plr = app.add_subcommand("plr", "Apply PLR moves to a triad: plr N1 N2 N3 MOVES");
  plr->add_option("args", plr_args, "Three note names then a move string such as PLR")->required()->expected(4);
  plr->add_option("--system", plr_system, "234 or 456")->capture_default_str();
  plr->callback([&] {
    action = [&] {
      return cmd_plr({plr_args[0], plr_args[1], plr_args[2]}, plr_args[3], plr_system);
    };
  });

  std::string reach_system = "234";
  int reach_k = -1;
  auto* reach = app.add_subcommand("reach", "Note classes reachable by PLR moves from the tonic");
  reach->add_option("--system", reach_system, "234 or 456")->capture_default_str();
  reach->add_option("--k", reach_k, "Maximum number of moves")->check(CLI::Range(0, kMaxReachMoves));
  reach->callback([&] { action = [&] { return cmd_reach(reach_system, reach_k); }; });

  std::vector<std::string> seq_notes;
  bool seq_cadence = false;
  std::string seq_system = "234";
  auto* sequence = app.add_subcommand("sequence", "Basic sequence or cadence from a major tonic");
  sequence->add_option("tonic", seq_notes, "Three note names")->required()->expected(3);
  sequence->add_flag("--cadence", seq_cadence, "Tonic, dominant, second dominant, tonic");
  sequence->add_option("--system", seq_system, "234 or 456")->capture_default_str();
  sequence->callback([&] { action = [&] { return cmd_sequence(seq_notes, seq_cadence, seq_system); }; });

  std::vector<std::string> pur_notes;
  std::string pur_system = "234";
  auto* pur = app.add_subcommand("purity", "Base-note and overtone distances of a chord");
  pur->add_option("chord", pur_notes, "Three note names")->required()->expected(3);
  pur->add_option("--system", pur_system, "234 or 456")->capture_default_str();
  pur->callback([&] { action = [&] { return cmd_purity(pur_notes, pur_system); }; });

  std::string path_file;
  bool path_dot = false;
  auto* path = app.add_subcommand("tonnetz-path", "Read a progression file");
  path->add_option("file", path_file, "Progression file")->required();
  path->add_flag("--dot", path_dot, "Emit a Graphviz DOT Tonnetz path");
  path->callback([&] { action = [&] { return cmd_tonnetz_path(path_file, path_dot); }; });

  std::string table_which, table_format = "csv";
  std::int64_t table_lo = kPianoDegrees.lo, table_hi = kPianoDegrees.hi;
  auto* table = app.add_subcommand("table", "Emit a table: T1 T2 Diff PLR456 PLR234 Purity234 Purity456");
  table->add_option("which", table_which, "Table name")->required();
  table->add_option("--format", table_format, "csv or json")->capture_default_str();
  table->add_option("--lo", table_lo, "Lowest scale degree (Diff)")->capture_default_str();
  table->add_option("--hi", table_hi, "Highest scale degree (Diff)")->capture_default_str();
  table->callback([&] { action = [&] { return cmd_table(table_which, table_format, table_lo, table_hi); }; });

  std::string verify_comma;
  auto* verify = app.add_subcommand("verify", "Reproduce every reference table and spot check");
  verify->add_option("--comma", verify_comma, "Override the comma as exponents U,V of 2^U 3^V");
  verify->callback([&] { action = [&] { return cmd_verify(verify_comma); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
