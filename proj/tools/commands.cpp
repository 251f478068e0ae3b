#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "mpc/config.hpp"
#include "mpc/worked_examples.hpp"

namespace mpc::cli {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple(const std::vector<std::size_t>& v) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return "(" + join(s, ",") + ")";
}

// The satisfied inequalities, e.g. "3*4 <= 14, 18".
std::string hypothesis_detail(const MatrixProductCode& c, Algorithm alg) {
  const std::size_t d1 = c.code(0).distance();
  if (alg == Algorithm::Ext2) {
    std::vector<std::string> parts;
    for (std::size_t i = 1; i < c.s(); ++i) {
      parts.push_back(std::to_string(i + 1) + "*" + std::to_string(d1) + " = " + std::to_string((i + 1) * d1) +
                      " <= " + std::to_string(c.code(i).distance()));
    }
    return parts.empty() ? "d1 >= 3" : join(parts, ", ");
  }
  std::vector<std::string> ds;
  for (std::size_t i = 1; i < c.s(); ++i) ds.push_back(std::to_string(c.code(i).distance()));
  if (ds.empty()) return "d1 >= 3";
  return std::to_string(c.l()) + "*" + std::to_string(d1) + " <= " + join(ds, ", ");
}

void report_hypotheses(const MatrixProductCode& c, std::ostream& out) {
  for (Algorithm alg : {Algorithm::Uuv, Algorithm::Ext1, Algorithm::Ext2}) {
    for (DecodeMode mode : {DecodeMode::Unique, DecodeMode::List}) {
      out << to_string(alg) << (mode == DecodeMode::List ? " list" : "") << ": ";
      const auto v = hypothesis_violations(c, alg, mode);
      if (v.empty()) {
        out << "OK (" << hypothesis_detail(c, alg) << ")";
        if (alg == Algorithm::Ext1 && !c.nonsingular_by_columns()) out << ", A is not NSC";
        out << "\n";
      } else {
        out << "FAILS (" << join(v, "; ") << ")\n";
      }
    }
  }
}

std::string origin(const LinearCode& code) {
  return code.origin() == CodeOrigin::Cyclic ? "cyclic" : "generator";
}

GfVector read_word(const std::string& text, FieldSpec f, std::size_t expected, const char* what) {
  GfVector w = parse_symbols(text, f);
  if (w.size() != expected) {
    throw ParseError(0, 0, std::string(what) + " has " + std::to_string(w.size()) +
                               " symbols, expected " + std::to_string(expected));
  }
  return w;
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(0, 0, "cannot read " + path);
  return slurp(f);
}

MatrixProductCode load_code(const std::string& config_path, bool verify_distance) {
  const std::string text = read_text(config_path);
  try {
    return build_code(parse_config(text), verify_distance);
  } catch (const ParseError& e) {
    throw ParseError(0, 0, config_path + ": " + e.what());
  }
}

int cmd_info(const MatrixProductCode& c, std::ostream& out) {
  out << "field: F_" << c.spec().modulus() << "\n";
  out << "s = " << c.s() << ", l = " << c.l() << ", length = " << c.length()
      << ", dimension = " << c.dimension() << "\n";
  for (std::size_t i = 0; i < c.s(); ++i) {
    const LinearCode& k = c.code(i);
    out << "C" << i + 1 << ": [" << k.length() << "," << k.dimension() << "," << k.distance()
        << "] t=" << k.correction_capability() << " (" << origin(k) << ")\n";
  }
  out << "A:\n" << to_string(c.matrix()) << "\n";
  const auto& dd = c.designed_distance_breakdown();
  out << "NSC: " << (c.nonsingular_by_columns() ? "yes" : "no") << "\n";
  out << "D=" << tuple(c.row_distances()) << "\n";
  out << "d_C=" << dd.value << " (d_i*D_i = " << tuple(dd.terms) << ")\n";
  out << "t=" << c.designed_radius() << "\n";
  report_hypotheses(c, out);
  return kOk;
}

int cmd_encode(const MatrixProductCode& c, const std::string& message, std::ostream& out) {
  const GfVector msg = read_word(message, c.spec(), c.dimension(), "message");
  const auto parts = c.encode_parts(msg);
  out << to_string(flatten(c.combine(parts))) << "\n";
  return kOk;
}

int cmd_decode(const MatrixProductCode& c, Algorithm alg, DecodeMode mode, const std::string& received,
               std::ostream& out, std::ostream& err) {
  const MpcWord r = unflatten(read_word(received, c.spec(), c.length(), "received word"), c.m());
  const auto decoders = default_decoders(c);
  const DecodeOutcome o = decode(alg, c, decoders, r, mode);
  for (const auto& w : o.stats.warnings) err << "warning: " << w << "\n";

  if (!o.ok()) {
    out << "outcome: failure (" << o.failure_reason << ")\n";
  } else {
    out << "outcome: " << (o.kind == OutcomeKind::Unique ? "unique" : "list");
    if (o.kind == OutcomeKind::List) out << " (" << o.words.size() << " codewords)";
    if (o.stats.ambiguous) out << ", ambiguous";
    out << "\nradius: " << o.stats.radius << "\n";
    for (std::size_t w = 0; w < o.words.size(); ++w) {
      const DecodedWord& dw = o.words[w];
      const std::string tag = o.words.size() > 1 ? " " + std::to_string(w + 1) : "";
      out << "codeword" << tag << ": " << to_string(flatten(dw.word)) << "\n";
      for (std::size_t i = 0; i < dw.parts.size(); ++i) {
        out << "  c" << i + 1 << ": " << to_string(dw.parts[i]) << "\n";
      }
      out << "  error: " << to_string(flatten(r - dw.word)) << "\n";
      out << "  corrected: " << dw.distance << " symbols\n";
    }
  }
  out << "component calls:";
  for (std::size_t i = 0; i < o.stats.component_calls.size(); ++i) {
    out << " DC" << i + 1 << "=" << o.stats.component_calls[i];
  }
  out << "\n";
  return o.ok() ? kOk : kDecodeFailure;
}

int cmd_simulate(const MatrixProductCode& c, const SimulationSpec& spec, std::ostream& csv) {
  const auto decoders = default_decoders(c);
  const SimReport r = simulate(c, decoders, spec);
  csv << csv_header() << "\n" << csv_row(r) << "\n";
  return kOk;
}

int cmd_worked_examples(std::ostream& out) {
  return examples::write_transcript(out) == 2 ? kOk : kDecodeFailure;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix-product codes over GF(p): construction, decoding and simulation", "mpc"};
  app.require_subcommand(1);
  bool verify = false;
  app.add_flag("--verify-distance", verify, "Recompute declared component distances");

  const std::map<std::string, Algorithm> algorithms{
      {"uuv", Algorithm::Uuv}, {"ext1", Algorithm::Ext1}, {"ext2", Algorithm::Ext2}};
  const std::map<std::string, DecodeMode> modes{{"unique", DecodeMode::Unique}, {"list", DecodeMode::List}};

  std::string config;
  auto* info = app.add_subcommand("info", "Show code parameters and decoder hypotheses");
  info->add_option("config", config, "Config file")->required();

  std::string message_file;
  auto* enc = app.add_subcommand("encode", "Encode a message (concatenated information vectors)");
  enc->add_option("config", config, "Config file")->required();
  enc->add_option("--message", message_file, "Message file (default: stdin)");

  Algorithm alg = Algorithm::Ext1;
  DecodeMode mode = DecodeMode::Unique;
  std::string received_file;
  auto* dec = app.add_subcommand("decode", "Decode a received word (column-major symbols)");
  dec->add_option("config", config, "Config file")->required();
  dec->add_option("--algorithm", alg, "uuv, ext1 or ext2")
      ->required()
      ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case));
  dec->add_option("--mode", mode, "unique or list")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  dec->add_option("--received", received_file, "Received word file (default: stdin)");

  SimulationSpec spec;
  std::string csv_file;
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo decoding of random exact-weight errors");
  sim->add_option("config", config, "Config file")->required();
  sim->add_option("--algorithm", spec.algorithm, "uuv, ext1 or ext2")
      ->required()
      ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case));
  sim->add_option("--mode", spec.mode, "unique or list")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  sim->add_option("--weight", spec.weight, "Error weight")->required();
  sim->add_option("--trials", spec.trials, "Number of trials")->required();
  sim->add_option("--seed", spec.seed, "Master seed")->required();
  sim->add_option("--threads", spec.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  sim->add_option("--csv", csv_file, "Write the CSV here instead of stdout");

  auto* ex = app.add_subcommand("paper-examples", "Reproduce the two length-26 worked examples");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (ex->parsed()) return cmd_worked_examples(out);
    const MatrixProductCode c = load_code(config, verify);
    if (info->parsed()) return cmd_info(c, out);
    if (enc->parsed()) {
      return cmd_encode(c, message_file.empty() ? slurp(in) : read_text(message_file), out);
    }
    if (dec->parsed()) {
      return cmd_decode(c, alg, mode, received_file.empty() ? slurp(in) : read_text(received_file), out, err);
    }
    if (sim->parsed()) {
      if (csv_file.empty()) return cmd_simulate(c, spec, out);
      std::ostringstream buf;
      const int rc = cmd_simulate(c, spec, buf);
      std::ofstream f(csv_file, std::ios::binary);
      if (!f) throw ParseError(0, 0, "cannot write " + csv_file);
      f << buf.str();
      return rc;
    }
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return kHypothesisFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mpc::cli
