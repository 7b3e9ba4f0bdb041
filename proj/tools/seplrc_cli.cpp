#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "seplrc/cases.hpp"
#include "seplrc/config.hpp"
#include "seplrc/error.hpp"
#include "seplrc/oracle.hpp"
#include "seplrc/repair.hpp"
#include "seplrc/storesim.hpp"

using namespace seplrc;

namespace {

enum Exit { kOk = 0, kFailure = 1, kConfig = 2, kWorkCap = 3, kUsage = 4 };

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Config, "cannot write " + path);
  out << text;
}

BuiltCode load(const std::string& path) { return build(parse_config(slurp(path))); }

std::vector<FieldElement> random_message(const LrcCode& code, std::mt19937_64& rng) {
  std::vector<FieldElement> msg(code.dim_v());
  for (auto& c : msg) c = FieldElement{static_cast<std::uint32_t>(rng() % code.field().order())};
  return msg;
}

std::vector<FieldElement> solid(const std::vector<std::optional<FieldElement>>& word, const std::string& what) {
  std::vector<FieldElement> out;
  for (const auto& s : word) {
    if (!s) throw Error(ErrorKind::Config, what + " contains an erasure");
    out.push_back(*s);
  }
  return out;
}

RepairMode parse_mode(const std::string& text) {
  static const std::map<std::string, RepairMode> modes{{"auto", RepairMode::Auto},
                                                       {"lagrange", RepairMode::Lagrange},
                                                       {"one-addition", RepairMode::OneAddition},
                                                       {"cross-check", RepairMode::CrossCheck}};
  auto it = modes.find(text);
  if (it == modes.end()) throw CLI::ValidationError("--mode", "unknown repair mode " + text);
  return it->second;
}

int cmd_params(const std::string& config, const std::string& matrix_out, long long ghw) {
  const BuiltCode b = load(config);
  const ParamReport rep = params(b.code, b.policy);
  std::vector<GhwBound> bounds;
  if (ghw > 0) bounds = ghw_bounds(b.code, std::min<long long>(ghw, rep.k), b.policy);
  std::cout << report_table(rep);
  for (const auto& g : bounds)
    std::cout << "  d_" << g.t << " in [" << g.lower << ", " << g.upper << "]\n";
  std::cout << report_json(rep, bounds) << '\n';
  if (!matrix_out.empty()) spit(matrix_out, export_generator(b.code));
  return kOk;
}

int cmd_encode(const std::string& config, const std::string& message_file, std::uint64_t seed,
               const std::string& out) {
  const BuiltCode b = load(config);
  std::vector<FieldElement> msg;
  if (!message_file.empty()) {
    msg = solid(parse_word(b.code.field(), slurp(message_file)), "message");
  } else {
    std::mt19937_64 rng(seed);
    msg = random_message(b.code, rng);
  }
  spit(out, format_word(encode(b.code, msg)) + '\n');
  return kOk;
}

int cmd_repair(const std::string& config, const std::string& word_file, const std::string& mode_text,
               const std::string& out) {
  const BuiltCode b = load(config);
  const RepairMode mode = parse_mode(mode_text);
  auto word = parse_word(b.code.field(), slurp(word_file));
  if (word.size() != b.code.n())
    throw Error(ErrorKind::LengthMismatch,
                "codeword has " + std::to_string(word.size()) + " symbols, n=" + std::to_string(b.code.n()));
  std::map<std::size_t, std::vector<std::size_t>> lost;
  for (std::size_t p = 0; p < word.size(); ++p)
    if (!word[p]) lost[b.code.recovery_map[p].first].push_back(p);

  auto filled = word;
  std::vector<std::size_t> global;
  std::cout << "position method value symbols_read\n";
  for (const auto& [fibre, positions] : lost) {
    if (positions.size() > 1) {
      global.insert(global.end(), positions.begin(), positions.end());
      continue;
    }
    const RepairResult r = repair(b.code, word, positions[0], mode);
    filled[positions[0]] = r.value;
    std::cout << positions[0] << ' ' << to_string(r.method) << ' ' << r.value.value << ' ' << r.symbols_read
              << '\n';
  }
  if (!global.empty()) {
    const auto decoded = erasure_decode(b.code, word);
    for (auto p : global) {
      filled[p] = decoded[p];
      std::cout << p << " global " << decoded[p].value << ' ' << b.code.k << '\n';
    }
  }
  if (!out.empty()) spit(out, format_word(filled) + '\n');
  return kOk;
}

int cmd_verify(const std::string& config, std::uint64_t max_work, long long ghw) {
  const BuiltCode b = load(config);
  WorkCaps caps;
  if (max_work > 0) caps = {max_work, max_work};
  const ParamReport rep = params(b.code, b.policy);
  const long long d = brute_min_distance(b.code, caps);
  const long long defect = rep.n + 2 - rep.k - d - ceil_div(rep.k, rep.r);
  bool ok = d >= rep.d_lower && (!rep.d_upper || d <= *rep.d_upper) && defect >= 0;
  std::cout << "n=" << rep.n << " k=" << rep.k << " r=" << rep.r << '\n';
  std::cout << "d=" << d << " (bound d>=" << rep.d_lower;
  if (rep.d_upper) std::cout << ", d<=" << *rep.d_upper;
  std::cout << ")\nexact defect=" << defect << " (bound <=" << rep.defect_upper << ")\n";
  if (ghw > 0) {
    const long long t_max = std::min<long long>(ghw, rep.k);
    const auto exact = brute_weight_hierarchy(b.code, t_max, caps.subsets);
    const auto bounds = ghw_bounds(b.code, t_max, b.policy);
    std::cout << "hierarchy";
    for (std::size_t i = 0; i < exact.size(); ++i) std::cout << (i ? "," : " ") << exact[i];
    std::cout << '\n';
    for (std::size_t i = 0; i < exact.size(); ++i) {
      const bool inside = bounds[i].lower <= exact[i] && exact[i] <= bounds[i].upper;
      ok = ok && inside;
      std::cout << "  d_" << i + 1 << "=" << exact[i] << " in [" << bounds[i].lower << ", " << bounds[i].upper
                << "] " << (inside ? "ok" : "OUTSIDE") << '\n';
    }
  }
  std::cout << (ok ? "verify: consistent\n" : "verify: INCONSISTENT\n");
  return ok ? kOk : kFailure;
}

int cmd_simulate(const std::string& config, std::size_t nodes, const std::string& pattern, std::uint64_t seed,
                 const std::string& objects_file, std::size_t random_objects, bool json) {
  const BuiltCode b = load(config);
  std::vector<std::vector<FieldElement>> objects;
  if (!objects_file.empty()) {
    std::istringstream lines(slurp(objects_file));
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      objects.push_back(solid(parse_word(b.code.field(), line), "object"));
    }
  } else {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < random_objects; ++i) objects.push_back(encode(b.code, random_message(b.code, rng)));
  }
  const RepairStats stats = simulate(b.code, objects, nodes, FailurePattern::parse(pattern), seed);
  if (json)
    std::cout << stats_to_json(stats) << '\n';
  else
    std::cout << report_table(stats);
  return kOk;
}

int cmd_examples(const std::string& filter) {
  const auto& cases = example_cases();
  if (!filter.empty() && std::none_of(cases.begin(), cases.end(), [&](const auto& c) { return c.name == filter; })) {
    std::cerr << "unknown case '" << filter << "'; known:";
    for (const auto& c : cases) std::cerr << ' ' << c.name;
    std::cerr << '\n';
    return kUsage;
  }
  bool all = true;
  for (const auto& c : cases) {
    if (!filter.empty() && c.name != filter) continue;
    const CaseResult res = c.run();
    all = all && res.passed();
    std::cout << (res.passed() ? "PASS " : "FAIL ") << c.name << "  (" << c.summary << ")\n";
    for (const auto& chk : res.checks) {
      std::cout << "    " << to_string(chk.status) << "  " << chk.label << ": expected " << chk.expected << ", got "
                << chk.actual << '\n';
    }
  }
  return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally recoverable codes from curves A(Y) = B(X)"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  std::string matrix_out;
  std::string message_file;
  std::string word_file;
  std::string mode = "auto";
  std::string pattern = "single";
  std::string objects_file;
  std::string case_filter;
  std::uint64_t seed = 1;
  std::uint64_t max_work = 0;
  long long ghw = 0;
  std::size_t nodes = 0;
  std::size_t random_objects = 1;
  bool json = false;

  auto* params_cmd = app.add_subcommand("params", "print the parameter report of a code");
  params_cmd->add_option("config", config, "JSON code configuration")->required();
  params_cmd->add_option("--matrix", matrix_out, "write the generator matrix to this file");
  params_cmd->add_option("--ghw", ghw, "also bound d_1..d_T");

  auto* encode_cmd = app.add_subcommand("encode", "encode a message (random when no file is given)");
  encode_cmd->add_option("config", config, "JSON code configuration")->required();
  encode_cmd->add_option("--message", message_file, "file with dim V coefficients");
  encode_cmd->add_option("--seed", seed, "seed for a random message");
  encode_cmd->add_option("--out", out, "codeword file (stdout by default)");

  auto* repair_cmd = app.add_subcommand("repair", "fill the '?' positions of a codeword");
  repair_cmd->add_option("config", config, "JSON code configuration")->required();
  repair_cmd->add_option("codeword", word_file, "codeword file with '?' erasures")->required();
  repair_cmd->add_option("--mode", mode, "auto | lagrange | one-addition | cross-check");
  repair_cmd->add_option("--out", out, "write the repaired codeword here");

  auto* verify_cmd = app.add_subcommand("verify", "exact distances by exhaustive search");
  verify_cmd->add_option("config", config, "JSON code configuration")->required();
  verify_cmd->add_option("--max-work", max_work, "cap on codewords and subsets scanned");
  verify_cmd->add_option("--ghw", ghw, "also compute d_1..d_T");

  auto* sim_cmd = app.add_subcommand("simulate", "storage cluster failure simulation");
  sim_cmd->add_option("config", config, "JSON code configuration")->required();
  sim_cmd->add_option("--nodes", nodes, "node count")->required();
  sim_cmd->add_option("--pattern", pattern, "single | random:K");
  sim_cmd->add_option("--seed", seed, "PRNG seed");
  sim_cmd->add_option("--objects", objects_file, "stored codewords, one per line");
  sim_cmd->add_option("--random-objects", random_objects, "random objects when no file is given");
  sim_cmd->add_flag("--json", json, "print JSON instead of a table");

  auto* examples_cmd = app.add_subcommand("examples", "reproduce the reference parameter table");
  examples_cmd->add_option("--case", case_filter, "run one case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*params_cmd) return cmd_params(config, matrix_out, ghw);
    if (*encode_cmd) return cmd_encode(config, message_file, seed, out);
    if (*repair_cmd) return cmd_repair(config, word_file, mode, out);
    if (*verify_cmd) return cmd_verify(config, max_work, ghw);
    if (*sim_cmd) return cmd_simulate(config, nodes, pattern, seed, objects_file, random_objects, json);
    if (*examples_cmd) return cmd_examples(case_filter);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::WorkCapExceeded: return kWorkCap;
      case ErrorKind::Ambiguous:
      case ErrorKind::Inconsistent:
      case ErrorKind::RepairMismatch: return kFailure;
      default: return kConfig;
    }
  }
  return kUsage;
}
