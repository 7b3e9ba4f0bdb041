#include "seplrc/storesim.hpp"

#include <algorithm>
#include <map>
#include <json.hpp>
#include <random>
#include <sstream>

#include "seplrc/error.hpp"

namespace seplrc {

ClusterLayout make_layout(const LrcCode& code, std::size_t node_count) {
  if (node_count < 1) throw Error(ErrorKind::LayoutInfeasible, "cluster needs at least one node");
  ClusterLayout layout{node_count, std::vector<std::size_t>(code.n())};
  for (std::size_t p = 0; p < code.n(); ++p) layout.placement[p] = p % node_count;
  return layout;
}

FailurePattern FailurePattern::parse(const std::string& text) {
  if (text == "single") return {Kind::SingleNode, 1};
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string tail = text.substr(prefix.size());
    std::size_t used = 0;
    unsigned long long k = 0;
    try {
      k = std::stoull(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == tail.size() && used > 0 && k > 0) return {Kind::RandomNodes, static_cast<std::size_t>(k)};
  }
  throw Error(ErrorKind::InvalidArgument, "failure pattern must be 'single' or 'random:K' with K >= 1, got '" +
                                              text + "'");
}

std::string FailurePattern::str() const {
  return kind == Kind::SingleNode ? "single" : "random:" + std::to_string(count);
}

double RepairStats::saving_ratio() const {
  return symbols_read == 0 ? 0.0 : static_cast<double>(baseline) / static_cast<double>(symbols_read);
}

RepairStats simulate(const LrcCode& code, const std::vector<std::vector<FieldElement>>& objects,
                     std::size_t node_count, const FailurePattern& pattern, std::uint64_t seed, RepairMode mode) {
  const ClusterLayout layout = make_layout(code, node_count);
  if (pattern.count > node_count)
    throw Error(ErrorKind::InvalidArgument, "cannot fail " + std::to_string(pattern.count) + " of " +
                                                std::to_string(node_count) + " nodes");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> nodes(node_count);
  for (std::size_t i = 0; i < node_count; ++i) nodes[i] = i;
  // Partial Fisher-Yates with plain modular draws, so runs repeat across standard libraries.
  for (std::size_t i = 0; i < pattern.count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (node_count - i));
    std::swap(nodes[i], nodes[j]);
  }
  RepairStats stats;
  stats.failed_nodes.assign(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(pattern.count));
  std::sort(stats.failed_nodes.begin(), stats.failed_nodes.end());
  std::vector<bool> down(node_count, false);
  for (auto node : stats.failed_nodes) down[node] = true;

  for (const auto& stored : objects) {
    if (stored.size() != code.n())
      throw Error(ErrorKind::LengthMismatch, "stored object has " + std::to_string(stored.size()) + " symbols");
    std::vector<std::optional<FieldElement>> word(stored.begin(), stored.end());
    std::map<std::size_t, std::vector<std::size_t>> lost_by_fibre;
    for (std::size_t p = 0; p < code.n(); ++p) {
      if (down[layout.placement[p]]) {
        word[p].reset();
        lost_by_fibre[code.recovery_map[p].first].push_back(p);
      }
    }
    std::vector<std::size_t> global;
    for (const auto& [fibre, lost] : lost_by_fibre) {
      stats.failures += lost.size();
      stats.baseline += lost.size() * code.k;
      if (lost.size() != 1) {
        global.insert(global.end(), lost.begin(), lost.end());
        continue;
      }
      const RepairResult res = repair(code, word, lost[0], mode);
      if (res.value != stored[lost[0]])
        throw Error(ErrorKind::RepairMismatch, "local repair of position " + std::to_string(lost[0]) +
                                                   " returned a wrong symbol");
      ++stats.local;
      stats.symbols_read += res.symbols_read;
    }
    if (global.empty()) continue;
    // Locally repaired symbols stay erased: the fallback sees what the cluster holds.
    try {
      const auto decoded = erasure_decode(code, word);
      for (auto p : global)
        if (decoded[p] != stored[p])
          throw Error(ErrorKind::RepairMismatch, "global decode of position " + std::to_string(p) +
                                                     " returned a wrong symbol");
      stats.fallback += global.size();
      stats.symbols_read += code.k;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Ambiguous) throw;
      stats.unrecoverable += global.size();
    }
  }
  return stats;
}

namespace {

nlohmann::ordered_json to_json(const RepairStats& s) {
  nlohmann::ordered_json j;
  j["failed_nodes"] = s.failed_nodes;
  j["failures"] = s.failures;
  j["local"] = s.local;
  j["fallback"] = s.fallback;
  j["unrecoverable"] = s.unrecoverable;
  j["symbols_read"] = s.symbols_read;
  j["baseline"] = s.baseline;
  return j;
}

}  // namespace

std::string stats_to_json(const RepairStats& stats) { return to_json(stats).dump(2); }

RepairStats stats_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RepairStats s;
    j.at("failed_nodes").get_to(s.failed_nodes);
    j.at("failures").get_to(s.failures);
    j.at("local").get_to(s.local);
    j.at("fallback").get_to(s.fallback);
    j.at("unrecoverable").get_to(s.unrecoverable);
    j.at("symbols_read").get_to(s.symbols_read);
    j.at("baseline").get_to(s.baseline);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, std::string("repair stats: ") + e.what());
  }
}

std::string report_table(const RepairStats& s) {
  std::ostringstream out;
  auto row = [&](const char* label, const std::string& value) {
    out << "  " << label << std::string(16 - std::string(label).size(), ' ') << value << '\n';
  };
  std::string nodes;
  for (auto n : s.failed_nodes) nodes += (nodes.empty() ? "" : ",") + std::to_string(n);
  row("failed nodes", nodes.empty() ? "-" : nodes);
  row("failures", std::to_string(s.failures));
  row("local", std::to_string(s.local));
  row("fallback", std::to_string(s.fallback));
  row("unrecoverable", std::to_string(s.unrecoverable));
  row("symbols read", std::to_string(s.symbols_read));
  row("baseline", std::to_string(s.baseline));
  std::ostringstream ratio;
  ratio.setf(std::ios::fixed);
  ratio.precision(2);
  ratio << s.saving_ratio();
  row("saving ratio", ratio.str());
  return out.str();
}

}  // namespace seplrc
