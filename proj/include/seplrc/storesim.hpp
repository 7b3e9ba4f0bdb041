#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "seplrc/code.hpp"
#include "seplrc/repair.hpp"

namespace seplrc {

struct ClusterLayout {
  std::size_t node_count = 0;
  std::vector<std::size_t> placement;  // position -> node
};

/// Position p goes to node p mod N. Fibres occupy consecutive positions, so
/// a fibre never shares a node when N >= fibre size.
ClusterLayout make_layout(const LrcCode& code, std::size_t node_count);

struct FailurePattern {
  enum class Kind { SingleNode, RandomNodes };
  Kind kind = Kind::SingleNode;
  std::size_t count = 1;

  /// "single" or "random:K".
  static FailurePattern parse(const std::string& text);
  std::string str() const;
};

struct RepairStats {
  std::vector<std::size_t> failed_nodes;
  std::uint64_t failures = 0;  // lost symbols over all objects
  std::uint64_t local = 0;
  std::uint64_t fallback = 0;
  std::uint64_t unrecoverable = 0;
  std::uint64_t symbols_read = 0;
  std::uint64_t baseline = 0;  // k reads per lost symbol

  double saving_ratio() const;
  friend bool operator==(const RepairStats&, const RepairStats&) = default;
};

/// Erases every symbol held by the failed nodes and repairs it. A fibre with
/// one loss is repaired locally; the remaining losses of an object go through
/// one global erasure decode that reads k symbols. Each repaired value is
/// compared with the stored original (RepairMismatch on disagreement).
RepairStats simulate(const LrcCode& code, const std::vector<std::vector<FieldElement>>& objects,
                     std::size_t node_count, const FailurePattern& pattern, std::uint64_t seed,
                     RepairMode mode = RepairMode::Auto);

std::string stats_to_json(const RepairStats& stats);
RepairStats stats_from_json(const std::string& text);
std::string report_table(const RepairStats& stats);

}  // namespace seplrc
