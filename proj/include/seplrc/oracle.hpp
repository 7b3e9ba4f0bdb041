#pragma once

#include <cstdint>
#include <vector>

#include "seplrc/code.hpp"

namespace seplrc {

struct WorkCaps {
  std::uint64_t codewords = std::uint64_t{1} << 26;
  std::uint64_t subsets = std::uint64_t{1} << 24;
};

struct Enumeration {
  long long distance = 0;
  std::vector<FieldElement> witness;  // a minimum-weight codeword
  std::uint64_t visited = 0;
};

/// Projective codeword count (q^k - 1)/(q - 1), saturating at UINT64_MAX.
std::uint64_t enumeration_work(std::uint64_t q, std::size_t k);
/// Independent column sets scanned by the hierarchy search: sum_{s<k} C(n, s).
std::uint64_t hierarchy_work(std::size_t n, std::size_t k);

/// d_1 by walking one representative of every projective codeword.
Enumeration min_distance_by_enumeration(const LrcCode& code, std::uint64_t cap = WorkCaps{}.codewords);

/// d_1..d_{t_max} from n - d_t = max{|R| : rank(G_R) <= k - t}.
/// `threads` = 0 picks the hardware concurrency; the result does not depend on it.
std::vector<long long> brute_weight_hierarchy(const LrcCode& code, long long t_max,
                                              std::uint64_t cap = WorkCaps{}.subsets, unsigned threads = 0);

/// d_1 by whichever oracle fits the caps; both run and must agree when both fit.
long long brute_min_distance(const LrcCode& code, const WorkCaps& caps = {});

}  // namespace seplrc
