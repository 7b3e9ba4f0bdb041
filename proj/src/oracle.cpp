#include "seplrc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "seplrc/error.hpp"

namespace seplrc {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) { return x > kSaturated - y ? kSaturated : x + y; }

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > kSaturated / x) return kSaturated;
  return x * y;
}

struct EnumState {
  const Field& F;
  const Matrix& basis;
  std::uint32_t q;
  std::uint64_t visited = 0;
  long long best = std::numeric_limits<long long>::max();
  std::vector<FieldElement> witness;
};

// Adds every multiple of rows row..k-1 to `partial`.
void enumerate_tail(EnumState& st, std::size_t row, std::vector<FieldElement>& partial) {
  const std::size_t n = partial.size();
  if (row == st.basis.rows()) {
    ++st.visited;
    long long weight = 0;
    for (auto v : partial) weight += v.value != 0;
    if (weight < st.best) {
      st.best = weight;
      st.witness = partial;
    }
    return;
  }
  std::vector<FieldElement> next(n);
  for (std::uint32_t c = 0; c < st.q; ++c) {
    const FieldElement coeff{c};
    for (std::size_t j = 0; j < n; ++j) next[j] = st.F.add(partial[j], st.F.mul(coeff, st.basis(row, j)));
    enumerate_tail(st, row + 1, next);
  }
}

// Subset-rank scan. Each DFS node is an independent column set S kept as
// residuals of all columns modulo span(S); zero residuals form the closure.
class FlatScanner {
 public:
  FlatScanner(const Field& F, const Matrix& basis) : F_(F), k_(basis.rows()), n_(basis.cols()) {
    root_.assign(n_ * k_, FieldElement{0});
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < k_; ++i) root_[j * k_ + i] = basis(i, j);
  }

  std::vector<std::size_t> scan_from(std::size_t first) {
    std::vector<std::size_t> best(k_ + 1, 0);
    if (is_zero(root_, first)) return best;
    std::vector<std::vector<FieldElement>> stack(k_ + 1);
    stack[0] = root_;
    descend(stack, 0, first, best);
    return best;
  }

  std::size_t zero_columns() const {
    std::size_t z = 0;
    for (std::size_t j = 0; j < n_; ++j) z += is_zero(root_, j);
    return z;
  }

  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }

 private:
  bool is_zero(const std::vector<FieldElement>& res, std::size_t j) const {
    for (std::size_t i = 0; i < k_; ++i)
      if (res[j * k_ + i].value != 0) return false;
    return true;
  }

  // Pushes column `pick` into the set at depth `depth` and recurses.
  void descend(std::vector<std::vector<FieldElement>>& stack, std::size_t depth, std::size_t pick,
               std::vector<std::size_t>& best) {
    const auto& cur = stack[depth];
    auto& nxt = stack[depth + 1];
    nxt = cur;
    std::size_t pivot = 0;
    while (cur[pick * k_ + pivot].value == 0) ++pivot;
    const FieldElement inv = F_.inv(cur[pick * k_ + pivot]);
    std::size_t closure = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const FieldElement lead = cur[j * k_ + pivot];
      if (lead.value != 0) {
        const FieldElement factor = F_.mul(lead, inv);
        for (std::size_t i = 0; i < k_; ++i)
          nxt[j * k_ + i] = F_.sub(cur[j * k_ + i], F_.mul(factor, cur[pick * k_ + i]));
      }
      closure += is_zero(nxt, j);
    }
    const std::size_t rank = depth + 1;
    best[rank] = std::max(best[rank], closure);
    if (rank + 1 >= k_) return;  // flats of rank k are the whole space
    for (std::size_t j = pick + 1; j < n_; ++j)
      if (!is_zero(nxt, j)) descend(stack, depth + 1, j, best);
  }

  const Field& F_;
  std::size_t k_;
  std::size_t n_;
  std::vector<FieldElement> root_;
};

}  // namespace

std::uint64_t enumeration_work(std::uint64_t q, std::size_t k) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total = sat_add(total, power);
    power = sat_mul(power, q);
  }
  return total;
}

std::uint64_t hierarchy_work(std::size_t n, std::size_t k) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t s = 0; s < k && s <= n; ++s) {
    total = sat_add(total, binom);
    // C(n, s+1) = C(n, s) * (n - s) / (s + 1); exact in 128-bit
    const unsigned __int128 next = static_cast<unsigned __int128>(binom) * (n - s) / (s + 1);
    binom = next > kSaturated ? kSaturated : static_cast<std::uint64_t>(next);
  }
  return total;
}

Enumeration min_distance_by_enumeration(const LrcCode& code, std::uint64_t cap) {
  const Field& F = code.field();
  const std::size_t k = code.k;
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "zero code has no minimum distance");
  const std::uint64_t work = enumeration_work(F.order(), k);
  if (work > cap)
    throw Error(ErrorKind::WorkCapExceeded, "codeword enumeration needs " + std::to_string(work) +
                                                " codewords, cap is " + std::to_string(cap));
  EnumState st{F, code.code_basis, F.order(), 0, std::numeric_limits<long long>::max(), {}};
  // Leading nonzero coefficient fixed to 1: one codeword per projective point.
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<FieldElement> partial(code.code_basis.row(lead).begin(), code.code_basis.row(lead).end());
    enumerate_tail(st, lead + 1, partial);
  }
  return {st.best, st.witness, st.visited};
}

std::vector<long long> brute_weight_hierarchy(const LrcCode& code, long long t_max, std::uint64_t cap,
                                              unsigned threads) {
  const long long k = static_cast<long long>(code.k);
  if (t_max < 1 || t_max > k)
    throw Error(ErrorKind::InvalidArgument, "t must lie in [1, k=" + std::to_string(k) + "]");
  const std::uint64_t work = hierarchy_work(code.n(), code.k);
  if (work > cap)
    throw Error(ErrorKind::WorkCapExceeded, "subset-rank scan needs " + std::to_string(work) +
                                                " subsets, cap is " + std::to_string(cap));

  FlatScanner scanner(code.field(), code.code_basis);
  const std::size_t n = scanner.n();
  std::vector<std::size_t> best(code.k + 1, 0);
  best[0] = scanner.zero_columns();
  best[code.k] = n;

  if (code.k >= 2) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::size_t>> partial(threads, std::vector<std::size_t>(code.k + 1, 0));
    auto worker = [&](unsigned id) {
      for (std::size_t first = next++; first < n; first = next++) {
        const auto local = scanner.scan_from(first);
        for (std::size_t s = 0; s <= code.k; ++s) partial[id][s] = std::max(partial[id][s], local[s]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
    for (const auto& p : partial)
      for (std::size_t s = 1; s < code.k; ++s) best[s] = std::max(best[s], p[s]);
  }
  for (std::size_t s = 1; s <= code.k; ++s) best[s] = std::max(best[s], best[s - 1]);

  std::vector<long long> out;
  for (long long t = 1; t <= t_max; ++t) out.push_back(static_cast<long long>(n - best[code.k - t]));
  return out;
}

long long brute_min_distance(const LrcCode& code, const WorkCaps& caps) {
  std::optional<long long> by_subsets;
  std::optional<long long> by_words;
  if (hierarchy_work(code.n(), code.k) <= caps.subsets) by_subsets = brute_weight_hierarchy(code, 1, caps.subsets)[0];
  if (enumeration_work(code.field().order(), code.k) <= caps.codewords)
    by_words = min_distance_by_enumeration(code, caps.codewords).distance;
  if (by_subsets && by_words && *by_subsets != *by_words)
    throw Error(ErrorKind::Inconsistent, "oracles disagree on d: subset scan " + std::to_string(*by_subsets) +
                                             ", enumeration " + std::to_string(*by_words));
  if (by_subsets) return *by_subsets;
  if (by_words) return *by_words;
  throw Error(ErrorKind::WorkCapExceeded,
              "neither oracle fits: " + std::to_string(hierarchy_work(code.n(), code.k)) + " subsets (cap " +
                  std::to_string(caps.subsets) + "), " +
                  std::to_string(enumeration_work(code.field().order(), code.k)) + " codewords (cap " +
                  std::to_string(caps.codewords) + ")");
}

}  // namespace seplrc
