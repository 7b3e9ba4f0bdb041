#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seplrc/curve.hpp"
#include "seplrc/funcspace.hpp"
#include "seplrc/linalg.hpp"

namespace seplrc {

/// Which fibres to evaluate on. Without explicit bases every totally split
/// fibre is used.
struct FibreSelection {
  std::optional<std::vector<FieldElement>> bases;
};

/// The evaluation code C(P, V).
struct LrcCode {
  SepCurve curve;
  VSpec space;
  std::vector<Fibre> fibres;        // selected, ascending base
  std::vector<AffinePoint> points;  // fibre by fibre
  std::vector<Monomial> basis;
  Matrix generator;                 // dim_V x n, row t = basis[t] along points
  Matrix code_basis;                // k x n, reduced echelon rows of `generator`
  std::size_t k = 0;
  Matrix kernel;                    // rows: basis coefficients of functions vanishing on P
  std::vector<std::pair<std::size_t, std::size_t>> recovery_map;  // position -> (fibre, slot)

  const Field& field() const { return curve.field(); }
  std::size_t n() const { return points.size(); }
  std::size_t dim_v() const { return basis.size(); }
  int r() const { return space.r; }
  long long m() const { return m_of_V(space, curve); }
  /// In-fibre coordinate of a position.
  FieldElement coordinate(std::size_t position) const;
};

LrcCode build_code(const SepCurve& curve, const VSpec& space, const FibreSelection& selection = {});

/// message . G; message has dim_V entries.
std::vector<FieldElement> encode(const LrcCode& code, std::span<const FieldElement> message);

/// "# q=<q> n=<n> rows=<dim_V> k=<k>" then one generator row per line.
std::string export_generator(const LrcCode& code);

/// Recovers all erased (nullopt) coordinates from the known ones.
/// Throws Ambiguous when a nonzero codeword is supported inside the
/// erasure set and Inconsistent when the known symbols fit no codeword.
std::vector<FieldElement> erasure_decode(const LrcCode& code, std::span<const std::optional<FieldElement>> word);

/// A nonzero codeword supported inside `erased`, if one exists.
std::optional<std::vector<FieldElement>> codeword_inside(const LrcCode& code, std::span<const std::size_t> erased);

// --- bounds ------------------------------------------------------------------

enum class GonalityRung { Trivial, Clifford, Override, Floor };
std::string_view to_string(GonalityRung rung);

struct GonalityPolicy {
  std::map<long long, long long> overrides;  // t -> gamma_t
  bool require_certified = false;
};

struct Gonality {
  long long t = 1;
  long long value = 0;
  GonalityRung rung = GonalityRung::Trivial;
};

/// gamma_t via the ladder: gamma_1 = 0; h_t when H is certified and the
/// curve has genus <= 1 or is hyperelliptic (min(a,b) = 2); a user
/// override; otherwise the floor t - 1.
Gonality resolve_gonality(const SepCurve& curve, long long t, const GonalityPolicy& policy);

struct DefectClosedForm {
  bool beyond_threshold = false;  // m >= v(c)(v(f)-1)
  long long ell_top = 0;          // l_{v(f)-1} in the beyond-threshold case
  long long bound = 0;
};

struct ParamReport {
  long long n = 0;
  long long k = 0;
  long long r = 0;
  long long m = 0;
  long long dim_v = 0;
  long long genus = 0;
  std::string semigroup_certificate;
  bool semigroup_certified = false;

  long long w = 0;  // iota(m - n)
  bool w_certified = false;
  long long kernel_dim = 0;  // dim_V - k
  bool abundant = false;

  Gonality gamma;  // gamma_{w+1}
  long long d_lower = 0;
  bool d_lower_certified = false;
  std::string d_lower_rule;

  std::optional<long long> d_upper;  // n - l_0 v(f)
  bool constant_layer_abundant = false;  // l_0 v(f) >= n

  long long defect_upper = 0;  // n + 2 - (k + d_lower + ceil(k/r))
  std::optional<DefectClosedForm> defect_closed_form;
  std::optional<long long> riemann_gap;
};

ParamReport params(const LrcCode& code, const GonalityPolicy& policy = {});

struct GhwBound {
  long long t = 0;
  long long lower = 0;
  Gonality gamma;                         // gamma_{w+t}
  std::optional<long long> locality_upper;  // k + d_t + ceil((k-t+1)/r) <= n + t + 1
  std::optional<long long> fibre_upper;     // support of mu whole fibres
  std::optional<long long> fibre_count;     // the mu achieving fibre_upper
  long long upper = 0;
};

/// Bounds on d_1..d_{t_max}; lowers are strictly increasing and uppers are
/// propagated down from d_k <= support size.
std::vector<GhwBound> ghw_bounds(const LrcCode& code, long long t_max, const GonalityPolicy& policy = {});

/// k + d_t + ceil((k-t+1)/r) <= n + t + 1 solved for d_t.
long long locality_singleton_bound(long long n, long long k, long long r, long long t);

struct RankWindow {
  std::optional<long long> earliest_possible;
  std::optional<long long> earliest_certain;
  bool exact() const { return earliest_possible && earliest_possible == earliest_certain; }
};

struct RankIndices {
  RankWindow mds;
  RankWindow optimal;
  long long mds_floor = 1;  // k - r + 1
  /// Per t: equality in the locality bound (nullopt when undecided).
  std::vector<std::optional<bool>> locality_equality;
  /// d_{k-r} <= n - r - 1 (nullopt when undecided or k <= r).
  std::optional<bool> top_weight_check;
};

/// `brackets[t-1]` = (lower, upper) on d_t for t = 1..T with T <= k; exact
/// values have lower == upper.
RankIndices rank_indices(long long n, long long k, long long r,
                         std::span<const std::pair<long long, long long>> brackets);

long long ceil_div(long long num, long long den);

}  // namespace seplrc
