#include "seplrc/code.hpp"

#include <algorithm>
#include <sstream>

#include "seplrc/error.hpp"

namespace seplrc {

long long ceil_div(long long num, long long den) {
  const long long q = num / den;
  return (num % den != 0 && ((num > 0) == (den > 0))) ? q + 1 : q;
}

FieldElement LrcCode::coordinate(std::size_t position) const {
  const AffinePoint& pt = points.at(position);
  return space.orientation == Axis::YFibre ? pt.x : pt.y;
}

LrcCode build_code(const SepCurve& curve, const VSpec& space, const FibreSelection& selection) {
  const Field& F = curve.field();
  const std::vector<Fibre> all = curve.fibres(space.orientation);

  std::vector<Fibre> chosen;
  if (selection.bases) {
    std::vector<FieldElement> bases = *selection.bases;
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    for (FieldElement base : bases) {
      auto it = std::find_if(all.begin(), all.end(), [&](const Fibre& f) { return f.base == base; });
      if (it == all.end() || !it->totally_split)
        throw Error(ErrorKind::FibreNotSplit,
                    "fibre over " + std::to_string(base.value) + " is not totally split");
      chosen.push_back(*it);
    }
    if (chosen.empty()) throw Error(ErrorKind::NoSplitFibres, "explicit fibre selection is empty");
  } else {
    std::copy_if(all.begin(), all.end(), std::back_inserter(chosen), [](const Fibre& f) { return f.totally_split; });
    if (chosen.empty()) throw Error(ErrorKind::NoSplitFibres, "curve has no totally split fibre on this axis");
  }

  LrcCode code{curve, space, std::move(chosen), {}, space.basis(), {}, {}, 0, {}, {}};
  for (std::size_t f = 0; f < code.fibres.size(); ++f) {
    for (std::size_t s = 0; s < code.fibres[f].points.size(); ++s) {
      code.points.push_back(code.fibres[f].points[s]);
      code.recovery_map.emplace_back(f, s);
    }
  }

  code.generator = Matrix(code.basis.size(), code.points.size());
  for (std::size_t row = 0; row < code.basis.size(); ++row) {
    const auto [i, j] = xy_exponents(space.orientation, code.basis[row]);
    for (std::size_t col = 0; col < code.points.size(); ++col) {
      const AffinePoint& pt = code.points[col];
      code.generator(row, col) = F.mul(F.pow(pt.x, static_cast<std::uint64_t>(i)),
                                       F.pow(pt.y, static_cast<std::uint64_t>(j)));
    }
  }

  Echelon ech = row_reduce(F, code.generator);
  code.k = ech.rank();
  code.code_basis = Matrix(code.k, code.points.size());
  for (std::size_t r = 0; r < code.k; ++r)
    for (std::size_t c = 0; c < code.points.size(); ++c) code.code_basis(r, c) = ech.reduced(r, c);
  code.kernel = left_kernel(F, code.generator);
  return code;
}

std::vector<FieldElement> encode(const LrcCode& code, std::span<const FieldElement> message) {
  if (message.size() != code.dim_v())
    throw Error(ErrorKind::LengthMismatch, "message has " + std::to_string(message.size()) + " symbols, expected " +
                                               std::to_string(code.dim_v()));
  return vec_mat(code.field(), message, code.generator);
}

std::string export_generator(const LrcCode& code) {
  std::ostringstream out;
  out << "# q=" << code.field().order() << " n=" << code.n() << " rows=" << code.dim_v() << " k=" << code.k << '\n';
  for (std::size_t r = 0; r < code.generator.rows(); ++r) {
    for (std::size_t c = 0; c < code.generator.cols(); ++c) {
      if (c) out << ' ';
      out << code.generator(r, c).value;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<FieldElement> erasure_decode(const LrcCode& code, std::span<const std::optional<FieldElement>> word) {
  if (word.size() != code.n())
    throw Error(ErrorKind::LengthMismatch, "word length " + std::to_string(word.size()) + " != n");
  std::vector<std::size_t> known;
  std::vector<FieldElement> targets;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i]) {
      known.push_back(i);
      targets.push_back(*word[i]);
    }
  }
  if (known.size() == word.size()) {
    std::vector<FieldElement> out;
    for (const auto& v : word) out.push_back(*v);
    return out;
  }
  const Field& F = code.field();
  const Matrix sub = code.code_basis.select_columns(known);
  if (rank(F, sub) < code.k)
    throw Error(ErrorKind::Ambiguous, "a nonzero codeword is supported inside the " +
                                          std::to_string(word.size() - known.size()) + " erased positions");
  const auto coeffs = solve_left(F, sub, targets);
  if (!coeffs) throw Error(ErrorKind::Inconsistent, "known symbols do not lie on any codeword");
  return vec_mat(F, *coeffs, code.code_basis);
}

std::optional<std::vector<FieldElement>> codeword_inside(const LrcCode& code, std::span<const std::size_t> erased) {
  std::vector<bool> is_erased(code.n(), false);
  for (auto e : erased) is_erased.at(e) = true;
  std::vector<std::size_t> known;
  for (std::size_t i = 0; i < code.n(); ++i)
    if (!is_erased[i]) known.push_back(i);
  const Matrix ker = left_kernel(code.field(), code.code_basis.select_columns(known));
  if (ker.rows() == 0) return std::nullopt;
  return vec_mat(code.field(), ker.row(0), code.code_basis);
}

// --- bounds ------------------------------------------------------------------

std::string_view to_string(GonalityRung rung) {
  switch (rung) {
    case GonalityRung::Trivial: return "trivial";
    case GonalityRung::Clifford: return "clifford";
    case GonalityRung::Override: return "override";
    case GonalityRung::Floor: return "floor";
  }
  return "unknown";
}

Gonality resolve_gonality(const SepCurve& curve, long long t, const GonalityPolicy& policy) {
  if (t <= 1) return {t, 0, GonalityRung::Trivial};
  if (curve.semigroup_certified() && (curve.genus() <= 1 || std::min(curve.a(), curve.b()) == 2))
    return {t, curve.semigroup().element_at(t), GonalityRung::Clifford};
  if (auto it = policy.overrides.find(t); it != policy.overrides.end())
    return {t, it->second, GonalityRung::Override};
  if (policy.require_certified)
    throw Error(ErrorKind::UncertifiedGonality,
                "gamma_" + std::to_string(t) + " is not certified; only gamma_t >= t-1 is available");
  return {t, t - 1, GonalityRung::Floor};
}

long long locality_singleton_bound(long long n, long long k, long long r, long long t) {
  return n + t + 1 - k - ceil_div(k - t + 1, r);
}

ParamReport params(const LrcCode& code, const GonalityPolicy& policy) {
  const SepCurve& C = code.curve;
  const VSpec& V = code.space;
  ParamReport rep;
  rep.n = static_cast<long long>(code.n());
  rep.k = static_cast<long long>(code.k);
  rep.r = V.r;
  rep.m = code.m();
  rep.dim_v = static_cast<long long>(code.dim_v());
  rep.genus = C.genus();
  rep.semigroup_certificate = std::string(to_string(C.weierstrass_certificate()));
  rep.semigroup_certified = C.semigroup_certified();

  rep.w = rep.m >= rep.n ? C.semigroup().iota(rep.m - rep.n) : 0;
  rep.w_certified = rep.m < rep.n || rep.semigroup_certified;
  rep.kernel_dim = rep.dim_v - rep.k;
  rep.abundant = rep.kernel_dim > 0;

  rep.gamma = resolve_gonality(C, rep.w + 1, policy);
  const long long goppa = rep.n - rep.m + rep.gamma.value;
  rep.d_lower = std::max(goppa, 1LL);
  rep.d_lower_rule = goppa >= 1 ? "goppa" : "trivial";
  rep.d_lower_certified = rep.w_certified;

  const long long v1 = C.fibre_pole_order(V.orientation);
  const long long v2 = C.coordinate_pole_order(V.orientation);
  if (V.has_constant_layer()) {
    const long long covered = V.ells[0] * v1;
    if (covered < rep.n)
      rep.d_upper = rep.n - covered;
    else
      rep.constant_layer_abundant = true;
  }

  rep.defect_upper = rep.n + 2 - (rep.k + rep.d_lower + ceil_div(rep.k, rep.r));

  if (rep.semigroup_certified && rep.m < rep.n && V.r == v1 - 1 && is_complete(V, C)) {
    const long long g = rep.genus;
    const long long threshold = v2 * (v1 - 1);
    DefectClosedForm form;
    if (rep.m < threshold) {
      form.bound = g + 1 - ceil_div(rep.m + 1 - g, v1 - 1);
    } else {
      form.beyond_threshold = true;
      form.ell_top = (rep.m - threshold) / v1;
      form.bound = g + 2 + form.ell_top - ceil_div(rep.m - g - form.ell_top, v1 - 1);
    }
    rep.defect_closed_form = form;
  }
  if (rep.semigroup_certified) rep.riemann_gap = riemann_gap(V, C);
  return rep;
}

std::vector<GhwBound> ghw_bounds(const LrcCode& code, long long t_max, const GonalityPolicy& policy) {
  const long long k = static_cast<long long>(code.k);
  if (t_max < 1 || t_max > k)
    throw Error(ErrorKind::InvalidArgument, "t must lie in [1, k=" + std::to_string(k) + "]");
  const SepCurve& C = code.curve;
  const VSpec& V = code.space;
  const long long n = static_cast<long long>(code.n());
  const long long m = code.m();
  const long long w = m >= n ? C.semigroup().iota(m - n) : 0;
  const long long kernel_dim = static_cast<long long>(code.dim_v()) - k;
  const long long v1 = C.fibre_pole_order(V.orientation);

  long long support = 0;
  for (std::size_t c = 0; c < code.code_basis.cols(); ++c) {
    for (std::size_t r = 0; r < code.code_basis.rows(); ++r) {
      if (code.code_basis(r, c).value != 0) {
        ++support;
        break;
      }
    }
  }
  const bool nondegenerate = support == n;

  std::vector<GhwBound> out(static_cast<std::size_t>(k));
  for (long long t = 1; t <= k; ++t) {
    GhwBound& b = out[t - 1];
    b.t = t;
    b.upper = t == k ? support : n;
    if (nondegenerate) {
      b.locality_upper = locality_singleton_bound(n, k, V.r, t);
      b.upper = std::min(b.upper, *b.locality_upper);
    }
  }

  // Functions vanishing on mu whole fibres: layer i keeps max(0, l_i + 1 - mu)
  // free coefficients; the evaluation kernel sits inside that space.
  const long long fibres = static_cast<long long>(code.fibres.size());
  for (long long mu = 1; mu <= fibres && mu * v1 < m; ++mu) {
    long long vanishing = 0;
    for (int i = 0; i < V.r; ++i)
      if (V.epsilons[i]) vanishing += std::max(0LL, static_cast<long long>(V.ells[i]) + 1 - mu);
    const long long t = vanishing - kernel_dim;
    if (t < 1 || t > k) continue;
    GhwBound& b = out[t - 1];
    const long long value = n - mu * v1;
    if (!b.fibre_upper || value < *b.fibre_upper) {
      b.fibre_upper = value;
      b.fibre_count = mu;
    }
    b.upper = std::min(b.upper, value);
  }
  for (long long t = k - 1; t >= 1; --t) out[t - 1].upper = std::min(out[t - 1].upper, out[t].upper - 1);

  long long prev = 0;
  for (long long t = 1; t <= t_max; ++t) {
    GhwBound& b = out[t - 1];
    b.gamma = resolve_gonality(C, w + t, policy);
    b.lower = std::max({n - m + b.gamma.value, t, prev + 1});
    prev = b.lower;
  }
  out.resize(static_cast<std::size_t>(t_max));
  return out;
}

RankIndices rank_indices(long long n, long long k, long long r,
                         std::span<const std::pair<long long, long long>> brackets) {
  const long long known = static_cast<long long>(brackets.size());
  if (known > k) throw Error(ErrorKind::LengthMismatch, "more brackets than t = 1..k");
  RankIndices out;
  out.mds_floor = std::max(1LL, k - r + 1);
  out.locality_equality.resize(brackets.size());
  for (long long t = 1; t <= known; ++t) {
    const auto [lo, hi] = brackets[t - 1];
    const long long singleton = n - k + t;
    const long long locality = locality_singleton_bound(n, k, r, t);
    if (!out.mds.earliest_possible && hi >= singleton) out.mds.earliest_possible = t;
    if (!out.mds.earliest_certain && lo >= singleton) out.mds.earliest_certain = t;
    if (!out.optimal.earliest_possible && hi >= locality) out.optimal.earliest_possible = t;
    if (!out.optimal.earliest_certain && lo >= locality) out.optimal.earliest_certain = t;
    if (lo >= locality)
      out.locality_equality[t - 1] = true;
    else if (hi < locality)
      out.locality_equality[t - 1] = false;
  }
  const long long top = k - r;
  if (top >= 1 && top <= known) {
    const auto [lo, hi] = brackets[top - 1];
    const long long limit = n - r - 1;
    if (hi <= limit)
      out.top_weight_check = true;
    else if (lo > limit)
      out.top_weight_check = false;
  }
  return out;
}

}  // namespace seplrc
