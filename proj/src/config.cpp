#include "seplrc/config.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "seplrc/error.hpp"

namespace seplrc {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::Config, msg); }

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items())
    if (!ok.count(key)) fail("unknown key '" + key + "' in " + where);
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail("missing key '" + std::string(key) + "' in " + where);
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    fail("key '" + std::string(key) + "' in " + where + " has the wrong type");
  }
}

}  // namespace

CodeConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  only_keys(doc, "config",
            {"field", "curve", "orientation", "r", "space", "fibres", "gonality_overrides", "assertions"});
  CodeConfig cfg;

  const json& field = doc.contains("field") ? doc["field"] : json();
  if (field.is_null()) fail("missing key 'field'");
  only_keys(field, "field", {"p", "m", "modulus"});
  cfg.p = get<std::uint32_t>(field, "p", "field");
  cfg.m = field.contains("m") ? get<std::uint32_t>(field, "m", "field") : 1;
  if (field.contains("modulus")) cfg.modulus = get<std::vector<std::uint32_t>>(field, "modulus", "field");

  if (!doc.contains("curve")) fail("missing key 'curve'");
  only_keys(doc["curve"], "curve", {"A", "B"});
  cfg.A = get<std::vector<std::uint64_t>>(doc["curve"], "A", "curve");
  cfg.B = get<std::vector<std::uint64_t>>(doc["curve"], "B", "curve");

  if (doc.contains("orientation")) {
    const auto o = get<std::string>(doc, "orientation", "config");
    if (o == "y")
      cfg.orientation = Axis::YFibre;
    else if (o == "x")
      cfg.orientation = Axis::XFibre;
    else
      fail("orientation must be \"y\" or \"x\"");
  }
  if (doc.contains("r")) cfg.r = get<int>(doc, "r", "config");

  if (!doc.contains("space")) fail("missing key 'space'");
  const json& space = doc["space"];
  only_keys(space, "space", {"complete_m", "epsilons", "ells"});
  if (space.contains("complete_m")) {
    if (space.contains("ells") || space.contains("epsilons")) fail("space takes complete_m or ells, not both");
    cfg.complete_m = get<long long>(space, "complete_m", "space");
  } else {
    cfg.ells = get<std::vector<int>>(space, "ells", "space");
    cfg.epsilons = space.contains("epsilons") ? get<std::vector<int>>(space, "epsilons", "space")
                                              : std::vector<int>(cfg.ells.size(), 1);
  }

  if (doc.contains("fibres")) {
    const json& f = doc["fibres"];
    if (f.is_string()) {
      if (f.get<std::string>() != "all") fail("fibres must be \"all\" or a list of base values");
    } else {
      cfg.fibres = get<std::vector<std::uint64_t>>(doc, "fibres", "config");
    }
  }

  if (doc.contains("gonality_overrides")) {
    const json& g = doc["gonality_overrides"];
    if (!g.is_object()) fail("gonality_overrides must map t to gamma_t");
    for (const auto& [key, value] : g.items()) {
      std::size_t used = 0;
      long long t = 0;
      try {
        t = std::stoll(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || key.empty() || t < 1) fail("gonality override key '" + key + "' is not t >= 1");
      if (!value.is_number_integer()) fail("gonality override for t=" + key + " is not an integer");
      cfg.gonality_overrides[t] = value.get<long long>();
    }
  }

  if (doc.contains("assertions")) {
    only_keys(doc["assertions"], "assertions", {"semigroup"});
    if (doc["assertions"].contains("semigroup"))
      cfg.assert_semigroup = get<bool>(doc["assertions"], "semigroup", "assertions");
  }
  return cfg;
}

std::string config_to_json(const CodeConfig& cfg) {
  ordered_json doc;
  doc["field"]["p"] = cfg.p;
  doc["field"]["m"] = cfg.m;
  if (cfg.modulus) doc["field"]["modulus"] = *cfg.modulus;
  doc["curve"]["A"] = cfg.A;
  doc["curve"]["B"] = cfg.B;
  doc["orientation"] = std::string(to_string(cfg.orientation));
  if (cfg.r) doc["r"] = *cfg.r;
  if (cfg.complete_m) {
    doc["space"]["complete_m"] = *cfg.complete_m;
  } else {
    doc["space"]["epsilons"] = cfg.epsilons;
    doc["space"]["ells"] = cfg.ells;
  }
  if (cfg.fibres)
    doc["fibres"] = *cfg.fibres;
  else
    doc["fibres"] = "all";
  if (!cfg.gonality_overrides.empty()) {
    doc["gonality_overrides"] = ordered_json::object();
    for (const auto& [t, g] : cfg.gonality_overrides) doc["gonality_overrides"][std::to_string(t)] = g;
  }
  if (cfg.assert_semigroup) doc["assertions"]["semigroup"] = true;
  return doc.dump(2);
}

BuiltCode build(const CodeConfig& cfg) {
  const Field F = Field::make(cfg.p, cfg.m, cfg.modulus);
  auto poly = [&](const std::vector<std::uint64_t>& coeffs) { return UniPoly::from_values(F, coeffs); };
  const SepCurve curve = SepCurve::make(F, poly(cfg.A), poly(cfg.B), CurveOverrides{cfg.assert_semigroup});
  const VSpec space = cfg.complete_m ? completion(*cfg.complete_m, curve, cfg.orientation, cfg.r)
                                     : VSpec::make(curve, cfg.orientation, cfg.r, cfg.epsilons, cfg.ells);
  FibreSelection selection;
  if (cfg.fibres) {
    selection.bases.emplace();
    for (auto v : *cfg.fibres) selection.bases->push_back(F.element(v));
  }
  return {build_code(curve, space, selection), GonalityPolicy{cfg.gonality_overrides, false}};
}

std::vector<std::optional<FieldElement>> parse_word(const Field& field, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::optional<FieldElement>> out;
  std::string tok;
  while (in >> tok) {
    if (tok == "?") {
      out.emplace_back();
      continue;
    }
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty() || tok[0] == '-') fail("codeword token '" + tok + "' is not a symbol");
    if (v >= field.order()) fail("codeword symbol " + tok + " is not below q=" + std::to_string(field.order()));
    out.emplace_back(FieldElement{static_cast<std::uint32_t>(v)});
  }
  return out;
}

std::string format_word(std::span<const std::optional<FieldElement>> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += word[i] ? std::to_string(word[i]->value) : "?";
  }
  return out;
}

std::string format_word(std::span<const FieldElement> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i].value);
  }
  return out;
}

namespace {

ordered_json gamma_json(const Gonality& g) {
  return {{"t", g.t}, {"value", g.value}, {"rung", std::string(to_string(g.rung))}};
}

template <typename T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::string report_json(const ParamReport& rep, const std::vector<GhwBound>& ghw) {
  ordered_json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["r"] = rep.r;
  j["m"] = rep.m;
  j["dim_v"] = rep.dim_v;
  j["genus"] = rep.genus;
  j["semigroup"] = {{"certificate", rep.semigroup_certificate}, {"certified", rep.semigroup_certified}};
  j["w"] = {{"value", rep.w}, {"certified", rep.w_certified}};
  j["kernel_dim"] = rep.kernel_dim;
  j["abundant"] = rep.abundant;
  j["d_lower"] = {{"value", rep.d_lower},
                  {"rule", rep.d_lower_rule},
                  {"certified", rep.d_lower_certified},
                  {"gamma", gamma_json(rep.gamma)}};
  j["d_upper"] = rep.d_upper ? ordered_json{{"value", *rep.d_upper}, {"rule", "constant-layer-product"}}
                             : ordered_json(nullptr);
  j["constant_layer_abundant"] = rep.constant_layer_abundant;
  j["defect_upper"] = {{"value", rep.defect_upper}, {"rule", "singleton-like"}};
  if (rep.defect_closed_form) {
    const auto& f = *rep.defect_closed_form;
    j["defect_closed_form"] = {{"value", f.bound},
                               {"rule", f.beyond_threshold ? "optimal-defect-beyond-threshold"
                                                           : "optimal-defect-below-threshold"},
                               {"ell_top", f.ell_top}};
  } else {
    j["defect_closed_form"] = nullptr;
  }
  j["riemann_gap"] = opt(rep.riemann_gap);
  if (!ghw.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& b : ghw) {
      rows.push_back({{"t", b.t},
                      {"lower", {{"value", b.lower}, {"rule", "goppa-ghw"}, {"gamma", gamma_json(b.gamma)}}},
                      {"upper",
                       {{"value", b.upper},
                        {"locality_singleton", opt(b.locality_upper)},
                        {"fibre_vanishing", opt(b.fibre_upper)},
                        {"fibre_count", opt(b.fibre_count)}}}});
    }
    j["ghw"] = rows;
  }
  return j.dump(2);
}

std::string report_table(const ParamReport& rep) {
  std::ostringstream out;
  auto row = [&](const std::string& label, const std::string& value) {
    out << "  " << label << std::string(label.size() < 24 ? 24 - label.size() : 1, ' ') << value << '\n';
  };
  row("n", std::to_string(rep.n));
  row("k", std::to_string(rep.k));
  row("r", std::to_string(rep.r));
  row("m", std::to_string(rep.m));
  row("dim V", std::to_string(rep.dim_v));
  row("genus", std::to_string(rep.genus));
  row("semigroup", rep.semigroup_certificate);
  row("w", std::to_string(rep.w) + (rep.w_certified ? "" : " (uncertified)"));
  row("kernel dim", std::to_string(rep.kernel_dim));
  row("d >=", std::to_string(rep.d_lower) + "  [" + rep.d_lower_rule + ", gamma_" + std::to_string(rep.gamma.t) +
                  "=" + std::to_string(rep.gamma.value) + " " + std::string(to_string(rep.gamma.rung)) + "]");
  if (rep.d_upper) row("d <=", std::to_string(*rep.d_upper) + "  [constant-layer-product]");
  if (rep.constant_layer_abundant) row("d <=", "-  (constant layer covers n: abundant)");
  row("defect <=", std::to_string(rep.defect_upper) + "  [singleton-like]");
  if (rep.defect_closed_form) row("defect closed form", std::to_string(rep.defect_closed_form->bound));
  if (rep.riemann_gap) row("riemann gap", std::to_string(*rep.riemann_gap));
  return out.str();
}

}  // namespace seplrc
