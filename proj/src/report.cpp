#include "vknot/report.hpp"

#include <functional>
#include <algorithm>

#include "vknot/alexander.hpp"
#include "vknot/error.hpp"
#include "vknot/quaternion.hpp"

namespace vknot {

namespace {

const std::vector<FiniteBirack>& small_biquandles() {
  static const std::vector<FiniteBirack> all = [] {
    std::vector<FiniteBirack> out;
    for (int m = 1; m <= 3; ++m)
      for (auto& b : enumerate_biracks(m, BirackFamily::Biquandles)) out.push_back(std::move(b));
    return out;
  }();
  return all;
}

const std::vector<std::pair<std::string, InvolutoryQuandle>>& small_iqs() {
  static const std::vector<std::pair<std::string, InvolutoryQuandle>> all = [] {
    std::vector<std::pair<std::string, InvolutoryQuandle>> out;
    for (int m = 1; m <= 4; ++m) {
      int k = 0;
      for (auto& q : enumerate_involutory_quandles(m))
        out.emplace_back("IQ" + std::to_string(m) + "." + std::to_string(k++), std::move(q));
    }
    return out;
  }();
  return all;
}

std::string birack_label(std::size_t index) {
  const auto& all = small_biquandles();
  int m = all[index].order();
  std::size_t k = 0;
  for (std::size_t i = 0; i < index; ++i) k += all[i].order() == m;
  return "BQ" + std::to_string(m) + "." + std::to_string(k);
}

Json state_sum_json(const GaussCode& code) {
  const auto atom = atom_profile(code);
  Json j{{"bracket", bracket(code)}, {"f", f_polynomial(code)}, {"writhe", code.writhe()}};
  j.update(Json(atom));
  try {
    const auto sb = span_bound_check(code);
    j["span"] = sb.span;
    j["bound"] = sb.bound;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroBracket) throw;
    j["span"] = nullptr;
    j["bound"] = nullptr;
  }
  return j;
}

Json quat_json(const GaussCode& code) {
  return Json{{"study", study_invariant(code).to_string()}, {"codim1_gcd", quaternionic_gcd(code).to_string()}};
}

Json alex1_json(const GaussCode& code) {
  if (!code.has_chords()) return "1";
  return elementary_ideal_gcd(relation_matrix(code), 1).to_string();
}

Json colorings_json(const GaussCode& code) {
  Json out = Json::array();
  const auto& all = small_biquandles();
  for (std::size_t i = 0; i < all.size(); ++i)
    out.push_back(Json{{"birack", birack_label(i)}, {"count", colorings(code, all[i])}});
  return out;
}

Json iq_json(const GaussCode& code) {
  Json out = Json::array();
  for (const auto& [name, q] : small_iqs()) out.push_back(Json{{"quandle", name}, {"count", iq_colorings(code, q)}});
  return out;
}

using Computer = std::function<Json(const GaussCode&)>;

const std::vector<std::pair<std::string, Computer>>& computers() {
  static const std::vector<std::pair<std::string, Computer>> table{
      {"f", [](const GaussCode& c) { return Json(f_polynomial(c).to_string()); }},
      {"state_sum", state_sum_json},
      {"genus", [](const GaussCode& c) { return Json(carrier_genus(c)); }},
      {"stats", [](const GaussCode& c) { return Json(diagram_stats(c)); }},
      {"graph", [](const GaussCode& c) { return Json(intersection_graph(c)); }},
      {"galex", [](const GaussCode& c) { return Json(generalized_alexander(c).to_string()); }},
      {"alex1", alex1_json},
      {"quat", quat_json},
      {"colorings", colorings_json},
      {"iq", iq_json},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : computers()) out.push_back(name);
    return out;
  }();
  return names;
}

LaurentPoly2 quaternionic_gcd(const GaussCode& code) {
  if (!code.has_chords()) return LaurentPoly2(1);
  return codim1_gcd(quaternionic_relations(code));
}

Json invariant_report(const GaussCode& code, const std::vector<std::string>& names, std::string_view input) {
  for (const auto& n : names) {
    const auto& known = invariant_names();
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw Error(ErrorCode::UnknownFlag, "unknown invariant: " + n);
  }
  Json inv = Json::object();
  for (const auto& [name, fn] : computers()) {
    if (std::find(names.begin(), names.end(), name) == names.end()) continue;
    try {
      inv[name] = fn(code);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SizeCap) throw;
      inv[name] = Json{{"unavailable", e.what()}};
    }
  }
  return Json{{"schema", kInvariantSchema},
              {"version", kToolVersion},
              {"input", Json{{"text", input}, {"code", code}, {"chords", code.chord_count()}}},
              {"invariants", std::move(inv)}};
}

Verdict distinguish(const GaussCode& a, const GaussCode& b) {
  using Probe = std::function<std::string(const GaussCode&)>;
  const std::vector<std::pair<std::string, Probe>> battery{
      {"components", [](const GaussCode& c) { return std::to_string(c.component_count()); }},
      {"f", [](const GaussCode& c) { return f_polynomial(c).to_string(); }},
      {"galex", [](const GaussCode& c) { return generalized_alexander(c).to_string(); }},
      {"alex1", [](const GaussCode& c) { return alex1_json(c).get<std::string>(); }},
      {"quat1", [](const GaussCode& c) { return quaternionic_gcd(c).to_string(); }},
      {"colorings", [](const GaussCode& c) { return colorings_json(c).dump(); }},
      {"iq", [](const GaussCode& c) { return iq_json(c).dump(); }},
  };
  Verdict v;
  for (const auto& [name, probe] : battery) {
    std::string x, y;
    try {
      x = probe(a);
      y = probe(b);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SizeCap) throw;
      continue;
    }
    v.compared.push_back(name);
    if (x != y) {
      v.distinct = true;
      v.witness = name;
      v.left = x;
      v.right = y;
      return v;
    }
  }
  return v;
}

Json to_json(const Verdict& v, std::string_view a, std::string_view b) {
  Json j{{"schema", kDistinguishSchema},
         {"version", kToolVersion},
         {"inputs", Json::array({a, b})},
         {"verdict", v.distinct ? "DISTINCT" : "INCONCLUSIVE"},
         {"compared", v.compared}};
  if (v.distinct) j["witness"] = Json{{"invariant", v.witness}, {"values", Json::array({v.left, v.right})}};
  return j;
}

}  // namespace vknot
