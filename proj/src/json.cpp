#include "vknot/json.hpp"

#include "vknot/error.hpp"

namespace vknot {

namespace {

const char* passage_name(Passage p) {
  switch (p) {
    case Passage::Over: return "O";
    case Passage::Under: return "U";
    case Passage::Flat: return "F";
    case Passage::Free: return "C";
  }
  return "?";
}

Passage passage_from(const std::string& s) {
  if (s == "O") return Passage::Over;
  if (s == "U") return Passage::Under;
  if (s == "F") return Passage::Flat;
  if (s == "C") return Passage::Free;
  throw Error(ErrorCode::SyntaxError, "unknown passage: " + s);
}

const char* kind_name(CodeKind k) {
  switch (k) {
    case CodeKind::Classical: return "classical";
    case CodeKind::Flat: return "flat";
    case CodeKind::Free: return "free";
  }
  return "?";
}

CodeKind kind_from(const std::string& s) {
  if (s == "classical") return CodeKind::Classical;
  if (s == "flat") return CodeKind::Flat;
  if (s == "free") return CodeKind::Free;
  throw Error(ErrorCode::SyntaxError, "unknown code kind: " + s);
}

const char* crossing_name(CrossingKind k) {
  switch (k) {
    case CrossingKind::Classical: return "classical";
    case CrossingKind::Virtual: return "virtual";
    case CrossingKind::Flat: return "flat";
  }
  return "?";
}

CrossingKind crossing_from(const std::string& s) {
  if (s == "classical") return CrossingKind::Classical;
  if (s == "virtual") return CrossingKind::Virtual;
  if (s == "flat") return CrossingKind::Flat;
  throw Error(ErrorCode::SyntaxError, "unknown crossing kind: " + s);
}

MoveKind move_from(const std::string& s) {
  for (auto k : {MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert, MoveKind::R2Delete, MoveKind::R3})
    if (to_string(k) == s) return k;
  throw Error(ErrorCode::SyntaxError, "unknown move kind: " + s);
}

Json square(const std::vector<int>& flat, int m) {
  Json rows = Json::array();
  for (int a = 0; a < m; ++a) {
    Json row = Json::array();
    for (int b = 0; b < m; ++b) row.push_back(flat[static_cast<std::size_t>(a * m + b)]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> unsquare(const Json& rows, int m) {
  std::vector<int> out;
  if (rows.size() != static_cast<std::size_t>(m)) throw Error(ErrorCode::InvalidInput, "table has wrong size");
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(m)) throw Error(ErrorCode::InvalidInput, "table has wrong size");
    for (const auto& v : row) out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

void to_json(Json& j, const Token& t) {
  j = Json{{"chord", t.chord}, {"passage", passage_name(t.passage)}, {"sign", t.sign}};
}

void from_json(const Json& j, Token& t) {
  t.chord = j.at("chord").get<int>();
  t.passage = passage_from(j.at("passage").get<std::string>());
  t.sign = j.at("sign").get<int>();
}

void to_json(Json& j, const GaussCode& c) {
  j = Json{{"kind", kind_name(c.kind())}, {"components", c.components()}, {"text", c.to_string()}};
}

void from_json(const Json& j, GaussCode& c) {
  c = GaussCode::from_components(j.at("components").get<std::vector<Component>>(),
                                 kind_from(j.at("kind").get<std::string>()));
}

void to_json(Json& j, const IntersectionGraph& g) {
  j = Json{{"vertices", g.vertices}, {"labels", g.labels}, {"edges", g.edges}};
}

void to_json(Json& j, const DiagramStats& s) {
  j = Json{{"crossings", s.crossings},
           {"virtual_crossings", s.virtual_crossings},
           {"genus", s.genus},
           {"components", s.components}};
}

void to_json(Json& j, const PDCrossing& c) { j = Json{{"kind", crossing_name(c.kind)}, {"edges", c.edges}}; }

void from_json(const Json& j, PDCrossing& c) {
  c.kind = crossing_from(j.at("kind").get<std::string>());
  c.edges = j.at("edges").get<std::array<int, 4>>();
}

void to_json(Json& j, const PlanarDiagram& pd) {
  j = Json{{"crossings", pd.crossings}, {"free_loops", pd.free_loops}};
}

void from_json(const Json& j, PlanarDiagram& pd) {
  pd.crossings = j.at("crossings").get<std::vector<PDCrossing>>();
  pd.free_loops = j.value("free_loops", std::size_t{0});
  traverse_pd(pd);
}

void to_json(Json& j, const LaurentPoly1& p) {
  j = Json::array();
  for (const auto& [e, c] : p.pairs()) j.push_back(Json::array({e, c}));
}

void to_json(Json& j, const LaurentPoly2& p) { j = p.to_string(); }

void to_json(Json& j, const AtomProfile& a) {
  j = Json{{"sA", a.sA}, {"sB", a.sB}, {"atom_genus", a.genus()}, {"orientable", a.orientable}};
}

void to_json(Json& j, const SpanBound& s) { j = Json{{"span", s.span}, {"bound", s.bound}, {"holds", s.holds}}; }

void to_json(Json& j, const Site& s) { j = Json::array({s.component, s.index}); }

void from_json(const Json& j, Site& s) {
  s.component = j.at(0).get<std::size_t>();
  s.index = j.at(1).get<std::size_t>();
}

void to_json(Json& j, const MoveDescriptor& m) {
  j = Json{{"kind", to_string(m.kind)},
           {"sites", m.sites},
           {"sign", m.sign},
           {"flag", m.flag},
           {"under_first", m.under_first}};
}

void from_json(const Json& j, MoveDescriptor& m) {
  m.kind = move_from(j.at("kind").get<std::string>());
  m.sites = j.at("sites").get<std::vector<Site>>();
  m.sign = j.value("sign", 1);
  m.flag = j.value("flag", false);
  m.under_first = j.value("under_first", false);
}

void to_json(Json& j, const FiniteBirack& b) {
  const int m = b.order();
  j = Json{{"order", m},
           {"up", square(b.up_table(), m)},
           {"down", square(b.down_table(), m)},
           {"upbar", square(b.upbar_table(), m)},
           {"downbar", square(b.downbar_table(), m)}};
}

void from_json(const Json& j, FiniteBirack& b) {
  const int m = j.at("order").get<int>();
  b = FiniteBirack(m, unsquare(j.at("up"), m), unsquare(j.at("down"), m), unsquare(j.at("upbar"), m),
                   unsquare(j.at("downbar"), m));
}

void to_json(Json& j, const AxiomReport& r) {
  j = Json{{"birack", r.birack}, {"biquandle", r.biquandle}, {"strong", r.strong}, {"failures", r.failures}};
}

void to_json(Json& j, const HomologyGroup& h) {
  j = Json{{"free_rank", h.free_rank}, {"torsion", h.torsion}, {"text", h.to_string()}};
}

void to_json(Json& j, const GroupPresentation& p) {
  j = Json{{"generators", p.generators}, {"relators", p.relators}, {"text", p.to_string()}};
}

void to_json(Json& j, const BraidWord& w) { j = Json{{"strands", w.strands}, {"word", w.to_string()}}; }

void from_json(const Json& j, BraidWord& w) {
  w = parse_braid(j.at("word").get<std::string>(), j.at("strands").get<int>());
}

void to_json(Json& j, const FreeGroupAutomorphism& f) {
  j = Json{{"rank", f.rank}, {"images", f.images}, {"text", f.to_string()}};
}

void to_json(Json& j, const RelationCheck& c) {
  j = Json{{"family", c.family}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}, {"holds", c.holds}};
}

void to_json(Json& j, const PresentationReport& r) {
  j = Json{{"strands", r.strands},
           {"checks", r.checks},
           {"defining_relations_hold", r.defining_relations_hold()},
           {"all_hold", r.all_hold()},
           {"failures", r.failures()}};
}

}  // namespace vknot
