#include "vknot/alexander.hpp"

#include "vknot/codes.hpp"
#include "vknot/error.hpp"

namespace vknot {

RelationMatrix relation_matrix(const GaussCode& code) {
  if (code.kind() != CodeKind::Classical)
    throw Error(ErrorCode::InvalidInput, "relation matrix needs a classical code");
  const CodeLayout lay(code);
  const std::size_t n = lay.chord_count();
  if (n == 0) throw Error(ErrorCode::EmptyCode, "no crossings");
  const LaurentPoly2 one(1), s = LaurentPoly2::s(), t = LaurentPoly2::t();
  const LaurentPoly2 si = LaurentPoly2::s(-1), ti = LaurentPoly2::t(-1);
  RelationMatrix m(2 * n, std::vector<LaurentPoly2>(lay.size()));
  for (int id = 1; id <= static_cast<int>(n); ++id) {
    const auto& ch = lay.chord(id);
    const std::size_t ui = lay.prev(ch.under), uo = ch.under, oi = lay.prev(ch.over), oo = ch.over;
    const bool pos = ch.sign > 0;
    auto& under_row = m[2 * static_cast<std::size_t>(id - 1)];
    auto& over_row = m[2 * static_cast<std::size_t>(id - 1) + 1];
    under_row[uo] += one;
    under_row[ui] -= pos ? t : ti;
    under_row[oi] -= pos ? one - s * t : one - si * ti;
    over_row[oo] += one;
    over_row[oi] -= pos ? s : si;
  }
  return m;
}

LaurentPoly2 determinant(const RelationMatrix& m) { return bareiss_det(m); }

LaurentPoly2 generalized_alexander(const GaussCode& code) {
  if (code.chord_count() == 0) return {};
  for (const auto& comp : code.components())
    if (comp.empty()) return {};
  return normalize_units(determinant(relation_matrix(code)));
}

LaurentPoly2 elementary_ideal_gcd(const RelationMatrix& m, std::size_t codim) {
  const std::size_t d = m.size();
  if (codim > d) throw Error(ErrorCode::InvalidInput, "codimension exceeds matrix size");
  const auto minors = all_minors(m, d - codim, [](RelationMatrix sub) { return bareiss_det(std::move(sub)); });
  LaurentPoly2 g;
  for (const auto& x : minors) {
    g = gcd(g, x);
    if (g == LaurentPoly2(1)) break;
  }
  return g;
}

}  // namespace vknot
