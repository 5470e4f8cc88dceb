#include "vknot/quaternion.hpp"

#include "vknot/error.hpp"

namespace vknot {

IntegerQuaternion& IntegerQuaternion::operator+=(const IntegerQuaternion& o) {
  w += o.w;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

IntegerQuaternion& IntegerQuaternion::operator-=(const IntegerQuaternion& o) {
  w -= o.w;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

IntegerQuaternion operator*(const IntegerQuaternion& a, const IntegerQuaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::string IntegerQuaternion::to_string() const {
  std::string out = w.str();
  auto part = [&](const BigInt& c, char unit) {
    out += c < 0 ? "-" : "+";
    out += (c < 0 ? BigInt(-c) : c).str();
    out += unit;
  };
  part(x, 'i');
  part(y, 'j');
  part(z, 'k');
  return out;
}

QuatLaurent QuatLaurent::monomial(const IntegerQuaternion& q, int exp) {
  QuatLaurent p;
  p.add_term(exp, q);
  return p;
}

void QuatLaurent::add_term(int exp, const IntegerQuaternion& q) {
  if (q.is_zero()) return;
  auto [it, fresh] = terms_.emplace(exp, q);
  if (!fresh && (it->second += q).is_zero()) terms_.erase(it);
}

QuatLaurent& QuatLaurent::operator+=(const QuatLaurent& o) {
  for (const auto& [e, q] : o.terms_) add_term(e, q);
  return *this;
}

QuatLaurent& QuatLaurent::operator-=(const QuatLaurent& o) {
  for (const auto& [e, q] : o.terms_) add_term(e, -q);
  return *this;
}

QuatLaurent operator*(const QuatLaurent& a, const QuatLaurent& b) {
  QuatLaurent r;
  for (const auto& [e1, q1] : a.terms_)
    for (const auto& [e2, q2] : b.terms_) r.add_term(e1 + e2, q1 * q2);
  return r;
}

QuatLaurent QuatLaurent::operator-() const {
  QuatLaurent r;
  for (const auto& [e, q] : terms_) r.terms_.emplace(e, -q);
  return r;
}

GaussLaurent QuatLaurent::complex_part() const {
  GaussLaurent p;
  for (const auto& [e, q] : terms_) p.add_term({0, e}, q.complex_part());
  return p;
}

GaussLaurent QuatLaurent::j_part() const {
  GaussLaurent p;
  for (const auto& [e, q] : terms_) p.add_term({0, e}, q.j_part());
  return p;
}

std::string QuatLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, q] : terms_) {
    if (!out.empty()) out += '+';
    out += "(" + q.to_string() + ")";
    if (e != 0) out += "*t" + (e == 1 ? std::string() : "^" + std::to_string(e));
  }
  return out;
}

std::array<std::array<QuatLaurent, 2>, 2> quaternionic_switch(int sign) {
  const auto i = IntegerQuaternion::i(), j = IntegerQuaternion::j();
  const IntegerQuaternion one(1);
  if (sign > 0)
    return {{{QuatLaurent::monomial(-j, -1), QuatLaurent(one + i)},
             {QuatLaurent(one + i), QuatLaurent::monomial(j, 1)}}};
  return {{{QuatLaurent::monomial(-j, 1), QuatLaurent(one - i)},
           {QuatLaurent(one - i), QuatLaurent::monomial(j, -1)}}};
}

QuatMatrix quaternionic_relations(const GaussCode& code) {
  if (code.kind() != CodeKind::Classical)
    throw Error(ErrorCode::InvalidInput, "presentation matrix needs a classical code");
  const CodeLayout lay(code);
  const std::size_t n = lay.chord_count();
  if (n == 0) throw Error(ErrorCode::EmptyCode, "no crossings");
  QuatMatrix m(2 * n, std::vector<QuatLaurent>(lay.size()));
  for (int id = 1; id <= static_cast<int>(n); ++id) {
    const auto& ch = lay.chord(id);
    const std::size_t ins[2] = {lay.prev(ch.under), lay.prev(ch.over)};
    const std::size_t outs[2] = {ch.under, ch.over};
    const auto sw = quaternionic_switch(ch.sign);
    for (std::size_t r = 0; r < 2; ++r) {
      auto& row = m[2 * static_cast<std::size_t>(id - 1) + r];
      row[outs[r]] += QuatLaurent(1);
      for (std::size_t c = 0; c < 2; ++c) row[ins[c]] -= sw[r][c];
    }
  }
  return m;
}

namespace {

GaussLaurent conj_coeffs(const GaussLaurent& p) {
  GaussLaurent r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.conj());
  return r;
}

Matrix<GaussLaurent> complex_adjoint(const QuatMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Matrix<GaussLaurent> a(2 * rows, std::vector<GaussLaurent>(2 * cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto z = m[r][c].complex_part(), w = m[r][c].j_part();
      a[2 * r][2 * c] = z;
      a[2 * r][2 * c + 1] = w;
      a[2 * r + 1][2 * c] = -conj_coeffs(w);
      a[2 * r + 1][2 * c + 1] = conj_coeffs(z);
    }
  return a;
}

}  // namespace

GaussLaurent study_det(const QuatMatrix& m) {
  if (!m.empty() && m[0].size() != m.size()) throw Error(ErrorCode::InvalidInput, "matrix must be square");
  return bareiss_det(complex_adjoint(m));
}

LaurentPoly2 real_polynomial(const GaussLaurent& p) {
  LaurentPoly2 r;
  for (const auto& [e, c] : p.terms()) {
    if (c.im != 0) throw Error(ErrorCode::InvalidInput, "Study determinant has a non-real coefficient");
    r.add_term(e, c.re);
  }
  return r;
}

LaurentPoly2 normalize_t_polynomial(const LaurentPoly2& p, bool primitive) {
  if (p.is_zero()) return p;
  LaurentPoly2 q = primitive ? primitive_part(p) : p;
  const auto b = q.box();
  const bool negate = q.lead().second < 0;
  return q.shifted(-b[0], -b[1], negate ? BigInt(-1) : BigInt(1));
}

LaurentPoly2 codim1_gcd(const QuatMatrix& m) {
  const std::size_t d = m.size();
  if (d < 2 || m[0].size() != d) throw Error(ErrorCode::InvalidInput, "need a square matrix of size at least 2");
  const auto minors = all_minors(m, d - 1, [](QuatMatrix sub) { return real_polynomial(study_det(sub)); });
  LaurentPoly2 g;
  for (const auto& x : minors) g = gcd(g, x);
  return normalize_t_polynomial(g, true);
}

LaurentPoly2 study_invariant(const GaussCode& code) {
  if (code.chord_count() == 0) return LaurentPoly2();
  return normalize_t_polynomial(real_polynomial(study_det(quaternionic_relations(code))), false);
}

}  // namespace vknot
