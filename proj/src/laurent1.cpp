#include "vknot/laurent1.hpp"

#include "vknot/error.hpp"

namespace vknot {

LaurentPoly1 LaurentPoly1::monomial(std::int64_t coeff, int exp) {
  LaurentPoly1 p;
  p.add_term(exp, coeff);
  return p;
}

std::int64_t LaurentPoly1::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly1::min_exp() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroBracket, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly1::max_exp() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroBracket, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPoly1::add_term(int exp, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(exp, coeff);
  if (!fresh && (it->second += coeff) == 0) terms_.erase(it);
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator*=(const LaurentPoly1& o) {
  LaurentPoly1 r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return *this = std::move(r);
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly1 LaurentPoly1::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1 || (terms_.begin()->second != 1 && terms_.begin()->second != -1))
      throw Error(ErrorCode::InvalidInput, "only unit monomials have negative powers");
    const auto [e, c] = *terms_.begin();
    return monomial((-k) % 2 ? c : 1, e * k);
  }
  LaurentPoly1 r(1), base = *this;
  for (; k; k >>= 1, base *= base)
    if (k & 1) r *= base;
  return r;
}

std::string LaurentPoly1::to_string(const char* var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    const auto mag = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly1::pairs() const {
  return {terms_.begin(), terms_.end()};
}

}  // namespace vknot
