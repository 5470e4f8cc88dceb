#include "vknot/braids.hpp"

#include <charconv>
#include <sstream>

#include "vknot/bareiss.hpp"
#include "vknot/error.hpp"

namespace vknot {

namespace {

std::string letter_text(const BraidLetter& l) {
  const char c = l.kind == BraidLetter::Kind::Rho ? 'r' : (l.exponent > 0 ? 's' : 'S');
  return c + std::to_string(l.index);
}

BraidLetter sigma(int i, int e = 1) { return {BraidLetter::Kind::Sigma, i, e}; }
BraidLetter rho(int i) { return {BraidLetter::Kind::Rho, i, 1}; }

}  // namespace

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters) out += (out.empty() ? "" : " ") + letter_text(l);
  return out;
}

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) throw Error(ErrorCode::InvalidInput, "strand count must be positive");
  BraidWord w;
  w.strands = strands;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S' && tok[0] != 'r'))
      throw Error(ErrorCode::SyntaxError, "bad braid token '" + tok + "'");
    int idx = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::SyntaxError, "bad braid token '" + tok + "'");
    if (idx < 1 || idx >= strands)
      throw Error(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(idx) + " on " +
                                                  std::to_string(strands) + " strands");
    w.letters.push_back(tok[0] == 'r' ? rho(idx) : sigma(idx, tok[0] == 's' ? 1 : -1));
  }
  return w;
}

FreeWord free_reduce(FreeWord w) {
  FreeWord out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g) out.pop_back();
    else out.push_back(g);
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& g : out) g = -g;
  return out;
}

FreeGroupAutomorphism FreeGroupAutomorphism::identity(std::size_t rank) {
  FreeGroupAutomorphism f;
  f.rank = rank;
  for (std::size_t g = 1; g <= rank; ++g) f.images.push_back({static_cast<int>(g)});
  return f;
}

FreeWord FreeGroupAutomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (int g : w) {
    const auto& img = images[static_cast<std::size_t>(g > 0 ? g : -g) - 1];
    if (g > 0) out.insert(out.end(), img.begin(), img.end());
    else {
      const auto inv = free_inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(std::move(out));
}

FreeGroupAutomorphism FreeGroupAutomorphism::then(const FreeGroupAutomorphism& next) const {
  FreeGroupAutomorphism f;
  f.rank = rank;
  for (const auto& img : images) f.images.push_back(next.apply(img));
  return f;
}

std::string FreeGroupAutomorphism::to_string() const {
  auto name = [&](int g) {
    const auto a = static_cast<std::size_t>(g > 0 ? g : -g);
    std::string s = a == rank ? "y" : "x" + std::to_string(a);
    return g < 0 ? s + "^-1" : s;
  };
  std::string out;
  for (std::size_t g = 1; g <= rank; ++g) {
    if (g > 1) out += ", ";
    out += name(static_cast<int>(g)) + " -> ";
    const auto& img = images[g - 1];
    if (img.empty()) out += "1";
    for (std::size_t k = 0; k < img.size(); ++k) out += (k ? "*" : "") + name(img[k]);
  }
  return out;
}

namespace {

FreeGroupAutomorphism letter_image(const BraidLetter& l, int strands) {
  const auto rank = static_cast<std::size_t>(strands + 1);
  auto f = FreeGroupAutomorphism::identity(rank);
  const int i = l.index, j = l.index + 1, y = strands + 1;
  auto& xi = f.images[static_cast<std::size_t>(i - 1)];
  auto& xj = f.images[static_cast<std::size_t>(j - 1)];
  if (l.kind == BraidLetter::Kind::Rho) {
    xi = {y, j, -y};
    xj = {-y, i, y};
  } else if (l.exponent > 0) {
    xi = {i, j, -i};
    xj = {i};
  } else {
    // Inverse of sigma_i: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
    xi = {j};
    xj = {-j, i, j};
  }
  return f;
}

}  // namespace

FreeGroupAutomorphism rho_image(const BraidWord& w) {
  auto f = FreeGroupAutomorphism::identity(static_cast<std::size_t>(w.strands + 1));
  for (const auto& l : w.letters) f = f.then(letter_image(l, w.strands));
  return f;
}

bool PresentationReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

bool PresentationReport::defining_relations_hold() const {
  for (const auto& c : checks)
    if (!c.holds && c.family != "welded") return false;
  return true;
}

std::vector<RelationCheck> PresentationReport::failures() const {
  std::vector<RelationCheck> out;
  for (const auto& c : checks)
    if (!c.holds) out.push_back(c);
  return out;
}

PresentationReport verify_presentation(int n) {
  if (n < 2 || n > 6) throw Error(ErrorCode::InvalidInput, "strand count must be between 2 and 6");
  PresentationReport report;
  report.strands = n;
  auto add = [&](const char* family, std::vector<BraidLetter> lhs, std::vector<BraidLetter> rhs) {
    RelationCheck c{family, {n, std::move(lhs)}, {n, std::move(rhs)}, false};
    report.checks.push_back(std::move(c));
  };
  for (int i = 1; i < n; ++i) {
    add("braid", {sigma(i), sigma(i, -1)}, {});
    add("symmetric", {rho(i), rho(i)}, {});
    if (i + 1 < n) {
      add("braid", {sigma(i), sigma(i + 1), sigma(i)}, {sigma(i + 1), sigma(i), sigma(i + 1)});
      add("symmetric", {rho(i), rho(i + 1), rho(i)}, {rho(i + 1), rho(i), rho(i + 1)});
      add("mixed", {sigma(i), rho(i + 1), rho(i)}, {rho(i + 1), rho(i), sigma(i + 1)});
      add("welded", {rho(i), sigma(i + 1), sigma(i)}, {sigma(i + 1), sigma(i), rho(i + 1)});
    }
    for (int j = i + 2; j < n; ++j) {
      add("braid", {sigma(i), sigma(j)}, {sigma(j), sigma(i)});
      add("symmetric", {rho(i), rho(j)}, {rho(j), rho(i)});
      add("mixed", {sigma(i), rho(j)}, {rho(j), sigma(i)});
      add("mixed", {rho(i), sigma(j)}, {sigma(j), rho(i)});
    }
  }
  parallel_for(report.checks.size(), [&](std::size_t k) {
    auto& c = report.checks[k];
    c.holds = rho_image(c.lhs) == rho_image(c.rhs);
  });
  return report;
}

GaussCode close_braid(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands);
  std::vector<bool> used(n + 1, false);
  std::vector<Component> comps;
  for (std::size_t start = 1; start <= n; ++start) {
    if (used[start]) continue;
    Component comp;
    std::size_t p = start;
    do {
      used[p] = true;
      for (std::size_t k = 0; k < w.letters.size(); ++k) {
        const auto& l = w.letters[k];
        const auto i = static_cast<std::size_t>(l.index);
        if (p != i && p != i + 1) continue;
        if (l.kind == BraidLetter::Kind::Sigma) {
          const bool from_left = p == i;
          const bool over = from_left == (l.exponent > 0);
          comp.push_back({static_cast<int>(k) + 1, over ? Passage::Over : Passage::Under, l.exponent});
        }
        p = p == i ? i + 1 : i;
      }
    } while (p != start);
    comps.push_back(std::move(comp));
  }
  if (comps.empty()) comps.emplace_back();
  return GaussCode::from_components(std::move(comps), CodeKind::Classical);
}

BraidWord flat_quotient(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  for (auto l : w.letters) {
    l.exponent = 1;
    if (!out.letters.empty() && out.letters.back() == l) out.letters.pop_back();
    else out.letters.push_back(l);
  }
  return out;
}

}  // namespace vknot
