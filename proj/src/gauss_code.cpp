#include "vknot/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "vknot/error.hpp"

namespace vknot {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::PassageDuplicate: return "PassageDuplicate";
    case ErrorCode::DanglingChord: return "DanglingChord";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NoSuchChord: return "NoSuchChord";
    case ErrorCode::MultiComponent: return "MultiComponent";
    case ErrorCode::EmptyCode: return "EmptyCode";
    case ErrorCode::ZeroBracket: return "ZeroBracket";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NotBiquandle: return "NotBiquandle";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::UnknownFlag: return "UnknownFlag";
  }
  return "Error";
}

char passage_letter(Passage p) noexcept {
  switch (p) {
    case Passage::Over: return 'O';
    case Passage::Under: return 'U';
    case Passage::Flat: return 'F';
    case Passage::Free: return 'C';
  }
  return '?';
}

namespace {

Passage expected_passage(CodeKind kind, Passage p) {
  switch (kind) {
    case CodeKind::Classical: return p == Passage::Under ? Passage::Under : Passage::Over;
    case CodeKind::Flat: return Passage::Flat;
    case CodeKind::Free: return Passage::Free;
  }
  return p;
}

}  // namespace

GaussCode::GaussCode() : components_(1) {}

GaussCode GaussCode::from_components(std::vector<Component> components, CodeKind kind) {
  if (components.empty()) components.emplace_back();

  struct Seen {
    int count = 0;
    int overs = 0;
    int unders = 0;
    int sign = 0;
  };
  std::map<int, Seen> seen;
  std::map<int, int> relabel;
  int next_id = 1;
  for (const auto& comp : components) {
    for (const auto& tok : comp) {
      if (tok.chord <= 0) throw Error(ErrorCode::InvalidInput, "chord ids must be positive");
      if (expected_passage(kind, tok.passage) != tok.passage)
        throw Error(ErrorCode::SyntaxError, "token passage does not match code kind");
      if (kind == CodeKind::Free ? tok.sign != 0 : (tok.sign != 1 && tok.sign != -1))
        throw Error(ErrorCode::InvalidInput, "bad sign for chord " + std::to_string(tok.chord));
      auto& s = seen[tok.chord];
      ++s.count;
      if (tok.passage == Passage::Over) ++s.overs;
      if (tok.passage == Passage::Under) ++s.unders;
      if (s.count == 1) {
        s.sign = tok.sign;
        relabel[tok.chord] = next_id++;
      } else if (s.count == 2 && s.sign != tok.sign && s.overs < 2 && s.unders < 2) {
        throw Error(ErrorCode::SignMismatch, "chord " + std::to_string(tok.chord));
      }
    }
  }
  for (const auto& [id, s] : seen) {
    if (s.overs > 1 || s.unders > 1)
      throw Error(ErrorCode::PassageDuplicate, "chord " + std::to_string(id));
    if (s.count == 1) throw Error(ErrorCode::DanglingChord, "chord " + std::to_string(id));
    if (s.count > 2) throw Error(ErrorCode::PassageDuplicate, "chord " + std::to_string(id));
  }

  GaussCode code;
  code.kind_ = kind;
  code.chords_ = seen.size();
  for (auto& comp : components)
    for (auto& tok : comp) tok.chord = relabel[tok.chord];
  code.components_ = std::move(components);
  return code;
}

int GaussCode::writhe() const noexcept {
  int w = 0;
  for (const auto& comp : components_)
    for (const auto& tok : comp) w += tok.sign;
  return w / 2;
}

std::string GaussCode::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    if (c) out += '|';
    for (std::size_t i = 0; i < components_[c].size(); ++i) {
      const auto& tok = components_[c][i];
      if (i) out += ',';
      out += passage_letter(tok.passage);
      out += std::to_string(tok.chord);
      if (tok.passage != Passage::Free) out += tok.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

GaussCode parse_gauss(std::string_view text) {
  std::vector<Component> components;
  std::optional<CodeKind> kind;
  for (auto part : split(text, '|')) {
    Component comp;
    part = trim(part);
    if (!part.empty()) {
      for (auto raw : split(part, ',')) {
        auto tok = trim(raw);
        if (tok.size() < 2) throw Error(ErrorCode::SyntaxError, "bad token '" + std::string(tok) + "'");
        Token t;
        CodeKind tk;
        switch (tok.front()) {
          case 'O': t.passage = Passage::Over; tk = CodeKind::Classical; break;
          case 'U': t.passage = Passage::Under; tk = CodeKind::Classical; break;
          case 'F': t.passage = Passage::Flat; tk = CodeKind::Flat; break;
          case 'C': t.passage = Passage::Free; tk = CodeKind::Free; break;
          default: throw Error(ErrorCode::SyntaxError, "bad token '" + std::string(tok) + "'");
        }
        if (kind && *kind != tk) throw Error(ErrorCode::SyntaxError, "mixed token kinds");
        kind = tk;
        auto body = tok.substr(1);
        if (tk == CodeKind::Free) {
          t.sign = 0;
        } else {
          if (body.empty() || (body.back() != '+' && body.back() != '-'))
            throw Error(ErrorCode::SyntaxError, "missing sign in '" + std::string(tok) + "'");
          t.sign = body.back() == '+' ? 1 : -1;
          body.remove_suffix(1);
        }
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), t.chord);
        if (ec != std::errc() || ptr != body.data() + body.size() || body.empty() || t.chord <= 0)
          throw Error(ErrorCode::SyntaxError, "bad chord id in '" + std::string(tok) + "'");
        comp.push_back(t);
      }
    }
    components.push_back(std::move(comp));
  }
  return GaussCode::from_components(std::move(components), kind.value_or(CodeKind::Classical));
}

CodeLayout::CodeLayout(const GaussCode& code) {
  chords_.resize(code.chord_count());
  std::vector<int> hits(code.chord_count(), 0);
  for (const auto& comp : code.components()) {
    const std::size_t base = tokens_.size();
    offsets_.push_back(base);
    if (comp.empty()) ++free_loops_;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const std::size_t g = base + i;
      tokens_.push_back(comp[i]);
      next_.push_back(base + (i + 1) % comp.size());
      prev_.push_back(base + (i + comp.size() - 1) % comp.size());
      component_.push_back(offsets_.size() - 1);
      auto& ch = chords_[static_cast<std::size_t>(comp[i].chord - 1)];
      auto& h = hits[static_cast<std::size_t>(comp[i].chord - 1)];
      ch.sign = comp[i].sign;
      const bool as_over = comp[i].passage == Passage::Over ||
                           (comp[i].passage != Passage::Under && h == 0);
      (as_over ? ch.over : ch.under) = g;
      ++h;
    }
  }
}

std::pair<std::size_t, std::size_t> CodeLayout::locate(std::size_t g) const noexcept {
  const auto c = component_[g];
  return {c, g - offsets_[c]};
}

}  // namespace vknot
