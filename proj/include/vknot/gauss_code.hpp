#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vknot {

enum class Passage : std::uint8_t { Over, Under, Flat, Free };
enum class CodeKind : std::uint8_t { Classical, Flat, Free };

/// One passage of a strand through a crossing. Free tokens carry sign 0.
struct Token {
  int chord = 0;
  Passage passage = Passage::Over;
  int sign = 1;

  friend auto operator<=>(const Token&, const Token&) = default;
};

using Component = std::vector<Token>;

/// Signed, arrowed chord sequences, one per link component.
///
/// Construction validates the chord invariants and renumbers chords 1..n in
/// order of first appearance. Virtual crossings are never stored: two codes
/// differing only by virtual moves or detours are the same value.
///
/// Flat codes store the sign a crossing would have if the first occurrence
/// (component order, then index order) were the over strand.
class GaussCode {
 public:
  /// The unknot: a single component with no crossings.
  GaussCode();

  static GaussCode from_components(std::vector<Component> components,
                                   CodeKind kind = CodeKind::Classical);

  CodeKind kind() const noexcept { return kind_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t chord_count() const noexcept { return chords_; }
  bool has_chords() const noexcept { return chords_ > 0; }
  int writhe() const noexcept;

  std::string to_string() const;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
  friend auto operator<=>(const GaussCode&, const GaussCode&) = default;

 private:
  CodeKind kind_ = CodeKind::Classical;
  std::vector<Component> components_;
  std::size_t chords_ = 0;
};

GaussCode parse_gauss(std::string_view text);

/// Position bookkeeping over the concatenated token sequence. Position g
/// owns the edge leaving it, so edge g runs from g to next(g).
class CodeLayout {
 public:
  struct Chord {
    std::size_t over = 0;   // first occurrence for flat/free codes
    std::size_t under = 0;  // second occurrence for flat/free codes
    int sign = 1;
  };

  explicit CodeLayout(const GaussCode& code);

  std::size_t size() const noexcept { return tokens_.size(); }
  std::size_t chord_count() const noexcept { return chords_.size(); }
  std::size_t component_count() const noexcept { return offsets_.size(); }
  std::size_t next(std::size_t g) const noexcept { return next_[g]; }
  std::size_t prev(std::size_t g) const noexcept { return prev_[g]; }
  std::size_t component_of(std::size_t g) const noexcept { return component_[g]; }
  const Token& token(std::size_t g) const noexcept { return tokens_[g]; }
  /// Chords are 1-based, matching the ids in the code.
  const Chord& chord(int id) const noexcept { return chords_[static_cast<std::size_t>(id - 1)]; }
  std::size_t free_loops() const noexcept { return free_loops_; }
  std::pair<std::size_t, std::size_t> locate(std::size_t g) const noexcept;

 private:
  std::vector<Token> tokens_;
  std::vector<std::size_t> next_, prev_, component_, offsets_;
  std::vector<Chord> chords_;
  std::size_t free_loops_ = 0;
};

char passage_letter(Passage p) noexcept;

}  // namespace vknot
