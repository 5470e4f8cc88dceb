#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/gauss_code.hpp"

namespace vknot {

/// Four operation tables on labels 0..m-1, stored row-major as op(a, b).
///
/// At a positive crossing with under input a and over input b the outputs
/// are up(a, b) (under) and down(b, a) (over); negative crossings use the
/// barred tables in the same pattern.
class FiniteBirack {
 public:
  FiniteBirack() = default;
  FiniteBirack(int order, std::vector<int> up, std::vector<int> down, std::vector<int> upbar,
               std::vector<int> downbar);

  int order() const noexcept { return m_; }
  int up(int a, int b) const { return up_[idx(a, b)]; }
  int down(int a, int b) const { return down_[idx(a, b)]; }
  int upbar(int a, int b) const { return upbar_[idx(a, b)]; }
  int downbar(int a, int b) const { return downbar_[idx(a, b)]; }

  const std::vector<int>& up_table() const noexcept { return up_; }
  const std::vector<int>& down_table() const noexcept { return down_; }
  const std::vector<int>& upbar_table() const noexcept { return upbar_; }
  const std::vector<int>& downbar_table() const noexcept { return downbar_; }

  /// Relabels by a -> perm[a].
  FiniteBirack relabel(const std::vector<int>& perm) const;
  /// Concatenated tables, for ordering and dedup.
  std::vector<int> flat() const;

  friend bool operator==(const FiniteBirack&, const FiniteBirack&) = default;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * m_ + b); }

  int m_ = 0;
  std::vector<int> up_, down_, upbar_, downbar_;
};

struct AxiomReport {
  bool birack = false;
  bool biquandle = false;
  bool strong = false;
  /// One line per failed axiom, naming a witness.
  std::vector<std::string> failures;
};

/// Checks the four operation axioms directly: curls (both orientations, both
/// signs), inverse crossings, reverse-oriented bigons with the strong
/// uniqueness flag, the three Yang-Baxter equations with plain and barred
/// operations, and right invertibility.
AxiomReport check_axioms(const FiniteBirack& b);

/// Second route through the switch map S(a, b) = (b_a, a^b): S and its barred
/// partner are mutually inverse, S satisfies the set-theoretic Yang-Baxter
/// equation, and the sideways maps are bijections (preserving the diagonal
/// for biquandles). `strong` mirrors the first route's meaning.
AxiomReport check_switch_axioms(const FiniteBirack& b);

enum class BirackFamily : std::uint8_t { Biracks, Biquandles, Racks, Quandles };

/// Every birack of order m in the family, one per isomorphism class, each in
/// its lexicographically least labelling. Racks and quandles have trivial
/// lower operations. Orders above 3 are only supported for racks and quandles.
std::vector<FiniteBirack> enumerate_biracks(int m, BirackFamily family,
                                            const std::function<bool(const FiniteBirack&)>& keep = {});

/// Lexicographically least relabelling.
FiniteBirack canonical_form(const FiniteBirack& b);

FiniteBirack trivial_birack(int m);
/// Rack with a^b = table[a][b], a_b = a; barred operations are the inverses.
FiniteBirack rack_from_table(int m, const std::vector<int>& table);
/// a^b = 2b - a mod m.
FiniteBirack dihedral_quandle(int m);

/// Number of labellings of the code's edges satisfying every crossing.
std::uint64_t colorings(const GaussCode& code, const FiniteBirack& b);

/// Involutory quandle: aa = a, (ab)b = a, (ab)c = (ac)(bc).
struct InvolutoryQuandle {
  int m = 0;
  std::vector<int> table;  // row-major ab
  int op(int a, int b) const { return table[static_cast<std::size_t>(a * m + b)]; }
  bool valid() const;
};

std::vector<InvolutoryQuandle> enumerate_involutory_quandles(int m);
InvolutoryQuandle dihedral_iq(int m);

/// Colorings with the single relation c = ab at every crossing (b the over
/// arc), independent of orientation and sign.
std::uint64_t iq_colorings(const GaussCode& code, const InvolutoryQuandle& q);

/// Text form: order, then the up, down, upbar and downbar tables.
FiniteBirack parse_birack(std::string_view text);
std::string format_birack(const FiniteBirack& b);

/// `R<m>` dihedral quandle, `T<m>` trivial birack; anything else is read as
/// table text.
FiniteBirack named_birack(std::string_view name);

}  // namespace vknot
