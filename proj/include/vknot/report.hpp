#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vknot/json.hpp"

namespace vknot {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kInvariantSchema = "vknot.invariants/1";
inline constexpr const char* kDistinguishSchema = "vknot.distinguish/1";

/// Invariant keys in report order: f, state_sum, genus, stats, graph, galex,
/// alex1, quat, colorings, iq.
const std::vector<std::string>& invariant_names();

/// Computes the named invariants. An invariant that does not apply to the
/// code (for instance the intersection graph of a link) is reported as
/// {"unavailable": reason}. Throws UnknownFlag for an unknown name.
Json invariant_report(const GaussCode& code, const std::vector<std::string>& names, std::string_view input);

/// gcd of the codimension-1 quaternionic minors; the crossingless code gives 1.
LaurentPoly2 quaternionic_gcd(const GaussCode& code);

struct Verdict {
  bool distinct = false;
  std::string witness;          // first invariant that differs
  std::string left, right;      // its two values
  std::vector<std::string> compared;
};

/// Runs move invariants in a fixed order: components, f, galex, alex1,
/// quat1, colorings, iq. Stops at the first disagreement and never claims
/// equivalence. Invariants that fail on either input are skipped.
Verdict distinguish(const GaussCode& a, const GaussCode& b);

Json to_json(const Verdict& v, std::string_view a, std::string_view b);

}  // namespace vknot
