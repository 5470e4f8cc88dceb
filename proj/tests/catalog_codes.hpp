#pragma once

namespace vknot::testing {

inline constexpr const char* kTrefoil = "O1+,U2+,O3+,U1+,O2+,U3+";
inline constexpr const char* kVirtualTrefoil = "O1+,O2+,U1+,U2+";
inline constexpr const char* kKishino = "O1+,U2-,U1+,O2-,U3-,O4+,O3-,U4+";
inline constexpr const char* kKishinoLeft = "O1+,U2-,U1+,O2-";
inline constexpr const char* kKishinoRight = "U1-,O2+,O1-,U2+";
inline constexpr const char* kKnotK = "U1+,O2-,O1+,U2-,U3+,O4-,O3+,U4-";

}  // namespace vknot::testing
