#pragma once

#include <string_view>
#include <vector>

#include "polycode/pauli.hpp"

namespace polycode::reference {

/// Published logical basis of the rhombic-dodecahedron code, one X̄ per
/// colored equator (r, g, b) and one weight-3 "V"-shaped Z̄ for each.
inline constexpr std::string_view kRhombicXbars[] = {
    "ZIYIIIIZIIIIYI",
    "IIXIZIIIIIZIXI",
    "XIIIYIIXIIYIII",
};
inline constexpr std::string_view kRhombicZbars[] = {
    "IIXZIIZIIIIIII",
    "IIIIYIIIXXIIII",
    "ZIIIIYIIIIIIIY",
};

inline std::vector<PauliOperator> rhombic_xbars() {
  std::vector<PauliOperator> out;
  for (auto s : kRhombicXbars) out.push_back(parse_pauli(s));
  return out;
}

inline std::vector<PauliOperator> rhombic_zbars() {
  std::vector<PauliOperator> out;
  for (auto s : kRhombicZbars) out.push_back(parse_pauli(s));
  return out;
}

}  // namespace polycode::reference
