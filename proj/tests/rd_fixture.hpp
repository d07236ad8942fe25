#pragma once

#include <array>
#include <string>
#include <vector>

#include "polycode/pauli.hpp"

namespace polycode::fixture {

// Rhombic-dodecahedron checks S_1^X..S_4^X, S_1^Y..S_4^Y, S_1^Z..S_4^Z.
inline const std::vector<std::string> kRdChecks = {
    "XXXIIXIIIIIIII", "IIXXIIXXIIIIII", "IIIIIIIXXIIXXI", "XIIIIIIIIXIIXX",
    "IYYYYIIIIIIIII", "IIYIIYYIIIYIII", "IIIIYIIIYYIIYI", "IIIIIIIIIIYYYY",
    "ZZIIZIIIIZIIII", "IIIZZIIZZIIIII", "IIIIIIZZIIZZII", "ZIIIIZIIIIZIIZ",
};

// S_2^Y transcribed with its last Y on qubit 12 instead of 11. It
// anticommutes with S_3^X and S_4^Z; kept to pin down that failure mode.
inline const std::string kMisplacedS2Y = "IIYIIYYIIIIYII";

inline const std::vector<std::string> kRdXbars = {"ZIYIIIIZIIIIYI", "IIXIZIIIIIZIXI", "XIIIYIIXIIYIII"};
inline const std::vector<std::string> kRdZbars = {"IIXZIIZIIIIIII", "IIIIYIIIXXIIII", "ZIIIIYIIIIIIIY"};

inline std::vector<PauliOperator> parse_all(const std::vector<std::string>& rows) {
  std::vector<PauliOperator> out;
  for (const auto& r : rows) out.push_back(parse_pauli(r));
  return out;
}

}  // namespace polycode::fixture
