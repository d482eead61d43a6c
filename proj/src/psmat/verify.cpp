#include "verify.hpp"

#include <algorithm>

namespace psmat {

std::string relation_set_name(RelationSet rs) {
  switch (rs) {
    case RelationSet::SYS: return "SYS";
    case RelationSet::R21: return "R21";
    case RelationSet::R41: return "R41";
    case RelationSet::R51: return "R51";
    case RelationSet::THM4_DEG4: return "THM4_DEG4";
    case RelationSet::THM4_DEG5: return "THM4_DEG5";
    case RelationSet::SIGMA: return "SIGMA";
    case RelationSet::TSYS: return "TSYS";
    case RelationSet::PATTERN_721: return "PATTERN_721";
  }
  return "?";
}

RelationSet relation_set_of(const std::string& name) {
  std::string up = name;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (RelationSet rs : {RelationSet::SYS, RelationSet::R21, RelationSet::R41, RelationSet::R51,
                         RelationSet::THM4_DEG4, RelationSet::THM4_DEG5, RelationSet::SIGMA,
                         RelationSet::TSYS, RelationSet::PATTERN_721})
    if (relation_set_name(rs) == up) return rs;
  throw std::invalid_argument("unknown relation set: " + name);
}

}  // namespace psmat
