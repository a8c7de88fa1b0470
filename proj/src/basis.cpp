#include "hyperepp/basis.hpp"

#include <stdexcept>

namespace hyperepp {

std::string BasisLabel::to_string() const {
  std::string s = "|";
  s += pol_a ? 'V' : 'H';
  s += pol_b ? 'V' : 'H';
  s += ",w";
  s += freq_a ? '2' : '1';
  s += 'w';
  s += freq_b ? '2' : '1';
  s += ",r";
  s += rail_a ? '2' : '1';
  s += 'r';
  s += rail_b ? '2' : '1';
  s += ">";
  return s;
}

std::string coord_name(Coord c) {
  switch (c) {
    case Coord::kPolA:
      return "pol_a";
    case Coord::kPolB:
      return "pol_b";
    case Coord::kFreqA:
      return "freq_a";
    case Coord::kFreqB:
      return "freq_b";
    case Coord::kRailA:
      return "rail_a";
    case Coord::kRailB:
      return "rail_b";
  }
  return "?";
}

Coord coord_from_name(const std::string& name) {
  if (name == "pol_a") return Coord::kPolA;
  if (name == "pol_b") return Coord::kPolB;
  if (name == "freq_a") return Coord::kFreqA;
  if (name == "freq_b") return Coord::kFreqB;
  if (name == "rail_a") return Coord::kRailA;
  if (name == "rail_b") return Coord::kRailB;
  throw std::invalid_argument("unknown coordinate name: " + name);
}

std::string party_name(Party p) {
  return p == Party::kAlice ? "alice" : "bob";
}

}  // namespace hyperepp
