#pragma once
// Fixed product basis of the 64-dimensional two-photon space.
//
// Each basis state is labelled by six bits, one per binary coordinate:
//   index = 32*pol_A + 16*pol_B + 8*freq_A + 4*freq_B + 2*rail_A + rail_B
// with the conventions
//   polarization: H = 0, V = 1
//   frequency:    omega_1 = 0, omega_2 = 1
//   spatial rail: rail-1 = 0, rail-2 = 1
// Rail-1 means a1 (step one) or c1 (step two) on Alice's side and b1/d1 on
// Bob's side; rail-2 is a2/c2 and b2/d2. All serialization uses this index
// convention and nothing else.

#include <array>
#include <string>

namespace hyperepp {

inline constexpr int kDim = 64;

// One binary coordinate, identified by its bit position in the basis index.
enum class Coord : int {
  kRailB = 0,
  kRailA = 1,
  kFreqB = 2,
  kFreqA = 3,
  kPolB = 4,
  kPolA = 5,
};

enum class Party { kAlice, kBob };

constexpr int coord_bit(int index, Coord c) {
  return (index >> static_cast<int>(c)) & 1;
}

constexpr int with_coord(int index, Coord c, int value) {
  const int mask = 1 << static_cast<int>(c);
  return value ? (index | mask) : (index & ~mask);
}

constexpr Coord pol_coord(Party p) {
  return p == Party::kAlice ? Coord::kPolA : Coord::kPolB;
}
constexpr Coord freq_coord(Party p) {
  return p == Party::kAlice ? Coord::kFreqA : Coord::kFreqB;
}
constexpr Coord rail_coord(Party p) {
  return p == Party::kAlice ? Coord::kRailA : Coord::kRailB;
}

struct BasisLabel {
  int pol_a = 0;
  int pol_b = 0;
  int freq_a = 0;
  int freq_b = 0;
  int rail_a = 0;
  int rail_b = 0;

  static constexpr BasisLabel from_index(int i) {
    return BasisLabel{coord_bit(i, Coord::kPolA),  coord_bit(i, Coord::kPolB),
                      coord_bit(i, Coord::kFreqA), coord_bit(i, Coord::kFreqB),
                      coord_bit(i, Coord::kRailA), coord_bit(i, Coord::kRailB)};
  }

  constexpr int index() const {
    return 32 * pol_a + 16 * pol_b + 8 * freq_a + 4 * freq_b + 2 * rail_a +
           rail_b;
  }

  // e.g. "|HV,w1w2,r1r2>"
  std::string to_string() const;
};

std::string coord_name(Coord c);
Coord coord_from_name(const std::string& name);
std::string party_name(Party p);

}  // namespace hyperepp
