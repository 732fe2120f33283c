#pragma once

#include <string>

namespace cesent {

enum class Family { radial3d, linear1d };
enum class Sector { plus, minus };

// Identifies one eigenstate. For radial3d, l is the parameter of the
// superpotential: the plus state carries angular momentum l, the minus state
// l+1. For linear1d, l is ignored and minus n=0 is the zero-energy singlet.
struct StateSpec {
  Family family = Family::linear1d;
  Sector sector = Sector::plus;
  int n = 0;
  int l = 0;

  friend bool operator==(const StateSpec&, const StateSpec&) = default;
};

inline constexpr int kMaxQuantumN = 10;
inline constexpr int kMaxQuantumL = 3;

// Throws InvalidArgument("invalid quantum number ...") on out-of-range n or l.
void validate(const StateSpec& spec);

// Angular-momentum index of the full 3-D state (l for plus, l+1 for minus).
int angular_momentum(const StateSpec& spec);

int dimension(Family family);

std::string to_string(Family family);
std::string to_string(Sector sector);
std::string describe(const StateSpec& spec);

}  // namespace cesent
