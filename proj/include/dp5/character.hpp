#ifndef DP5_CHARACTER_HPP
#define DP5_CHARACTER_HPP

#include <array>
#include <optional>
#include <string>

#include "dp5/perm.hpp"
#include "dp5/rational.hpp"

namespace dp5 {

// Class function values at the seven conjugacy-class representatives, in the
// order id, (1,2), (1,2)(3,4), (1,2,3), (1,2,3,4), (1,2,3,4,5), (1,2,3)(4,5).
struct CharVector {
  std::array<long long, 7> v{};

  bool operator==(const CharVector&) const = default;
  CharVector operator+(const CharVector& o) const;
  CharVector operator-(const CharVector& o) const;
  CharVector operator*(const CharVector& o) const;  // pointwise
  std::string str() const;                          // "(6,0,-2,0,0,1,0)"
};

// Rows chi_1..chi_7 of the character table of S5.
const std::array<CharVector, 7>& character_table();

Rational inner_product(const CharVector& a, const CharVector& b);

// Class index of g^2 for a representative of class k.
int square_class(int k);

// chi_{Lambda^2 W}(g) = (chi(g)^2 - chi(g^2)) / 2
CharVector wedge2_character(const CharVector& c);

// Multiplicities against chi_1..chi_7; nullopt (with diagnostic) unless all
// inner products are nonnegative integers.
std::optional<std::array<long long, 7>> decompose(const CharVector& c,
                                                  std::string* diagnostic = nullptr);

// Permutation character of S5 acting on the cosets of <gens>:
// value at g = number of cosets xH with g xH = xH.
CharVector coset_character(const std::vector<Perm>& subgroup_generators);

}  // namespace dp5

#endif
