#ifndef DP5_LATTICE_HPP
#define DP5_LATTICE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dp5/sections.hpp"

namespace dp5 {

// Integer class in the Picard lattice of Y, coordinates (H; E1..E4) with the
// intersection form diag(1,-1,-1,-1,-1).
struct DivisorClass {
  std::array<long long, 5> c{};

  bool operator==(const DivisorClass&) const = default;
  auto operator<=>(const DivisorClass&) const = default;
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator*(long long n) const;
  long long dot(const DivisorClass& o) const;
  std::string str() const;
};

DivisorClass class_H();
DivisorClass class_E(int i);      // i in 1..4
DivisorClass class_K();           // -3H + E1+..+E4
DivisorClass class_minus_K();

// The ten lines are labelled by 2-subsets {i,j} of {1..5}:
// E_{i,5} is the exceptional curve over p_i, and E_{h,k} (h,k <= 4) is the
// strict transform of the line through the two other points.
using LinePair = std::pair<int, int>;  // normalized i < j

LinePair make_pair_label(int a, int b);
const std::vector<LinePair>& all_line_pairs();  // 10, lexicographic
DivisorClass line_class(const LinePair& p);
std::string pair_str(const LinePair& p);

bool pairs_disjoint(const LinePair& a, const LinePair& b);

// Euler characteristic 1 + D.(D-K)/2 of a divisor class (Riemann-Roch).
long long rr_chi(const DivisorClass& d);

struct PetersenReport {
  bool ok = true;
  std::vector<std::string> failures;
  long long minus_k_squared = 0;
};

// Intersection rules for all pairs, the three singular fibres of each of the
// five conic bundles, (-K)^2 = 5, and agreement of the intersection graph with
// the Kneser graph K(5,2) (3-regular, 15 edges, girth 5).
PetersenReport petersen_checks();

// The divisor of a section on Y: strict transforms of its three line factors
// plus (mult_p - 1) exceptional components, as a sorted list of five pairs.
std::vector<LinePair> divisor_of_section(const SectionLabel& label);

// DOT rendering of the Petersen graph; if `pair` is given, the two pentagons
// of that (i,j) are drawn solid (s-pentagon) and dashed (sigma-pentagon).
std::string petersen_dot(const std::pair<int, int>* highlight_ij);

}  // namespace dp5

#endif
