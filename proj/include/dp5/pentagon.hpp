#ifndef DP5_PENTAGON_HPP
#define DP5_PENTAGON_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dp5/lattice.hpp"
#include "dp5/sections.hpp"

namespace dp5 {

// An injective map Z/5 -> {1..5}; img[i] = p(i) with i taken mod 5.
struct Pentagon {
  std::array<int, 5> img{1, 2, 3, 4, 5};

  bool operator==(const Pentagon&) const = default;
  auto operator<=>(const Pentagon&) const = default;

  int at(int i) const;  // i any integer, reduced mod 5
  std::string str() const;  // "[1,2,3,4,5]"
};

enum class PentagonLevel { Oriented, Unoriented, Double };

Pentagon rotated(const Pentagon& p, int a);     // i -> p(i+a)
Pentagon reflected(const Pentagon& p);          // i -> p(-i)
Pentagon squared(const Pentagon& p);            // i -> p(2i), the neighbour map
Pentagon acted(const Perm& g, const Pentagon& p);  // i -> g(p(i))

// Lexicographically least lift in the level's orbit.
Pentagon canonical(const Pentagon& p, PentagonLevel level);
bool same_pentagon(const Pentagon& a, const Pentagon& b, PentagonLevel level);

// Canonical representatives; sizes 24 / 12 / 6.
std::vector<Pentagon> enumerate_pentagons(PentagonLevel level);

// The five sides {p(i), p(i+1)} as sorted pairs.
std::vector<LinePair> pentagon_sides(const Pentagon& p);

// The orbit picture of M = { +-s_ij, +-sigma_ij } under rho_V.
struct OrbitStructure {
  bool labels_closed = true;            // every generator permutes M up to sign
  std::vector<std::string> failures;
  std::size_t orbit_size_s21 = 0;       // expected 24
  std::vector<Perm> stabilizer_s21;     // expected <(1,2,3,4,5)>, order 5
  // image label of each label under each generator
  std::map<std::string, std::array<std::string, 4>> action_table;
};
OrbitStructure orbit_structure();

// The natural bijection M -> oriented pentagons: g * s21 -> [i -> g(i)],
// normalized so s21 maps to the identity pentagon (stabilizers match).
Pentagon pentagon_of_label(const SectionLabel& m);

// The order-4 transformation on M induced by p(i) -> p(2i).
SectionLabel sigma_of_label(const SectionLabel& m);

struct PentagonBijectionReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks: each divisor is a Petersen 5-cycle; div(m) = sides of the neighbour
// of pentagon(m); divisors are equivariant under the generators; the s- and
// sigma-pentagon of each pair partition the ten lines; sigma_of_label realizes
// s_ij -> sigma_ij -> -s_ij.
PentagonBijectionReport pentagon_bijection_checks();

}  // namespace dp5

#endif
