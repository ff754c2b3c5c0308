#ifndef DP5_SECTIONS_HPP
#define DP5_SECTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dp5/matrixrep.hpp"
#include "dp5/mpoly.hpp"
#include "dp5/ratmat.hpp"

namespace dp5 {

// Element of the 6-dimensional anticanonical space V in the ordered basis
// (s12, s13, s21, s23, s31, s32).
using VVector = std::array<Rational, 6>;

VVector vv_zero();
VVector vv_unit(std::size_t k);
VVector vv_add(const VVector& a, const VVector& b);
VVector vv_sub(const VVector& a, const VVector& b);
VVector vv_neg(const VVector& a);
VVector vv_scale(const VVector& a, const Rational& c);
bool vv_is_zero(const VVector& a);
VVector vv_apply(const RatMatrix& m, const VVector& a);  // m is 6x6
std::string vv_str(const VVector& a);                    // linear combination in s-basis

// Index of s_ij in the basis order; (i,j) with 1 <= i != j <= 3.
int s_index(int i, int j);
std::pair<int, int> s_pair(int index);

// One of the 24 elements of M = { +-s_ij, +-sigma_ij }.
struct SectionLabel {
  bool is_sigma = false;
  int i = 1, j = 2;
  int sign = 1;

  bool operator==(const SectionLabel&) const = default;
  auto operator<=>(const SectionLabel&) const = default;
  SectionLabel negated() const { return {is_sigma, i, j, -sign}; }
  std::string str() const;  // "s12", "-sigma13"
};

std::optional<SectionLabel> parse_label(const std::string& s);
const std::vector<SectionLabel>& all_labels();  // 24, deterministic order

struct Sections {
  RingPtr X;
  std::array<std::vector<Rational>, 4> points;  // p1..p4 (projective)
  std::array<MPoly, 6> s;                       // s-basis order
  std::array<MPoly, 6> sigma;                   // sigma_ij at the index of (i,j)
  std::array<VVector, 6> sigma_coords;          // sigma_ij expanded in the s-basis
  MPoly Sigma;                                  // product of the six quadrangle lines
  MatrixRep rho_v;                              // representation on V, certified

  MPoly label_poly(const SectionLabel& m) const;
  VVector label_vector(const SectionLabel& m) const;
  // Expand an arbitrary element of V' (a cubic through p1..p4) in the s-basis.
  std::optional<VVector> cubic_coordinates(const MPoly& cubic) const;
  std::optional<SectionLabel> label_of_vector(const VVector& v) const;
};

// Built once; construction cross-checks the defining identities and throws on
// any inconsistency.
const Sections& sections();

// Coefficient matrix of homogeneous polynomials of one degree:
// rows = polynomials, columns = monomials of that degree in term order.
RatMatrix coefficient_matrix(const std::vector<MPoly>& polys, int degree);

// Action of a generator on the plane model, as used to double-check rho_v:
// cubics map by eps(g) * (F o phi_g) for g in S4, and by (F o Cremona)/(x1x2x3)
// for (4,5). Returns the matrix on the s-basis.
RatMatrix plane_action_on_cubics(int gen_index);

// Same recipe one degree up: sextics with double points map by F o phi_g, and
// by (F o Cremona)/(x1x2x3)^2 for (4,5). Used for the Phi-equivariance check.
MPoly plane_action_on_sextic(int gen_index, const MPoly& f);

}  // namespace dp5

#endif
