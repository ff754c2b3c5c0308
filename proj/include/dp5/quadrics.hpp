#ifndef DP5_QUADRICS_HPP
#define DP5_QUADRICS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dp5/matrixrep.hpp"
#include "dp5/mpoly.hpp"
#include "dp5/sections.hpp"

namespace dp5 {

// Element of Sym^2(V), stored as a symmetric 6x6 gram matrix in the ordered
// basis (s12,s13,s21,s23,s31,s32); equivalently a quadric in the Y6 variables.
class QuadForm {
 public:
  QuadForm() = default;

  static QuadForm product(const VVector& a, const VVector& b);
  static QuadForm from_poly(const MPoly& p);  // degree <= 2 homogeneous in Y6

  const Rational& gram(std::size_t p, std::size_t q) const { return g_[p * 6 + q]; }
  Rational& gram(std::size_t p, std::size_t q) { return g_[p * 6 + q]; }

  MPoly to_poly() const;                       // in Y6
  std::vector<Rational> coeff_vector() const;  // 21 coefficients, term order

  QuadForm operator+(const QuadForm& o) const;
  QuadForm operator-(const QuadForm& o) const;
  QuadForm operator-() const;
  QuadForm scaled(const Rational& c) const;
  bool operator==(const QuadForm& o) const = default;
  bool is_zero() const;

  // Sym^2 of a linear change of basis: gram -> R * gram * R^T.
  QuadForm transformed(const RatMatrix& r) const;

 private:
  std::array<Rational, 36> g_{};
};

struct QuadricsData {
  std::array<QuadForm, 6> Q;          // Q_ij = s_ij * sigma_ij, s-basis order of (ij)
  std::array<QuadForm, 5> q;          // q_ij = Q_ij - Q_32 for ij in {12,13,21,23,31}
  RatMatrix phi;                      // 21 x 28: rows = Sym^2 monomials, cols = sextics
  int phi_rank = 0;
  std::vector<std::vector<Rational>> W_basis;  // left kernel of phi (21-dim coords)
  MatrixRep wprime;                   // action on (Q12,...,Q32) from the explicit formulae
};

const QuadricsData& quadrics();

// Substitution y_ij -> s_ij applied to an element of Sym^2(V).
MPoly phi_apply(const QuadForm& f);

bool in_W(const QuadForm& f);
// Coordinates in the Q-basis, if the form lies in W'.
std::optional<std::array<Rational, 6>> q_coordinates(const QuadForm& f);

// Construction (i): the action induced on the Q-basis by rho_V(gen) via
// gram -> R gram R^T, re-expressed in the Q-basis.
RatMatrix sym2_induced_gen(int gen_index);

struct WprimeReport {
  bool ok = true;
  std::vector<std::string> failures;
  CharVector chi_wprime;
  CharVector det_wprime;
};

// The explicit signed-permutation matrices agree with the Sym^2-induced
// action; the character is chi_2 + chi_5; det is the sign character; W is
// stable; the eps-isotypic vector maps to a multiple of Sigma under Phi;
// Phi itself is equivariant for the plane action on sextics.
WprimeReport wprime_checks();

struct Degree3Report {
  bool ok = true;
  std::vector<std::string> failures;
  long long expected_image_dim = 0;  // h^0(-3K) from the lattice, 31
  int sym3_kernel_dim = 0;           // 56 - 31 = 25
  int wv_rank = 0;                   // rank of the 30 products q*y
};

// The degree-3 part of the ideal equals W*V: both computed independently.
Degree3Report degree3_ideal_check();

}  // namespace dp5

#endif
