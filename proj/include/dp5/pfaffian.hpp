#ifndef DP5_PFAFFIAN_HPP
#define DP5_PFAFFIAN_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dp5/quadrics.hpp"
#include "dp5/ratmat.hpp"
#include "dp5/sections.hpp"

namespace dp5 {

// 6x6 skew matrix of linear forms on V, rows and columns labelled by the
// ordered Q-basis (Q12,Q13,Q21,Q23,Q31,Q32).
struct SkewLinearMatrix {
  std::array<std::array<VVector, 6>, 6> e{};

  const VVector& at(std::size_t p, std::size_t q) const { return e[p][q]; }
  bool is_skew() const;
};

// The invariant matrix assembled from the five closed-form entry families;
// construction fails loudly if the families assign inconsistent values or if
// the result differs from the written-out matrix.
const SkewLinearMatrix& a_prime();

// The matrix with all 15 upper entries written out term by term, kept as an
// independent transcription to cross-check the family construction.
const std::array<std::array<VVector, 6>, 6>& written_out_entries();

// Pfaffian of the 4x4 submatrix skipping rows/columns {skip.first, skip.second},
// retained indices in increasing order: Pf = m12*m34 - m13*m24 + m14*m23.
QuadForm sub_pfaffian(const SkewLinearMatrix& m, std::pair<int, int> skip);

// Pfaffian of a constant skew matrix (even size), by recursive expansion.
Rational pfaffian_constant(const RatMatrix& m);

// Pfaffian of the full 6x6 matrix of linear forms: a cubic in the Y6 ring.
MPoly full_pfaffian(const SkewLinearMatrix& m);

struct MainResultReport {
  bool ok = true;
  std::vector<std::string> failures;
  // deleted pair (of Q-basis indices) -> (a, b, sign): Pf = sign * 2(Q_a - Q_b)
  struct Entry {
    std::pair<int, int> deleted;
    int a = 0, b = 0;
    int sign = 1;
  };
  std::vector<Entry> bijection;
  int span_dim = 0;
};

// The 15 sub-Pfaffians of A': each equals +-2(Q_a - Q_b), all lie in ker Phi,
// they span exactly W, and the multiset of difference pairs is every unordered
// pair of distinct Q's exactly once.
MainResultReport verify_mainresult();

struct EquivarianceReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// S_g A' S_g^T reproduces A' for each of the four generators, the entries
// transforming in V' = V (x) eps.
EquivarianceReport equivariance_check(const SkewLinearMatrix& m);

struct InvariantSpaceReport {
  bool ok = true;
  std::vector<std::string> failures;
  int fixed_dim = 0;                 // dim (Lambda^2 W' x V)^{S5}, expected 1
  bool aprime_in_fixed_space = false;
  long long character_multiplicity = 0;  // <chi_{Lambda^2 W'} * chi_V, chi_1>, expected 1
};

InvariantSpaceReport invariant_space();

struct SyzygyReport {
  bool ok = true;
  std::vector<std::string> failures;
  int kernel_dim = 0;  // expected 5
};

// Linear first syzygies of the q basis: 5-tuples (L_1..L_5) of elements of V
// with sum q_k L_k = 0 in Sym^3(V).
SyzygyReport syzygy_kernel();

}  // namespace dp5

#endif
