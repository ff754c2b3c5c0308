#ifndef DP5_MATRIXREP_HPP
#define DP5_MATRIXREP_HPP

#include <array>
#include <string>
#include <vector>

#include "dp5/character.hpp"
#include "dp5/perm.hpp"
#include "dp5/ratmat.hpp"

namespace dp5 {

// A matrix representation of S5 given by images of the four adjacent
// transpositions (1,2),(2,3),(3,4),(4,5). Certification means all Coxeter
// relations hold as exact matrix identities, which makes the extension to
// arbitrary permutations via factorization well defined.
struct MatrixRep {
  int dim = 0;
  std::array<RatMatrix, 4> gens;
  bool certified = false;
  std::vector<std::string> violations;
};

MatrixRep rep_from_generators(int dim, std::array<RatMatrix, 4> gens);

RatMatrix rep_word_matrix(const MatrixRep& rep, const std::vector<int>& word);
RatMatrix rep_matrix(const MatrixRep& rep, const Perm& p);

CharVector character_of_rep(const MatrixRep& rep);
CharVector determinant_character(const MatrixRep& rep);

}  // namespace dp5

#endif
