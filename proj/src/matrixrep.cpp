#include "dp5/matrixrep.hpp"

#include <sstream>
#include <stdexcept>

namespace dp5 {

namespace {

std::string gen_name(int i) {
  static const char* names[4] = {"(1,2)", "(2,3)", "(3,4)", "(4,5)"};
  return names[i];
}

RatMatrix mat_pow(const RatMatrix& m, int n) {
  RatMatrix r = RatMatrix::identity(m.rows());
  for (int k = 0; k < n; ++k) r = r * m;
  return r;
}

}  // namespace

MatrixRep rep_from_generators(int dim, std::array<RatMatrix, 4> gens) {
  MatrixRep rep;
  rep.dim = dim;
  rep.gens = std::move(gens);
  for (int i = 0; i < 4; ++i) {
    const RatMatrix& g = rep.gens[static_cast<std::size_t>(i)];
    if (g.rows() != static_cast<std::size_t>(dim) || g.cols() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("generator image has wrong dimension");
  }
  const RatMatrix id = RatMatrix::identity(static_cast<std::size_t>(dim));
  auto check = [&](const RatMatrix& m, const std::string& what) {
    if (!(m == id)) rep.violations.push_back(what + " != I");
  };
  for (int i = 0; i < 4; ++i)
    check(mat_pow(rep.gens[static_cast<std::size_t>(i)], 2), gen_name(i) + "^2");
  for (int i = 0; i < 3; ++i)
    check(mat_pow(rep.gens[static_cast<std::size_t>(i)] * rep.gens[static_cast<std::size_t>(i + 1)], 3),
          "(" + gen_name(i) + gen_name(i + 1) + ")^3");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 2; j < 4; ++j)
      check(mat_pow(rep.gens[static_cast<std::size_t>(i)] * rep.gens[static_cast<std::size_t>(j)], 2),
            "(" + gen_name(i) + gen_name(j) + ")^2");
  rep.certified = rep.violations.empty();
  return rep;
}

RatMatrix rep_word_matrix(const MatrixRep& rep, const std::vector<int>& word) {
  RatMatrix m = RatMatrix::identity(static_cast<std::size_t>(rep.dim));
  for (int g : word) m = m * rep.gens[static_cast<std::size_t>(g)];
  return m;
}

RatMatrix rep_matrix(const MatrixRep& rep, const Perm& p) {
  if (!rep.certified)
    throw std::logic_error("rep_matrix on uncertified representation: " +
                           (rep.violations.empty() ? std::string("unknown")
                                                   : rep.violations.front()));
  return rep_word_matrix(rep, adjacent_word(p));
}

CharVector character_of_rep(const MatrixRep& rep) {
  const ConjClasses& cc = conj_classes();
  CharVector chi;
  for (int k = 0; k < 7; ++k) {
    RatMatrix m = rep_matrix(rep, cc.reps[static_cast<std::size_t>(k)]);
    Rational tr(0);
    for (std::size_t i = 0; i < m.rows(); ++i) tr += m.at(i, i);
    if (!is_integer(tr)) throw std::logic_error("non-integer trace in character computation");
    chi.v[k] = numerator(tr).convert_to<long long>();
  }
  return chi;
}

CharVector determinant_character(const MatrixRep& rep) {
  const ConjClasses& cc = conj_classes();
  CharVector chi;
  for (int k = 0; k < 7; ++k) {
    Rational d = rep_matrix(rep, cc.reps[static_cast<std::size_t>(k)]).det();
    if (d != 1 && d != -1)
      throw std::logic_error("determinant character value is not a unit");
    chi.v[k] = d == 1 ? 1 : -1;
  }
  return chi;
}

}  // namespace dp5
