#ifndef DP5_RATMAT_HPP
#define DP5_RATMAT_HPP

#include <optional>
#include <vector>

#include "dp5/rational.hpp"

namespace dp5 {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix from_cols(const std::vector<std::vector<Rational>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool operator==(const RatMatrix& o) const = default;

  Rational det() const;  // square only

  // Stack rows of `o` below *this (same column count).
  RatMatrix vstack(const RatMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

struct RankKernel {
  int rank = 0;
  std::vector<std::vector<Rational>> kernel;  // right null space basis
};

// Exact rational Gaussian elimination. Verifies rank + kernel.size() == cols
// and m*k == 0 for every returned basis vector before returning.
RankKernel rank_kernel(const RatMatrix& m);

int rank_of(const RatMatrix& m);

// Solves A x = b when A has full column rank; nullopt if inconsistent.
// Throws std::logic_error when the column rank is deficient.
std::optional<std::vector<Rational>> solve_unique(const RatMatrix& A,
                                                  const std::vector<Rational>& b);

bool is_zero_vector(const std::vector<Rational>& v);

}  // namespace dp5

#endif
