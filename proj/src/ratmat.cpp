#include "dp5/ratmat.hpp"

#include <stdexcept>

namespace dp5 {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_cols(const std::vector<std::vector<Rational>>& cols) {
  if (cols.empty()) return RatMatrix();
  RatMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("ragged columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Rational> RatMatrix::row(std::size_t i) const {
  std::vector<Rational> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<Rational> RatMatrix::col(std::size_t j) const {
  std::vector<Rational> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (b != 0) m.at(i, j) += a * b;
      }
    }
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  RatMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
  return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  RatMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
  return m;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  std::vector<Rational> r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::vstack(const RatMatrix& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (cols_ != o.cols_) throw std::invalid_argument("vstack column mismatch");
  RatMatrix m(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
  return m;
}

Rational RatMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  RatMatrix a = *this;
  std::size_t n = rows_;
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t r = c; r < n; ++r)
      if (a.at(r, c) != 0) {
        if (p == n || bit_size(a.at(r, c)) < bit_size(a.at(p, c))) p = r;
      }
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rational inv = Rational(1) / a.at(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a.at(r, c) == 0) continue;
      Rational f = a.at(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return d;
}

namespace {

struct Echelon {
  RatMatrix m;                  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan with a smallest-entry pivot heuristic to limit coefficient growth.
Echelon rref(const RatMatrix& in) {
  Echelon e{in, {}};
  RatMatrix& a = e.m;
  std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a.at(i, c) != 0) {
        if (p == rows || bit_size(a.at(i, c)) < bit_size(a.at(p, c))) p = i;
      }
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    Rational inv = Rational(1) / a.at(r, c);
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rational f = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

RankKernel rank_kernel(const RatMatrix& m) {
  Echelon e = rref(m);
  RankKernel rk;
  rk.rank = static_cast<int>(e.pivot_cols.size());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> k(m.cols(), Rational(0));
    k[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      k[e.pivot_cols[r]] = -e.m.at(r, free);
    rk.kernel.push_back(std::move(k));
  }
  // rank-nullity and exactness are rechecked on every call
  if (rk.rank + rk.kernel.size() != m.cols())
    throw std::logic_error("rank_kernel: rank-nullity violated");
  for (const auto& k : rk.kernel)
    if (!is_zero_vector(m.apply(k))) throw std::logic_error("rank_kernel: m*k != 0");
  return rk;
}

int rank_of(const RatMatrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::optional<std::vector<Rational>> solve_unique(const RatMatrix& A,
                                                  const std::vector<Rational>& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_unique shape mismatch");
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  Echelon e = rref(aug);
  std::vector<Rational> x(A.cols(), Rational(0));
  std::size_t structural_rank = 0;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == A.cols()) return std::nullopt;  // pivot in the b column
    ++structural_rank;
    x[e.pivot_cols[r]] = e.m.at(r, A.cols());
  }
  if (structural_rank != A.cols())
    throw std::logic_error("solve_unique: coefficient matrix is column-rank-deficient");
  return x;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace dp5
