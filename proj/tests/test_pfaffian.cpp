#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dp5/pfaffian.hpp"

using namespace dp5;

namespace {

RatMatrix random_skew(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-5, 5);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(i, j) = coef(rng);
      m.at(j, i) = -m.at(i, j);
    }
  return m;
}

RatMatrix permutation_matrix(const std::vector<std::size_t>& p) {
  RatMatrix m(p.size(), p.size());
  for (std::size_t j = 0; j < p.size(); ++j) m.at(p[j], j) = 1;
  return m;
}

int perm_sign(std::vector<std::size_t> p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("constant Pfaffians") {
  RatMatrix m(4, 4);
  Rational a = 2, b = 3, c = 5, d = 7, e = 11, f = 13;
  m.at(0, 1) = a; m.at(0, 2) = b; m.at(0, 3) = c;
  m.at(1, 2) = d; m.at(1, 3) = e; m.at(2, 3) = f;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j) m.at(i, j) = -m.at(j, i);
  CHECK(pfaffian_constant(m) == a * f - b * e + c * d);

  // block diagonal with three [[0,1],[-1,0]] blocks
  RatMatrix blocks(6, 6);
  for (std::size_t k = 0; k < 3; ++k) {
    blocks.at(2 * k, 2 * k + 1) = 1;
    blocks.at(2 * k + 1, 2 * k) = -1;
  }
  CHECK(pfaffian_constant(blocks) == 1);

  CHECK(pfaffian_constant(RatMatrix(3, 3)) == 0);  // odd size
  CHECK(pfaffian_constant(RatMatrix()) == 1);      // empty
}

TEST_CASE("Pf^2 = det on random skew matrices") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 15; ++trial) {
    for (std::size_t n : {4u, 6u}) {
      RatMatrix m = random_skew(rng, n);
      Rational pf = pfaffian_constant(m);
      CHECK(pf * pf == m.det());
    }
  }
}

TEST_CASE("simultaneous permutation multiplies the Pfaffian by the sign") {
  std::mt19937 rng(77);
  std::vector<std::size_t> p = {0, 1, 2, 3, 4, 5};
  for (int trial = 0; trial < 15; ++trial) {
    RatMatrix m = random_skew(rng, 6);
    std::shuffle(p.begin(), p.end(), rng);
    RatMatrix P = permutation_matrix(p);
    RatMatrix conj = P * m * P.transpose();
    CHECK(pfaffian_constant(conj) == pfaffian_constant(m) * Rational(perm_sign(p)));
  }
}

TEST_CASE("A' entries come out of the five closed-form families") {
  const SkewLinearMatrix& A = a_prime();
  CHECK(A.is_skew());

  auto lin = [](std::initializer_list<std::pair<int, std::pair<int, int>>> parts) {
    VVector v{};
    for (auto [c, ij] : parts) v[static_cast<std::size_t>(s_index(ij.first, ij.second))] += c;
    return v;
  };
  // (Q12,Q13) = s21 + s23 - s31 - s32
  CHECK(A.at(0, 1) == lin({{1, {2, 1}}, {1, {2, 3}}, {-1, {3, 1}}, {-1, {3, 2}}}));
  // (Q13,Q32) = -s12 - s31
  CHECK(A.at(1, 5) == lin({{-1, {1, 2}}, {-1, {3, 1}}}));
  // (Q12,Q31) = s13 + s32
  CHECK(A.at(0, 4) == lin({{1, {1, 3}}, {1, {3, 2}}}));
  CHECK(A.e == written_out_entries());
}

TEST_CASE("A' is invariant under the four generators") {
  EquivarianceReport rep = equivariance_check(a_prime());
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
}

TEST_CASE("sub-Pfaffians reproduce the quadric differences") {
  const QuadricsData& D = quadrics();
  // deleting {Q12, Q13} gives exactly 2 Q12 - 2 Q13
  QuadForm pf = sub_pfaffian(a_prime(), {0, 1});
  CHECK(pf == (D.Q[0] - D.Q[1]).scaled(2));
  CHECK(in_W(pf));

  MainResultReport rep = verify_mainresult();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  CHECK(rep.span_dim == 5);
  REQUIRE(rep.bijection.size() == 15);
  // the discovered bijection: deleting {Q_a, Q_b} yields +-2(Q_a - Q_b)
  for (const auto& e : rep.bijection) {
    std::pair<int, int> diff =
        e.a < e.b ? std::pair{e.a, e.b} : std::pair{e.b, e.a};
    CHECK(diff == e.deleted);
  }
  CHECK_THROWS_AS(sub_pfaffian(a_prime(), {2, 2}), std::invalid_argument);
}

TEST_CASE("the full 6x6 Pfaffian of A' vanishes identically") {
  // regression value: first exact computation gave the zero cubic
  CHECK(full_pfaffian(a_prime()).is_zero());

  // sanity of the polynomial Pfaffian on a constant-entry matrix
  std::mt19937 rng(5150);
  RatMatrix m = random_skew(rng, 6);
  SkewLinearMatrix lifted;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      VVector v{};
      v[0] = m.at(a, b);  // multiples of a single basis vector
      lifted.e[a][b] = v;
    }
  MPoly pf = full_pfaffian(lifted);
  // Pf of (y12 * constant skew) = y12^3 * Pf(constant skew)
  MPoly expect(ring_y6());
  expect.add_term(Exponents{3, 0, 0, 0, 0, 0}, pfaffian_constant(m));
  CHECK(pf == expect);
}

TEST_CASE("the invariant tensor is unique up to scale") {
  InvariantSpaceReport rep = invariant_space();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  CHECK(rep.fixed_dim == 1);
  CHECK(rep.aprime_in_fixed_space);
  CHECK(rep.character_multiplicity == 1);
}

TEST_CASE("linear syzygies of the quadric basis") {
  SyzygyReport rep = syzygy_kernel();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  CHECK(rep.kernel_dim == 5);
}
