#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dp5/quadrics.hpp"
#include "dp5/sections.hpp"

using namespace dp5;

namespace {
MPoly y(const std::string& n) { return MPoly::variable(ring_y6(), n); }
}

TEST_CASE("Q_ij as elements of Sym^2(V)") {
  const QuadricsData& D = quadrics();
  CHECK(D.Q[0].to_poly() == y("y12") * (y("y13") - y("y31") - y("y23")));
  CHECK((D.Q[0] - D.Q[0]).is_zero());
  for (std::size_t k = 0; k < 6; ++k) CHECK(phi_apply(D.Q[k]) == sections().Sigma);

  // the six Q are linearly independent
  std::vector<std::vector<Rational>> rows;
  for (const auto& Q : D.Q) rows.push_back(Q.coeff_vector());
  CHECK(rank_of(RatMatrix::from_rows(rows)) == 6);
}

TEST_CASE("gram and polynomial encodings agree") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    MPoly p(ring_y6());
    for (const Exponents& e : monomials_of_degree(6, 2))
      p.add_term(e, Rational(coef(rng)));
    QuadForm f = QuadForm::from_poly(p);
    CHECK(f.to_poly() == p);
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) CHECK(f.gram(a, b) == f.gram(b, a));
  }

  // product of linear forms multiplies the polynomials
  VVector a{}, b{};
  a[0] = 2;
  a[3] = -1;
  b[1] = 1;
  b[0] = 5;
  QuadForm prod = QuadForm::product(a, b);
  CHECK(prod.to_poly() == (y("y12").scaled(2) - y("y23")) * (y("y13") + y("y12").scaled(5)));
}

TEST_CASE("Phi has rank 16 and kernel W of dimension 5") {
  const QuadricsData& D = quadrics();
  CHECK(D.phi.rows() == 21);
  CHECK(D.phi.cols() == 28);
  CHECK(D.phi_rank == 16);
  CHECK(D.W_basis.size() == 5);
  CHECK(D.phi_rank + D.W_basis.size() == 21);

  // q_ij = Q_ij - Q_32 lie in W and form a basis
  std::vector<std::vector<Rational>> rows;
  for (const auto& q : D.q) {
    CHECK(phi_apply(q).is_zero());
    CHECK(in_W(q));
    rows.push_back(q.coeff_vector());
  }
  CHECK(rank_of(RatMatrix::from_rows(rows)) == 5);
  for (const auto& w : D.W_basis) rows.push_back(w);
  CHECK(rank_of(RatMatrix::from_rows(rows)) == 5);

  // Phi(Q12 - Q32) = 0 via substitution
  CHECK(phi_apply(D.Q[0] - D.Q[5]).is_zero());
}

TEST_CASE("the W' action from the explicit formulae") {
  const QuadricsData& D = quadrics();
  REQUIRE(D.wprime.certified);

  // (1,2): Q12 <-> -Q21
  const RatMatrix& g12 = D.wprime.gens[0];
  CHECK(g12.col(0) == std::vector<Rational>{0, 0, -1, 0, 0, 0});
  // (4,5): Q12 <-> -Q13
  const RatMatrix& g45 = D.wprime.gens[3];
  CHECK(g45.col(0) == std::vector<Rational>{0, -1, 0, 0, 0, 0});
  // (1,2,3,4,5): Q21 -> Q21, Q12 -> Q31
  RatMatrix five = rep_matrix(D.wprime, Perm::parse("(1,2,3,4,5)"));
  CHECK(five.col(2) == std::vector<Rational>{0, 0, 1, 0, 0, 0});
  CHECK(five.col(0) == std::vector<Rational>{0, 0, 0, 0, 1, 0});

  for (int g = 0; g < 4; ++g) CHECK(sym2_induced_gen(g) == D.wprime.gens[static_cast<std::size_t>(g)]);
}

TEST_CASE("W' decomposition and equivariance report") {
  WprimeReport rep = wprime_checks();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  CHECK(rep.chi_wprime == character_table()[1] + character_table()[4]);
  CHECK(rep.det_wprime == character_table()[1]);

  auto d = decompose(rep.chi_wprime);
  REQUIRE(d.has_value());
  CHECK(*d == std::array<long long, 7>{0, 1, 0, 0, 1, 0, 0});
}

TEST_CASE("differences of Q's are permuted up to sign") {
  const QuadricsData& D = quadrics();
  for (int g = 0; g < 4; ++g) {
    const RatMatrix& m = D.wprime.gens[static_cast<std::size_t>(g)];
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        if (a == b) continue;
        QuadForm image = (D.Q[a] - D.Q[b]).transformed(sections().rho_v.gens[static_cast<std::size_t>(g)]);
        auto coords = q_coordinates(image);
        REQUIRE(coords.has_value());
        // must be +-(Q_c - Q_d): exactly one +1 and one -1 up to overall sign
        int plus = 0, minus = 0, other = 0;
        for (const auto& c : *coords) {
          if (c == 1) ++plus;
          else if (c == -1) ++minus;
          else if (c != 0) ++other;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
        CHECK(other == 0);
        (void)m;
      }
  }
}

TEST_CASE("degree-3 part of the ideal is W*V") {
  Degree3Report rep = degree3_ideal_check();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  CHECK(rep.expected_image_dim == 31);
  CHECK(rep.sym3_kernel_dim == 25);
  CHECK(rep.wv_rank == 25);
}

TEST_CASE("q_coordinates rejects forms outside W'") {
  QuadForm outside;
  outside.gram(0, 0) = 1;  // y12^2 is not in the span of the Q's
  CHECK(!q_coordinates(outside).has_value());
}
