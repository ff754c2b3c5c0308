#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dp5/character.hpp"
#include "dp5/matrixrep.hpp"
#include "dp5/perm.hpp"
#include "dp5/quadrics.hpp"
#include "dp5/sections.hpp"

using namespace dp5;

TEST_CASE("composition convention (a o b)(i) = a(b(i))") {
  Perm t12 = Perm::parse("(1,2)");
  Perm t23 = Perm::parse("(2,3)");
  CHECK(t12.compose(t12).is_identity());

  // hand oracle: 1 -> b(1)=1 -> a(1)=2; 2 -> 3 -> 3; 3 -> 2 -> 1
  Perm c = t12.compose(t23);
  CHECK(c(1) == 2);
  CHECK(c(2) == 3);
  CHECK(c(3) == 1);
  CHECK(c == Perm::parse("(1,2,3)"));

  Perm five = Perm::parse("(1,2,3,4,5)");
  Perm acc;
  for (int k = 0; k < 5; ++k) acc = acc.compose(five);
  CHECK(acc.is_identity());
}

TEST_CASE("sign and cycle notation") {
  CHECK(Perm::parse("(1,2)").sign() == -1);
  CHECK(Perm::parse("(1,2,3,4,5)").sign() == 1);
  CHECK(Perm::parse("(1,2,3)(4,5)").sign() == -1);
  CHECK(Perm().to_cycles() == "id");
  for (const Perm& g : all_perms()) CHECK(Perm::parse(g.to_cycles()) == g);
}

TEST_CASE("conjugacy classes against a conjugation oracle") {
  const ConjClasses& cc = conj_classes();
  CHECK(cc.sizes == std::array<int, 7>{1, 10, 15, 20, 30, 24, 20});

  // oracle: explicit conjugation orbits, no cycle types involved
  for (int k = 0; k < 7; ++k) {
    std::set<Perm> orbit;
    for (const Perm& g : all_perms())
      orbit.insert(g.compose(cc.reps[static_cast<std::size_t>(k)]).compose(g.inverse()));
    CHECK(static_cast<int>(orbit.size()) == cc.sizes[static_cast<std::size_t>(k)]);
    for (const Perm& h : orbit) CHECK(classify(h) == k);
  }

  CHECK(classify(Perm::parse("(2,3)(4,5)")) == 2);
  CHECK(classify(Perm::parse("(1,3,5,2,4)")) == 5);
}

TEST_CASE("group closure") {
  CHECK(group_closure({Perm::parse("(1,2,3,4,5)")}).size() == 5);
  CHECK(group_closure({Perm::parse("(1,2,3,4,5)"), Perm::parse("(1,4)(2,3)")}).size() == 10);
  CHECK(group_closure({Perm::parse("(1,2,3,4,5)"), Perm::parse("(1,2,4,3)")}).size() == 20);
  CHECK(group_closure({Perm::parse("(1,2)"), Perm::parse("(1,2,3,4,5)")}).size() == 120);
}

TEST_CASE("rho_V is certified and matches the explicit lists") {
  const Sections& S = sections();
  REQUIRE(S.rho_v.certified);

  RatMatrix five = rep_matrix(S.rho_v, Perm::parse("(1,2,3,4,5)"));
  CHECK(vv_apply(five, vv_unit(0)) == vv_unit(4));  // s12 -> s31
  CHECK(vv_apply(five, vv_unit(2)) == vv_unit(2));  // s21 fixed

  RatMatrix g34 = rep_matrix(S.rho_v, Perm::parse("(3,4)"));
  CHECK(vv_apply(g34, vv_unit(1)) == vv_unit(3));  // s13 -> s23

  CHECK(rep_matrix(S.rho_v, Perm()) == RatMatrix::identity(6));

  // (1,2) swaps s12 <-> -s21, s13 <-> -s23, s31 <-> -s32
  RatMatrix g12 = rep_matrix(S.rho_v, Perm::parse("(1,2)"));
  CHECK(vv_apply(g12, vv_unit(0)) == vv_neg(vv_unit(2)));
  CHECK(vv_apply(g12, vv_unit(3)) == vv_neg(vv_unit(1)));
  CHECK(vv_apply(g12, vv_unit(4)) == vv_neg(vv_unit(5)));
}

TEST_CASE("rho_V agrees with the plane model action") {
  const Sections& S = sections();
  for (int g = 0; g < 4; ++g)
    CHECK(plane_action_on_cubics(g) == S.rho_v.gens[static_cast<std::size_t>(g)]);
}

TEST_CASE("violated relations are reported") {
  RatMatrix two(1, 1);
  two.at(0, 0) = 2;
  std::array<RatMatrix, 4> gens{two, RatMatrix::identity(1), RatMatrix::identity(1),
                                RatMatrix::identity(1)};
  MatrixRep rep = rep_from_generators(1, gens);
  CHECK(!rep.certified);
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations.front().find("(1,2)^2") != std::string::npos);
  CHECK_THROWS_AS(rep_matrix(rep, Perm::parse("(1,2)")), std::logic_error);
}

TEST_CASE("well-definedness via factorizations") {
  const Sections& S = sections();
  std::vector<int> w1 = {0, 1, 2, 3};
  std::vector<int> w2 = {0, 1, 3, 2, 3, 2};  // same element, braid-rewritten tail
  REQUIRE(compose_word(w1) == Perm::parse("(1,2,3,4,5)"));
  REQUIRE(compose_word(w2) == Perm::parse("(1,2,3,4,5)"));
  CHECK(rep_word_matrix(S.rho_v, w1) == rep_word_matrix(S.rho_v, w2));

  // left- and right-greedy words agree for every group element
  for (const Perm& g : all_perms()) {
    CHECK(compose_word(adjacent_word(g)) == g);
    CHECK(compose_word(adjacent_word_alt(g)) == g);
    CHECK(rep_word_matrix(S.rho_v, adjacent_word(g)) ==
          rep_word_matrix(S.rho_v, adjacent_word_alt(g)));
  }

  // homomorphism property on a random sample
  std::mt19937 rng(555);
  std::uniform_int_distribution<std::size_t> pick(0, all_perms().size() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const Perm& a = all_perms()[pick(rng)];
    const Perm& b = all_perms()[pick(rng)];
    CHECK(rep_matrix(S.rho_v, a.compose(b)) ==
          rep_matrix(S.rho_v, a) * rep_matrix(S.rho_v, b));
  }
}

TEST_CASE("characters of the standard representations") {
  const Sections& S = sections();
  CHECK(character_of_rep(S.rho_v) == CharVector{{6, 0, -2, 0, 0, 1, 0}});
  CHECK(character_of_rep(quadrics().wprime) == CharVector{{6, 0, 2, 0, -2, 1, 0}});

  MatrixRep trivial = rep_from_generators(
      1, {RatMatrix::identity(1), RatMatrix::identity(1), RatMatrix::identity(1),
          RatMatrix::identity(1)});
  CHECK(character_of_rep(trivial) == CharVector{{1, 1, 1, 1, 1, 1, 1}});
  CHECK(determinant_character(trivial) == character_table()[0]);
}

TEST_CASE("inner products and the character table") {
  CharVector chiV = character_table()[6];
  CHECK(inner_product(chiV, chiV) == 1);
  CHECK(inner_product(character_table()[0], character_table()[1]) == 0);

  long long dimsq = 0;
  for (int a = 0; a < 7; ++a) {
    dimsq += character_table()[static_cast<std::size_t>(a)].v[0] *
             character_table()[static_cast<std::size_t>(a)].v[0];
    for (int b = 0; b < 7; ++b)
      CHECK(inner_product(character_table()[static_cast<std::size_t>(a)],
                          character_table()[static_cast<std::size_t>(b)]) == (a == b ? 1 : 0));
  }
  CHECK(dimsq == 120);
}

TEST_CASE("coset characters of the three pentagon subgroups") {
  CharVector cyc = coset_character({Perm::parse("(1,2,3,4,5)")});
  CharVector dih = coset_character({Perm::parse("(1,2,3,4,5)"), Perm::parse("(1,4)(2,3)")});
  CharVector aff = coset_character({Perm::parse("(1,2,3,4,5)"), Perm::parse("(1,2,4,3)")});
  CHECK(cyc == CharVector{{24, 0, 0, 0, 0, 4, 0}});
  CHECK(dih == CharVector{{12, 0, 4, 0, 0, 2, 0}});
  CHECK(aff == CharVector{{6, 0, 2, 0, 2, 1, 0}});
  // chi_H(id) = [G:H]
  CHECK(cyc.v[0] == 120 / 5);
  CHECK(dih.v[0] == 120 / 10);
  CHECK(aff.v[0] == 120 / 20);
  // chi_M - chi_P = 2 chi_7 and chi_P - chi_D = chi_D * eps
  CHECK(inner_product(cyc, character_table()[6]) == 2);
  CHECK(cyc - dih == CharVector{{12, 0, -4, 0, 0, 2, 0}});
  CHECK(dih - aff == aff * character_table()[1]);
}

TEST_CASE("decomposition into irreducibles") {
  CharVector chiM = coset_character({Perm::parse("(1,2,3,4,5)")});
  auto dM = decompose(chiM);
  REQUIRE(dM.has_value());
  CHECK(*dM == std::array<long long, 7>{1, 1, 0, 0, 1, 1, 2});

  CharVector chiD = coset_character({Perm::parse("(1,2,3,4,5)"), Perm::parse("(1,2,4,3)")});
  auto dD = decompose(chiD);
  REQUIRE(dD.has_value());
  CHECK(*dD == std::array<long long, 7>{1, 0, 0, 0, 0, 1, 0});

  auto d1 = decompose(character_table()[0]);
  REQUIRE(d1.has_value());
  CHECK(*d1 == std::array<long long, 7>{1, 0, 0, 0, 0, 0, 0});

  std::string diag;
  CHECK(!decompose(CharVector{{1, 1, 1, 1, 1, 1, 0}}, &diag).has_value());
  CHECK(diag.find("not a character") != std::string::npos);
}

TEST_CASE("determinant characters") {
  const Sections& S = sections();
  CHECK(determinant_character(S.rho_v) == character_table()[1]);
  CHECK(determinant_character(quadrics().wprime) == character_table()[1]);
}
