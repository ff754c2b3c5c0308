#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dp5/lattice.hpp"
#include "dp5/pentagon.hpp"
#include "dp5/sections.hpp"

using namespace dp5;

namespace {
MPoly x(int k) { return MPoly::variable(ring_x(), static_cast<std::size_t>(k - 1)); }
}

TEST_CASE("sections are built from the stated formulas") {
  const Sections& S = sections();
  CHECK(S.s[0] == x(1) * x(2) * (x(2) - x(3)));

  // sigma12 = s13 - s31 - s23 (eps = +1), sigma21 = s13 - s23 + s32 (eps = -1)
  VVector sigma12{};
  sigma12[1] = 1;
  sigma12[4] = -1;
  sigma12[3] = -1;
  CHECK(S.sigma_coords[0] == sigma12);
  VVector sigma21{};
  sigma21[3] = -1;
  sigma21[5] = 1;
  sigma21[1] = 1;
  CHECK(S.sigma_coords[2] == sigma21);

  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(S.s[k] * S.sigma[k] == S.Sigma);
    for (const auto& p : S.points) {
      CHECK(S.s[k].eval(p) == 0);
      CHECK(S.sigma[k].eval(p) == 0);
    }
  }
}

TEST_CASE("the 24 labels name pairwise distinct polynomials") {
  const Sections& S = sections();
  CHECK(all_labels().size() == 24);
  std::set<std::string> seen;
  for (const SectionLabel& m : all_labels()) seen.insert(S.label_poly(m).str());
  CHECK(seen.size() == 24);

  CHECK(parse_label("-sigma13")->str() == "-sigma13");
  CHECK(parse_label("s21")->str() == "s21");
  CHECK(!parse_label("s11").has_value());
  CHECK(!parse_label("q12").has_value());
}

TEST_CASE("intersection rules and the Petersen graph") {
  CHECK(line_class({1, 2}).dot(line_class({3, 4})) == 1);
  CHECK(line_class({1, 2}).dot(line_class({1, 3})) == 0);
  CHECK(line_class({1, 2}).dot(line_class({1, 2})) == -1);
  CHECK(line_class({3, 4}) + line_class({2, 5}) == line_class({2, 4}) + line_class({3, 5}));

  PetersenReport p = petersen_checks();
  CHECK(p.ok);
  CHECK(p.minus_k_squared == 5);

  CHECK(rr_chi(class_minus_K() * 3) == 31);
  CHECK(rr_chi(class_minus_K() * 2) == 16);
  CHECK(rr_chi(class_minus_K()) == 6);
}

TEST_CASE("divisors of sections") {
  std::vector<LinePair> d12 = divisor_of_section(SectionLabel{false, 1, 2, 1});
  std::vector<LinePair> expect12 = {{1, 4}, {2, 4}, {2, 3}, {3, 5}, {1, 5}};
  std::sort(expect12.begin(), expect12.end());
  CHECK(d12 == expect12);

  std::vector<LinePair> d21 = divisor_of_section(SectionLabel{false, 2, 1, 1});
  std::vector<LinePair> expect21;
  for (int i = 1; i <= 5; ++i) expect21.push_back(make_pair_label(i, (i + 3 - 1) % 5 + 1));
  std::sort(expect21.begin(), expect21.end());
  expect21.erase(std::unique(expect21.begin(), expect21.end()), expect21.end());
  CHECK(d21 == expect21);

  for (const SectionLabel& m : all_labels()) {
    if (m.sign < 0) continue;
    std::vector<LinePair> d = divisor_of_section(m);
    REQUIRE(d.size() == 5);
    DivisorClass sum;
    for (const LinePair& p : d) {
      CHECK(line_class(p).dot(line_class(p)) == -1);
      sum = sum + line_class(p);
    }
    CHECK(sum == class_minus_K());
  }
}

TEST_CASE("pentagon counts match the coset counts") {
  CHECK(enumerate_pentagons(PentagonLevel::Oriented).size() == 120 / 5);
  CHECK(enumerate_pentagons(PentagonLevel::Unoriented).size() == 120 / 10);
  CHECK(enumerate_pentagons(PentagonLevel::Double).size() == 120 / 20);

  for (const Pentagon& p : enumerate_pentagons(PentagonLevel::Unoriented)) {
    std::set<int> vals(p.img.begin(), p.img.end());
    CHECK(vals.size() == 5);  // injectivity
  }
}

TEST_CASE("squaring is the neighbour map") {
  Pentagon id;
  Pentagon n = squared(id);
  CHECK(n.img == std::array<int, 5>{1, 3, 5, 2, 4});
  // sigma^2 is orientation reversal
  CHECK(canonical(squared(squared(id)), PentagonLevel::Oriented) ==
        canonical(reflected(id), PentagonLevel::Oriented));
  // neighbouring pentagons share no side
  std::vector<LinePair> a = pentagon_sides(id), b = pentagon_sides(n);
  std::set<LinePair> inter;
  for (const LinePair& p : a)
    if (std::find(b.begin(), b.end(), p) != b.end()) inter.insert(p);
  CHECK(inter.empty());
}

TEST_CASE("orbit and stabilizer of s21") {
  OrbitStructure os = orbit_structure();
  CHECK(os.labels_closed);
  CHECK(os.orbit_size_s21 == 24);
  REQUIRE(os.stabilizer_s21.size() == 5);
  std::vector<Perm> got = os.stabilizer_s21;
  std::sort(got.begin(), got.end());
  CHECK(got == group_closure({Perm::parse("(1,2,3,4,5)")}));
}

TEST_CASE("pentagon bijection and the sigma transformation") {
  PentagonBijectionReport rep = pentagon_bijection_checks();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);

  // sigma^4 = identity on M
  for (const SectionLabel& m : all_labels()) {
    SectionLabel t = m;
    for (int k = 0; k < 4; ++k) t = sigma_of_label(t);
    CHECK(t == m);
  }

  // the linear map L(s_ij) = sigma_ij does not realize sigma:
  // L(sigma12) = s12 + s23 + s31 rather than -s12
  const Sections& S = sections();
  VVector image{};
  const VVector& sigma12 = S.sigma_coords[0];
  for (std::size_t k = 0; k < 6; ++k)
    image = vv_add(image, vv_scale(S.sigma_coords[k], sigma12[k]));
  VVector expect{};
  expect[static_cast<std::size_t>(s_index(1, 2))] = 1;
  expect[static_cast<std::size_t>(s_index(2, 3))] = 1;
  expect[static_cast<std::size_t>(s_index(3, 1))] = 1;
  CHECK(image == expect);
  CHECK(image != vv_neg(vv_unit(static_cast<std::size_t>(s_index(1, 2)))));
}

TEST_CASE("the label-to-pentagon bijection is equivariant") {
  const Sections& S = sections();
  for (int g = 0; g < 4; ++g) {
    const Perm& perm = adjacent_transpositions()[static_cast<std::size_t>(g)];
    for (const SectionLabel& m : all_labels()) {
      VVector im = vv_apply(S.rho_v.gens[static_cast<std::size_t>(g)], S.label_vector(m));
      auto lbl = S.label_of_vector(im);
      REQUIRE(lbl.has_value());
      CHECK(pentagon_of_label(*lbl) ==
            canonical(acted(perm, pentagon_of_label(m)), PentagonLevel::Oriented));
    }
  }

  // neighbour of the pentagon of s12 is the pentagon of sigma12 (unoriented)
  Pentagon p_s12 = pentagon_of_label(SectionLabel{false, 1, 2, 1});
  Pentagon p_sigma12 = pentagon_of_label(SectionLabel{true, 1, 2, 1});
  CHECK(canonical(squared(p_s12), PentagonLevel::Unoriented) ==
        canonical(p_sigma12, PentagonLevel::Unoriented));
  // opposite orientation corresponds to the negated label
  Pentagon p_neg = pentagon_of_label(SectionLabel{false, 1, 2, -1});
  CHECK(canonical(reflected(p_s12), PentagonLevel::Oriented) ==
        canonical(p_neg, PentagonLevel::Oriented));
}

TEST_CASE("sigma on labels has the computed sign pattern") {
  // + on the C3-orbit of s21, - on the C3-orbit of s12
  CHECK(sigma_of_label(SectionLabel{false, 2, 1, 1}) == SectionLabel{true, 2, 1, 1});
  CHECK(sigma_of_label(SectionLabel{false, 1, 3, 1}) == SectionLabel{true, 1, 3, 1});
  CHECK(sigma_of_label(SectionLabel{false, 3, 2, 1}) == SectionLabel{true, 3, 2, 1});
  CHECK(sigma_of_label(SectionLabel{false, 1, 2, 1}) == SectionLabel{true, 1, 2, -1});
  // and sigma(sigma21) = -s21
  CHECK(sigma_of_label(SectionLabel{true, 2, 1, 1}) == SectionLabel{false, 2, 1, -1});
}

TEST_CASE("DOT output highlights a double pentagon") {
  std::pair<int, int> ij{1, 2};
  std::string dot = petersen_dot(&ij);
  CHECK(dot.find("graph petersen") != std::string::npos);
  CHECK(dot.find("penwidth=2") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  // 10 vertices and 15 edges
  CHECK(std::count(dot.begin(), dot.end(), '-') >= 15);
}
