#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dp5/multiproj.hpp"
#include "dp5/perm.hpp"

using namespace dp5;

namespace {
MPoly x(int k) { return MPoly::variable(ring_x(), static_cast<std::size_t>(k - 1)); }
MPoly m5(const std::string& n) { return MPoly::variable(ring_m5(), n); }
}

TEST_CASE("parametrization satisfies the line relations") {
  const Parametrization& P = parametrization();
  for (const auto& tr : P.triples) CHECK((tr[0] - tr[1] + tr[2]).is_zero());
  CHECK((P.y[0] + P.y[1] + P.y[2]).is_zero());

  // s1 - s2 + s3 expands to x1 y1 + x2 y2 + x3 y3 = 0
  MPoly s_relation = x(1) * P.y[0] + x(2) * P.y[1] + x(3) * P.y[2];
  CHECK(s_relation.is_zero());

  CHECK(P.triples[0][0] == x(1));           // v1
  CHECK(P.triples[3][1] == -P.y[1]);        // t2 = -y2
  CHECK(P.triples[4][0] == x(1) * P.y[0]);  // s1 = x1 y1
}

TEST_CASE("the ten equations vanish under the parametrization") {
  TenEquationsReport rep = verify_ten_equations();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);

  // spot expansions
  CHECK(parametrize(ten_equations()[0].form).is_zero());
  CHECK(parametrize(m5("t1") * m5("v1") * m5("s2") - m5("t2") * m5("v2") * m5("s1")).is_zero());
  CHECK(parametrize(m5("v1") * m5("z3") * m5("t3") + m5("v3") * m5("z2") * m5("t2")).is_zero());
}

TEST_CASE("Hilbert-Burch minors vanish") {
  HilbertBurchReport rep = verify_hilbert_burch();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  for (const auto& m : rep.minors) CHECK(m.is_zero());
}

TEST_CASE("birational actions on the plane") {
  std::map<std::string, MPoly> cremona = birational_action(3);
  CHECK(cremona.at("x1") == x(2) * x(3));
  CHECK(cremona.at("x2") == x(1) * x(3));
  CHECK(cremona.at("x3") == x(1) * x(2));

  // (1,2) fixes x3
  CHECK(birational_action(0).at("x3") == x(3));

  // (3,4) is an involution on the nose
  std::map<std::string, MPoly> g34 = birational_action(2);
  for (int k = 1; k <= 3; ++k) {
    MPoly twice = g34.at("x" + std::to_string(k)).substitute(g34, ring_x());
    CHECK(twice == x(k));
  }

  // Cremona twice is multiplication by x1 x2 x3
  for (int k = 1; k <= 3; ++k) {
    MPoly twice = cremona.at("x" + std::to_string(k)).substitute(cremona, ring_x());
    CHECK(twice == x(1) * x(2) * x(3) * x(k));
  }
}

TEST_CASE("the 20 action-table cells verify with recorded factors") {
  ActionTableReport rep = verify_action_table();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  REQUIRE(rep.cells.size() == 20);

  auto cell = [&](int g, int f) -> const ActionTableCell& {
    for (const auto& c : rep.cells)
      if (c.gen_index == g && c.triple_index == f) return c;
    throw std::logic_error("missing cell");
  };
  // tau=(1,2) on v is an exact equality
  CHECK(cell(0, 0).factor == "1");
  // tau=(4,5) maps t to -1 times s
  CHECK(cell(3, 3).factor == "-1");
  // the Cremona rows for v, w, z pick up a coordinate factor
  CHECK(cell(3, 0).factor == "x3");
  CHECK(cell(3, 1).factor == "x1");
  CHECK(cell(3, 2).factor == "x2");
}

TEST_CASE("equation generation diagram") {
  DiagramReport rep = generate_equations_diagram();
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.ok);
  CHECK(rep.steps.size() == 9);
  CHECK(rep.steps.front() == "1 -(3,4)-> 4");

  // the first step lands on minus equation 4 exactly
  std::map<std::string, MPoly> sub;
  {
    // tau = (3,4): v -> (t2,t1,-t3), w -> (w3,w2,w1), z -> (-z1,z3,z2),
    //              t -> (v2,v1,-v3), s -> (s2,s1,-s3)
    sub.emplace("v1", m5("t2"));
    sub.emplace("v2", m5("t1"));
    sub.emplace("v3", -m5("t3"));
    sub.emplace("w1", m5("w3"));
    sub.emplace("w2", m5("w2"));
    sub.emplace("w3", m5("w1"));
    sub.emplace("z1", -m5("z1"));
    sub.emplace("z2", m5("z3"));
    sub.emplace("z3", m5("z2"));
    sub.emplace("t1", m5("v2"));
    sub.emplace("t2", m5("v1"));
    sub.emplace("t3", -m5("v3"));
    sub.emplace("s1", m5("s2"));
    sub.emplace("s2", m5("s1"));
    sub.emplace("s3", -m5("s3"));
  }
  MPoly image = ten_equations()[0].form.substitute(sub, ring_m5());
  CHECK(image == -ten_equations()[3].form);
}

TEST_CASE("equations are trilinear with distinct signatures") {
  std::set<std::array<int, 3>> sigs;
  for (const BiEquation& eq : ten_equations()) {
    sigs.insert(eq.factors);
    CHECK(eq.form.degree() == 3);
    CHECK(eq.form.is_homogeneous());
  }
  CHECK(sigs.size() == 10);
}
