#include "dp5/multiproj.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "dp5/perm.hpp"

namespace dp5 {

namespace {

MPoly x(int k) { return MPoly::variable(ring_x(), static_cast<std::size_t>(k - 1)); }

const char* factor_names[5] = {"v", "w", "z", "t", "s"};

std::string m5var(int factor, int coord) {
  return std::string(factor_names[factor]) + std::to_string(coord + 1);
}

Parametrization build_parametrization() {
  Parametrization P;
  P.y = {x(3) - x(2), x(1) - x(3), x(2) - x(1)};
  P.triples[0] = {x(1), x(2), P.y[2]};                                  // v
  P.triples[1] = {x(2), x(3), P.y[0]};                                  // w
  P.triples[2] = {x(3), x(1), P.y[1]};                                  // z
  P.triples[3] = {P.y[0], -P.y[1], P.y[2]};                             // t
  P.triples[4] = {x(1) * P.y[0], -(x(2) * P.y[1]), x(3) * P.y[2]};      // s

  if (!(P.y[0] + P.y[1] + P.y[2]).is_zero())
    throw std::logic_error("y1 + y2 + y3 != 0");
  if (!(x(1) * P.y[0] + x(2) * P.y[1] + x(3) * P.y[2]).is_zero())
    throw std::logic_error("x1 y1 + x2 y2 + x3 y3 != 0");
  for (const auto& tr : P.triples)
    if (!(tr[0] - tr[1] + tr[2]).is_zero())
      throw std::logic_error("a coordinate triple violates its line relation");
  return P;
}

}  // namespace

const Parametrization& parametrization() {
  static const Parametrization P = build_parametrization();
  return P;
}

namespace {

MPoly mv(int factor, int coord) { return MPoly::variable(ring_m5(), m5var(factor, coord)); }

std::array<BiEquation, 10> build_equations() {
  auto v = [](int c) { return mv(0, c - 1); };
  auto w = [](int c) { return mv(1, c - 1); };
  auto z = [](int c) { return mv(2, c - 1); };
  auto t = [](int c) { return mv(3, c - 1); };
  auto s = [](int c) { return mv(4, c - 1); };
  std::array<BiEquation, 10> eq;
  eq[0] = {1, v(1) * w(1) * z(1) - v(2) * w(2) * z(2), {0, 1, 2}};
  eq[1] = {2, v(3) * w(1) * t(1) - v(2) * w(3) * t(3), {0, 1, 3}};
  eq[2] = {3, v(1) * z(3) * t(3) + v(3) * z(2) * t(2), {0, 2, 3}};
  eq[3] = {4, w(3) * z(1) * t(2) + w(2) * z(3) * t(1), {1, 2, 3}};
  eq[4] = {5, t(1) * v(1) * s(2) - t(2) * v(2) * s(1), {0, 3, 4}};
  eq[5] = {6, t(1) * z(2) * s(3) - t(3) * z(1) * s(1), {2, 3, 4}};
  eq[6] = {7, t(3) * w(2) * s(2) - t(2) * w(1) * s(3), {1, 3, 4}};
  eq[7] = {8, v(3) * w(2) * s(1) - v(1) * w(3) * s(3), {0, 1, 4}};
  eq[8] = {9, v(2) * z(3) * s(3) + v(3) * z(1) * s(2), {0, 2, 4}};
  eq[9] = {10, w(3) * z(2) * s(2) + w(1) * z(3) * s(1), {1, 2, 4}};
  return eq;
}

}  // namespace

const std::array<BiEquation, 10>& ten_equations() {
  static const std::array<BiEquation, 10> eq = build_equations();
  return eq;
}

MPoly parametrize(const MPoly& m5poly) {
  static const std::map<std::string, MPoly> images = [] {
    const Parametrization& P = parametrization();
    std::map<std::string, MPoly> m;
    for (int f = 0; f < 5; ++f)
      for (int c = 0; c < 3; ++c)
        m.emplace(m5var(f, c), P.triples[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)]);
    return m;
  }();
  return m5poly.substitute(images, ring_x());
}

TenEquationsReport verify_ten_equations() {
  TenEquationsReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  std::set<std::array<int, 3>> signatures;
  for (const BiEquation& eq : ten_equations()) {
    MPoly residual = parametrize(eq.form);
    if (!residual.is_zero())
      fail("equation " + std::to_string(eq.index) + " has residual " + residual.str());
    signatures.insert(eq.factors);

    // trilinear: every term uses each involved factor exactly once
    for (const auto& [e, c] : eq.form.terms()) {
      (void)c;
      std::array<int, 5> per_factor{};
      for (std::size_t k = 0; k < 15; ++k) per_factor[k / 3] += e[k];
      for (int f = 0; f < 5; ++f) {
        bool involved =
            eq.factors[0] == f || eq.factors[1] == f || eq.factors[2] == f;
        if (per_factor[static_cast<std::size_t>(f)] != (involved ? 1 : 0))
          fail("equation " + std::to_string(eq.index) + " is not trilinear");
      }
    }
  }
  if (signatures.size() != 10) fail("factor signatures are not the 10 distinct 3-subsets");
  return rep;
}

HilbertBurchReport verify_hilbert_burch() {
  HilbertBurchReport rep;
  const Parametrization& P = parametrization();
  const MPoly& y1 = P.y[0];
  const MPoly& y2 = P.y[1];

  // rows of the 4x3 matrix after substituting the parametrization,
  // with (t1,t2) = (t'_1, -t'_2)
  std::array<std::array<MPoly, 3>, 4> m = {{
      {y2, -y1, y1 + y2},
      {x(1), x(2), MPoly::zero(ring_x())},
      {x(3), MPoly::zero(ring_x()), x(2)},
      {MPoly::zero(ring_x()), -x(3), x(1)},
  }};

  auto det3 = [](const std::array<MPoly, 3>& a, const std::array<MPoly, 3>& b,
                 const std::array<MPoly, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
  };

  for (int skip = 0; skip < 4; ++skip) {
    std::vector<std::size_t> rows;
    for (int r = 0; r < 4; ++r)
      if (r != skip) rows.push_back(static_cast<std::size_t>(r));
    MPoly minor = det3(m[rows[0]], m[rows[1]], m[rows[2]]);
    rep.minors[static_cast<std::size_t>(skip)] = minor;
    if (!minor.is_zero()) {
      rep.ok = false;
      std::ostringstream os;
      os << "minor on rows {";
      for (std::size_t k = 0; k < 3; ++k) os << (k ? "," : "") << rows[k] + 1;
      os << "} equals " << minor.str();
      rep.failures.push_back(os.str());
    }
  }
  return rep;
}

std::map<std::string, MPoly> birational_action(int gen_index) {
  switch (gen_index) {
    case 0:
      return {{"x1", x(2)}, {"x2", x(1)}, {"x3", x(3)}};
    case 1:
      return {{"x1", x(1)}, {"x2", x(3)}, {"x3", x(2)}};
    case 2:
      return {{"x1", x(1) - x(3)}, {"x2", x(2) - x(3)}, {"x3", -x(3)}};
    case 3:
      return {{"x1", x(2) * x(3)}, {"x2", x(1) * x(3)}, {"x3", x(1) * x(2)}};
    default:
      throw std::invalid_argument("generator index out of range");
  }
}

namespace {

struct CellTarget {
  int factor;  // 0..4
  int coord;   // 0..2
  int sign;    // +-1
};

// tau(v), tau(w), tau(z), tau(t), tau(s) for tau = (1,2),(2,3),(3,4),(4,5)
const CellTarget table[4][5][3] = {
    // (1,2)
    {{{0, 1, 1}, {0, 0, 1}, {0, 2, -1}},
     {{2, 1, 1}, {2, 0, 1}, {2, 2, -1}},
     {{1, 1, 1}, {1, 0, 1}, {1, 2, -1}},
     {{3, 1, 1}, {3, 0, 1}, {3, 2, -1}},
     {{4, 1, 1}, {4, 0, 1}, {4, 2, -1}}},
    // (2,3)
    {{{2, 1, 1}, {2, 0, 1}, {2, 2, -1}},
     {{1, 1, 1}, {1, 0, 1}, {1, 2, -1}},
     {{0, 1, 1}, {0, 0, 1}, {0, 2, -1}},
     {{3, 0, -1}, {3, 2, 1}, {3, 1, 1}},
     {{4, 0, -1}, {4, 2, 1}, {4, 1, 1}}},
    // (3,4)
    {{{3, 1, 1}, {3, 0, 1}, {3, 2, -1}},
     {{1, 2, 1}, {1, 1, 1}, {1, 0, 1}},
     {{2, 0, -1}, {2, 2, 1}, {2, 1, 1}},
     {{0, 1, 1}, {0, 0, 1}, {0, 2, -1}},
     {{4, 1, 1}, {4, 0, 1}, {4, 2, -1}}},
    // (4,5)
    {{{0, 1, 1}, {0, 0, 1}, {0, 2, -1}},
     {{1, 1, 1}, {1, 0, 1}, {1, 2, -1}},
     {{2, 1, 1}, {2, 0, 1}, {2, 2, -1}},
     {{4, 0, 1}, {4, 1, 1}, {4, 2, 1}},
     {{3, 0, 1}, {3, 1, 1}, {3, 2, 1}}},
};

}  // namespace

ActionTableReport verify_action_table() {
  ActionTableReport rep;
  const Parametrization& P = parametrization();
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  for (int g = 0; g < 4; ++g) {
    std::map<std::string, MPoly> phi = birational_action(g);
    for (int f = 0; f < 5; ++f) {
      ActionTableCell cell;
      cell.gen_index = g;
      cell.triple_index = f;

      std::array<MPoly, 3> lhs, rhs;
      for (int c = 0; c < 3; ++c) {
        lhs[static_cast<std::size_t>(c)] =
            P.triples[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)].substitute(
                phi, ring_x());
        const CellTarget& t = table[g][f][c];
        MPoly target = P.triples[static_cast<std::size_t>(t.factor)]
                                [static_cast<std::size_t>(t.coord)];
        rhs[static_cast<std::size_t>(c)] = t.sign < 0 ? -target : target;
      }

      bool proportional = true;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          if (lhs[static_cast<std::size_t>(a)] * rhs[static_cast<std::size_t>(b)] !=
              lhs[static_cast<std::size_t>(b)] * rhs[static_cast<std::size_t>(a)])
            proportional = false;
      bool lhs_zero = lhs[0].is_zero() && lhs[1].is_zero() && lhs[2].is_zero();
      cell.ok = proportional && !lhs_zero;
      if (!cell.ok)
        fail(std::string("table cell tau=") +
             adjacent_transpositions()[static_cast<std::size_t>(g)].to_cycles() + ", " +
             factor_names[f] + "-row fails proportionality");

      // record the factor: lhs = factor * rhs where possible
      for (int c = 0; c < 3 && cell.ok; ++c) {
        if (rhs[static_cast<std::size_t>(c)].is_zero()) continue;
        auto q = lhs[static_cast<std::size_t>(c)].divide_exact(rhs[static_cast<std::size_t>(c)]);
        if (q) {
          cell.factor = (*q).str();
        } else {
          auto inv = rhs[static_cast<std::size_t>(c)].divide_exact(lhs[static_cast<std::size_t>(c)]);
          cell.factor = inv ? "1/(" + (*inv).str() + ")" : "nonpolynomial";
        }
        break;
      }
      rep.cells.push_back(cell);
    }
  }
  return rep;
}

namespace {

// table substitution on the M5 ring for one generator
std::map<std::string, MPoly> table_substitution(int g) {
  std::map<std::string, MPoly> images;
  for (int f = 0; f < 5; ++f)
    for (int c = 0; c < 3; ++c) {
      const CellTarget& t = table[g][f][c];
      MPoly target = mv(t.factor, t.coord);
      images.emplace(m5var(f, c), t.sign < 0 ? -target : target);
    }
  return images;
}

bool proportional_scalar(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  const Rational la = a.terms().begin()->second;
  const Rational lb = b.terms().begin()->second;
  return a.scaled(lb) == b.scaled(la);
}

}  // namespace

DiagramReport generate_equations_diagram() {
  DiagramReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  // edges of the generation diagram: (source eq, generator, target eq)
  const int edges[9][3] = {{1, 2, 4}, {4, 3, 10}, {4, 1, 2}, {2, 0, 3}, {3, 3, 9},
                           {9, 2, 6}, {6, 1, 5},  {10, 1, 8}, {8, 2, 7}};

  auto eq_by_index = [](int idx) -> const BiEquation& {
    for (const BiEquation& e : ten_equations())
      if (e.index == idx) return e;
    throw std::logic_error("no such equation");
  };

  std::set<int> generated{1};
  for (const auto& e : edges) {
    const BiEquation& src = eq_by_index(e[0]);
    const BiEquation& dst = eq_by_index(e[2]);
    MPoly image = src.form.substitute(table_substitution(e[1]), ring_m5());
    std::ostringstream os;
    os << e[0] << " -" << adjacent_transpositions()[static_cast<std::size_t>(e[1])].to_cycles()
       << "-> " << e[2];
    rep.steps.push_back(os.str());
    if (!proportional_scalar(image, dst.form)) {
      fail("diagram step " + os.str() + " does not reproduce the target equation");
      continue;
    }
    if (!generated.count(e[0]))
      fail("diagram step " + os.str() + " starts from an equation not yet generated");
    generated.insert(e[2]);
  }
  if (generated.size() != 10) fail("the diagram does not reproduce all ten equations");
  return rep;
}

}  // namespace dp5
