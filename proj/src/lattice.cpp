#include "dp5/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dp5 {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  DivisorClass r;
  for (std::size_t k = 0; k < 5; ++k) r.c[k] = c[k] + o.c[k];
  return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  DivisorClass r;
  for (std::size_t k = 0; k < 5; ++k) r.c[k] = c[k] - o.c[k];
  return r;
}

DivisorClass DivisorClass::operator*(long long n) const {
  DivisorClass r;
  for (std::size_t k = 0; k < 5; ++k) r.c[k] = c[k] * n;
  return r;
}

long long DivisorClass::dot(const DivisorClass& o) const {
  long long d = c[0] * o.c[0];
  for (std::size_t k = 1; k < 5; ++k) d -= c[k] * o.c[k];
  return d;
}

std::string DivisorClass::str() const {
  std::ostringstream os;
  os << c[0] << "H";
  for (std::size_t k = 1; k < 5; ++k) {
    if (c[k] == 0) continue;
    os << (c[k] > 0 ? "+" : "-");
    if (std::abs(c[k]) != 1) os << std::abs(c[k]);
    os << "E" << k;
  }
  return os.str();
}

DivisorClass class_H() { return DivisorClass{{1, 0, 0, 0, 0}}; }

DivisorClass class_E(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("E index out of range");
  DivisorClass d;
  d.c[static_cast<std::size_t>(i)] = 1;
  return d;
}

DivisorClass class_K() { return DivisorClass{{-3, 1, 1, 1, 1}}; }
DivisorClass class_minus_K() { return DivisorClass{{3, -1, -1, -1, -1}}; }

LinePair make_pair_label(int a, int b) {
  if (a == b || a < 1 || b < 1 || a > 5 || b > 5) throw std::invalid_argument("bad line pair");
  return a < b ? LinePair{a, b} : LinePair{b, a};
}

const std::vector<LinePair>& all_line_pairs() {
  static const std::vector<LinePair> ps = [] {
    std::vector<LinePair> v;
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) v.push_back({a, b});
    return v;
  }();
  return ps;
}

DivisorClass line_class(const LinePair& p) {
  if (p.second == 5) return class_E(p.first);
  DivisorClass d = class_H();
  for (int i = 1; i <= 4; ++i)
    if (i != p.first && i != p.second) d = d - class_E(i);
  return d;
}

std::string pair_str(const LinePair& p) {
  return std::to_string(p.first) + std::to_string(p.second);
}

bool pairs_disjoint(const LinePair& a, const LinePair& b) {
  return a.first != b.first && a.first != b.second && a.second != b.first &&
         a.second != b.second;
}

long long rr_chi(const DivisorClass& d) {
  long long t = d.dot(d - class_K());
  if (t % 2 != 0) throw std::logic_error("rr_chi: odd self-pairing");
  return 1 + t / 2;
}

PetersenReport petersen_checks() {
  PetersenReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  const auto& pairs = all_line_pairs();
  for (const LinePair& a : pairs)
    for (const LinePair& b : pairs) {
      long long got = line_class(a).dot(line_class(b));
      long long want = a == b ? -1 : (pairs_disjoint(a, b) ? 1 : 0);
      if (got != want)
        fail("E" + pair_str(a) + ".E" + pair_str(b) + " = " + std::to_string(got) +
             ", expected " + std::to_string(want));
    }

  // each line is a (-1)-curve: E^2 = E.K = -1
  for (const LinePair& a : pairs) {
    if (line_class(a).dot(class_K()) != -1) fail("E" + pair_str(a) + ".K != -1");
  }

  // five conic bundles; the three singular fibres of each agree in the lattice
  for (int i = 1; i <= 5; ++i) {
    std::vector<int> rest;
    for (int k = 1; k <= 5; ++k)
      if (k != i) rest.push_back(k);
    std::vector<DivisorClass> fibres;
    // partitions of rest into two pairs
    const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& sp : splits) {
      DivisorClass f = line_class(make_pair_label(rest[static_cast<std::size_t>(sp[0])],
                                                  rest[static_cast<std::size_t>(sp[1])])) +
                       line_class(make_pair_label(rest[static_cast<std::size_t>(sp[2])],
                                                  rest[static_cast<std::size_t>(sp[3])]));
      fibres.push_back(f);
    }
    if (!(fibres[0] == fibres[1] && fibres[1] == fibres[2]))
      fail("singular fibres of fibration " + std::to_string(i) + " are not linearly equivalent");
    if (fibres[0].dot(fibres[0]) != 0)
      fail("fibre class of fibration " + std::to_string(i) + " has nonzero square");
  }

  rep.minus_k_squared = class_minus_K().dot(class_minus_K());
  if (rep.minus_k_squared != 5) fail("(-K)^2 != 5");

  // graph shape: 3-regular, 15 edges, girth 5, disjointness adjacency
  int edges = 0;
  for (const LinePair& a : pairs) {
    int deg = 0;
    for (const LinePair& b : pairs) {
      if (a == b) continue;
      bool adj = line_class(a).dot(line_class(b)) == 1;
      if (adj != pairs_disjoint(a, b)) fail("intersection adjacency differs from Kneser adjacency");
      if (adj) ++deg;
    }
    if (deg != 3) fail("vertex " + pair_str(a) + " has degree " + std::to_string(deg));
    edges += deg;
  }
  if (edges != 30) fail("edge count != 15");
  // girth: no triangles, no 4-cycles, at least one 5-cycle
  auto adjacent = [&](const LinePair& a, const LinePair& b) { return pairs_disjoint(a, b); };
  for (const LinePair& a : pairs)
    for (const LinePair& b : pairs)
      for (const LinePair& c : pairs) {
        if (a < b && b < c && adjacent(a, b) && adjacent(b, c) && adjacent(a, c))
          fail("triangle found");
      }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (adjacent(pairs[i], pairs[j])) continue;
      int common = 0;
      for (const LinePair& m : pairs)
        if (adjacent(pairs[i], m) && adjacent(pairs[j], m)) ++common;
      if (common > 1) fail("4-cycle found");
    }
  return rep;
}

std::vector<LinePair> divisor_of_section(const SectionLabel& label) {
  const Sections& S = sections();
  MPoly f = S.label_poly(SectionLabel{label.is_sigma, label.i, label.j, 1});

  // the six quadrangle lines and the pair {h,k} of their strict transforms
  struct Line {
    MPoly poly;
    LinePair pair;  // class of strict transform is E_{pair}
  };
  RingPtr X = S.X;
  auto xv = [&](int k) { return MPoly::variable(X, static_cast<std::size_t>(k - 1)); };
  const std::vector<Line> lines = {
      {xv(1), make_pair_label(1, 4)},          // through p2, p3
      {xv(2), make_pair_label(2, 4)},          // through p1, p3
      {xv(3), make_pair_label(3, 4)},          // through p1, p2
      {xv(1) - xv(2), make_pair_label(1, 2)},  // through p3, p4
      {xv(2) - xv(3), make_pair_label(2, 3)},  // through p1, p4
      {xv(3) - xv(1), make_pair_label(1, 3)},  // through p2, p4
  };

  std::vector<LinePair> out;
  MPoly rest = f;
  for (const Line& L : lines) {
    while (true) {
      auto q = rest.divide_exact(L.poly);
      if (!q) break;
      rest = *q;
      out.push_back(L.pair);
    }
  }
  if (rest.degree() != 0)
    throw std::logic_error("section " + label.str() + " does not factor into quadrangle lines");

  for (int i = 1; i <= 4; ++i) {
    auto ord = vanishing_order(f, S.points[static_cast<std::size_t>(i - 1)]);
    if (!ord) throw std::logic_error("zero section");
    for (int k = 1; k < *ord; ++k) out.push_back(make_pair_label(i, 5));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string petersen_dot(const std::pair<int, int>* highlight_ij) {
  std::set<LinePair> solid, dashed;
  if (highlight_ij) {
    SectionLabel s{false, highlight_ij->first, highlight_ij->second, 1};
    SectionLabel sg{true, highlight_ij->first, highlight_ij->second, 1};
    for (const LinePair& p : divisor_of_section(s)) solid.insert(p);
    for (const LinePair& p : divisor_of_section(sg)) dashed.insert(p);
  }
  std::ostringstream os;
  os << "graph petersen {\n";
  for (const LinePair& p : all_line_pairs()) {
    os << "  \"" << pair_str(p) << "\"";
    if (solid.count(p))
      os << " [penwidth=2]";
    else if (dashed.count(p))
      os << " [style=dashed]";
    os << ";\n";
  }
  for (std::size_t i = 0; i < all_line_pairs().size(); ++i)
    for (std::size_t j = i + 1; j < all_line_pairs().size(); ++j) {
      const LinePair& a = all_line_pairs()[i];
      const LinePair& b = all_line_pairs()[j];
      if (!pairs_disjoint(a, b)) continue;
      os << "  \"" << pair_str(a) << "\" -- \"" << pair_str(b) << "\"";
      bool in_s = solid.count(a) && solid.count(b);
      bool in_sg = dashed.count(a) && dashed.count(b);
      if (in_s)
        os << " [penwidth=2]";
      else if (in_sg)
        os << " [style=dashed]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace dp5
