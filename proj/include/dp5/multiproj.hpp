#ifndef DP5_MULTIPROJ_HPP
#define DP5_MULTIPROJ_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dp5/mpoly.hpp"

namespace dp5 {

// The five coordinate triples of the embedding Y -> L3 x L1 x L2 x L4 x L5,
// each a triple of homogeneous plane polynomials with c1 - c2 + c3 = 0.
struct Parametrization {
  // order matches the M5 ring: v, w, z, t, s
  std::array<std::array<MPoly, 3>, 5> triples;
  std::array<MPoly, 3> y;  // y1 = x3-x2, y2 = x1-x3, y3 = x2-x1
};

const Parametrization& parametrization();

// One of the ten trilinear equations, with the 3-subset of factors it uses.
struct BiEquation {
  int index = 0;           // 1..10, the numbering of the statement
  MPoly form;              // in the M5 ring
  std::array<int, 3> factors;  // indices into (v,w,z,t,s) = (0..4)
};

const std::array<BiEquation, 10>& ten_equations();

// substitution M5 -> X given by the parametrization
MPoly parametrize(const MPoly& m5poly);

struct TenEquationsReport {
  bool ok = true;
  std::vector<std::string> failures;
};
TenEquationsReport verify_ten_equations();

struct HilbertBurchReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::array<MPoly, 4> minors;  // by deleted row 0..3, in the X ring
};
HilbertBurchReport verify_hilbert_burch();

// Substitution on the plane realizing an adjacent transposition: linear for
// (1,2),(2,3),(3,4) and the Cremona map for (4,5).
std::map<std::string, MPoly> birational_action(int gen_index);

struct ActionTableCell {
  int gen_index = 0;     // 0..3 for (1,2),(2,3),(3,4),(4,5)
  int triple_index = 0;  // 0..4 for v,w,z,t,s
  bool ok = false;
  std::string factor;    // proportionality factor as a polynomial (or 1/poly)
};

struct ActionTableReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<ActionTableCell> cells;  // all 20
};
ActionTableReport verify_action_table();

struct DiagramReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> steps;  // "1 -(3,4)-> 4" etc.
};
// Reproduces equations 2..10 from equation 1 by the table substitutions.
DiagramReport generate_equations_diagram();

}  // namespace dp5

#endif
