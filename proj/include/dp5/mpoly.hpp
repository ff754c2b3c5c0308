#ifndef DP5_MPOLY_HPP
#define DP5_MPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dp5/rational.hpp"

namespace dp5 {

// A named ring of variables. Polynomials carry a pointer to their ring and
// refuse mixed-ring arithmetic.
struct VarRing {
  std::string name;
  std::vector<std::string> vars;

  std::size_t arity() const { return vars.size(); }
  int var_index(const std::string& v) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const VarRing>;

RingPtr make_ring(std::string name, std::vector<std::string> vars);

// The rings used throughout the project.
RingPtr ring_x();   // X  = (x1,x2,x3), the plane
RingPtr ring_y6();  // Y6 = (y12,y13,y21,y23,y31,y32), formal Sym(V)
RingPtr ring_m5();  // M5 = (v1..v3,w1..w3,z1..z3,t1..t3,s1..s3)

bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

// Graded lexicographic order on exponent vectors, leading term first:
// higher total degree wins, ties broken lexicographically in the ring's
// declared variable order. Used for canonical printing and for indexing
// coefficient-matrix columns.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// All exponent vectors of the given total degree, in TermOrder.
std::vector<Exponents> monomials_of_degree(std::size_t arity, int degree);

class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, TermOrder>;

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }
  static MPoly constant(RingPtr ring, const Rational& c);
  static MPoly variable(RingPtr ring, std::size_t index);
  static MPoly variable(RingPtr ring, const std::string& name);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  Rational coeff(const Exponents& e) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(const Rational& c) const;
  MPoly pow(unsigned n) const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  Rational eval(const std::vector<Rational>& point) const;

  // Ring homomorphism: every variable occurring in *this must have an image;
  // all images live in `target`.
  MPoly substitute(const std::map<std::string, MPoly>& images, const RingPtr& target) const;

  // Exact division; nullopt if *this is not a polynomial multiple of d.
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  std::string str() const;
  static MPoly parse(const RingPtr& ring, const std::string& text);

  void add_term(const Exponents& e, const Rational& c);  // accumulates, drops zeros

 private:
  void check_same_ring(const MPoly& o, const char* op) const;

  RingPtr ring_;
  TermMap terms_;
};

// Least total degree of a nonzero term of the local expansion of a
// homogeneous p at a projective point; nullopt means p is identically zero
// ("infinite order").
std::optional<int> vanishing_order(const MPoly& p, const std::vector<Rational>& point);

}  // namespace dp5

#endif
