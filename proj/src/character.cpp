#include "dp5/character.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dp5 {

CharVector CharVector::operator+(const CharVector& o) const {
  CharVector r;
  for (int k = 0; k < 7; ++k) r.v[k] = v[k] + o.v[k];
  return r;
}

CharVector CharVector::operator-(const CharVector& o) const {
  CharVector r;
  for (int k = 0; k < 7; ++k) r.v[k] = v[k] - o.v[k];
  return r;
}

CharVector CharVector::operator*(const CharVector& o) const {
  CharVector r;
  for (int k = 0; k < 7; ++k) r.v[k] = v[k] * o.v[k];
  return r;
}

std::string CharVector::str() const {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < 7; ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}

const std::array<CharVector, 7>& character_table() {
  static const std::array<CharVector, 7> t = {{
      {{1, 1, 1, 1, 1, 1, 1}},        // chi_1 trivial
      {{1, -1, 1, 1, -1, 1, -1}},     // chi_2 sign
      {{4, -2, 0, 1, 0, -1, 1}},      // chi_3
      {{4, 2, 0, 1, 0, -1, -1}},      // chi_4
      {{5, 1, 1, -1, -1, 0, 1}},      // chi_5
      {{5, -1, 1, -1, 1, 0, -1}},     // chi_6
      {{6, 0, -2, 0, 0, 1, 0}},       // chi_7
  }};
  return t;
}

Rational inner_product(const CharVector& a, const CharVector& b) {
  const ConjClasses& cc = conj_classes();
  Rational acc(0);
  for (int k = 0; k < 7; ++k)
    acc += Rational(cc.sizes[static_cast<std::size_t>(k)]) * Rational(a.v[k]) * Rational(b.v[k]);
  return acc / Rational(120);
}

int square_class(int k) {
  const ConjClasses& cc = conj_classes();
  const Perm& g = cc.reps[static_cast<std::size_t>(k)];
  return classify(g.compose(g));
}

CharVector wedge2_character(const CharVector& c) {
  CharVector r;
  for (int k = 0; k < 7; ++k) {
    long long x = c.v[k] * c.v[k] - c.v[square_class(k)];
    if (x % 2 != 0) throw std::logic_error("wedge2_character: odd intermediate value");
    r.v[k] = x / 2;
  }
  return r;
}

std::optional<std::array<long long, 7>> decompose(const CharVector& c, std::string* diagnostic) {
  std::array<long long, 7> m{};
  for (int k = 0; k < 7; ++k) {
    Rational ip = inner_product(c, character_table()[static_cast<std::size_t>(k)]);
    if (!is_integer(ip) || ip < 0) {
      if (diagnostic) {
        std::ostringstream os;
        os << "not a character: <c, chi_" << (k + 1) << "> = " << ip;
        *diagnostic = os.str();
      }
      return std::nullopt;
    }
    m[static_cast<std::size_t>(k)] = numerator(ip).convert_to<long long>();
  }
  return m;
}

CharVector coset_character(const std::vector<Perm>& subgroup_generators) {
  std::vector<Perm> H = group_closure(subgroup_generators);
  std::sort(H.begin(), H.end());
  if (120 % H.size() != 0) throw std::logic_error("subgroup order does not divide 120");

  // cosets gH, keyed by their sorted element list
  std::map<std::vector<Perm>, std::vector<Perm>> cosets;
  for (const Perm& g : all_perms()) {
    std::vector<Perm> coset;
    coset.reserve(H.size());
    for (const Perm& h : H) coset.push_back(g.compose(h));
    std::sort(coset.begin(), coset.end());
    cosets.emplace(coset, coset);
  }
  if (cosets.size() != 120 / H.size()) throw std::logic_error("coset count mismatch");

  const ConjClasses& cc = conj_classes();
  CharVector chi;
  for (int k = 0; k < 7; ++k) {
    const Perm& gamma = cc.reps[static_cast<std::size_t>(k)];
    long long fixed = 0;
    for (const auto& [key, coset] : cosets) {
      std::vector<Perm> moved;
      moved.reserve(coset.size());
      for (const Perm& x : coset) moved.push_back(gamma.compose(x));
      std::sort(moved.begin(), moved.end());
      if (moved == coset) ++fixed;
    }
    chi.v[k] = fixed;
  }
  return chi;
}

}  // namespace dp5
