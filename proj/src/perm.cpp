#include "dp5/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dp5 {

Perm Perm::from_images(const std::array<int, 5>& images) {
  std::array<bool, 5> seen{};
  for (int v : images) {
    if (v < 1 || v > 5) throw std::invalid_argument("permutation image out of range");
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("permutation images not a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Perm p;
  p.img_ = images;
  return p;
}

Perm Perm::transposition(int a, int b) {
  if (a < 1 || a > 5 || b < 1 || b > 5 || a == b)
    throw std::invalid_argument("bad transposition");
  Perm p;
  std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Perm Perm::parse(const std::string& cycles) {
  std::string s;
  for (char c : cycles)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "id" || s == "()" || s == "e") return Perm();
  Perm acc;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    if (s[pos] != '(') throw std::invalid_argument("cycle parse: expected '(' in " + cycles);
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("cycle parse: missing ')'");
    std::vector<int> cyc;
    std::size_t p = pos + 1;
    while (p < close) {
      std::size_t q = p;
      while (q < close && s[q] != ',' && s[q] != ' ') ++q;
      if (q == p) throw std::invalid_argument("cycle parse: empty entry");
      cyc.push_back(std::stoi(s.substr(p, q - p)));
      p = (q < close) ? q + 1 : q;
    }
    if (cyc.size() < 2) throw std::invalid_argument("cycle parse: cycle too short");
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size()) throw std::invalid_argument("cycle parse: repeated entry");
    std::array<int, 5> img{1, 2, 3, 4, 5};
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || from > 5) throw std::invalid_argument("cycle parse: entry out of range");
      img[static_cast<std::size_t>(from - 1)] = to;
    }
    // cycles written left to right compose left to right
    acc = acc.compose(Perm::from_images(img));
    any = true;
    pos = close + 1;
  }
  if (!any) throw std::invalid_argument("cycle parse: no cycles in " + cycles);
  return acc;
}

Perm Perm::compose(const Perm& o) const {
  Perm p;
  for (int i = 1; i <= 5; ++i)
    p.img_[static_cast<std::size_t>(i - 1)] = (*this)(o(i));
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  for (int i = 1; i <= 5; ++i) p.img_[static_cast<std::size_t>((*this)(i)-1)] = i;
  return p;
}

int Perm::sign() const {
  int inv = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      if ((*this)(i) > (*this)(j)) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::string Perm::to_cycles() const {
  std::array<bool, 5> done{};
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= 5; ++i) {
    if (done[static_cast<std::size_t>(i - 1)] || (*this)(i) == i) continue;
    os << "(";
    int j = i;
    bool first = true;
    while (!done[static_cast<std::size_t>(j - 1)]) {
      done[static_cast<std::size_t>(j - 1)] = true;
      if (!first) os << ",";
      os << j;
      first = false;
      j = (*this)(j);
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "id";
}

const std::vector<Perm>& all_perms() {
  static const std::vector<Perm> perms = [] {
    std::array<int, 5> img{1, 2, 3, 4, 5};
    std::vector<Perm> v;
    do {
      v.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(v.begin(), v.end());
    return v;
  }();
  return perms;
}

const std::array<Perm, 4>& adjacent_transpositions() {
  static const std::array<Perm, 4> t = {Perm::transposition(1, 2), Perm::transposition(2, 3),
                                        Perm::transposition(3, 4), Perm::transposition(4, 5)};
  return t;
}

std::vector<int> adjacent_word(const Perm& p) {
  // bubble sort the one-line notation by right multiplications, then reverse
  std::array<int, 5> img = p.images();
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < 5; ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        swaps.push_back(static_cast<int>(i));
        moved = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::vector<int> adjacent_word_alt(const Perm& p) {
  std::vector<int> w = adjacent_word(p.inverse());
  std::reverse(w.begin(), w.end());
  return w;
}

Perm compose_word(const std::vector<int>& word) {
  Perm acc;
  for (int g : word) acc = acc.compose(adjacent_transpositions()[static_cast<std::size_t>(g)]);
  return acc;
}

std::array<int, 5> cycle_type(const Perm& p) {
  std::array<bool, 5> done{};
  std::array<int, 5> lens{};
  std::size_t n = 0;
  for (int i = 1; i <= 5; ++i) {
    if (done[static_cast<std::size_t>(i - 1)]) continue;
    int len = 0, j = i;
    while (!done[static_cast<std::size_t>(j - 1)]) {
      done[static_cast<std::size_t>(j - 1)] = true;
      ++len;
      j = p(j);
    }
    lens[n++] = len;
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return lens;
}

const ConjClasses& conj_classes() {
  static const ConjClasses cc = [] {
    ConjClasses c;
    c.reps = {Perm::parse("id"),          Perm::parse("(1,2)"),
              Perm::parse("(1,2)(3,4)"),  Perm::parse("(1,2,3)"),
              Perm::parse("(1,2,3,4)"),   Perm::parse("(1,2,3,4,5)"),
              Perm::parse("(1,2,3)(4,5)")};
    c.sizes.fill(0);
    for (const Perm& g : all_perms()) {
      std::array<int, 5> t = cycle_type(g);
      int hit = -1;
      for (int k = 0; k < 7; ++k)
        if (t == cycle_type(c.reps[static_cast<std::size_t>(k)])) {
          hit = k;
          break;
        }
      if (hit < 0) throw std::logic_error("conjugacy class table incomplete");
      ++c.sizes[static_cast<std::size_t>(hit)];
    }
    int total = 0;
    for (int s : c.sizes) total += s;
    if (total != 120) throw std::logic_error("conjugacy class sizes do not sum to 120");
    return c;
  }();
  return cc;
}

int classify(const Perm& p) {
  std::array<int, 5> t = cycle_type(p);
  const ConjClasses& cc = conj_classes();
  for (int k = 0; k < 7; ++k)
    if (t == cycle_type(cc.reps[static_cast<std::size_t>(k)])) return k;
  throw std::logic_error("unclassifiable permutation");
}

std::vector<Perm> group_closure(const std::vector<Perm>& gens) {
  std::set<Perm> elems{Perm()};
  std::vector<Perm> frontier{Perm()};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& h : frontier)
      for (const Perm& g : gens) {
        Perm m = g.compose(h);
        if (elems.insert(m).second) next.push_back(m);
      }
    frontier = std::move(next);
  }
  return std::vector<Perm>(elems.begin(), elems.end());
}

}  // namespace dp5
