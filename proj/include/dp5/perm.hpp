#ifndef DP5_PERM_HPP
#define DP5_PERM_HPP

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace dp5 {

// A permutation of {1,...,5}. Composition convention throughout the project:
// (a.compose(b))(i) = a(b(i)).
class Perm {
 public:
  Perm() : img_{1, 2, 3, 4, 5} {}

  static Perm from_images(const std::array<int, 5>& images);
  static Perm transposition(int a, int b);
  static Perm parse(const std::string& cycles);  // "(1,2)(3,4)" or "id"

  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  Perm compose(const Perm& o) const;
  Perm inverse() const;
  int sign() const;
  bool is_identity() const { return *this == Perm(); }
  std::string to_cycles() const;

  const std::array<int, 5>& images() const { return img_; }
  auto operator<=>(const Perm&) const = default;

 private:
  std::array<int, 5> img_;
};

// All 120 permutations, sorted by image arrays (deterministic order).
const std::vector<Perm>& all_perms();

// (1,2), (2,3), (3,4), (4,5)
const std::array<Perm, 4>& adjacent_transpositions();

// Word in generator indices 0..3 with p = t[w0] ∘ t[w1] ∘ ... ∘ t[w_last].
std::vector<int> adjacent_word(const Perm& p);
// Same contract via a different algorithm (factor the inverse, reverse).
std::vector<int> adjacent_word_alt(const Perm& p);

Perm compose_word(const std::vector<int>& word);

// Descending multiset of cycle lengths, e.g. {2,2,1,...} padded with zeros.
std::array<int, 5> cycle_type(const Perm& p);

struct ConjClasses {
  std::array<Perm, 7> reps;   // id,(1,2),(1,2)(3,4),(1,2,3),(1,2,3,4),(1,2,3,4,5),(1,2,3)(4,5)
  std::array<int, 7> sizes;   // computed by enumerating all 120 permutations
};
const ConjClasses& conj_classes();

int classify(const Perm& p);  // 0..6, index of the conjugate representative

// Subgroup generated by `gens`, as a sorted vector.
std::vector<Perm> group_closure(const std::vector<Perm>& gens);

}  // namespace dp5

#endif
