#ifndef DP5_RATIONAL_HPP
#define DP5_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace dp5 {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

// Exact rational scalar, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Normalizing constructor; accepts negative or non-reduced denominators.
inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num) / Rational(den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Bit length of the larger of |numerator| and denominator; pivot-size heuristic.
inline std::size_t bit_size(const Rational& r) {
  if (r == 0) return 0;
  Integer n = abs(numerator(r));
  Integer d = denominator(r);
  std::size_t bn = msb(n) + 1;
  std::size_t bd = msb(d) + 1;
  return bn > bd ? bn : bd;
}

inline std::string rational_str(const Rational& r) { return r.str(); }

// Accepts "a", "-a", "a/b".
inline Rational parse_rational(const std::string& s) { return Rational(s); }

}  // namespace dp5

#endif
