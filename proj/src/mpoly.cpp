#include "dp5/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dp5 {

int VarRing::var_index(const std::string& v) const {
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (vars[k] == v) return static_cast<int>(k);
  return -1;
}

RingPtr make_ring(std::string name, std::vector<std::string> vars) {
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size())
    throw std::invalid_argument("duplicate variable name in ring " + name);
  auto r = std::make_shared<VarRing>();
  r->name = std::move(name);
  r->vars = std::move(vars);
  return r;
}

RingPtr ring_x() {
  static RingPtr r = make_ring("X", {"x1", "x2", "x3"});
  return r;
}

RingPtr ring_y6() {
  static RingPtr r = make_ring("Y6", {"y12", "y13", "y21", "y23", "y31", "y32"});
  return r;
}

RingPtr ring_m5() {
  static RingPtr r = make_ring("M5", {"v1", "v2", "v3", "w1", "w2", "w3", "z1", "z2", "z3",
                                      "t1", "t2", "t3", "s1", "s2", "s3"});
  return r;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->name == b->name && a->vars == b->vars;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic tie-break, larger exponent vector leads
}

std::vector<Exponents> monomials_of_degree(std::size_t arity, int degree) {
  std::vector<Exponents> out;
  Exponents cur(arity, 0);
  // enumerate recursively, then sort into TermOrder
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
    if (pos + 1 == arity) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur[pos] = k;
      rec(pos + 1, rem - k);
    }
    cur[pos] = 0;
  };
  if (arity == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(0, degree);
  std::sort(out.begin(), out.end(), TermOrder{});
  return out;
}

MPoly MPoly::constant(RingPtr ring, const Rational& c) {
  MPoly p(std::move(ring));
  if (c != 0) p.terms_.emplace(Exponents(p.ring_->arity(), 0), c);
  return p;
}

MPoly MPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw std::invalid_argument("variable index out of range");
  MPoly p(std::move(ring));
  Exponents e(p.ring_->arity(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MPoly MPoly::variable(RingPtr ring, const std::string& name) {
  int k = ring->var_index(name);
  if (k < 0) throw std::invalid_argument("no variable " + name + " in ring " + ring->name);
  return variable(std::move(ring), static_cast<std::size_t>(k));
}

int MPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);  // leading term has maximal degree
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Rational MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != ring_->arity()) throw std::invalid_argument("exponent arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MPoly::check_same_ring(const MPoly& o, const char* op) const {
  if (!same_ring(ring_, o.ring_))
    throw std::invalid_argument(std::string("ring mismatch in ") + op + ": " +
                                (ring_ ? ring_->name : "<none>") + " vs " +
                                (o.ring_ ? o.ring_->name : "<none>"));
}

MPoly MPoly::operator-() const {
  MPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_same_ring(o, "add");
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_same_ring(o, "sub");
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_same_ring(o, "mul");
  MPoly r(ring_);
  Exponents e(ring_->arity());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::scaled(const Rational& c) const {
  MPoly r(ring_);
  if (c == 0) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly r = MPoly::constant(ring_, 1);
  for (unsigned k = 0; k < n; ++k) r = r * *this;
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return terms_ == o.terms_;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != ring_->arity())
    throw std::invalid_argument("eval arity mismatch in ring " + ring_->name);
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int i = 0; i < e[k]; ++i) t *= point[k];
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& images, const RingPtr& target) const {
  // precompute images per variable index, validating coverage of used vars
  std::vector<const MPoly*> img(ring_->arity(), nullptr);
  for (const auto& [name, p] : images) {
    int k = ring_->var_index(name);
    if (k < 0) continue;  // harmless extra image
    if (!same_ring(p.ring(), target))
      throw std::invalid_argument("substitute: image of " + name + " not in target ring " +
                                  target->name);
    img[static_cast<std::size_t>(k)] = &p;
  }
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0 && img[k] == nullptr)
        throw std::invalid_argument("substitute: missing image for variable " + ring_->vars[k]);
  }
  MPoly acc(target);
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(target, c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0) term = term * img[k]->pow(static_cast<unsigned>(e[k]));
    acc = acc + term;
  }
  return acc;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  check_same_ring(d, "divide");
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  MPoly q(ring_);
  MPoly r = *this;
  const auto& dl = *d.terms_.begin();
  while (!r.is_zero()) {
    const auto& rl = *r.terms_.begin();
    Exponents e(ring_->arity());
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = rl.first[k] - dl.first[k];
      if (e[k] < 0) return std::nullopt;
    }
    Rational c = rl.second / dl.second;
    MPoly m(ring_);
    m.terms_.emplace(e, c);
    q = q + m;
    r = r - m * d;
  }
  return q;
}

namespace {

std::string monomial_str(const VarRing& ring, const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!first) os << "*";
    os << ring.vars[k];
    if (e[k] > 1) os << "^" << e[k];
    first = false;
  }
  return os.str();
}

}  // namespace

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono = monomial_str(*ring_, e);
    if (mono.empty()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

namespace {

struct Parser {
  const VarRing& ring;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Rational parse_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("poly parse: expected number at " + s.substr(start));
    std::string num = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (dstart == pos) throw std::invalid_argument("poly parse: expected denominator");
      return make_rational(Integer(num), Integer(s.substr(dstart, pos - dstart)));
    }
    return Rational(Integer(num));
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw std::invalid_argument("poly parse: expected identifier");
    return s.substr(start, pos - start);
  }

  // factor := number | var ('^' int)?
  void parse_factor(Exponents& e, Rational& c) {
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      c *= parse_number();
      return;
    }
    std::string v = parse_ident();
    int k = ring.var_index(v);
    if (k < 0) throw std::invalid_argument("poly parse: unknown variable " + v);
    int exp = 1;
    if (peek() == '^') {
      ++pos;
      Rational n = parse_number();
      if (!is_integer(n) || n < 1) throw std::invalid_argument("poly parse: bad exponent");
      exp = static_cast<int>(numerator(n).convert_to<long long>());
    }
    e[static_cast<std::size_t>(k)] += exp;
  }

  void parse_term(MPoly& acc, int sign) {
    Exponents e(ring.arity(), 0);
    Rational c(sign);
    parse_factor(e, c);
    while (peek() == '*') {
      ++pos;
      parse_factor(e, c);
    }
    acc.add_term(e, c);
  }
};

}  // namespace

MPoly MPoly::parse(const RingPtr& ring, const std::string& text) {
  Parser p{*ring, text};
  MPoly acc(ring);
  int sign = 1;
  if (p.peek() == '-') {
    sign = -1;
    ++p.pos;
  } else if (p.peek() == '+') {
    ++p.pos;
  }
  p.parse_term(acc, sign);
  while (!p.eof()) {
    char ch = p.peek();
    if (ch == '+')
      sign = 1;
    else if (ch == '-')
      sign = -1;
    else
      throw std::invalid_argument("poly parse: unexpected character '" + std::string(1, ch) + "'");
    ++p.pos;
    p.parse_term(acc, sign);
  }
  return acc;
}

std::optional<int> vanishing_order(const MPoly& p, const std::vector<Rational>& point) {
  if (p.is_zero()) return std::nullopt;
  if (!p.is_homogeneous())
    throw std::invalid_argument("vanishing_order requires a homogeneous polynomial");
  const RingPtr& R = p.ring();
  std::size_t n = R->arity();
  if (point.size() != n) throw std::invalid_argument("vanishing_order: point arity mismatch");
  std::size_t c = n;
  for (std::size_t k = 0; k < n; ++k)
    if (point[k] != 0) {
      c = k;
      break;
    }
  if (c == n) throw std::invalid_argument("vanishing_order: zero point is not projective");
  // scale so coordinate c equals 1, then expand in local coordinates u_k
  std::vector<std::string> uvars;
  for (std::size_t k = 0; k < n; ++k) uvars.push_back("u" + std::to_string(k + 1));
  RingPtr U = make_ring("local(" + R->name + ")", uvars);
  std::map<std::string, MPoly> images;
  for (std::size_t k = 0; k < n; ++k) {
    Rational a = point[k] / point[c];
    MPoly im = MPoly::constant(U, a);
    if (k != c) im = im + MPoly::variable(U, k);
    images.emplace(R->vars[k], std::move(im));
  }
  MPoly local = p.substitute(images, U);
  int best = -1;
  for (const auto& [e, coefficient] : local.terms()) {
    (void)coefficient;
    int d = total_degree(e);
    if (best < 0 || d < best) best = d;
  }
  return best;  // local is nonzero since p is nonzero and the map is invertible
}

}  // namespace dp5
