#include "dp5/sections.hpp"

#include <sstream>
#include <stdexcept>

namespace dp5 {

VVector vv_zero() { return VVector{}; }

VVector vv_unit(std::size_t k) {
  VVector v{};
  v[k] = 1;
  return v;
}

VVector vv_add(const VVector& a, const VVector& b) {
  VVector r;
  for (std::size_t k = 0; k < 6; ++k) r[k] = a[k] + b[k];
  return r;
}

VVector vv_sub(const VVector& a, const VVector& b) {
  VVector r;
  for (std::size_t k = 0; k < 6; ++k) r[k] = a[k] - b[k];
  return r;
}

VVector vv_neg(const VVector& a) {
  VVector r;
  for (std::size_t k = 0; k < 6; ++k) r[k] = -a[k];
  return r;
}

VVector vv_scale(const VVector& a, const Rational& c) {
  VVector r;
  for (std::size_t k = 0; k < 6; ++k) r[k] = a[k] * c;
  return r;
}

bool vv_is_zero(const VVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

VVector vv_apply(const RatMatrix& m, const VVector& a) {
  if (m.rows() != 6 || m.cols() != 6) throw std::invalid_argument("vv_apply wants 6x6");
  VVector r{};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (m.at(i, j) != 0 && a[j] != 0) r[i] += m.at(i, j) * a[j];
  return r;
}

namespace {
const char* s_names[6] = {"s12", "s13", "s21", "s23", "s31", "s32"};
}

std::string vv_str(const VVector& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < 6; ++k) {
    if (a[k] == 0) continue;
    Rational mag = a[k] < 0 ? Rational(-a[k]) : a[k];
    if (first)
      os << (a[k] < 0 ? "-" : "");
    else
      os << (a[k] < 0 ? " - " : " + ");
    if (mag != 1) os << mag.str() << "*";
    os << s_names[k];
    first = false;
  }
  return first ? "0" : os.str();
}

int s_index(int i, int j) {
  static const int table[4][4] = {{-1, -1, -1, -1},
                                  {-1, -1, 0, 1},
                                  {-1, 2, -1, 3},
                                  {-1, 4, 5, -1}};
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw std::invalid_argument("bad (i,j)");
  return table[i][j];
}

std::pair<int, int> s_pair(int index) {
  static const std::pair<int, int> table[6] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
  return table[static_cast<std::size_t>(index)];
}

std::string SectionLabel::str() const {
  std::string out = sign < 0 ? "-" : "";
  out += is_sigma ? "sigma" : "s";
  out += std::to_string(i);
  out += std::to_string(j);
  return out;
}

std::optional<SectionLabel> parse_label(const std::string& s) {
  std::string t = s;
  SectionLabel m;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    m.sign = t[0] == '-' ? -1 : 1;
    t = t.substr(1);
  }
  if (t.rfind("sigma", 0) == 0) {
    m.is_sigma = true;
    t = t.substr(5);
  } else if (t.rfind("s", 0) == 0) {
    t = t.substr(1);
  } else {
    return std::nullopt;
  }
  if (t.size() != 2 || t[0] < '1' || t[0] > '3' || t[1] < '1' || t[1] > '3') return std::nullopt;
  m.i = t[0] - '0';
  m.j = t[1] - '0';
  if (m.i == m.j) return std::nullopt;
  return m;
}

const std::vector<SectionLabel>& all_labels() {
  static const std::vector<SectionLabel> ls = [] {
    std::vector<SectionLabel> v;
    for (int sig = 0; sig < 2; ++sig)
      for (int k = 0; k < 6; ++k)
        for (int sign : {1, -1}) {
          auto [i, j] = s_pair(k);
          v.push_back(SectionLabel{sig == 1, i, j, sign});
        }
    return v;
  }();
  return ls;
}

RatMatrix coefficient_matrix(const std::vector<MPoly>& polys, int degree) {
  if (polys.empty()) return RatMatrix();
  std::size_t arity = polys[0].ring()->arity();
  std::vector<Exponents> monos = monomials_of_degree(arity, degree);
  RatMatrix m(polys.size(), monos.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    if (!same_ring(polys[r].ring(), polys[0].ring()))
      throw std::invalid_argument("coefficient_matrix: mixed rings");
    for (const auto& [e, c] : polys[r].terms()) {
      if (total_degree(e) != degree)
        throw std::invalid_argument("coefficient_matrix: wrong degree term");
      auto it = std::lower_bound(monos.begin(), monos.end(), e, TermOrder{});
      m.at(r, static_cast<std::size_t>(it - monos.begin())) = c;
    }
  }
  return m;
}

namespace {

// sign of the permutation (1,2,3) -> (i,j,k)
int eps3(int i, int j, int k) {
  int inv = 0;
  int a[3] = {i, j, k};
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q)
      if (a[p] > a[q]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

MPoly x(int k) { return MPoly::variable(ring_x(), static_cast<std::size_t>(k - 1)); }

Sections build_sections() {
  Sections S;
  S.X = ring_x();
  S.points = {std::vector<Rational>{1, 0, 0}, std::vector<Rational>{0, 1, 0},
              std::vector<Rational>{0, 0, 1}, std::vector<Rational>{1, 1, 1}};

  // s_ij = x_i x_j (x_j - x_k)
  for (int idx = 0; idx < 6; ++idx) {
    auto [i, j] = s_pair(idx);
    int k = 6 - i - j;
    S.s[static_cast<std::size_t>(idx)] = x(i) * x(j) * (x(j) - x(k));
  }

  S.Sigma = x(1) * x(2) * x(3) * (x(1) - x(2)) * (x(2) - x(3)) * (x(3) - x(1));

  // sigma_ij = eps * x_k (x_i - x_j)(x_k - x_i), and sigma_ij = Sigma / s_ij
  for (int idx = 0; idx < 6; ++idx) {
    auto [i, j] = s_pair(idx);
    int k = 6 - i - j;
    MPoly prod = (x(k) * (x(i) - x(j)) * (x(k) - x(i))).scaled(Rational(eps3(i, j, k)));
    auto quot = S.Sigma.divide_exact(S.s[static_cast<std::size_t>(idx)]);
    if (!quot || *quot != prod)
      throw std::logic_error("sigma_ij: product formula disagrees with Sigma / s_ij");
    S.sigma[static_cast<std::size_t>(idx)] = prod;
  }

  // sigma_ij = eps (s_ik - s_ki - s_jk) in the s-basis
  for (int idx = 0; idx < 6; ++idx) {
    auto [i, j] = s_pair(idx);
    int k = 6 - i - j;
    int eps = eps3(i, j, k);
    VVector v{};
    v[static_cast<std::size_t>(s_index(i, k))] += Rational(eps);
    v[static_cast<std::size_t>(s_index(k, i))] -= Rational(eps);
    v[static_cast<std::size_t>(s_index(j, k))] -= Rational(eps);
    MPoly expanded(S.X);
    for (std::size_t m = 0; m < 6; ++m) expanded = expanded + S.s[m].scaled(v[m]);
    if (expanded != S.sigma[static_cast<std::size_t>(idx)])
      throw std::logic_error("sigma_ij: s-basis expansion disagrees with the product formula");
    S.sigma_coords[static_cast<std::size_t>(idx)] = v;
  }

  // s_ij * sigma_ij = Sigma, and all twelve cubics vanish at p1..p4
  for (int idx = 0; idx < 6; ++idx) {
    if (S.s[static_cast<std::size_t>(idx)] * S.sigma[static_cast<std::size_t>(idx)] != S.Sigma)
      throw std::logic_error("s_ij * sigma_ij != Sigma");
    for (const auto& p : S.points) {
      if (S.s[static_cast<std::size_t>(idx)].eval(p) != 0 ||
          S.sigma[static_cast<std::size_t>(idx)].eval(p) != 0)
        throw std::logic_error("section does not vanish at a base point");
    }
  }

  // rho_V generator images, straight from the explicit lists:
  //   (1,2),(2,3): s_ij -> -s_{t(i)t(j)}
  //   (3,4): s12->sigma31, s13->s23, s21->-sigma32, s23->s13, s31->-sigma12, s32->sigma21
  //   (4,5): s_ij -> s_ik
  std::array<RatMatrix, 4> gens;
  auto set_col = [](RatMatrix& m, int col, const VVector& v) {
    for (std::size_t r = 0; r < 6; ++r) m.at(r, static_cast<std::size_t>(col)) = v[r];
  };
  auto sig = [&](int i, int j) { return S.sigma_coords[static_cast<std::size_t>(s_index(i, j))]; };
  for (int g = 0; g < 2; ++g) {
    RatMatrix m(6, 6);
    int a = g + 1, b = g + 2;  // transposition (a,b) in S3
    for (int col = 0; col < 6; ++col) {
      auto [i, j] = s_pair(col);
      int ti = i == a ? b : (i == b ? a : i);
      int tj = j == a ? b : (j == b ? a : j);
      set_col(m, col, vv_neg(vv_unit(static_cast<std::size_t>(s_index(ti, tj)))));
    }
    gens[static_cast<std::size_t>(g)] = m;
  }
  {
    RatMatrix m(6, 6);
    set_col(m, s_index(1, 2), sig(3, 1));
    set_col(m, s_index(1, 3), vv_unit(static_cast<std::size_t>(s_index(2, 3))));
    set_col(m, s_index(2, 1), vv_neg(sig(3, 2)));
    set_col(m, s_index(2, 3), vv_unit(static_cast<std::size_t>(s_index(1, 3))));
    set_col(m, s_index(3, 1), vv_neg(sig(1, 2)));
    set_col(m, s_index(3, 2), sig(2, 1));
    gens[2] = m;
  }
  {
    RatMatrix m(6, 6);
    for (int col = 0; col < 6; ++col) {
      auto [i, j] = s_pair(col);
      int k = 6 - i - j;
      set_col(m, col, vv_unit(static_cast<std::size_t>(s_index(i, k))));
    }
    gens[3] = m;
  }
  S.rho_v = rep_from_generators(6, std::move(gens));
  if (!S.rho_v.certified) {
    std::string msg = "rho_V failed Coxeter certification:";
    for (const auto& v : S.rho_v.violations) msg += " " + v;
    throw std::logic_error(msg);
  }
  return S;
}

}  // namespace

const Sections& sections() {
  static const Sections S = build_sections();
  return S;
}

MPoly Sections::label_poly(const SectionLabel& m) const {
  std::size_t idx = static_cast<std::size_t>(s_index(m.i, m.j));
  MPoly p = m.is_sigma ? sigma[idx] : s[idx];
  return m.sign < 0 ? -p : p;
}

VVector Sections::label_vector(const SectionLabel& m) const {
  std::size_t idx = static_cast<std::size_t>(s_index(m.i, m.j));
  VVector v = m.is_sigma ? sigma_coords[idx] : vv_unit(idx);
  return m.sign < 0 ? vv_neg(v) : v;
}

std::optional<VVector> Sections::cubic_coordinates(const MPoly& cubic) const {
  std::vector<MPoly> polys(s.begin(), s.end());
  RatMatrix A = coefficient_matrix(polys, 3).transpose();  // 10 x 6
  std::vector<Rational> b(A.rows(), Rational(0));
  std::vector<Exponents> monos = monomials_of_degree(3, 3);
  for (const auto& [e, c] : cubic.terms()) {
    auto it = std::lower_bound(monos.begin(), monos.end(), e, TermOrder{});
    b[static_cast<std::size_t>(it - monos.begin())] = c;
  }
  auto sol = solve_unique(A, b);
  if (!sol) return std::nullopt;
  VVector v;
  for (std::size_t k = 0; k < 6; ++k) v[k] = (*sol)[k];
  return v;
}

std::optional<SectionLabel> Sections::label_of_vector(const VVector& v) const {
  for (const SectionLabel& m : all_labels())
    if (label_vector(m) == v) return m;
  return std::nullopt;
}

RatMatrix plane_action_on_cubics(int gen_index) {
  const Sections& S = sections();
  RingPtr X = S.X;
  std::map<std::string, MPoly> images;
  int eps = 1;
  bool cremona = false;
  switch (gen_index) {
    case 0:  // (1,2)
      images = {{"x1", x(2)}, {"x2", x(1)}, {"x3", x(3)}};
      eps = -1;
      break;
    case 1:  // (2,3)
      images = {{"x1", x(1)}, {"x2", x(3)}, {"x3", x(2)}};
      eps = -1;
      break;
    case 2:  // (3,4)
      images = {{"x1", x(1) - x(3)}, {"x2", x(2) - x(3)}, {"x3", -x(3)}};
      eps = -1;
      break;
    case 3:  // (4,5): Cremona
      images = {{"x1", x(2) * x(3)}, {"x2", x(1) * x(3)}, {"x3", x(1) * x(2)}};
      cremona = true;
      break;
    default:
      throw std::invalid_argument("generator index out of range");
  }
  RatMatrix m(6, 6);
  for (int col = 0; col < 6; ++col) {
    MPoly f = S.s[static_cast<std::size_t>(col)].substitute(images, X);
    if (cremona) {
      auto q = f.divide_exact(x(1) * x(2) * x(3));
      if (!q) throw std::logic_error("Cremona image of a section not divisible by x1*x2*x3");
      f = *q;
    } else {
      f = f.scaled(Rational(eps));
    }
    auto coords = S.cubic_coordinates(f);
    if (!coords) throw std::logic_error("plane action image is not in V'");
    for (std::size_t r = 0; r < 6; ++r) m.at(r, static_cast<std::size_t>(col)) = (*coords)[r];
  }
  return m;
}

MPoly plane_action_on_sextic(int gen_index, const MPoly& f) {
  RingPtr X = ring_x();
  std::map<std::string, MPoly> images;
  switch (gen_index) {
    case 0:
      images = {{"x1", x(2)}, {"x2", x(1)}, {"x3", x(3)}};
      break;
    case 1:
      images = {{"x1", x(1)}, {"x2", x(3)}, {"x3", x(2)}};
      break;
    case 2:
      images = {{"x1", x(1) - x(3)}, {"x2", x(2) - x(3)}, {"x3", -x(3)}};
      break;
    case 3: {
      images = {{"x1", x(2) * x(3)}, {"x2", x(1) * x(3)}, {"x3", x(1) * x(2)}};
      MPoly g = f.substitute(images, X);
      auto q = g.divide_exact((x(1) * x(2) * x(3)).pow(2));
      if (!q) throw std::logic_error("Cremona image of sextic not divisible by (x1*x2*x3)^2");
      return *q;
    }
    default:
      throw std::invalid_argument("generator index out of range");
  }
  return f.substitute(images, X);
}

}  // namespace dp5
