#include "dp5/quadrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "dp5/lattice.hpp"

namespace dp5 {

QuadForm QuadForm::product(const VVector& a, const VVector& b) {
  QuadForm f;
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t q = 0; q < 6; ++q)
      f.gram(p, q) = (a[p] * b[q] + a[q] * b[p]) / 2;
  return f;
}

QuadForm QuadForm::from_poly(const MPoly& p) {
  if (!same_ring(p.ring(), ring_y6()))
    throw std::invalid_argument("QuadForm::from_poly expects the Y6 ring");
  QuadForm f;
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != 2) throw std::invalid_argument("QuadForm::from_poly: degree != 2");
    int first = -1, second = -1;
    for (int k = 0; k < 6; ++k) {
      for (int rep = 0; rep < e[static_cast<std::size_t>(k)]; ++rep) {
        if (first < 0)
          first = k;
        else
          second = k;
      }
    }
    auto p1 = static_cast<std::size_t>(first);
    auto p2 = static_cast<std::size_t>(second);
    if (p1 == p2) {
      f.gram(p1, p1) += c;
    } else {
      f.gram(p1, p2) += c / 2;
      f.gram(p2, p1) += c / 2;
    }
  }
  return f;
}

MPoly QuadForm::to_poly() const {
  RingPtr Y = ring_y6();
  MPoly acc(Y);
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t q = p; q < 6; ++q) {
      Rational c = p == q ? gram(p, p) : gram(p, q) + gram(q, p);
      if (c == 0) continue;
      Exponents e(6, 0);
      e[p] += 1;
      e[q] += 1;
      MPoly t(Y);
      t.add_term(e, c);
      acc = acc + t;
    }
  return acc;
}

std::vector<Rational> QuadForm::coeff_vector() const {
  static const std::vector<Exponents> monos = monomials_of_degree(6, 2);
  MPoly p = to_poly();
  std::vector<Rational> v(monos.size(), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    auto it = std::lower_bound(monos.begin(), monos.end(), e, TermOrder{});
    v[static_cast<std::size_t>(it - monos.begin())] = c;
  }
  return v;
}

QuadForm QuadForm::operator+(const QuadForm& o) const {
  QuadForm f;
  for (std::size_t k = 0; k < 36; ++k) f.g_[k] = g_[k] + o.g_[k];
  return f;
}

QuadForm QuadForm::operator-(const QuadForm& o) const {
  QuadForm f;
  for (std::size_t k = 0; k < 36; ++k) f.g_[k] = g_[k] - o.g_[k];
  return f;
}

QuadForm QuadForm::operator-() const {
  QuadForm f;
  for (std::size_t k = 0; k < 36; ++k) f.g_[k] = -g_[k];
  return f;
}

QuadForm QuadForm::scaled(const Rational& c) const {
  QuadForm f;
  for (std::size_t k = 0; k < 36; ++k) f.g_[k] = g_[k] * c;
  return f;
}

bool QuadForm::is_zero() const {
  for (const auto& x : g_)
    if (x != 0) return false;
  return true;
}

QuadForm QuadForm::transformed(const RatMatrix& r) const {
  if (r.rows() != 6 || r.cols() != 6) throw std::invalid_argument("transformed wants 6x6");
  QuadForm f;
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t q = 0; q < 6; ++q) {
      Rational acc(0);
      for (std::size_t a = 0; a < 6; ++a) {
        if (r.at(p, a) == 0) continue;
        for (std::size_t b = 0; b < 6; ++b) {
          if (r.at(q, b) == 0 || gram(a, b) == 0) continue;
          acc += r.at(p, a) * gram(a, b) * r.at(q, b);
        }
      }
      f.gram(p, q) = acc;
    }
  return f;
}

MPoly phi_apply(const QuadForm& f) {
  const Sections& S = sections();
  static const std::map<std::string, MPoly> images = [] {
    const Sections& sec = sections();
    std::map<std::string, MPoly> m;
    const char* names[6] = {"y12", "y13", "y21", "y23", "y31", "y32"};
    for (std::size_t k = 0; k < 6; ++k) m.emplace(names[k], sec.s[k]);
    return m;
  }();
  return f.to_poly().substitute(images, S.X);
}

namespace {

QuadricsData build_quadrics() {
  const Sections& S = sections();
  QuadricsData D;

  // Q_ij = s_ij * sigma_ij as an element of Sym^2(V)
  for (std::size_t k = 0; k < 6; ++k)
    D.Q[k] = QuadForm::product(vv_unit(k), S.sigma_coords[k]);

  // Phi(Q_ij) = Sigma
  for (std::size_t k = 0; k < 6; ++k)
    if (phi_apply(D.Q[k]) != S.Sigma) throw std::logic_error("Phi(Q_ij) != Sigma");

  // q basis of W
  std::size_t i32 = static_cast<std::size_t>(s_index(3, 2));
  const int q_order[5] = {s_index(1, 2), s_index(1, 3), s_index(2, 1), s_index(2, 3),
                          s_index(3, 1)};
  for (std::size_t k = 0; k < 5; ++k)
    D.q[k] = D.Q[static_cast<std::size_t>(q_order[k])] - D.Q[i32];

  // Phi as a 21x28 matrix: rows = Sym^2 monomials in term order,
  // columns = degree-6 monomials of X in term order
  std::vector<Exponents> ymonos = monomials_of_degree(6, 2);
  std::vector<Exponents> xmonos = monomials_of_degree(3, 6);
  std::map<std::string, MPoly> images;
  {
    const char* names[6] = {"y12", "y13", "y21", "y23", "y31", "y32"};
    for (std::size_t k = 0; k < 6; ++k) images.emplace(names[k], S.s[k]);
  }
  D.phi = RatMatrix(ymonos.size(), xmonos.size());
  for (std::size_t r = 0; r < ymonos.size(); ++r) {
    MPoly ym(ring_y6());
    ym.add_term(ymonos[r], Rational(1));
    MPoly image = ym.substitute(images, S.X);
    for (const auto& [e, c] : image.terms()) {
      auto it = std::lower_bound(xmonos.begin(), xmonos.end(), e, TermOrder{});
      D.phi.at(r, static_cast<std::size_t>(it - xmonos.begin())) = c;
    }
  }
  RankKernel rk = rank_kernel(D.phi.transpose());
  D.phi_rank = rk.rank;
  D.W_basis = rk.kernel;

  // action on W': the S3 rule tau(Q_ij) = sgn(tau) Q_{tau(i)tau(j)} for
  // (1,2),(2,3) and the signed swap lists for (3,4),(4,5)
  auto signed_perm = [](std::initializer_list<std::pair<int, int>> swaps) {
    RatMatrix m(6, 6);
    std::array<bool, 6> touched{};
    for (auto [a, b] : swaps) {
      m.at(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = -1;
      m.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = -1;
      touched[static_cast<std::size_t>(a)] = touched[static_cast<std::size_t>(b)] = true;
    }
    for (std::size_t k = 0; k < 6; ++k)
      if (!touched[k]) m.at(k, k) = 1;
    return m;
  };
  std::array<RatMatrix, 4> gens;
  // (1,2): Q12 <-> -Q21, Q13 <-> -Q23, Q31 <-> -Q32
  gens[0] = signed_perm({{s_index(1, 2), s_index(2, 1)},
                         {s_index(1, 3), s_index(2, 3)},
                         {s_index(3, 1), s_index(3, 2)}});
  // (2,3): Q12 <-> -Q13, Q21 <-> -Q31, Q23 <-> -Q32
  gens[1] = signed_perm({{s_index(1, 2), s_index(1, 3)},
                         {s_index(2, 1), s_index(3, 1)},
                         {s_index(2, 3), s_index(3, 2)}});
  // (3,4): Q12 <-> -Q31, Q13 <-> -Q23, Q21 <-> -Q32
  gens[2] = signed_perm({{s_index(1, 2), s_index(3, 1)},
                         {s_index(1, 3), s_index(2, 3)},
                         {s_index(2, 1), s_index(3, 2)}});
  // (4,5): Q12 <-> -Q13, Q21 <-> -Q23, Q31 <-> -Q32
  gens[3] = signed_perm({{s_index(1, 2), s_index(1, 3)},
                         {s_index(2, 1), s_index(2, 3)},
                         {s_index(3, 1), s_index(3, 2)}});
  D.wprime = rep_from_generators(6, std::move(gens));
  if (!D.wprime.certified) {
    std::string msg = "W' action failed Coxeter certification:";
    for (const auto& v : D.wprime.violations) msg += " " + v;
    throw std::logic_error(msg);
  }
  return D;
}

}  // namespace

const QuadricsData& quadrics() {
  static const QuadricsData D = build_quadrics();
  return D;
}

bool in_W(const QuadForm& f) {
  const QuadricsData& D = quadrics();
  std::vector<std::vector<Rational>> rows;
  for (const auto& w : D.W_basis) rows.push_back(w);
  RatMatrix base = RatMatrix::from_rows(rows);
  rows.push_back(f.coeff_vector());
  RatMatrix ext = RatMatrix::from_rows(rows);
  return rank_of(base) == rank_of(ext);
}

std::optional<std::array<Rational, 6>> q_coordinates(const QuadForm& f) {
  const QuadricsData& D = quadrics();
  std::vector<std::vector<Rational>> cols;
  for (const auto& Q : D.Q) cols.push_back(Q.coeff_vector());
  RatMatrix A = RatMatrix::from_cols(cols);
  auto sol = solve_unique(A, f.coeff_vector());
  if (!sol) return std::nullopt;
  std::array<Rational, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = (*sol)[k];
  return out;
}

RatMatrix sym2_induced_gen(int gen_index) {
  const Sections& S = sections();
  const QuadricsData& D = quadrics();
  const RatMatrix& R = S.rho_v.gens[static_cast<std::size_t>(gen_index)];
  RatMatrix m(6, 6);
  for (std::size_t col = 0; col < 6; ++col) {
    QuadForm image = D.Q[col].transformed(R);
    auto coords = q_coordinates(image);
    if (!coords)
      throw std::logic_error("Sym^2-induced image of a Q basis vector left W'");
    for (std::size_t r = 0; r < 6; ++r) m.at(r, col) = (*coords)[r];
  }
  return m;
}

WprimeReport wprime_checks() {
  const Sections& S = sections();
  const QuadricsData& D = quadrics();
  WprimeReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  for (int g = 0; g < 4; ++g) {
    if (!(sym2_induced_gen(g) == D.wprime.gens[static_cast<std::size_t>(g)]))
      fail("Sym^2-induced action and the explicit formulae disagree for generator " +
           adjacent_transpositions()[static_cast<std::size_t>(g)].to_cycles());
  }

  rep.chi_wprime = character_of_rep(D.wprime);
  CharVector expected = character_table()[1] + character_table()[4];  // chi_2 + chi_5
  if (!(rep.chi_wprime == expected))
    fail("chi(W') = " + rep.chi_wprime.str() + ", expected " + expected.str());

  rep.det_wprime = determinant_character(D.wprime);
  if (!(rep.det_wprime == character_table()[1]))
    fail("det(W') = " + rep.det_wprime.str() + ", expected the sign character");

  // W is stable under the action
  for (int g = 0; g < 4; ++g)
    for (const auto& qf : D.q) {
      QuadForm im = qf.transformed(S.rho_v.gens[static_cast<std::size_t>(g)]);
      if (!in_W(im)) fail("W is not stable under generator " + std::to_string(g));
    }

  // eps-isotypic projector applied to Q12 lands on the Sigma line
  {
    QuadForm proj;
    for (const Perm& g : all_perms()) {
      RatMatrix m = rep_matrix(D.wprime, g);
      QuadForm gq;
      for (std::size_t r = 0; r < 6; ++r)
        if (m.at(r, 0) != 0) gq = gq + D.Q[r].scaled(m.at(r, 0));
      proj = proj + (g.sign() == 1 ? gq : -gq);
    }
    if (proj.is_zero()) {
      fail("eps-isotypic projection of Q12 vanished");
    } else {
      MPoly im = phi_apply(proj);
      auto quot = im.divide_exact(S.Sigma);
      if (!quot || (*quot).degree() > 0)
        fail("eps-isotypic vector does not map to a multiple of Sigma");
    }
  }

  // Phi is equivariant: Phi(g.Q) = g.Phi(Q) with the plane action on sextics
  for (int g = 0; g < 4; ++g)
    for (std::size_t k = 0; k < 6; ++k) {
      QuadForm gq = D.Q[k].transformed(S.rho_v.gens[static_cast<std::size_t>(g)]);
      MPoly lhs = phi_apply(gq);
      MPoly rhs = plane_action_on_sextic(g, phi_apply(D.Q[k]));
      if (lhs != rhs)
        fail("Phi equivariance fails for generator " + std::to_string(g) + " on Q index " +
             std::to_string(k));
    }

  return rep;
}

Degree3Report degree3_ideal_check() {
  const Sections& S = sections();
  const QuadricsData& D = quadrics();
  Degree3Report rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  rep.expected_image_dim = rr_chi(class_minus_K() * 3);  // h^0(-3K) = 31

  // substitution Sym^3(V) -> degree-9 polynomials, 56 rows x 55 columns
  std::vector<Exponents> ymonos = monomials_of_degree(6, 3);
  std::vector<Exponents> xmonos = monomials_of_degree(3, 9);
  std::map<std::string, MPoly> images;
  {
    const char* names[6] = {"y12", "y13", "y21", "y23", "y31", "y32"};
    for (std::size_t k = 0; k < 6; ++k) images.emplace(names[k], S.s[k]);
  }
  RatMatrix sub(ymonos.size(), xmonos.size());
  for (std::size_t r = 0; r < ymonos.size(); ++r) {
    MPoly ym(ring_y6());
    ym.add_term(ymonos[r], Rational(1));
    MPoly image = ym.substitute(images, S.X);
    for (const auto& [e, c] : image.terms()) {
      auto it = std::lower_bound(xmonos.begin(), xmonos.end(), e, TermOrder{});
      sub.at(r, static_cast<std::size_t>(it - xmonos.begin())) = c;
    }
  }
  RankKernel rk = rank_kernel(sub.transpose());
  rep.sym3_kernel_dim = static_cast<int>(rk.kernel.size());
  if (rk.rank != rep.expected_image_dim)
    fail("rank of the Sym^3 substitution is " + std::to_string(rk.rank) + ", expected " +
         std::to_string(rep.expected_image_dim));
  if (rep.sym3_kernel_dim != 56 - rep.expected_image_dim)
    fail("degree-3 ideal dimension is " + std::to_string(rep.sym3_kernel_dim));

  // the 30 products q*y: cubics in the y variables
  std::vector<std::vector<Rational>> products;
  for (const auto& qf : D.q) {
    MPoly qp = qf.to_poly();
    for (std::size_t m = 0; m < 6; ++m) {
      MPoly prod = qp * MPoly::variable(ring_y6(), m);
      std::vector<Rational> v(ymonos.size(), Rational(0));
      for (const auto& [e, c] : prod.terms()) {
        auto it = std::lower_bound(ymonos.begin(), ymonos.end(), e, TermOrder{});
        v[static_cast<std::size_t>(it - ymonos.begin())] = c;
      }
      products.push_back(std::move(v));
      // membership in the kernel: the substitution of q*y is identically zero
      if (!prod.substitute(images, S.X).is_zero())
        fail("a product q*y does not map to zero under substitution");
    }
  }
  RatMatrix prod_matrix = RatMatrix::from_rows(products);
  rep.wv_rank = rank_of(prod_matrix);
  if (rep.wv_rank != rep.sym3_kernel_dim)
    fail("W*V has rank " + std::to_string(rep.wv_rank) + ", expected " +
         std::to_string(rep.sym3_kernel_dim));
  return rep;
}

}  // namespace dp5
