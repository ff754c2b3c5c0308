#include "dp5/pfaffian.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dp5 {

bool SkewLinearMatrix::is_skew() const {
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t q = 0; q < 6; ++q)
      if (!vv_is_zero(vv_add(e[p][q], e[q][p]))) return false;
  return true;
}

namespace {

struct Term {
  int sign;
  int i, j;  // s_ij
};

VVector lin(std::initializer_list<Term> terms) {
  VVector v{};
  for (const Term& t : terms)
    v[static_cast<std::size_t>(s_index(t.i, t.j))] += Rational(t.sign);
  return v;
}

// all six assignments {i,j,k} = {1,2,3}
const std::array<std::array<int, 3>, 6>& perms3() {
  static const std::array<std::array<int, 3>, 6> ps = {{{1, 2, 3},
                                                        {1, 3, 2},
                                                        {2, 1, 3},
                                                        {2, 3, 1},
                                                        {3, 1, 2},
                                                        {3, 2, 1}}};
  return ps;
}

SkewLinearMatrix build_a_prime() {
  std::array<std::array<bool, 6>, 6> set{};
  SkewLinearMatrix A;
  auto put = [&](int row_i, int row_j, int col_i, int col_j, const VVector& v) {
    auto r = static_cast<std::size_t>(s_index(row_i, row_j));
    auto c = static_cast<std::size_t>(s_index(col_i, col_j));
    if (set[r][c]) throw std::logic_error("entry family assigns a slot twice");
    A.e[r][c] = v;
    set[r][c] = true;
  };
  for (const auto& p : perms3()) {
    int i = p[0], j = p[1], k = p[2];
    put(i, j, i, k, lin({{1, j, i}, {1, j, k}, {-1, k, i}, {-1, k, j}}));
    put(i, k, k, j, lin({{-1, i, j}, {-1, k, i}}));
    put(i, j, k, i, lin({{1, i, k}, {1, k, j}}));
    put(i, k, k, i, lin({{1, i, k}, {1, j, i}, {-1, j, k}, {-1, k, i}}));
    put(i, j, k, j, lin({{1, j, i}, {-1, i, j}, {1, k, j}, {-1, j, k}}));
  }
  for (std::size_t p = 0; p < 6; ++p)
    for (std::size_t q = 0; q < 6; ++q)
      if (p != q && !set[p][q]) throw std::logic_error("entry families left a slot empty");
  if (!A.is_skew()) throw std::logic_error("entry families are not antisymmetric");
  if (!(A.e == written_out_entries()))
    throw std::logic_error("entry families disagree with the written-out matrix");
  return A;
}

}  // namespace

const SkewLinearMatrix& a_prime() {
  static const SkewLinearMatrix A = build_a_prime();
  return A;
}

const std::array<std::array<VVector, 6>, 6>& written_out_entries() {
  static const std::array<std::array<VVector, 6>, 6> entries = [] {
    std::array<std::array<VVector, 6>, 6> m{};
    auto put = [&](std::size_t r, std::size_t c, const VVector& v) {
      m[r][c] = v;
      m[c][r] = vv_neg(v);
    };
    put(0, 1, lin({{1, 2, 1}, {1, 2, 3}, {-1, 3, 1}, {-1, 3, 2}}));
    put(0, 2, lin({{1, 1, 2}, {1, 3, 1}, {-1, 3, 2}, {-1, 2, 1}}));
    put(0, 3, lin({{-1, 1, 3}, {-1, 2, 1}}));
    put(0, 4, lin({{1, 1, 3}, {1, 3, 2}}));
    put(0, 5, lin({{1, 2, 1}, {1, 3, 2}, {-1, 1, 2}, {-1, 2, 3}}));
    put(1, 2, lin({{1, 1, 2}, {1, 2, 3}}));
    put(1, 3, lin({{1, 3, 1}, {1, 2, 3}, {-1, 1, 3}, {-1, 3, 2}}));
    put(1, 4, lin({{1, 1, 3}, {1, 2, 1}, {-1, 2, 3}, {-1, 3, 1}}));
    put(1, 5, lin({{-1, 1, 2}, {-1, 3, 1}}));
    put(2, 3, lin({{1, 1, 2}, {1, 1, 3}, {-1, 3, 2}, {-1, 3, 1}}));
    put(2, 4, lin({{1, 1, 2}, {-1, 2, 1}, {1, 3, 1}, {-1, 1, 3}}));
    put(2, 5, lin({{1, 2, 3}, {1, 3, 1}}));
    put(3, 4, lin({{-1, 2, 1}, {-1, 3, 2}}));
    put(3, 5, lin({{1, 2, 3}, {1, 1, 2}, {-1, 1, 3}, {-1, 3, 2}}));
    put(4, 5, lin({{1, 1, 2}, {1, 1, 3}, {-1, 2, 1}, {-1, 2, 3}}));
    return m;
  }();
  return entries;
}

QuadForm sub_pfaffian(const SkewLinearMatrix& m, std::pair<int, int> skip) {
  if (skip.first == skip.second || skip.first < 0 || skip.second < 0 || skip.first > 5 ||
      skip.second > 5)
    throw std::invalid_argument("sub_pfaffian: bad deleted pair");
  std::array<std::size_t, 4> r{};
  std::size_t n = 0;
  for (int k = 0; k < 6; ++k)
    if (k != skip.first && k != skip.second) r[n++] = static_cast<std::size_t>(k);
  QuadForm pf = QuadForm::product(m.at(r[0], r[1]), m.at(r[2], r[3]));
  pf = pf - QuadForm::product(m.at(r[0], r[2]), m.at(r[1], r[3]));
  pf = pf + QuadForm::product(m.at(r[0], r[3]), m.at(r[1], r[2]));
  return pf;
}

Rational pfaffian_constant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian of non-square matrix");
  std::size_t n = m.rows();
  if (n % 2 != 0) return Rational(0);
  if (n == 0) return Rational(1);
  Rational acc(0);
  for (std::size_t j = 1; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    RatMatrix minor(n - 2, n - 2);
    std::size_t ri = 0;
    for (std::size_t a = 1; a < n; ++a) {
      if (a == j) continue;
      std::size_t cj = 0;
      for (std::size_t b = 1; b < n; ++b) {
        if (b == j) continue;
        minor.at(ri, cj) = m.at(a, b);
        ++cj;
      }
      ++ri;
    }
    Rational term = m.at(0, j) * pfaffian_constant(minor);
    acc += (j % 2 == 1) ? term : -term;  // (-1)^j with 1-based column index j+1
  }
  return acc;
}

namespace {

// generator image of V' = V (x) eps: the adjacent transpositions are odd
RatMatrix rho_vprime_gen(int g) {
  RatMatrix m = sections().rho_v.gens[static_cast<std::size_t>(g)];
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = -m.at(i, j);
  return m;
}

MPoly vv_to_ypoly(const VVector& v) {
  MPoly p(ring_y6());
  for (std::size_t k = 0; k < 6; ++k) {
    if (v[k] == 0) continue;
    Exponents e(6, 0);
    e[k] = 1;
    p.add_term(e, v[k]);
  }
  return p;
}

MPoly pfaffian_poly(const std::vector<std::vector<MPoly>>& m) {
  std::size_t n = m.size();
  if (n % 2 != 0) return MPoly::zero(ring_y6());
  if (n == 0) return MPoly::constant(ring_y6(), 1);
  MPoly acc(ring_y6());
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t a = 1; a < n; ++a) {
      if (a == j) continue;
      std::vector<MPoly> row;
      for (std::size_t b = 1; b < n; ++b) {
        if (b == j) continue;
        row.push_back(m[a][b]);
      }
      minor.push_back(std::move(row));
    }
    MPoly term = m[0][j] * pfaffian_poly(minor);
    acc = (j % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

MPoly full_pfaffian(const SkewLinearMatrix& m) {
  std::vector<std::vector<MPoly>> p(6, std::vector<MPoly>(6, MPoly(ring_y6())));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) p[a][b] = vv_to_ypoly(m.at(a, b));
  return pfaffian_poly(p);
}

MainResultReport verify_mainresult() {
  const QuadricsData& D = quadrics();
  MainResultReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  // Every unordered pair of distinct Q's occurs exactly once; equivariance
  // forces this, since the deleted-pair -> difference-pair map commutes with
  // the transitive action on pairs.
  std::multiset<std::pair<int, int>> expected;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) expected.insert({a, b});

  std::multiset<std::pair<int, int>> found;
  std::vector<std::vector<Rational>> pf_vectors;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      QuadForm pf = sub_pfaffian(a_prime(), {a, b});
      if (!in_W(pf)) {
        fail("sub-Pfaffian for deleted pair (" + std::to_string(a) + "," + std::to_string(b) +
             ") is not in ker Phi");
        continue;
      }
      auto coords = q_coordinates(pf);
      if (!coords) {
        fail("sub-Pfaffian is not in W'");
        continue;
      }
      int pos = -1, neg = -1;
      bool clean = true;
      for (int k = 0; k < 6; ++k) {
        const Rational& c = (*coords)[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (c == 2 && pos < 0)
          pos = k;
        else if (c == -2 && neg < 0)
          neg = k;
        else
          clean = false;
      }
      if (!clean || pos < 0 || neg < 0) {
        fail("sub-Pfaffian for deleted pair (" + std::to_string(a) + "," + std::to_string(b) +
             ") is not of the form 2(Q_a - Q_b)");
        continue;
      }
      MainResultReport::Entry entry;
      entry.deleted = {a, b};
      entry.a = pos;
      entry.b = neg;
      entry.sign = 1;
      rep.bijection.push_back(entry);
      found.insert(pos < neg ? std::pair{pos, neg} : std::pair{neg, pos});
      pf_vectors.push_back(pf.coeff_vector());
    }

  if (found != expected) {
    std::ostringstream os;
    os << "multiset of difference pairs is not all 15 {Q_a,Q_b}; computed:";
    for (auto [a, b] : found) os << " {" << a << "," << b << "}";
    fail(os.str());
  }

  RatMatrix span_m = RatMatrix::from_rows(pf_vectors);
  rep.span_dim = rank_of(span_m);
  if (rep.span_dim != 5) fail("sub-Pfaffians span dimension " + std::to_string(rep.span_dim));

  // span equals W: adjoining the W basis does not increase the rank
  std::vector<std::vector<Rational>> all = pf_vectors;
  for (const auto& w : D.W_basis) all.push_back(w);
  if (rank_of(RatMatrix::from_rows(all)) != 5)
    fail("sub-Pfaffian span does not equal W");

  return rep;
}

EquivarianceReport equivariance_check(const SkewLinearMatrix& m) {
  const QuadricsData& D = quadrics();
  EquivarianceReport rep;
  for (int g = 0; g < 4; ++g) {
    const RatMatrix& Sg = D.wprime.gens[static_cast<std::size_t>(g)];
    // the entries transform in V' = V (x) eps, and the generators are odd
    const RatMatrix Rg = rho_vprime_gen(g);
    for (std::size_t p = 0; p < 6; ++p)
      for (std::size_t q = 0; q < 6; ++q) {
        VVector acc{};
        for (std::size_t pp = 0; pp < 6; ++pp) {
          if (Sg.at(p, pp) == 0) continue;
          for (std::size_t qq = 0; qq < 6; ++qq) {
            if (Sg.at(q, qq) == 0) continue;
            acc = vv_add(acc, vv_scale(vv_apply(Rg, m.at(pp, qq)), Sg.at(p, pp) * Sg.at(q, qq)));
          }
        }
        if (!(acc == m.at(p, q))) {
          rep.ok = false;
          rep.failures.push_back(
              "generator " + adjacent_transpositions()[static_cast<std::size_t>(g)].to_cycles() +
              " moves entry (" + std::to_string(p) + "," + std::to_string(q) + "): got " +
              vv_str(acc) + ", matrix has " + vv_str(m.at(p, q)));
        }
      }
  }
  return rep;
}

namespace {

int pair_index(int a, int b) {  // 0 <= a < b < 6, lexicographic rank
  int idx = 0;
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q) {
      if (p == a && q == b) return idx;
      ++idx;
    }
  throw std::logic_error("bad pair");
}

}  // namespace

InvariantSpaceReport invariant_space() {
  const Sections& S = sections();
  const QuadricsData& D = quadrics();
  InvariantSpaceReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  // fixed points of Lambda^2(W') (x) V' under the four generators: 360x90 system
  RatMatrix stacked;
  for (int g = 0; g < 4; ++g) {
    const RatMatrix& Sg = D.wprime.gens[static_cast<std::size_t>(g)];
    const RatMatrix Rg = rho_vprime_gen(g);
    RatMatrix T(90, 90);
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        int colp = pair_index(a, b);
        for (int c = 0; c < 6; ++c)
          for (int d = c + 1; d < 6; ++d) {
            Rational minor = Sg.at(static_cast<std::size_t>(c), static_cast<std::size_t>(a)) *
                                 Sg.at(static_cast<std::size_t>(d), static_cast<std::size_t>(b)) -
                             Sg.at(static_cast<std::size_t>(d), static_cast<std::size_t>(a)) *
                                 Sg.at(static_cast<std::size_t>(c), static_cast<std::size_t>(b));
            if (minor == 0) continue;
            int rowp = pair_index(c, d);
            for (std::size_t m = 0; m < 6; ++m)
              for (std::size_t n = 0; n < 6; ++n) {
                const Rational& r = Rg.at(n, m);
                if (r == 0) continue;
                T.at(static_cast<std::size_t>(rowp) * 6 + n,
                     static_cast<std::size_t>(colp) * 6 + m) += minor * r;
              }
          }
      }
    stacked = stacked.vstack(T - RatMatrix::identity(90));
  }
  RankKernel rk = rank_kernel(stacked);
  rep.fixed_dim = static_cast<int>(rk.kernel.size());
  if (rep.fixed_dim != 1) fail("fixed subspace has dimension " + std::to_string(rep.fixed_dim));

  // A' as a tensor lies in the fixed subspace
  std::vector<Rational> alpha(90, Rational(0));
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      const VVector& v = a_prime().at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      for (std::size_t m = 0; m < 6; ++m)
        alpha[static_cast<std::size_t>(pair_index(a, b)) * 6 + m] = v[m];
    }
  rep.aprime_in_fixed_space = is_zero_vector(stacked.apply(alpha));
  if (!rep.aprime_in_fixed_space) fail("A' is not fixed by the four generators");

  // character cross-check; chi_{V'} = chi_V * eps
  CharVector chi_v = character_of_rep(S.rho_v) * character_table()[1];
  CharVector chi_wedge = wedge2_character(character_of_rep(D.wprime));
  Rational mult = inner_product(chi_wedge * chi_v, character_table()[0]);
  if (!is_integer(mult)) {
    fail("character multiplicity is not an integer");
  } else {
    rep.character_multiplicity = numerator(mult).convert_to<long long>();
  }
  if (rep.character_multiplicity != rep.fixed_dim)
    fail("character multiplicity " + std::to_string(rep.character_multiplicity) +
         " differs from the solver dimension " + std::to_string(rep.fixed_dim));
  return rep;
}

SyzygyReport syzygy_kernel() {
  const QuadricsData& D = quadrics();
  SyzygyReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  std::vector<Exponents> ymonos = monomials_of_degree(6, 3);
  RatMatrix sys(ymonos.size(), 30);
  std::vector<MPoly> qy(30, MPoly(ring_y6()));
  for (std::size_t k = 0; k < 5; ++k) {
    MPoly qp = D.q[k].to_poly();
    for (std::size_t m = 0; m < 6; ++m) {
      MPoly prod = qp * MPoly::variable(ring_y6(), m);
      qy[k * 6 + m] = prod;
      for (const auto& [e, c] : prod.terms()) {
        auto it = std::lower_bound(ymonos.begin(), ymonos.end(), e, TermOrder{});
        sys.at(static_cast<std::size_t>(it - ymonos.begin()), k * 6 + m) = c;
      }
    }
  }
  RankKernel rk = rank_kernel(sys);
  rep.kernel_dim = static_cast<int>(rk.kernel.size());
  if (rep.kernel_dim != 5) fail("syzygy kernel has dimension " + std::to_string(rep.kernel_dim));

  // recheck each solution by direct expansion
  for (const auto& sol : rk.kernel) {
    MPoly acc(ring_y6());
    for (std::size_t c = 0; c < 30; ++c)
      if (sol[c] != 0) acc = acc + qy[c].scaled(sol[c]);
    if (!acc.is_zero()) fail("a syzygy solution fails direct expansion");
  }
  return rep;
}

}  // namespace dp5
