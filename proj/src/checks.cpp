#include "dp5/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dp5/character.hpp"
#include "dp5/lattice.hpp"
#include "dp5/matrixrep.hpp"
#include "dp5/mpoly.hpp"
#include "dp5/multiproj.hpp"
#include "dp5/pentagon.hpp"
#include "dp5/perm.hpp"
#include "dp5/pfaffian.hpp"
#include "dp5/quadrics.hpp"
#include "dp5/sections.hpp"

namespace dp5 {

namespace {

using nlohmann::json;

json char_json(const CharVector& c) {
  json a = json::array();
  for (int k = 0; k < 7; ++k) a.push_back(c.v[k]);
  return a;
}

json pairs_json(const std::vector<LinePair>& ps) {
  json a = json::array();
  for (const LinePair& p : ps) a.push_back(pair_str(p));
  return a;
}

void require(CheckReport& r, bool cond, const std::string& what) {
  if (!cond) {
    r.pass = false;
    r.witness["failures"].push_back(what);
  }
}

void carry(CheckReport& r, bool ok, const std::vector<std::string>& failures) {
  if (!ok) {
    r.pass = false;
    for (const auto& f : failures) r.witness["failures"].push_back(f);
  }
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs;
  auto add = [&](std::string id, std::string suite, std::string claim,
                 std::function<void(CheckReport&)> run) {
    defs.push_back(CheckDef{std::move(id), std::move(suite), std::move(claim), std::move(run)});
  };

  // ---- basis -------------------------------------------------------------
  add("s-basis-rank", "basis", "the six cubics s_ij are a basis of the space of cubics through the four points",
      [](CheckReport& r) {
        const Sections& S = sections();
        std::vector<MPoly> polys(S.s.begin(), S.s.end());
        int rk = rank_of(coefficient_matrix(polys, 3));
        r.witness["rank"] = rk;
        require(r, rk == 6, "rank of the six s_ij is not 6");
      });

  add("sigma-span-rank", "basis", "the six sigma_ij span a 4-dimensional subspace",
      [](CheckReport& r) {
        const Sections& S = sections();
        std::vector<MPoly> polys(S.sigma.begin(), S.sigma.end());
        int rk = rank_of(coefficient_matrix(polys, 3));
        r.witness["rank"] = rk;
        require(r, rk == 4, "rank of the six sigma_ij is not 4");
      });

  add("s-sigma-product", "basis", "s_ij * sigma_ij = Sigma for all six pairs", [](CheckReport& r) {
    const Sections& S = sections();
    for (std::size_t k = 0; k < 6; ++k)
      require(r, S.s[k] * S.sigma[k] == S.Sigma,
              "s*sigma != Sigma at basis index " + std::to_string(k));
  });

  add("sigma-s-expansion", "basis", "sigma_ij = eps (s_ik - s_ki - s_jk) in the s-basis",
      [](CheckReport& r) {
        const Sections& S = sections();
        for (std::size_t k = 0; k < 6; ++k) {
          MPoly expanded(S.X);
          for (std::size_t m = 0; m < 6; ++m)
            expanded = expanded + S.s[m].scaled(S.sigma_coords[k][m]);
          require(r, expanded == S.sigma[k],
                  "s-basis expansion of sigma disagrees at index " + std::to_string(k));
        }
      });

  add("vanishing-at-points", "basis", "all twelve sections vanish at the four base points",
      [](CheckReport& r) {
        const Sections& S = sections();
        for (std::size_t k = 0; k < 6; ++k)
          for (std::size_t p = 0; p < 4; ++p) {
            require(r, S.s[k].eval(S.points[p]) == 0, "s does not vanish at p" + std::to_string(p + 1));
            require(r, S.sigma[k].eval(S.points[p]) == 0,
                    "sigma does not vanish at p" + std::to_string(p + 1));
          }
      });

  add("divisor-class-sums", "basis", "anticanonical class of every section divisor",
      [](CheckReport& r) {
        for (const SectionLabel& m : all_labels()) {
          if (m.sign < 0) continue;
          DivisorClass sum;
          for (const LinePair& p : divisor_of_section(m)) sum = sum + line_class(p);
          require(r, sum == class_minus_K(), "divisor of " + m.str() + " does not sum to -K");
        }
      });

  // ---- characters ----------------------------------------------------------
  add("rho-v-coxeter", "characters", "the generator images on V satisfy the Coxeter relations",
      [](CheckReport& r) {
        const Sections& S = sections();
        require(r, S.rho_v.certified, "Coxeter relations failed");
        // well-definedness: two distinct words for (1,2,3,4,5)
        std::vector<int> w1 = {0, 1, 2, 3};
        std::vector<int> w2 = {0, 1, 3, 2, 3, 2};  // braid move on the tail
        require(r, compose_word(w1) == Perm::parse("(1,2,3,4,5)"), "word w1 is wrong");
        require(r, compose_word(w2) == Perm::parse("(1,2,3,4,5)"), "word w2 is wrong");
        require(r, rep_word_matrix(S.rho_v, w1) == rep_word_matrix(S.rho_v, w2),
                "two factorizations of the 5-cycle give different matrices");
        // spot values from the explicit lists
        RatMatrix five = rep_matrix(S.rho_v, Perm::parse("(1,2,3,4,5)"));
        require(r,
                vv_apply(five, vv_unit(static_cast<std::size_t>(s_index(1, 2)))) ==
                    vv_unit(static_cast<std::size_t>(s_index(3, 1))),
                "(1,2,3,4,5) does not send s12 to s31");
        require(r,
                vv_apply(five, vv_unit(static_cast<std::size_t>(s_index(2, 1)))) ==
                    vv_unit(static_cast<std::size_t>(s_index(2, 1))),
                "(1,2,3,4,5) does not fix s21");
      });

  add("chi-v", "characters", "the character of V is (6,0,-2,0,0,1,0), the unique 6-dimensional irreducible", [](CheckReport& r) {
    CharVector chi = character_of_rep(sections().rho_v);
    r.witness["chi"] = char_json(chi);
    require(r, chi == character_table()[6], "chi_V differs from chi_7");
    Rational ip = inner_product(chi, chi);
    r.witness["self_inner_product"] = ip.str();
    require(r, ip == 1, "<chi_V, chi_V> != 1");
  });

  add("det-rho-v", "characters", "the determinant of the V-action is the sign character",
      [](CheckReport& r) {
        CharVector det = determinant_character(sections().rho_v);
        r.witness["det"] = char_json(det);
        require(r, det == character_table()[1], "det of rho_V is not the sign character");
      });

  add("coset-characters", "characters", "coset characters of the cyclic, dihedral and affine subgroups",
      [](CheckReport& r) {
        CharVector cyc = coset_character({Perm::parse("(1,2,3,4,5)")});
        CharVector dih = coset_character({Perm::parse("(1,2,3,4,5)"), Perm::parse("(1,4)(2,3)")});
        CharVector aff = coset_character({Perm::parse("(1,2,3,4,5)"), Perm::parse("(1,2,4,3)")});
        r.witness["cyclic"] = char_json(cyc);
        r.witness["dihedral"] = char_json(dih);
        r.witness["affine"] = char_json(aff);
        require(r, cyc == CharVector{{24, 0, 0, 0, 0, 4, 0}}, "chi_M mismatch");
        require(r, dih == CharVector{{12, 0, 4, 0, 0, 2, 0}}, "chi_P mismatch");
        require(r, aff == CharVector{{6, 0, 2, 0, 2, 1, 0}}, "chi_D mismatch");
      });

  add("decompositions", "characters", "M decomposes as 2chi7+chi1+chi2+chi5+chi6, D as chi1+chi6, W' as chi2+chi5",
      [](CheckReport& r) {
        CharVector chiM = coset_character({Perm::parse("(1,2,3,4,5)")});
        CharVector chiD = coset_character({Perm::parse("(1,2,3,4,5)"), Perm::parse("(1,2,4,3)")});
        auto dM = decompose(chiM);
        auto dD = decompose(chiD);
        require(r, dM.has_value() && dD.has_value(), "coset character is not a character");
        if (dM) {
          json a = json::array();
          for (long long m : *dM) a.push_back(m);
          r.witness["M"] = a;
          require(r, *dM == std::array<long long, 7>{1, 1, 0, 0, 1, 1, 2},
                  "chi_M != chi_1 + chi_2 + chi_5 + chi_6 + 2 chi_7");
        }
        if (dD) {
          require(r, *dD == std::array<long long, 7>{1, 0, 0, 0, 0, 1, 0},
                  "chi_D != chi_1 + chi_6");
        }
        CharVector chiW = character_of_rep(quadrics().wprime);
        auto dW = decompose(chiW);
        require(r, dW.has_value() && *dW == std::array<long long, 7>{0, 1, 0, 0, 1, 0, 0},
                "chi_W' != chi_2 + chi_5");
        // <chi_M, chi_7> = 2
        require(r, inner_product(chiM, character_table()[6]) == 2, "<chi_M, chi_7> != 2");
      });

  add("table-orthonormal", "characters", "the character table rows are orthonormal and dimensions square-sum to 120",
      [](CheckReport& r) {
        long long dimsq = 0;
        for (int a = 0; a < 7; ++a) {
          dimsq += character_table()[static_cast<std::size_t>(a)].v[0] *
                   character_table()[static_cast<std::size_t>(a)].v[0];
          for (int b = 0; b < 7; ++b) {
            Rational ip = inner_product(character_table()[static_cast<std::size_t>(a)],
                                        character_table()[static_cast<std::size_t>(b)]);
            require(r, ip == (a == b ? 1 : 0), "orthonormality fails");
          }
        }
        require(r, dimsq == 120, "sum of squared dimensions is not 120");
      });

  // ---- lattice -------------------------------------------------------------
  add("petersen", "lattice", "line intersection rules, conic-bundle fibres, (-K)^2 = 5, Petersen graph",
      [](CheckReport& r) {
        PetersenReport p = petersen_checks();
        r.witness["minus_k_squared"] = p.minus_k_squared;
        carry(r, p.ok, p.failures);
      });

  add("divisor-s12", "lattice", "div(s12) = E14 + E24 + E23 + E35 + E15",
      [](CheckReport& r) {
        std::vector<LinePair> d = divisor_of_section(SectionLabel{false, 1, 2, 1});
        r.witness["divisor"] = pairs_json(d);
        std::vector<LinePair> expect = {{1, 4}, {2, 4}, {2, 3}, {3, 5}, {1, 5}};
        std::sort(expect.begin(), expect.end());
        require(r, d == expect, "div(s12) mismatch");
      });

  add("divisor-s21", "lattice", "div(s21) = sum of the E_{i,i+3}", [](CheckReport& r) {
    std::vector<LinePair> d = divisor_of_section(SectionLabel{false, 2, 1, 1});
    r.witness["divisor"] = pairs_json(d);
    std::vector<LinePair> expect;
    for (int i = 1; i <= 5; ++i) {
      int j = (i + 3 - 1) % 5 + 1;
      expect.push_back(make_pair_label(i, j));
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    require(r, d == expect, "div(s21) mismatch");
  });

  add("vanishing-orders", "lattice", "multiplicities of s12 at the base points are 2,1",
      [](CheckReport& r) {
        const Sections& S = sections();
        const MPoly& s12 = S.s[static_cast<std::size_t>(s_index(1, 2))];
        auto o1 = vanishing_order(s12, S.points[0]);
        auto o2 = vanishing_order(s12, S.points[1]);
        require(r, o1 && *o1 == 2, "ord_{p1} s12 != 2");
        require(r, o2 && *o2 == 1, "ord_{p2} s12 != 1");
      });

  // ---- pentagons -------------------------------------------------------------
  add("pentagon-counts", "pentagons", "24 oriented, 12 unoriented, 6 double pentagons",
      [](CheckReport& r) {
        std::size_t o = enumerate_pentagons(PentagonLevel::Oriented).size();
        std::size_t u = enumerate_pentagons(PentagonLevel::Unoriented).size();
        std::size_t d = enumerate_pentagons(PentagonLevel::Double).size();
        r.witness["oriented"] = o;
        r.witness["unoriented"] = u;
        r.witness["double"] = d;
        require(r, o == 24 && u == 12 && d == 6, "pentagon counts differ from 24/12/6");
      });

  add("orbit-structure", "pentagons", "M is a single orbit and the stabilizer of s21 is generated by (1,2,3,4,5)",
      [](CheckReport& r) {
        OrbitStructure os = orbit_structure();
        r.witness["orbit_size"] = os.orbit_size_s21;
        r.witness["stabilizer_order"] = os.stabilizer_s21.size();
        carry(r, os.labels_closed, os.failures);
        require(r, os.orbit_size_s21 == 24, "orbit of s21 is not all of M");
        std::vector<Perm> expect = group_closure({Perm::parse("(1,2,3,4,5)")});
        std::vector<Perm> got = os.stabilizer_s21;
        std::sort(got.begin(), got.end());
        require(r, got == expect, "stabilizer of s21 is not <(1,2,3,4,5)>");
      });

  add("pentagon-bijection", "pentagons", "labels correspond to oriented pentagons and divisors realize the neighbour",
      [](CheckReport& r) {
        PentagonBijectionReport p = pentagon_bijection_checks();
        carry(r, p.ok, p.failures);
      });

  add("sigma-involution", "pentagons", "the squaring map pairs each pentagon with its neighbour",
      [](CheckReport& r) {
        std::vector<Pentagon> unor = enumerate_pentagons(PentagonLevel::Unoriented);
        std::set<Pentagon> seen;
        int orbits = 0;
        for (const Pentagon& p : unor) {
          Pentagon n = canonical(squared(p), PentagonLevel::Unoriented);
          require(r, !(n == p), "sigma fixes the pentagon " + p.str());
          if (!seen.count(p)) {
            seen.insert(p);
            seen.insert(n);
            ++orbits;
          }
        }
        r.witness["orbits"] = orbits;
        require(r, orbits == 6, "sigma does not have 6 orbits on the 12 pentagons");
      });

  // ---- quadrics -------------------------------------------------------------
  add("phi-rank-kernel", "quadrics", "the substitution map Phi has rank 16 and 5-dimensional kernel W",
      [](CheckReport& r) {
        const QuadricsData& D = quadrics();
        r.witness["rank"] = D.phi_rank;
        r.witness["kernel_dim"] = D.W_basis.size();
        require(r, D.phi_rank == 16, "rank Phi != 16");
        require(r, D.W_basis.size() == 5, "dim ker Phi != 5");
      });

  add("q-basis", "quadrics", "the five differences q_ij form a basis of W", [](CheckReport& r) {
    const QuadricsData& D = quadrics();
    std::vector<std::vector<Rational>> rows;
    for (const auto& q : D.q) {
      require(r, phi_apply(q).is_zero(), "q does not lie in ker Phi");
      rows.push_back(q.coeff_vector());
    }
    int rk = rank_of(RatMatrix::from_rows(rows));
    r.witness["rank"] = rk;
    require(r, rk == 5, "the q_ij do not span a 5-dimensional space");
    for (const auto& w : D.W_basis) rows.push_back(w);
    require(r, rank_of(RatMatrix::from_rows(rows)) == 5, "span of the q_ij is not all of W");
  });

  add("phi-q-sigma", "quadrics", "every Q_ij maps to Sigma under substitution", [](CheckReport& r) {
    const QuadricsData& D = quadrics();
    for (std::size_t k = 0; k < 6; ++k)
      require(r, phi_apply(D.Q[k]) == sections().Sigma, "Phi(Q) != Sigma at index " + std::to_string(k));
  });

  add("wprime-action", "quadrics", "the explicit W' action equals the induced symmetric-square action",
      [](CheckReport& r) {
        WprimeReport w = wprime_checks();
        r.witness["chi_wprime"] = char_json(w.chi_wprime);
        r.witness["det_wprime"] = char_json(w.det_wprime);
        carry(r, w.ok, w.failures);
      });

  add("degree3-ideal", "quadrics", "the degree-3 part of the ideal is W*V, of dimension 25",
      [](CheckReport& r) {
        Degree3Report d = degree3_ideal_check();
        r.witness["h0_minus_3K"] = d.expected_image_dim;
        r.witness["kernel_dim"] = d.sym3_kernel_dim;
        r.witness["wv_rank"] = d.wv_rank;
        carry(r, d.ok, d.failures);
      });

  // ---- pfaffians -------------------------------------------------------------
  add("aprime-construction", "pfaffians", "the five entry families assemble the skew matrix A'",
      [](CheckReport& r) {
        const SkewLinearMatrix& A = a_prime();  // construction validates families and display
        require(r, A.is_skew(), "A' is not antisymmetric");
        require(r, A.e == written_out_entries(), "A' differs from the written-out matrix");
        require(r,
                A.at(0, 1) == vv_sub(vv_add(vv_unit(2), vv_unit(3)),
                                     vv_add(vv_unit(4), vv_unit(5))),
                "entry (Q12,Q13) is not s21+s23-s31-s32");
      });

  add("aprime-equivariance", "pfaffians", "A' is invariant under all four generators", [](CheckReport& r) {
    EquivarianceReport e = equivariance_check(a_prime());
    carry(r, e.ok, e.failures);
  });

  add("mainresult", "pfaffians", "the 15 sub-Pfaffians are the differences 2(Q_a - Q_b) and span W",
      [](CheckReport& r) {
        MainResultReport m = verify_mainresult();
        r.witness["span_dim"] = m.span_dim;
        json bij = json::array();
        const char* qnames[6] = {"Q12", "Q13", "Q21", "Q23", "Q31", "Q32"};
        for (const auto& e : m.bijection) {
          json item;
          item["deleted"] = {qnames[e.deleted.first], qnames[e.deleted.second]};
          item["pfaffian"] = std::string("2*") + qnames[e.a] + " - 2*" + qnames[e.b];
          bij.push_back(item);
        }
        r.witness["bijection"] = bij;
        carry(r, m.ok, m.failures);
      });

  add("full-pfaffian", "pfaffians", "diagnostic value of the 6x6 Pfaffian of A'",
      [](CheckReport& r) {
        MPoly pf = full_pfaffian(a_prime());
        r.witness["pfaffian"] = pf.str();
        r.witness["is_zero"] = pf.is_zero();
        // reported, not asserted
      });

  // ---- invariants -------------------------------------------------------------
  add("invariant-space", "invariants", "the invariant tensor is unique up to scale and A' realizes it",
      [](CheckReport& r) {
        InvariantSpaceReport i = invariant_space();
        r.witness["fixed_dim"] = i.fixed_dim;
        r.witness["character_multiplicity"] = i.character_multiplicity;
        r.witness["aprime_in_fixed_space"] = i.aprime_in_fixed_space;
        carry(r, i.ok, i.failures);
      });

  // ---- syzygies -------------------------------------------------------------
  add("syzygy-kernel", "syzygies", "the linear syzygies of the quadric basis form a 5-dimensional space",
      [](CheckReport& r) {
        SyzygyReport s = syzygy_kernel();
        r.witness["kernel_dim"] = s.kernel_dim;
        carry(r, s.ok, s.failures);
      });

  // ---- p1five -------------------------------------------------------------
  add("line-relations", "p1five", "the five coordinate triples satisfy c1 - c2 + c3 = 0",
      [](CheckReport& r) {
        const Parametrization& P = parametrization();
        for (int f = 0; f < 5; ++f) {
          const auto& tr = P.triples[static_cast<std::size_t>(f)];
          require(r, (tr[0] - tr[1] + tr[2]).is_zero(),
                  std::string("triple ") + std::to_string(f) + " violates c1-c2+c3=0");
        }
        require(r, (P.y[0] + P.y[1] + P.y[2]).is_zero(), "y1+y2+y3 != 0");
      });

  add("ten-equations", "p1five", "the ten trilinear equations vanish identically on the image",
      [](CheckReport& r) {
        TenEquationsReport t = verify_ten_equations();
        json eqs = json::array();
        for (const BiEquation& eq : ten_equations()) {
          json item;
          item["index"] = eq.index;
          item["form"] = eq.form.str();
          item["residual"] = parametrize(eq.form).str();
          eqs.push_back(item);
        }
        r.witness["equations"] = eqs;
        carry(r, t.ok, t.failures);
      });

  add("hilbert-burch", "p1five", "the four 3x3 minors of the Hilbert-Burch matrix vanish", [](CheckReport& r) {
    HilbertBurchReport h = verify_hilbert_burch();
    json minors = json::array();
    for (int skip = 0; skip < 4; ++skip) {
      json item;
      json rows = json::array();
      for (int row = 0; row < 4; ++row)
        if (row != skip) rows.push_back(row + 1);
      item["rows"] = rows;
      item["value"] = h.minors[static_cast<std::size_t>(skip)].str();
      minors.push_back(item);
    }
    r.witness["minors"] = minors;
    carry(r, h.ok, h.failures);
  });

  add("action-table", "p1five", "all 20 action-table cells verify as proportionality identities",
      [](CheckReport& r) {
        ActionTableReport a = verify_action_table();
        json cells = json::array();
        const char* fn[5] = {"v", "w", "z", "t", "s"};
        for (const auto& c : a.cells) {
          json item;
          item["tau"] = adjacent_transpositions()[static_cast<std::size_t>(c.gen_index)].to_cycles();
          item["triple"] = fn[c.triple_index];
          item["factor"] = c.factor;
          item["ok"] = c.ok;
          cells.push_back(item);
        }
        r.witness["cells"] = cells;
        require(r, a.cells.size() == 20, "expected 20 table cells");
        carry(r, a.ok, a.failures);
      });

  add("generation-diagram", "p1five", "the ten equations are generated from the first by the table substitutions",
      [](CheckReport& r) {
        DiagramReport d = generate_equations_diagram();
        json steps = json::array();
        for (const auto& s : d.steps) steps.push_back(s);
        r.witness["steps"] = steps;
        carry(r, d.ok, d.failures);
      });

  return defs;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = build_registry();
  return defs;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const CheckDef& d : check_registry())
      if (std::find(v.begin(), v.end(), d.suite) == v.end()) v.push_back(d.suite);
    return v;
  }();
  return names;
}

std::vector<CheckReport> run_checks(const std::string& suite) {
  std::vector<CheckReport> out;
  for (const CheckDef& d : check_registry()) {
    if (!suite.empty() && d.suite != suite) continue;
    CheckReport r;
    r.id = d.id;
    r.suite = d.suite;
    r.claim_ref = d.claim_ref;
    r.pass = true;
    r.witness = nlohmann::json::object();
    try {
      d.run(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.witness["exception"] = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0;
  for (const CheckReport& r : reports) {
    nlohmann::json item;
    item["check_id"] = r.id;
    item["suite"] = r.suite;
    item["claim_ref"] = r.claim_ref;
    item["status"] = r.pass ? "pass" : "fail";
    item["witness"] = r.witness;
    checks.push_back(item);
    if (r.pass) ++passed;
  }
  nlohmann::json out;
  out["summary"] = {{"total", reports.size()},
                    {"passed", passed},
                    {"failed", reports.size() - passed}};
  out["checks"] = checks;
  return out;
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const CheckReport& r : reports) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "/" << r.id << "  [" << r.claim_ref
       << "]\n";
    if (!r.pass && r.witness.contains("failures"))
      for (const auto& f : r.witness["failures"]) os << "      " << f.get<std::string>() << "\n";
    if (!r.pass && r.witness.contains("exception"))
      os << "      exception: " << r.witness["exception"].get<std::string>() << "\n";
    if (r.pass) ++passed;
  }
  os << passed << "/" << reports.size() << " checks passed\n";
  return os.str();
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace dp5
