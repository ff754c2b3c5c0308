#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <string>

#include "dp5/character.hpp"
#include "dp5/checks.hpp"
#include "dp5/lattice.hpp"
#include "dp5/pentagon.hpp"
#include "dp5/pfaffian.hpp"
#include "dp5/quadrics.hpp"
#include "dp5/sections.hpp"

namespace {

using dp5::VVector;
using nlohmann::json;

std::string vv_latex(const VVector& v) {
  static const char* names[6] = {"s_{12}", "s_{13}", "s_{21}", "s_{23}", "s_{31}", "s_{32}"};
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < 6; ++k) {
    if (v[k] == 0) continue;
    dp5::Rational mag = v[k] < 0 ? dp5::Rational(-v[k]) : v[k];
    if (first)
      out += v[k] < 0 ? "-" : "";
    else
      out += v[k] < 0 ? " - " : " + ";
    if (mag != 1) out += mag.str();
    out += names[k];
    first = false;
  }
  return first ? "0" : out;
}

int cmd_show_matrix(const std::string& format) {
  const dp5::SkewLinearMatrix& A = dp5::a_prime();
  static const char* qnames[6] = {"Q12", "Q13", "Q21", "Q23", "Q31", "Q32"};
  if (format == "json") {
    json rows = json::array();
    for (std::size_t p = 0; p < 6; ++p) {
      json row = json::array();
      for (std::size_t q = 0; q < 6; ++q) row.push_back(dp5::vv_str(A.at(p, q)));
      rows.push_back(row);
    }
    json out;
    out["basis"] = {qnames[0], qnames[1], qnames[2], qnames[3], qnames[4], qnames[5]};
    out["entries"] = rows;
    std::cout << out.dump(2) << "\n";
  } else if (format == "latex") {
    std::cout << "\\begin{pmatrix}\n";
    for (std::size_t p = 0; p < 6; ++p) {
      for (std::size_t q = 0; q < 6; ++q)
        std::cout << vv_latex(A.at(p, q)) << (q + 1 < 6 ? " & " : "");
      std::cout << (p + 1 < 6 ? " \\\\" : "") << "\n";
    }
    std::cout << "\\end{pmatrix}\n";
  } else {
    for (std::size_t p = 0; p < 6; ++p) {
      std::cout << qnames[p] << ":";
      for (std::size_t q = 0; q < 6; ++q) std::cout << "  [" << dp5::vv_str(A.at(p, q)) << "]";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_show_quadrics(const std::string& format) {
  const dp5::QuadricsData& D = dp5::quadrics();
  static const char* qnames[6] = {"Q12", "Q13", "Q21", "Q23", "Q31", "Q32"};
  static const char* qq[5] = {"q12", "q13", "q21", "q23", "q31"};
  if (format == "json") {
    json out;
    for (std::size_t k = 0; k < 6; ++k) {
      json item;
      item["poly"] = D.Q[k].to_poly().str();
      json gram = json::array();
      for (std::size_t p = 0; p < 6; ++p) {
        json row = json::array();
        for (std::size_t q = 0; q < 6; ++q) row.push_back(D.Q[k].gram(p, q).str());
        gram.push_back(row);
      }
      item["gram"] = gram;
      out["Q"][qnames[k]] = item;
    }
    for (std::size_t k = 0; k < 5; ++k) out["q"][qq[k]] = D.q[k].to_poly().str();
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < 6; ++k)
      std::cout << qnames[k] << " = " << D.Q[k].to_poly().str() << "\n";
    for (std::size_t k = 0; k < 5; ++k)
      std::cout << qq[k] << " = " << D.q[k].to_poly().str() << "\n";
  }
  return 0;
}

int cmd_show_character_table(const std::string& format) {
  static const char* cols[7] = {"1",           "(1,2)",       "(1,2)(3,4)", "(1,2,3)",
                                "(1,2,3,4)",   "(1,2,3,4,5)", "(1,2,3)(4,5)"};
  if (format == "json") {
    json out;
    out["classes"] = json::array();
    for (int k = 0; k < 7; ++k) out["classes"].push_back(cols[k]);
    json sizes = json::array();
    for (int s : dp5::conj_classes().sizes) sizes.push_back(s);
    out["class_sizes"] = sizes;
    for (int k = 0; k < 7; ++k) {
      json row = json::array();
      for (int c = 0; c < 7; ++c)
        row.push_back(dp5::character_table()[static_cast<std::size_t>(k)].v[c]);
      out["chi" + std::to_string(k + 1)] = row;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "class:";
    for (int k = 0; k < 7; ++k) std::cout << "  " << cols[k];
    std::cout << "\nsize: ";
    for (int s : dp5::conj_classes().sizes) std::cout << "  " << s;
    std::cout << "\n";
    for (int k = 0; k < 7; ++k)
      std::cout << "chi" << (k + 1) << ": "
                << dp5::character_table()[static_cast<std::size_t>(k)].str() << "\n";
  }
  return 0;
}

int cmd_pentagons_list(const std::string& kind, const std::string& format) {
  dp5::PentagonLevel level;
  if (kind == "oriented")
    level = dp5::PentagonLevel::Oriented;
  else if (kind == "unoriented")
    level = dp5::PentagonLevel::Unoriented;
  else if (kind == "double")
    level = dp5::PentagonLevel::Double;
  else {
    std::cerr << "unknown pentagon kind: " << kind << "\n";
    return 2;
  }
  std::vector<dp5::Pentagon> ps = dp5::enumerate_pentagons(level);
  if (format == "json") {
    json out;
    out["kind"] = kind;
    out["count"] = ps.size();
    json list = json::array();
    for (const dp5::Pentagon& p : ps) {
      json item = json::array();
      for (int v : p.img) item.push_back(v);
      list.push_back(item);
    }
    out["pentagons"] = list;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const dp5::Pentagon& p : ps) std::cout << p.str() << "\n";
    std::cout << ps.size() << " " << kind << " pentagons\n";
  }
  return 0;
}

int cmd_act(const std::string& perm_str, const std::string& on) {
  dp5::Perm g = dp5::Perm::parse(perm_str);
  auto label = dp5::parse_label(on);
  if (!label) {
    std::cerr << "cannot parse label: " << on << "\n";
    return 2;
  }
  const dp5::Sections& S = dp5::sections();
  VVector image = dp5::vv_apply(dp5::rep_matrix(S.rho_v, g), S.label_vector(*label));
  auto out = S.label_of_vector(image);
  if (out)
    std::cout << out->str() << "\n";
  else
    std::cout << dp5::vv_str(image) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the S5-equivariant quintic Del Pezzo surface"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run check suites");
  verify->fallthrough();
  std::string suite;
  bool run_all = false;
  verify->add_flag("--all", run_all, "run every suite");
  verify->add_option("suite", suite,
                     "one of: basis, characters, lattice, pentagons, quadrics, pfaffians, "
                     "invariants, syzygies, p1five");

  // show
  auto* show = app.add_subcommand("show", "print objects");
  show->fallthrough();
  std::string what;
  show->add_option("object", what, "matrix | quadrics | character-table | pentagons")->required();
  std::string show_format;
  show->add_option("--format", show_format, "text | latex | json (matrix only)");

  // act
  auto* act = app.add_subcommand("act", "apply a permutation to a section label");
  act->fallthrough();
  std::string perm_str = "id", on = "s12";
  act->add_option("--perm", perm_str, "permutation in cycle notation, e.g. \"(1,2,3,4,5)\"")
      ->required();
  act->add_option("--on", on, "label: s12, sigma13, -s21, ...")->required();

  // pentagons
  auto* pent = app.add_subcommand("pentagons", "pentagon listings and graphs");
  pent->fallthrough();
  auto* pent_list = pent->add_subcommand("list", "list pentagons of one kind");
  pent_list->fallthrough();
  std::string kind = "unoriented";
  pent_list->add_option("--kind", kind, "oriented | unoriented | double")->capture_default_str();
  auto* pent_dot = pent->add_subcommand("dot", "Petersen graph in DOT, optionally highlighting a pair");
  pent_dot->fallthrough();
  std::string pair;
  pent_dot->add_option("--pair", pair, "pair ij with 1 <= i != j <= 3, e.g. 12");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (!run_all && suite.empty()) {
        std::cerr << "verify needs a suite name or --all\n";
        return 2;
      }
      if (!suite.empty()) {
        const auto& names = dp5::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
          std::cerr << "unknown suite: " << suite << "\n";
          return 2;
        }
      }
      std::vector<dp5::CheckReport> reports = dp5::run_checks(run_all ? "" : suite);
      if (format == "json")
        std::cout << dp5::reports_to_json(reports).dump(2) << "\n";
      else
        std::cout << dp5::reports_to_text(reports);
      return dp5::all_passed(reports) ? 0 : 1;
    }
    if (show->parsed()) {
      std::string fmt = show_format.empty() ? format : show_format;
      if (what == "matrix") return cmd_show_matrix(fmt);
      if (what == "quadrics") return cmd_show_quadrics(fmt);
      if (what == "character-table") return cmd_show_character_table(fmt);
      if (what == "pentagons") return cmd_pentagons_list("unoriented", fmt);
      std::cerr << "unknown object: " << what << "\n";
      return 2;
    }
    if (act->parsed()) return cmd_act(perm_str, on);
    if (pent->parsed()) {
      if (pent_list->parsed()) return cmd_pentagons_list(kind, format);
      if (pent_dot->parsed()) {
        if (pair.empty()) {
          std::cout << dp5::petersen_dot(nullptr);
        } else {
          if (pair.size() != 2 || pair[0] < '1' || pair[0] > '3' || pair[1] < '1' ||
              pair[1] > '3' || pair[0] == pair[1]) {
            std::cerr << "bad --pair, want ij with 1 <= i != j <= 3\n";
            return 2;
          }
          std::pair<int, int> ij{pair[0] - '0', pair[1] - '0'};
          std::cout << dp5::petersen_dot(&ij);
        }
        return 0;
      }
      std::cerr << "pentagons needs a subcommand: list or dot\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
