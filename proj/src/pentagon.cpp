#include "dp5/pentagon.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dp5 {

namespace {
int mod5(int i) {
  int r = i % 5;
  return r < 0 ? r + 5 : r;
}
}  // namespace

int Pentagon::at(int i) const { return img[static_cast<std::size_t>(mod5(i))]; }

std::string Pentagon::str() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k < 5; ++k) os << (k ? "," : "") << img[static_cast<std::size_t>(k)];
  os << "]";
  return os.str();
}

Pentagon rotated(const Pentagon& p, int a) {
  Pentagon q;
  for (int i = 0; i < 5; ++i) q.img[static_cast<std::size_t>(i)] = p.at(i + a);
  return q;
}

Pentagon reflected(const Pentagon& p) {
  Pentagon q;
  for (int i = 0; i < 5; ++i) q.img[static_cast<std::size_t>(i)] = p.at(-i);
  return q;
}

Pentagon squared(const Pentagon& p) {
  Pentagon q;
  for (int i = 0; i < 5; ++i) q.img[static_cast<std::size_t>(i)] = p.at(2 * i);
  return q;
}

Pentagon acted(const Perm& g, const Pentagon& p) {
  Pentagon q;
  for (int i = 0; i < 5; ++i) q.img[static_cast<std::size_t>(i)] = g(p.at(i));
  return q;
}

namespace {

// the source reparametrizations i -> a*i + b defining each equivalence level
std::vector<std::pair<int, int>> level_maps(PentagonLevel level) {
  std::vector<int> mults;
  switch (level) {
    case PentagonLevel::Oriented: mults = {1}; break;
    case PentagonLevel::Unoriented: mults = {1, 4}; break;
    case PentagonLevel::Double: mults = {1, 2, 3, 4}; break;
  }
  std::vector<std::pair<int, int>> maps;
  for (int a : mults)
    for (int b = 0; b < 5; ++b) maps.push_back({a, b});
  return maps;
}

Pentagon reparametrized(const Pentagon& p, int a, int b) {
  Pentagon q;
  for (int i = 0; i < 5; ++i) q.img[static_cast<std::size_t>(i)] = p.at(a * i + b);
  return q;
}

}  // namespace

Pentagon canonical(const Pentagon& p, PentagonLevel level) {
  Pentagon best = p;
  for (auto [a, b] : level_maps(level)) {
    Pentagon q = reparametrized(p, a, b);
    if (q.img < best.img) best = q;
  }
  return best;
}

bool same_pentagon(const Pentagon& a, const Pentagon& b, PentagonLevel level) {
  return canonical(a, level) == canonical(b, level);
}

std::vector<Pentagon> enumerate_pentagons(PentagonLevel level) {
  std::set<Pentagon> reps;
  std::array<int, 5> img{1, 2, 3, 4, 5};
  do {
    Pentagon p;
    p.img = img;
    reps.insert(canonical(p, level));
  } while (std::next_permutation(img.begin(), img.end()));
  return std::vector<Pentagon>(reps.begin(), reps.end());
}

std::vector<LinePair> pentagon_sides(const Pentagon& p) {
  std::vector<LinePair> sides;
  for (int i = 0; i < 5; ++i) sides.push_back(make_pair_label(p.at(i), p.at(i + 1)));
  std::sort(sides.begin(), sides.end());
  return sides;
}

namespace {

// rho_V(g) * e_{s21} for every g, in all_perms() order
const std::vector<VVector>& orbit_vectors_s21() {
  static const std::vector<VVector> vs = [] {
    const Sections& S = sections();
    VVector e = vv_unit(static_cast<std::size_t>(s_index(2, 1)));
    std::vector<VVector> v;
    v.reserve(120);
    for (const Perm& g : all_perms()) v.push_back(vv_apply(rep_matrix(S.rho_v, g), e));
    return v;
  }();
  return vs;
}

Perm witness_perm(const SectionLabel& m) {
  const Sections& S = sections();
  VVector target = S.label_vector(m);
  const auto& vs = orbit_vectors_s21();
  for (std::size_t k = 0; k < vs.size(); ++k)
    if (vs[k] == target) return all_perms()[k];
  throw std::logic_error("label " + m.str() + " is not in the orbit of s21");
}

}  // namespace

OrbitStructure orbit_structure() {
  const Sections& S = sections();
  OrbitStructure os;
  for (const SectionLabel& m : all_labels()) {
    std::array<std::string, 4> row;
    for (int g = 0; g < 4; ++g) {
      VVector im = vv_apply(S.rho_v.gens[static_cast<std::size_t>(g)], S.label_vector(m));
      auto lbl = S.label_of_vector(im);
      if (!lbl) {
        os.labels_closed = false;
        os.failures.push_back("generator " + std::to_string(g) + " maps " + m.str() +
                              " outside M: " + vv_str(im));
        row[static_cast<std::size_t>(g)] = "?";
      } else {
        row[static_cast<std::size_t>(g)] = lbl->str();
      }
    }
    os.action_table.emplace(m.str(), row);
  }

  std::set<VVector> orbit;
  VVector e = vv_unit(static_cast<std::size_t>(s_index(2, 1)));
  const auto& vs = orbit_vectors_s21();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    orbit.insert(vs[k]);
    if (vs[k] == e) os.stabilizer_s21.push_back(all_perms()[k]);
  }
  os.orbit_size_s21 = orbit.size();
  return os;
}

Pentagon pentagon_of_label(const SectionLabel& m) {
  Perm g = witness_perm(m);
  Pentagon p;
  for (int i = 0; i < 5; ++i) p.img[static_cast<std::size_t>(i)] = g(i + 1);
  return canonical(p, PentagonLevel::Oriented);
}

SectionLabel sigma_of_label(const SectionLabel& m) {
  const Sections& S = sections();
  static const Perm delta = Perm::parse("(1,2,4,3)");
  Perm g = witness_perm(m);
  VVector im = vv_apply(rep_matrix(S.rho_v, g.compose(delta)),
                        vv_unit(static_cast<std::size_t>(s_index(2, 1))));
  auto lbl = S.label_of_vector(im);
  if (!lbl) throw std::logic_error("sigma image left M");
  return *lbl;
}

PentagonBijectionReport pentagon_bijection_checks() {
  const Sections& S = sections();
  PentagonBijectionReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };

  // each section divisor is a pentagon in the Petersen graph
  for (const SectionLabel& m : all_labels()) {
    if (m.sign < 0) continue;
    std::vector<LinePair> div = divisor_of_section(m);
    std::set<LinePair> uniq(div.begin(), div.end());
    if (div.size() != 5 || uniq.size() != 5) {
      fail("divisor of " + m.str() + " does not consist of 5 distinct lines");
      continue;
    }
    for (const LinePair& a : div) {
      int deg = 0;
      for (const LinePair& b : div)
        if (!(a == b) && pairs_disjoint(a, b)) ++deg;
      if (deg != 2) fail("divisor of " + m.str() + " is not a 5-cycle at vertex " + pair_str(a));
    }
  }

  // div(m) realizes the neighbour of pentagon(m)
  for (const SectionLabel& m : all_labels()) {
    std::vector<LinePair> div =
        divisor_of_section(SectionLabel{m.is_sigma, m.i, m.j, 1});
    Pentagon nb = squared(pentagon_of_label(m));
    if (pentagon_sides(nb) != div)
      fail("divisor of " + m.str() + " is not the side set of the neighbouring pentagon");
  }

  // equivariance of divisors under the generators
  for (int g = 0; g < 4; ++g) {
    const Perm& perm = adjacent_transpositions()[static_cast<std::size_t>(g)];
    for (const SectionLabel& m : all_labels()) {
      if (m.sign < 0) continue;
      VVector im = vv_apply(S.rho_v.gens[static_cast<std::size_t>(g)], S.label_vector(m));
      auto lbl = S.label_of_vector(im);
      if (!lbl) {
        fail("orbit closure failed for " + m.str());
        continue;
      }
      std::vector<LinePair> lhs = divisor_of_section(SectionLabel{lbl->is_sigma, lbl->i, lbl->j, 1});
      std::vector<LinePair> rhs;
      for (const LinePair& p : divisor_of_section(m))
        rhs.push_back(make_pair_label(perm(p.first), perm(p.second)));
      std::sort(rhs.begin(), rhs.end());
      if (lhs != rhs)
        fail("divisor equivariance fails for generator " + perm.to_cycles() + " on " + m.str());
    }
  }

  // double pentagons: div(s_ij) and div(sigma_ij) partition the ten lines
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = s_pair(k);
    std::vector<LinePair> a = divisor_of_section(SectionLabel{false, i, j, 1});
    std::vector<LinePair> b = divisor_of_section(SectionLabel{true, i, j, 1});
    std::set<LinePair> all(a.begin(), a.end());
    for (const LinePair& p : b) all.insert(p);
    if (all.size() != 10)
      fail("divisors of s" + std::to_string(i) + std::to_string(j) +
           " and sigma do not partition the ten lines");
  }

  // sigma on labels: order 4, sigma^2 = -1, odd under negation, and it
  // exchanges +-s_ij with +-sigma_ij of the same pair. A uniform sign
  // sigma(s_ij) = +sigma_ij is impossible: equivariance under the left action
  // forces opposite signs on the two C3-orbits. The + sign holds on the orbit
  // of s21, the - sign on the orbit of s12.
  for (const SectionLabel& m : all_labels()) {
    SectionLabel s1 = sigma_of_label(m);
    if (sigma_of_label(m.negated()) != s1.negated())
      fail("sigma does not commute with negation on " + m.str());
    SectionLabel s2 = sigma_of_label(s1);
    if (s2 != m.negated()) fail("sigma^2 != -1 on " + m.str());
    if (s1.is_sigma == m.is_sigma || s1.i != m.i || s1.j != m.j)
      fail("sigma(" + m.str() + ") is not +-sigma/s of the same pair: got " + s1.str());
  }
  {
    // frozen sign pattern: + on the C3-orbit {s21, s13, s32}, - on {s12, s23, s31}
    const bool plus[6] = {false, true, true, false, false, true};  // s-basis order
    for (int k = 0; k < 6; ++k) {
      auto [i, j] = s_pair(k);
      SectionLabel got = sigma_of_label(SectionLabel{false, i, j, 1});
      SectionLabel want{true, i, j, plus[k] ? 1 : -1};
      if (got != want)
        fail("sigma(s" + std::to_string(i) + std::to_string(j) + ") = " + got.str() +
             ", expected " + want.str());
    }
  }

  // sigma is not induced by the linear map L(s_ij) = sigma_ij
  {
    VVector sigma12 = S.sigma_coords[static_cast<std::size_t>(s_index(1, 2))];
    VVector image{};
    for (std::size_t k = 0; k < 6; ++k)
      image = vv_add(image, vv_scale(S.sigma_coords[k], sigma12[k]));
    VVector minus_s12 = vv_neg(vv_unit(static_cast<std::size_t>(s_index(1, 2))));
    if (image == minus_s12) fail("L(sigma12) = -s12: sigma would be linear");
  }

  return rep;
}

}  // namespace dp5
