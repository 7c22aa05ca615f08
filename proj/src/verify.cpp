#include "nilmetriq/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nilmetriq/catalog.hpp"
#include "nilmetriq/curvature.hpp"
#include "nilmetriq/exceptional.hpp"
#include "nilmetriq/linalg.hpp"
#include "nilmetriq/symmetry.hpp"

namespace nilmetriq {

extern const char* const kEmbeddedReferenceTables;

const nlohmann::json& reference_tables() {
  static const nlohmann::json j = nlohmann::json::parse(kEmbeddedReferenceTables);
  return j;
}

std::string CriterionResult::line(std::size_t max_failures) const {
  std::ostringstream os;
  os << (pass() ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << checks << " checks, " << failures.size()
     << " failed, " << std::fixed;
  os.precision(1);
  os << seconds << " s)";
  for (std::size_t i = 0; i < failures.size() && i < max_failures; ++i) os << "\n    " << failures[i];
  if (failures.size() > max_failures) os << "\n    ... " << failures.size() - max_failures << " more";
  return os.str();
}

nlohmann::json CriterionResult::to_json() const {
  return {{"id", id}, {"title", title}, {"pass", pass()}, {"checks", checks}, {"failures", failures}};
}

namespace {

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
    return ok;
  }
};

const CatalogEntry& entry(const std::string& name) {
  const CatalogEntry* ce = find_entry(builtin_catalog(), name);
  if (!ce) throw std::logic_error("catalog is missing " + name);
  return *ce;
}

std::vector<Position> positions(const nlohmann::json& j) {
  std::vector<Position> out;
  for (const auto& p : j) out.push_back({p[0].get<std::size_t>() - 1, p[1].get<std::size_t>() - 1});
  return out;
}

std::string str(const std::vector<Position>& ps) {
  std::string s;
  for (const auto& p : ps) s += to_string(p);
  return s;
}

std::vector<std::string> cslat_names() {
  std::vector<std::string> out;
  for (const auto& row : reference_tables()["table1"])
    if (row["cslat"].get<bool>()) out.push_back(row["name"].get<std::string>());
  return out;
}

SigmaPoint random_point(const SigmaPattern& pat, Sampler& s, double zero_p) {
  std::vector<Rational> v;
  for (std::size_t k = 0; k < pat.parameter_count(); ++k)
    v.push_back(pat.is_diagonal_parameter(k) ? s.positive_rational(7, 4) : (s.coin(zero_p) ? Rational(0) : s.rational(7, 4)));
  return SigmaPoint(pat, v);
}

RatMatrix random_diagonal(Sampler& s) {
  std::vector<Rational> d;
  for (int i = 0; i < 6; ++i) d.push_back(s.positive_rational(9, 5));
  return RatMatrix::diagonal(d);
}

void catalog_integrity(Tally& t) {
  const auto& cat = builtin_catalog();
  auto all = catalog();
  t.check(cat.size() == 34, "catalog has " + std::to_string(cat.size()) + " entries");
  t.check(all.size() == 38, "catalog() returned " + std::to_string(all.size()) + " tuples");
  for (const auto& L : all) t.check(satisfies_jacobi(L), L.name() + " fails Jacobi");
  for (const auto& row : reference_tables()["table1"]) {
    auto name = row["name"].get<std::string>();
    const CatalogEntry* ce = find_entry(cat, name);
    if (!t.check(ce != nullptr, name + " missing")) continue;
    int step = nilpotency_step(ce->original_algebra());
    t.check(step == row["step"].get<int>(), name + " step " + std::to_string(step));
    t.check(nilpotency_step(ce->algebra()) == step, name + " standard basis changes the step");
  }
}

void classification(Tally& t) {
  std::size_t csla = 0, cslat = 0;
  std::vector<std::string> non_triangular;
  for (const auto& row : reference_tables()["table1"]) {
    auto name = row["name"].get<std::string>();
    Classification c = classify(entry(name).algebra());
    csla += c != Classification::NotCSLA;
    cslat += c == Classification::CSLAT;
    if (c == Classification::CSLA_NotTriangular) non_triangular.push_back(name);
    t.check((c != Classification::NotCSLA) == row["csla"].get<bool>(), name + " CSLA mismatch");
    t.check((c == Classification::CSLAT) == row["cslat"].get<bool>(), name + " CSLAT mismatch");
  }
  t.check(csla == 23, std::to_string(csla) + " CSLAs");
  t.check(cslat == 20, std::to_string(cslat) + " CSLATs");
  t.check(non_triangular == std::vector<std::string>{"h15", "h19-", "h26+"}, "wrong non-triangular set");
}

void derivation_dimensions(Tally& t) {
  const auto& ref = reference_tables();
  auto names = cslat_names();
  t.check(names.size() == 20, "reference lists " + std::to_string(names.size()) + " CSLATs");
  for (const auto& name : names) {
    auto D = derivation_space(entry(name).algebra());
    std::size_t a = ref["aut_free"].at(name).size();
    std::size_t s = ref["sigma"].at(name).size();
    t.check(D.dim() == a, name + " dim Der " + std::to_string(D.dim()) + ", table " + std::to_string(a));
    t.check(D.dim() + sigma_pattern(D).parameter_count() == 21, name + " dim Der + |Sigma| != 21");
    t.check(a + s == 21, name + " table counts do not add to 21");
  }
}

void patterns(Tally& t) {
  const auto& ref = reference_tables();
  for (const auto& name : cslat_names()) {
    auto D = derivation_space(entry(name).algebra());
    auto free = aut0_pattern(D).free_positions;
    auto want = positions(ref["aut_free"].at(name));
    t.check(free == want, name + " Aut0 free " + str(free) + " expected " + str(want));
    auto sig = sigma_pattern(D).parameters;
    auto want_s = positions(ref["sigma"].at(name));
    t.check(sig == want_s, name + " Sigma " + str(sig) + " expected " + str(want_s));
  }
}

void component_groups(Tally& t) {
  for (const auto& [name, label] : reference_tables()["groups"].items()) {
    const auto& ce = entry(name);
    LieAlgebra L = ce.algebra();
    auto G = component_group(L, ce.d_generators);
    std::string got = identify_group(G);
    t.check(got == label.get<std::string>(), name + " closure is " + got + " (order " + std::to_string(G.order()) +
                                                 "), expected " + label.get<std::string>());
    bool autos = true;
    for (const auto& g : G.elements) autos = autos && is_automorphism(L, g);
    t.check(autos, name + " has a non-automorphism element");
    if (label.get<std::string>().rfind("Z2", 0) == 0)
      t.check(G.order() == (std::size_t{1} << derivation_space(L).diag_dim), name + " order differs from 2^diag_dim");
  }
}

void isotropy_sweeps(Tally& t) {
  for (const auto& [name, rows] : reference_tables()["sweeps"].items()) {
    const auto& ce = entry(name);
    LieAlgebra L = ce.algebra();
    auto D = component_group(L, ce.d_generators);
    t.check(rows.size() == sigma_pattern(L).offdiagonal_parameters().size() + 1, name + " row count");
    for (std::size_t p = 0; p < rows.size(); ++p) {
      std::map<std::string, std::size_t> want;
      for (const auto& [label, count] : rows[p].items()) want[label] = count.get<std::size_t>();
      try {
        auto res = isotropy_sweep(L, D, p, 1);
        t.check(res.tally == want, name + " p=" + std::to_string(p) + " got " + res.tally_json().dump());
        std::size_t ties = 0;
        for (const auto& r : res.rows) ties += r.tie_break;
        t.check(ties == 0, name + " p=" + std::to_string(p) + " needed " + std::to_string(ties) + " tie-breaks");
      } catch (const std::runtime_error& e) {
        t.check(false, name + " p=" + std::to_string(p) + ": " + e.what());
      }
    }
  }
}

void exceptional_isotropy(Tally& t) {
  // r = 1/2 gives sqrt(1 - r^2) = sqrt(3)/2.
  Rational r(1, 2);
  QuadraticSurd w(Rational(0), Rational(1, 2), 3);
  t.check(w * w == QuadraticSurd::rational(Rational(1) - r * r, 3), "w^2 != 1 - r^2");
  for (const auto& pr : exceptional_pairs(r, w)) {
    const auto& ce = entry(pr.algebra);
    LieAlgebra L = ce.algebra();
    RatMatrix phi(6, 6);
    bool rational = true;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        rational = rational && pr.phi(i, j).b().is_zero();
        phi(i, j) = pr.phi(i, j).a();
      }
    t.check(rational, pr.algebra + " phi_r is not rational");
    t.check(is_automorphism(L, phi), pr.algebra + " phi_r is not an automorphism");
    SurdMatrix g = pr.sigma.transpose() * pr.sigma;
    t.check(pr.phi.transpose() * g == g * pr.phi, pr.algebra + " phi_r^T g != g phi_r");
    t.check(pr.phi.transpose() * g * pr.phi == g, pr.algebra + " phi_r is not an isometry");
    auto pat = sigma_pattern(L);
    bool inside = true;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        if (pr.sigma(i, j).is_zero()) continue;
        bool one = std::find(pat.fixed_one_diag.begin(), pat.fixed_one_diag.end(), Position{i, j}) != pat.fixed_one_diag.end();
        inside = inside && (pat.parameter_at({i, j}).has_value() || (one && pr.sigma(i, j) == QuadraticSurd::rational(1, 3)));
      }
    t.check(inside, pr.algebra + " sigma_r is not in Sigma");
    t.check(!component_group(L, ce.d_generators).contains(phi), pr.algebra + " phi_r lies in D");
  }
}

// Every ordered pair (X, Z) of basis vectors, with no i<k reduction.
Subspace symmetry_brute_force(const LieAlgebra& L, const RatMatrix& g) {
  const std::size_t n = L.dim();
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      RatVector row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = symmetry_form(L, g, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
      rows.push_back(row);
    }
  return Subspace(n, kernel_basis(RatMatrix::from_rows(rows)));
}

void symmetry_theorems(Tally& t) {
  for (const auto& name : theorem_names())
    for (const auto& r : theorem_verifier(name, 25, 2024)) {
      std::string tag = r.theorem + " / " + r.algebra + " / " + r.branch;
      // A failing branch stops at its first counterexample.
      if (t.check(r.pass, r.counterexample.value_or(tag + " failed")))
        t.check(r.samples >= 25 && r.controls > 0, tag + " too few samples");
    }

  LieAlgebra L = entry("h28").algebra();
  auto pat = sigma_pattern(L);
  SigmaPoint base = SigmaPoint::trivial(pat);
  auto vec = [](std::initializer_list<Rational> xs) { return RatVector(xs); };
  struct Row {
    SigmaPoint p;
    RatMatrix A;
    std::vector<RatVector> s;
  };
  std::vector<Row> rows{
      {base.with({{"s8", Rational(1, 2)}}), RatMatrix{{0, -1, 1}, {-1, 0, -1}, {0, -1, 0}}, {}},
      {base, RatMatrix{{0, -1, 0}, {-1, 0, -1}, {0, -1, 0}}, {vec({0, 1, 0, -1, 0, 1})}},
      {base.with({{"s3", Rational(2)}, {"s4", Rational(1)}, {"s5", Rational(2)}, {"s7", Rational(5, 4)}, {"s8", Rational(1, 2)}}),
       RatMatrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}},
       {vec({0, 1, 0, 0, 0, -4}), vec({0, 0, 0, 1, Rational(-1, 2), -5})}},
      {base.with({{"s3", Rational(1)}, {"s7", Rational(2)}}), RatMatrix(3, 3),
       {vec({0, 1, 0, 0, 0, -1}), vec({0, 0, 1, 0, -2, 0}), vec({0, 0, 0, 1, 0, -3})}}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string tag = "h28 table row " + std::to_string(i + 1);
    t.check(h28_A_matrix(rows[i].p) == rows[i].A, tag + " A matrix");
    auto res = index_of_symmetry(L, metric_of(rows[i].p));
    t.check(Subspace(6, res.basis) == Subspace(6, rows[i].s), tag + " distribution of symmetry");
  }

  Sampler s(77);
  for (int k = 0; k < 50; ++k) {
    SigmaPoint p = random_point(pat, s, 0.5);
    std::size_t want = symmetry_brute_force(L, metric_of(p)).dim();
    t.check(3 - rank(h28_A_matrix(p)) == want, "h28 rank formula at sample " + std::to_string(k));
  }
  for (int k = 0; k < 25; ++k) {
    auto res = index_of_symmetry(L, metric_of(random_point(pat, s, 0.5)));
    t.check(!Subspace(6, res.basis).contains(unit_vector(6, 5)), "e6 in s at h28 sample " + std::to_string(k));
  }
}

void nilsolitons(Tally& t) {
  for (const auto& name : nilsoliton_algebras()) {
    LieAlgebra L = entry(name).algebra();
    auto Der = derivation_space(L);
    RatMatrix g = nilsoliton_witness(name);
    auto n = nilsoliton_check(Der, g);
    t.check(n.nilsoliton, name + " witness is not a nilsoliton");
    t.check(n.residual.is_zero(), name + " residual " + n.residual.str());
    t.check(is_derivation(L, n.D), name + " D is not a derivation");
    auto idx = index_of_symmetry(L, g).index;
    t.check(idx == 1, name + " witness has index " + std::to_string(idx));
    t.check(!nilsoliton_check(Der, RatMatrix::identity(6)).nilsoliton, name + " identity metric is a nilsoliton");
  }
}

void properties(Tally& t) {
  const std::vector<std::string> five{"h9", "h10", "h21", "h22", "h28"};
  const auto cslat = cslat_names();
  Sampler s(10);
  auto pick = [&](const std::vector<std::string>& v) -> const std::string& { return v[s.index(v.size())]; };

  for (int k = 0; k < 50; ++k) {
    // Jacobi survives a random change of basis.
    const auto& ce = builtin_catalog()[s.index(builtin_catalog().size())];
    RatMatrix p = RatMatrix::identity(6);
    for (std::size_t i = 0; i < 6; ++i) {
      p(i, i) = s.nonzero_rational(5, 3);
      for (std::size_t j = 0; j < i; ++j) p(i, j) = s.rational(3, 2);
    }
    t.check(satisfies_jacobi(ce.algebra().change_basis(p, ce.name)), ce.name + " Jacobi after change of basis");
  }
  for (int k = 0; k < 50; ++k) {
    const auto& ce = builtin_catalog()[s.index(builtin_catalog().size())];
    LieAlgebra L = ce.algebra();
    auto Der = derivation_space(L);
    RatVector x(Der.dim());
    for (auto& v : x) v = s.rational(5, 3);
    t.check(is_derivation(L, Der.combine(x)), ce.name + " random derivation");
  }
  for (int k = 0; k < 50; ++k) {
    const auto& name = pick(cslat);
    LieAlgebra L = entry(name).algebra();
    auto split = split_nilpotent_diagonal(derivation_space(L));
    RatMatrix N(6, 6);
    for (const auto& b : split.nilpotent) N += s.rational(5, 3) * b;
    t.check(exp_derivation(L, N) * exp_derivation(L, -N) == RatMatrix::identity(6), name + " exp(N) exp(-N) != I");
  }
  for (int k = 0; k < 50; ++k) {
    const auto& name = pick(five);
    LieAlgebra L = entry(name).algebra();
    RatMatrix g = random_diagonal(s);
    RatMatrix M = ricci(L, g).exact;
    t.check((g * M).is_symmetric(), name + " g Ric not symmetric");
    // Approximate mode on a general Sigma metric.
    RatMatrix h = metric_of(random_point(sigma_pattern(L), s, 0.3));
    auto a = ricci(L, h, RicciMode::Approximate);
    double err = 0, scale = 1e-300;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        double gij = 0, gji = 0;
        for (std::size_t m = 0; m < 6; ++m) {
          gij += h(i, m).to_double() * a.at(m, j);
          gji += h(j, m).to_double() * a.at(m, i);
        }
        err = std::max(err, std::abs(gij - gji));
        scale = std::max(scale, std::abs(gij));
      }
    t.check(err <= 1e-9 * scale, name + " approximate g Ric not symmetric");
  }
  for (int k = 0; k < 50; ++k) {
    const auto& name = pick(five);
    LieAlgebra L = entry(name).algebra();
    RatMatrix g = random_diagonal(s);
    Rational lambda = s.positive_rational(9, 4);
    t.check(ricci(L, lambda * g).exact == (Rational(1) / lambda) * ricci(L, g).exact, name + " Ricci scaling");
  }
  for (int k = 0; k < 50; ++k) {
    const auto& name = pick(cslat);
    LieAlgebra L = entry(name).algebra();
    auto Der = derivation_space(L);
    std::vector<Rational> vals;
    for (std::size_t i = 0; i < diagonal_parameter_indices(Der).size(); ++i) vals.push_back(s.positive_rational(5, 3));
    RatMatrix phi = diagonal_automorphism(Der, vals);
    RatMatrix g = random_diagonal(s);
    t.check(ricci(L, phi.transpose() * g * phi).exact == *inverse(phi) * ricci(L, g).exact * phi, name + " Ricci equivariance");
  }
  for (int k = 0; k < 50; ++k) {
    const auto& name = pick(five);
    const auto& ce = entry(name);
    LieAlgebra L = ce.algebra();
    auto Der = derivation_space(L);
    auto D = component_group(L, ce.d_generators);
    RatMatrix phi = random_aut0_element(Der, s) * D.elements[s.index(D.order())];
    RatMatrix g = metric_of(random_point(sigma_pattern(Der), s, 0.7));
    Subspace before(6, index_of_symmetry(L, g).basis);
    std::vector<RatVector> moved;
    RatMatrix pinv = *inverse(phi);
    for (const auto& v : before.basis()) moved.push_back(pinv * v);
    t.check(Subspace(6, index_of_symmetry(L, phi.transpose() * g * phi).basis) == Subspace(6, moved),
            name + " symmetry kernel equivariance");
  }
}

using CriterionFn = void (*)(Tally&);
struct Criterion {
  const char* title;
  CriterionFn run;
};

const Criterion kCriteria[kCriterionCount] = {
    {"catalog integrity", catalog_integrity},
    {"classification", classification},
    {"derivation dimensions", derivation_dimensions},
    {"automorphism and Sigma patterns", patterns},
    {"component groups", component_groups},
    {"isotropy sweeps", isotropy_sweeps},
    {"exceptional isotropy", exceptional_isotropy},
    {"symmetry theorems", symmetry_theorems},
    {"nilsoliton witnesses", nilsolitons},
    {"property suites", properties},
};

}  // namespace

std::string criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  return kCriteria[id - 1].title;
}

CriterionResult run_criterion(int id) {
  CriterionResult out;
  out.id = id;
  out.title = criterion_title(id);
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    kCriteria[id - 1].run(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.checks = t.checks;
  out.failures = std::move(t.failures);
  return out;
}

std::vector<CriterionResult> run_all_criteria() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace nilmetriq
