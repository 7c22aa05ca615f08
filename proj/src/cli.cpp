#include "nilmetriq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "nilmetriq/catalog.hpp"
#include "nilmetriq/curvature.hpp"
#include "nilmetriq/symmetry.hpp"
#include "nilmetriq/verify.hpp"

namespace nilmetriq::cli {

namespace {

using nlohmann::json;

// Usage-level failure; reported on stderr with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Target {
  std::string name;
  LieAlgebra algebra;
  std::vector<RatMatrix> d_generators;
};

Target resolve(const std::string& arg) {
  if (!arg.empty() && arg.front() == '(') {
    LieAlgebra L = parse_tuple(arg, arg);
    return {arg, L, {}};
  }
  auto cat = active_catalog();
  const CatalogEntry* ce = find_entry(cat, arg);
  if (!ce) throw InputError("unknown algebra '" + arg + "'");
  return {ce->name, ce->algebra(), ce->d_generators};
}

FiniteMatrixGroup dgroup(const Target& t) {
  if (t.d_generators.empty()) return closure({RatMatrix::identity(t.algebra.dim())});
  return component_group(t.algebra, t.d_generators);
}

json to_json(const RatVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

json to_json(const RatMatrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

json to_json(const std::vector<Position>& ps) {
  json j = json::array();
  for (const auto& p : ps) j.push_back(to_string(p));
  return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// --set s0=3/2 --set s1=1,s2=-1 and --zero s1,s3
SigmaPoint point_from(const SigmaPattern& pat, const std::vector<std::string>& sets, const std::vector<std::string>& zeros) {
  std::map<std::string, Rational> assign;
  for (const auto& group : sets)
    for (const auto& item : split(group, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("expected name=value in '" + item + "'");
      assign[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    }
  std::vector<std::string> z;
  for (const auto& group : zeros)
    for (const auto& item : split(group, ',')) z.push_back(item);
  return SigmaPoint::trivial(pat).with(assign, z);
}

// Six entries: diagonal metric. Twenty-one: lower-triangular sigma, row-major, g = sigma^T sigma.
RatMatrix metric_from_list(const std::string& s, std::size_t n) {
  std::vector<Rational> v;
  for (const auto& item : split(s, ',')) v.push_back(parse_rational(item));
  if (v.size() == n) {
    for (const auto& x : v)
      if (x.sign() <= 0) throw InputError("diagonal metric entries must be positive");
    return RatMatrix::diagonal(v);
  }
  if (v.size() == n * (n + 1) / 2) {
    RatMatrix sigma(n, n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) sigma(i, j) = v[k++];
    for (std::size_t i = 0; i < n; ++i)
      if (sigma(i, i).sign() <= 0) throw InputError("sigma must have a positive diagonal");
    return metric_from_sigma(sigma);
  }
  throw InputError("--metric takes " + std::to_string(n) + " diagonal entries or " + std::to_string(n * (n + 1) / 2) +
                   " lower-triangular sigma entries, got " + std::to_string(v.size()));
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string matrix_table(const std::vector<std::vector<std::string>>& rows) {
  std::size_t w = 1;
  for (const auto& r : rows)
    for (const auto& x : r) w = std::max(w, x.size());
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "  ";
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << (j + 1 < r.size() ? pad(r[j], w) : r[j]);
    os << "\n";
  }
  return os.str();
}

std::vector<std::vector<std::string>> strings(const RatMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).str());
  return out;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string matrix_csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j];
    os << "\n";
  }
  return os.str();
}

std::string vector_str(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

// A command's result in every output format.
struct Report {
  json body;
  std::string table;
  std::string csv;
  int code = kOk;
};

json header(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

Report cmd_classify(const std::string& which) {
  Report r;
  r.body = header("classify");
  json rows = json::array();
  std::ostringstream tab, csv;
  tab << "name    step  CSLA  CSLAT  dim Der  diag\n";
  csv << "name,step,csla,cslat,dim_der,diag_dim\n";
  std::size_t n_csla = 0, n_cslat = 0;
  std::vector<Target> targets;
  if (which == "all") {
    for (const auto& ce : active_catalog()) targets.push_back({ce.name, ce.algebra(), ce.d_generators});
  } else {
    targets.push_back(resolve(which));
  }
  for (const auto& t : targets) {
    int step = nilpotency_step(t.algebra);
    auto D = derivation_space(t.algebra);
    Classification c = classify(D);
    bool csla = c != Classification::NotCSLA, cslat = c == Classification::CSLAT;
    n_csla += csla;
    n_cslat += cslat;
    rows.push_back({{"name", t.name}, {"step", step}, {"csla", csla}, {"cslat", cslat}, {"dim_der", D.dim()},
                    {"diag_dim", D.diag_dim}, {"classification", to_string(c)}});
    tab << pad(t.name, 8) << pad(std::to_string(step), 6) << pad(csla ? "yes" : "no", 6) << pad(cslat ? "yes" : "no", 7)
        << pad(std::to_string(D.dim()), 9) << D.diag_dim << "\n";
    csv << t.name << "," << step << "," << csla << "," << cslat << "," << D.dim() << "," << D.diag_dim << "\n";
  }
  r.body["algebras"] = rows;
  r.body["counts"] = {{"csla", n_csla}, {"cslat", n_cslat}};
  if (targets.size() > 1) tab << n_csla << " CSLA, " << n_cslat << " CSLAT\n";
  r.table = tab.str();
  r.csv = csv.str();
  return r;
}

Report cmd_sigma(const Target& t, bool fixed) {
  Report r;
  r.body = header("sigma");
  r.body["algebra"] = t.name;
  if (fixed) {
    auto sec = fixed_point_section(t.algebra, dgroup(t));
    r.body["fixed_points"] = true;
    r.body["empty"] = sec.empty;
    if (!sec.note.empty()) r.body["note"] = sec.note;
    if (sec.empty) {
      r.table = "Sigma_D is empty: " + sec.note + "\n";
      r.csv = "empty\n";
      return r;
    }
    auto names = [&](const std::vector<std::size_t>& ks) {
      json j = json::array();
      for (auto k : ks) j.push_back(SigmaPattern::parameter_name(k));
      return j;
    };
    r.body["free"] = names(sec.free);
    r.body["zero"] = names(sec.zero);
    json tied = json::object();
    for (const auto& [k, v] : sec.tied) tied[SigmaPattern::parameter_name(k)] = SigmaPattern::parameter_name(v);
    r.body["tied"] = tied;
    auto form = sec.matrix_form();
    r.body["matrix"] = form;
    r.table = matrix_table(form);
    r.csv = matrix_csv(form);
    return r;
  }
  auto pat = sigma_pattern(t.algebra);
  json params = json::array();
  std::ostringstream csv;
  csv << "parameter,row,col,diagonal\n";
  for (std::size_t k = 0; k < pat.parameter_count(); ++k) {
    const auto& p = pat.parameters[k];
    params.push_back({{"name", SigmaPattern::parameter_name(k)}, {"position", to_string(p)}, {"diagonal", p.row == p.col}});
    csv << SigmaPattern::parameter_name(k) << "," << p.row + 1 << "," << p.col + 1 << "," << (p.row == p.col) << "\n";
  }
  std::vector<std::vector<std::string>> form(pat.n);
  for (std::size_t i = 0; i < pat.n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      auto k = pat.parameter_at({i, j});
      form[i].push_back(k ? SigmaPattern::parameter_name(*k) : i == j ? "1" : "0");
    }
  r.body["parameters"] = params;
  r.body["parameter_count"] = pat.parameter_count();
  r.body["offdiagonal_count"] = pat.offdiagonal_parameters().size();
  r.body["matrix"] = form;
  r.table = matrix_table(form) + std::to_string(pat.parameter_count()) + " parameters, " +
            std::to_string(pat.offdiagonal_parameters().size()) + " off-diagonal\n";
  r.csv = csv.str();
  return r;
}

Report cmd_aut(const Target& t) {
  Report r;
  auto D = derivation_space(t.algebra);
  auto pat = aut0_pattern(D);
  auto G = dgroup(t);
  std::string label = identify_group(G);
  r.body = header("aut");
  r.body["algebra"] = t.name;
  r.body["dim_der"] = D.dim();
  r.body["diag_dim"] = D.diag_dim;
  r.body["free_positions"] = to_json(pat.free_positions);
  r.body["dependent_positions"] = to_json(pat.dependent_positions);
  json gens = json::array();
  for (const auto& g : G.generators) gens.push_back(to_json(g));
  r.body["component_group"] = {{"order", G.order()}, {"label", label}, {"abelian", G.is_abelian()}, {"generators", gens}};
  std::ostringstream tab, csv;
  tab << "dim Der " << D.dim() << ", diagonal part " << D.diag_dim << "\n";
  tab << "free positions:";
  for (const auto& p : pat.free_positions) tab << " " << to_string(p);
  tab << "\ncomponent group: " << label << ", order " << G.order() << "\n";
  csv << "row,col,free\n";
  for (const auto& p : lower_triangular_positions(t.algebra.dim())) {
    bool free = std::find(pat.free_positions.begin(), pat.free_positions.end(), p) != pat.free_positions.end();
    csv << p.row + 1 << "," << p.col + 1 << "," << free << "\n";
  }
  r.table = tab.str();
  r.csv = csv.str();
  return r;
}

json point_json(const SigmaPoint& p) {
  json j = json::object();
  for (const auto& [k, v] : p.assignments()) j[k] = v.str();
  return j;
}

Report cmd_isotropy(const Target& t, const std::vector<std::string>& sets, const std::vector<std::string>& zeros) {
  Report r;
  auto Der = derivation_space(t.algebra);
  SigmaPoint p = point_from(sigma_pattern(Der), sets, zeros);
  auto iso = isotropy_group(Der, metric_of(p), dgroup(t));
  r.body = header("isotropy");
  r.body["algebra"] = t.name;
  r.body["point"] = point_json(p);
  json elems = json::array();
  for (const auto& e : iso.group.elements) elems.push_back(to_json(e));
  r.body["group"] = {{"label", iso.label}, {"order", iso.group.order()}, {"elements", elems}};
  r.body["continuous_isotropy"] = iso.continuous_isotropy;
  r.body["skew_dim"] = iso.skew_dim;
  r.table = "isotropy in D: " + iso.label + " (order " + std::to_string(iso.group.order()) + ")\n" +
            (iso.continuous_isotropy ? "continuous isotropy: " + std::to_string(iso.skew_dim) + " skew derivations\n" : "");
  r.csv = "algebra,group_label,order,skew_dim\n" + t.name + "," + iso.label + "," + std::to_string(iso.group.order()) + "," +
          std::to_string(iso.skew_dim) + "\n";
  return r;
}

Report cmd_sweep(const Target& t, std::size_t p, std::uint64_t seed) {
  Report r;
  auto res = isotropy_sweep(t.algebra, dgroup(t), p, seed);
  r.body = header("sweep");
  r.body["algebra"] = t.name;
  r.body["p"] = p;
  r.body["seed"] = seed;
  r.body["tally"] = res.tally_json();
  json rows = json::array();
  for (const auto& row : res.rows) {
    std::string subset;
    for (auto k : row.zeros) subset += (subset.empty() ? "" : ";") + SigmaPattern::parameter_name(k);
    rows.push_back({{"subset", subset}, {"label", row.label}, {"tie_break", row.tie_break}});
  }
  r.body["rows"] = rows;
  r.body["warnings"] = res.warnings;
  std::ostringstream tab;
  tab << t.name << " with " << p << " off-diagonal parameters zero (" << res.rows.size() << " subsets)\n";
  for (const auto& [label, count] : res.tally) tab << "  " << pad(label, 10) << count << "\n";
  for (const auto& w : res.warnings) tab << "warning: " << w << "\n";
  r.table = tab.str();
  r.csv = res.csv();
  return r;
}

RatMatrix metric_arg(const Target& t, const std::string& metric, const std::vector<std::string>& sets,
                     const std::vector<std::string>& zeros, json& body) {
  if (!metric.empty()) {
    if (!sets.empty() || !zeros.empty()) throw InputError("--metric cannot be combined with --set/--zero");
    return metric_from_list(metric, t.algebra.dim());
  }
  SigmaPoint p = point_from(sigma_pattern(t.algebra), sets, zeros);
  body["point"] = point_json(p);
  return metric_of(p);
}

Report cmd_symmetry(const Target& t, const RatMatrix& g, json body) {
  Report r;
  auto res = index_of_symmetry(t.algebra, g);
  r.body = std::move(body);
  r.body["metric"] = to_json(g);
  r.body["index"] = res.index;
  json basis = json::array();
  for (const auto& v : res.basis) basis.push_back(to_json(v));
  r.body["basis"] = basis;
  r.body["central"] = res.central;
  r.body["central_intersection_dim"] = res.central_intersection_dim;
  std::ostringstream tab, csv;
  tab << "index of symmetry " << res.index << (res.index && res.central ? " (central)" : "") << "\n";
  for (const auto& v : res.basis) tab << "  " << vector_str(v) << "\n";
  csv << "vector";
  for (std::size_t i = 1; i <= t.algebra.dim(); ++i) csv << ",e" << i;
  csv << "\n";
  for (std::size_t k = 0; k < res.basis.size(); ++k) {
    csv << k;
    for (const auto& x : res.basis[k]) csv << "," << x.str();
    csv << "\n";
  }
  r.table = tab.str();
  r.csv = csv.str();
  return r;
}

Report cmd_theorem(const std::string& name, std::size_t samples, std::uint64_t seed) {
  Report r;
  auto reps = theorem_verifier(name, samples, seed);
  r.body = header("theorem");
  r.body["theorem"] = name;
  r.body["samples"] = samples;
  r.body["seed"] = seed;
  json branches = json::array();
  bool all = true;
  std::ostringstream tab, csv;
  csv << "theorem,algebra,branch,samples,controls,pass\n";
  for (const auto& b : reps) {
    branches.push_back(b.to_json());
    all = all && b.pass;
    tab << (b.pass ? "[PASS] " : "[FAIL] ") << b.algebra << " " << b.branch << " (" << b.samples << " samples, "
        << b.controls << " controls)\n";
    if (b.counterexample) tab << "    " << *b.counterexample << "\n";
    csv << b.theorem << "," << b.algebra << ",\"" << b.branch << "\"," << b.samples << "," << b.controls << "," << b.pass
        << "\n";
  }
  r.body["branches"] = branches;
  r.body["pass"] = all;
  r.table = tab.str();
  r.csv = csv.str();
  r.code = all ? kOk : kVerificationFailed;
  return r;
}

Report cmd_ricci(const Target& t, const RatMatrix& g, RicciMode mode, json body) {
  Report r;
  auto res = ricci(t.algebra, g, mode);
  r.body = std::move(body);
  r.body["mode"] = to_string(mode);
  r.body["metric"] = to_json(g);
  std::vector<std::vector<std::string>> cells(res.n);
  if (mode == RicciMode::Exact) {
    r.body["operator"] = to_json(res.exact);
    r.body["trace"] = trace(res.exact).str();
    cells = strings(res.exact);
  } else {
    json op = json::array();
    double tr = 0;
    for (std::size_t i = 0; i < res.n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < res.n; ++j) {
        row.push_back(res.at(i, j));
        cells[i].push_back(fmt_double(res.at(i, j)));
      }
      op.push_back(row);
      tr += res.at(i, i);
    }
    r.body["operator"] = op;
    r.body["trace"] = tr;
    r.body["condition"] = res.condition;
  }
  r.table = "Ricci operator (" + to_string(mode) + ")\n" + matrix_table(cells);
  r.csv = matrix_csv(cells);
  return r;
}

Report cmd_nilsoliton(const Target& t, const RatMatrix& g, RicciMode mode, double tolerance, json body) {
  Report r;
  auto res = nilsoliton_check(t.algebra, g, mode, tolerance);
  r.body = std::move(body);
  r.body["mode"] = to_string(mode);
  r.body["metric"] = to_json(g);
  r.body["nilsoliton"] = res.nilsoliton;
  std::ostringstream tab, csv;
  if (mode == RicciMode::Exact) {
    r.body["residual"] = res.residual.str();
    if (res.nilsoliton) {
      r.body["c"] = res.c.str();
      r.body["D"] = to_json(res.D);
      tab << "nilsoliton: Ric = c I + D with c = " << res.c.str() << ", residual 0\nD =\n" << matrix_table(strings(res.D));
      csv << "nilsoliton,c,residual\n1," << res.c.str() << ",0\n";
    } else {
      tab << "not a nilsoliton, residual " << res.residual.str() << "\n";
      csv << "nilsoliton,c,residual\n0,," << res.residual.str() << "\n";
    }
  } else {
    r.body["residual"] = res.residual_approx;
    r.body["tolerance"] = tolerance;
    r.body["c"] = res.c_approx;
    json D = json::array();
    for (std::size_t i = 0; i < 6 && res.D_approx.size() == 36; ++i)
      D.push_back(std::vector<double>(res.D_approx.begin() + i * 6, res.D_approx.begin() + i * 6 + 6));
    r.body["D"] = D;
    tab << (res.nilsoliton ? "nilsoliton" : "not a nilsoliton") << ", c ~ " << fmt_double(res.c_approx)
        << ", relative residual " << fmt_double(res.residual_approx) << "\n";
    csv << "nilsoliton,c,residual\n" << res.nilsoliton << "," << fmt_double(res.c_approx) << ","
        << fmt_double(res.residual_approx) << "\n";
  }
  r.table = tab.str();
  r.csv = csv.str();
  return r;
}

Report cmd_verify(const std::vector<int>& ids) {
  Report r;
  r.body = header("verify-paper");
  json items = json::array();
  bool all = true;
  std::ostringstream tab, csv;
  csv << "id,title,pass,checks,failures\n";
  for (int id : ids) {
    auto c = run_criterion(id);
    items.push_back(c.to_json());
    all = all && c.pass();
    tab << c.line() << "\n";
    csv << c.id << "," << c.title << "," << c.pass() << "," << c.checks << "," << c.failures.size() << "\n";
  }
  r.body["criteria"] = items;
  r.body["pass"] = all;
  r.table = tab.str();
  r.csv = csv.str();
  r.code = all ? kOk : kVerificationFailed;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool terminal) {
  CLI::App app{"Exact computations on six-dimensional nilpotent Lie algebras and their left-invariant metrics", "nilmetriq"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string format = terminal ? "table" : "json";
  std::uint64_t seed = 1;
  std::string mode_name = "exact";
  std::string expect;
  bool verify_flag = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", seed, "Sampling seed");
  app.add_option("--mode", mode_name, "Ricci mode")->check(CLI::IsMember({"exact", "approximate", "approx"}));
  app.add_option("--expect", expect, "Golden JSON file; exit 3 when the output differs");
  app.add_flag("--verify-paper", verify_flag, "Run every golden criterion");

  std::string name;
  std::vector<std::string> sets, zeros;
  std::string metric;
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--set", sets, "Parameter assignments, e.g. s0=3/2");
    sub->add_option("--zero", zeros, "Parameters set to 0, e.g. s1,s3");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Step, CSLA/CSLAT type and derivation dimensions");
  std::string which = "all";
  classify_cmd->add_option("algebra", which, "Catalog name, tuple, or all");

  auto* sigma_cmd = app.add_subcommand("sigma", "Cross-section of metrics modulo Aut0");
  sigma_cmd->add_option("algebra", name)->required();
  bool fixed = false;
  sigma_cmd->add_flag("--fixed-points", fixed, "Restrict to the metrics fixed by the component group");

  auto* aut_cmd = app.add_subcommand("aut", "Aut0 pattern and component group");
  aut_cmd->add_option("algebra", name)->required();

  auto* iso_cmd = app.add_subcommand("isotropy", "Isotropy group of a metric inside the component group");
  iso_cmd->add_option("algebra", name)->required();
  add_point(iso_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Isotropy labels over all subsets of zeroed off-diagonal parameters");
  sweep_cmd->add_option("algebra", name)->required();
  std::size_t p = 0;
  sweep_cmd->add_option("--zeros", p, "Number of off-diagonal parameters set to 0")->required();

  auto* sym_cmd = app.add_subcommand("symmetry", "Index and distribution of symmetry");
  sym_cmd->add_option("algebra", name)->required();
  add_point(sym_cmd);
  sym_cmd->add_option("--metric", metric, "Diagonal entries (6) or lower-triangular sigma (21), comma separated");

  auto* thm_cmd = app.add_subcommand("theorem", "Randomized check of an index-of-symmetry statement");
  std::string theorem;
  std::size_t samples = 25;
  thm_cmd->add_option("name", theorem)->required()->check(CLI::IsMember(theorem_names()));
  thm_cmd->add_option("--samples", samples, "Samples per branch");

  auto* ricci_cmd = app.add_subcommand("ricci", "Ricci operator of a left-invariant metric");
  ricci_cmd->add_option("algebra", name)->required();
  add_point(ricci_cmd);
  ricci_cmd->add_option("--metric", metric, "Diagonal entries (6) or lower-triangular sigma (21), comma separated");

  auto* nil_cmd = app.add_subcommand("nilsoliton", "Check Ric = c I + D for a derivation D");
  nil_cmd->add_option("algebra", name)->required();
  add_point(nil_cmd);
  nil_cmd->add_option("--metric", metric, "Diagonal entries (6) or lower-triangular sigma (21), comma separated");
  std::string r_value;
  nil_cmd->add_option("--r", r_value, "Point of the diagonal nilsoliton family");
  bool witness = false;
  nil_cmd->add_flag("--witness", witness, "Use the listed rational nilsoliton metric");
  double tolerance = 1e-9;
  nil_cmd->add_option("--tolerance", tolerance, "Relative residual tolerance in approximate mode");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the golden criteria");
  std::vector<int> ids;
  verify_cmd->add_option("criteria", ids, "Criterion ids (default all)")->check(CLI::Range(1, kCriterionCount));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Report report;
  try {
    RicciMode mode = parse_ricci_mode(mode_name);
    if (verify_flag || *verify_cmd) {
      if (ids.empty())
        for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
      report = cmd_verify(ids);
    } else if (*classify_cmd) {
      report = cmd_classify(which);
    } else if (*sigma_cmd) {
      report = cmd_sigma(resolve(name), fixed);
    } else if (*aut_cmd) {
      report = cmd_aut(resolve(name));
    } else if (*iso_cmd) {
      report = cmd_isotropy(resolve(name), sets, zeros);
    } else if (*sweep_cmd) {
      report = cmd_sweep(resolve(name), p, seed);
    } else if (*sym_cmd) {
      Target t = resolve(name);
      json body = header("symmetry");
      body["algebra"] = t.name;
      RatMatrix g = metric_arg(t, metric, sets, zeros, body);
      report = cmd_symmetry(t, g, body);
    } else if (*thm_cmd) {
      report = cmd_theorem(theorem, samples, seed);
    } else if (*ricci_cmd || *nil_cmd) {
      Target t = resolve(name);
      json body = header(*ricci_cmd ? "ricci" : "nilsoliton");
      body["algebra"] = t.name;
      RatMatrix g;
      if (*nil_cmd && (!r_value.empty() || witness)) {
        if (!metric.empty() || !sets.empty() || !zeros.empty())
          throw InputError("--r/--witness cannot be combined with --metric/--set/--zero");
        if (witness) {
          g = nilsoliton_witness(t.name);
          body["witness"] = true;
        } else {
          Rational r = parse_rational(r_value);
          body["r"] = r.str();
          auto fam = nilsoliton_family(t.name, r);
          if (auto* u = std::get_if<Unsupported>(&fam)) {
            body["status"] = "unsupported";
            body["reason"] = u->reason;
            report.body = body;
            report.table = "unsupported: " + u->reason + "\n";
            report.csv = "status,reason\nunsupported,\"" + u->reason + "\"\n";
            report.code = kUsage;
          } else {
            g = std::get<RatMatrix>(fam);
          }
        }
      } else {
        g = metric_arg(t, metric, sets, zeros, body);
      }
      if (report.body.is_null())
        report = *ricci_cmd ? cmd_ricci(t, g, mode, body) : cmd_nilsoliton(t, g, mode, tolerance, body);
    } else {
      err << app.help();
      return kUsage;
    }
  } catch (const TupleParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (format == "json")
    out << report.body.dump(2) << "\n";
  else if (format == "csv")
    out << report.csv;
  else
    out << report.table;

  if (!expect.empty()) {
    std::ifstream in(expect);
    if (!in) {
      err << "error: cannot read " << expect << "\n";
      return kUsage;
    }
    json want;
    try {
      want = json::parse(in);
    } catch (const json::parse_error& e) {
      err << "error: " << expect << ": " << e.what() << "\n";
      return kUsage;
    }
    if (want != report.body) {
      err << "mismatch against " << expect << "\n";
      return kExpectMismatch;
    }
  }
  return report.code;
}

}  // namespace nilmetriq::cli
