#include "nilmetriq/moduli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nilmetriq/linalg.hpp"
#include "nilmetriq/polynomial.hpp"

namespace nilmetriq {

std::optional<std::size_t> SigmaPattern::parameter_index(const std::string& name) const {
  for (std::size_t k = 0; k < parameters.size(); ++k)
    if (parameter_name(k) == name) return k;
  return std::nullopt;
}

std::optional<std::size_t> SigmaPattern::parameter_at(const Position& p) const {
  auto it = std::find(parameters.begin(), parameters.end(), p);
  if (it == parameters.end()) return std::nullopt;
  return static_cast<std::size_t>(it - parameters.begin());
}

std::vector<std::size_t> SigmaPattern::offdiagonal_parameters() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < parameters.size(); ++k)
    if (!is_diagonal_parameter(k)) out.push_back(k);
  return out;
}

SigmaPattern sigma_pattern(const DerivationSpace& D) {
  if (classify(D) != Classification::CSLAT)
    throw std::invalid_argument(D.algebra.name() + " is not a CSLAT; Sigma is not defined");
  AutPattern aut = aut0_pattern(D);
  SigmaPattern out;
  out.algebra = D.algebra.name();
  out.n = D.algebra.dim();
  for (const auto& p : lower_triangular_positions(out.n)) {
    bool aut_free = std::find(aut.free_positions.begin(), aut.free_positions.end(), p) != aut.free_positions.end();
    bool diag = p.row == p.col;
    if (aut_free) {
      (diag ? out.fixed_one_diag : out.fixed_zero_offdiag).push_back(p);
    } else {
      (diag ? out.free_diag : out.free_offdiag).push_back(p);
      out.parameters.push_back(p);
    }
  }
  return out;
}

SigmaPattern sigma_pattern(const LieAlgebra& L) { return sigma_pattern(derivation_space(L)); }

SigmaPoint::SigmaPoint(SigmaPattern pattern, std::vector<Rational> values)
    : pattern_(std::move(pattern)), values_(std::move(values)) {
  if (values_.size() != pattern_.parameter_count())
    throw std::invalid_argument("expected " + std::to_string(pattern_.parameter_count()) + " parameter values, got " +
                                std::to_string(values_.size()));
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (pattern_.is_diagonal_parameter(k) && values_[k].sign() <= 0)
      throw std::invalid_argument("diagonal parameter " + SigmaPattern::parameter_name(k) + " must be positive, got " +
                                  values_[k].str());
}

SigmaPoint SigmaPoint::trivial(SigmaPattern pattern) {
  std::vector<Rational> v(pattern.parameter_count());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (pattern.is_diagonal_parameter(k)) v[k] = Rational(1);
  return SigmaPoint(std::move(pattern), std::move(v));
}

const Rational& SigmaPoint::value(const std::string& name) const {
  auto k = pattern_.parameter_index(name);
  if (!k) throw std::invalid_argument("unknown parameter " + name);
  return values_[*k];
}

std::map<std::string, Rational> SigmaPoint::assignments() const {
  std::map<std::string, Rational> out;
  for (std::size_t k = 0; k < values_.size(); ++k) out.emplace(SigmaPattern::parameter_name(k), values_[k]);
  return out;
}

SigmaPoint SigmaPoint::with(const std::map<std::string, Rational>& set, const std::vector<std::string>& zero) const {
  std::vector<Rational> v = values_;
  auto index = [&](const std::string& name) {
    auto k = pattern_.parameter_index(name);
    if (!k)
      throw std::invalid_argument("unknown parameter " + name + " (" + pattern_.algebra + " has s0..s" +
                                  std::to_string(pattern_.parameter_count() - 1) + ")");
    return *k;
  };
  for (const auto& [name, value] : set) v[index(name)] = value;
  for (const auto& name : zero) v[index(name)] = Rational(0);
  return SigmaPoint(pattern_, std::move(v));
}

RatMatrix SigmaPoint::sigma() const {
  RatMatrix s(pattern_.n, pattern_.n);
  for (const auto& p : pattern_.fixed_one_diag) s(p.row, p.col) = 1;
  for (std::size_t k = 0; k < values_.size(); ++k) s(pattern_.parameters[k].row, pattern_.parameters[k].col) = values_[k];
  return s;
}

RatMatrix metric_from_sigma(const RatMatrix& sigma) {
  if (!sigma.is_square() || !sigma.is_lower_triangular()) throw std::invalid_argument("sigma must be lower triangular");
  for (std::size_t i = 0; i < sigma.rows(); ++i)
    if (sigma(i, i).sign() <= 0) throw std::invalid_argument("sigma must have a positive diagonal");
  RatMatrix g = sigma.transpose() * sigma;
  if (!is_positive_definite(g)) throw std::logic_error("sigma^T sigma failed the positive definiteness check");
  return g;
}

RatMatrix metric_of(const SigmaPoint& p) { return metric_from_sigma(p.sigma()); }

IsotropyResult isotropy_group(const DerivationSpace& Der, const RatMatrix& g, const FiniteMatrixGroup& D) {
  if (!g.is_symmetric() || !is_positive_definite(g)) throw std::invalid_argument("metric must be symmetric positive definite");
  IsotropyResult out;
  for (const auto& d : D.elements)
    if (d.transpose() * g * d == g) out.group.elements.push_back(d);
  out.group.generators = out.group.elements;
  if (out.group.elements.empty() || out.group.elements.front() != RatMatrix::identity(g.rows()))
    throw std::logic_error("isotropy search space must start with the identity");
  // Fixing g is closed under products, but check it anyway.
  for (const auto& a : out.group.elements)
    for (const auto& b : out.group.elements)
      if (!out.group.contains(a * b)) throw std::logic_error("isotropy subset is not closed under products");
  out.label = identify_group(out.group);
  out.skew_dim = skew_derivations(Der, g).size();
  out.continuous_isotropy = out.skew_dim > 0;
  return out;
}

IsotropyResult isotropy_group(const LieAlgebra& L, const RatMatrix& g, const FiniteMatrixGroup& D) {
  return isotropy_group(derivation_space(L), g, D);
}

std::string SweepResult::csv() const {
  std::ostringstream os;
  os << "algebra,p,subset,group_label\n";
  for (const auto& r : rows) {
    os << algebra << "," << p << ",";
    for (std::size_t i = 0; i < r.zeros.size(); ++i) os << (i ? ";" : "") << SigmaPattern::parameter_name(r.zeros[i]);
    os << "," << r.label << "\n";
  }
  return os.str();
}

nlohmann::json SweepResult::tally_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [label, count] : tally) j[label] = count;
  return j;
}

namespace {

std::vector<std::vector<std::size_t>> subsets(const std::vector<std::size_t>& items, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > items.size()) return out;
  std::vector<std::size_t> idx(p);
  for (std::size_t i = 0; i < p; ++i) idx[i] = i;
  while (true) {
    std::vector<std::size_t> s;
    for (auto i : idx) s.push_back(items[i]);
    out.push_back(std::move(s));
    std::size_t i = p;
    while (i > 0 && idx[i - 1] == items.size() - p + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

SweepResult isotropy_sweep(const LieAlgebra& L, const FiniteMatrixGroup& D, std::size_t p, std::uint64_t seed) {
  DerivationSpace Der = derivation_space(L);
  SigmaPattern pat = sigma_pattern(Der);
  auto nd = pat.offdiagonal_parameters();
  if (p > nd.size())
    throw std::invalid_argument("p = " + std::to_string(p) + " exceeds |nd(Sigma)| = " + std::to_string(nd.size()));
  SweepResult out{L.name(), p, seed, {}, {}, {}};
  auto all = subsets(nd, p);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<std::string> zero;
    for (auto k : all[i]) zero.push_back(SigmaPattern::parameter_name(k));
    auto sample = [&](std::uint64_t j) {
      Sampler s(seed, 3 * static_cast<std::uint64_t>(i) + j);
      SigmaPoint pt(pat, generic_values(pat.parameter_count(), s.engine()));
      IsotropyResult r = isotropy_group(Der, metric_of(pt.with({}, zero)), D);
      if (r.continuous_isotropy)
        out.warnings.push_back("continuous isotropy at subset " + std::to_string(i) + " of " + L.name());
      return r.label;
    };
    SweepRow row{all[i], sample(0), false};
    std::string second = sample(1);
    if (second != row.label) {
      std::string third = sample(2);
      if (third != row.label && third != second)
        throw std::runtime_error("non-generic sampling: three samples disagree for " + L.name() + " subset " +
                                 std::to_string(i));
      row.label = third;
      row.tie_break = true;
      out.warnings.push_back("samples disagreed for " + L.name() + " subset " + std::to_string(i) +
                             "; tie broken by a third sample");
    }
    ++out.tally[row.label];
    out.rows.push_back(std::move(row));
  }
  return out;
}

SigmaPoint FixedPointSection::point(const std::vector<Rational>& free_values) const {
  if (empty) throw std::logic_error("Sigma_D is empty");
  if (free_values.size() != free.size())
    throw std::invalid_argument("expected " + std::to_string(free.size()) + " free values");
  std::vector<Rational> v(pattern.parameter_count());
  for (std::size_t i = 0; i < free.size(); ++i) v[free[i]] = free_values[i];
  for (const auto& [k, root] : tied) v[k] = v[root];
  return SigmaPoint(pattern, std::move(v));
}

std::vector<std::vector<std::string>> FixedPointSection::matrix_form() const {
  std::vector<std::vector<std::string>> m(pattern.n, std::vector<std::string>(pattern.n, "0"));
  for (const auto& p : pattern.fixed_one_diag) m[p.row][p.col] = "1";
  for (std::size_t k = 0; k < pattern.parameter_count(); ++k) {
    const auto& p = pattern.parameters[k];
    if (std::find(zero.begin(), zero.end(), k) != zero.end()) continue;
    auto t = tied.find(k);
    m[p.row][p.col] = SigmaPattern::parameter_name(t == tied.end() ? k : t->second);
  }
  return m;
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b, std::size_t nvars) {
  std::size_t n = a.size();
  PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial(nvars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

PolyMatrix to_poly(const RatMatrix& m, std::size_t nvars) {
  PolyMatrix out(m.rows(), std::vector<Polynomial>(m.cols(), Polynomial(nvars)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Polynomial::constant(nvars, m(i, j));
  return out;
}

PolyMatrix transpose(const PolyMatrix& m) {
  PolyMatrix t = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = m[j][i];
  return t;
}

// The single variable v with m = v^2, if any.
std::optional<std::size_t> square_variable(const Polynomial::Monomial& m) {
  std::optional<std::size_t> v;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (m[i] != 2 || v) return std::nullopt;
    v = i;
  }
  return v;
}

}  // namespace

FixedPointSection fixed_point_section(const LieAlgebra& L, const FiniteMatrixGroup& D) {
  FixedPointSection out;
  out.pattern = sigma_pattern(L);
  const SigmaPattern& pat = out.pattern;
  const std::size_t n = pat.n, m = pat.parameter_count();
  for (const auto& d : D.elements)
    if (d.transpose() * d != RatMatrix::identity(n)) {
      out.empty = true;
      out.note = "D is not contained in O(" + std::to_string(n) + "), so it does not act on Sigma";
      return out;
    }

  std::vector<bool> is_zero(m, false);
  std::vector<std::size_t> root(m);
  for (std::size_t k = 0; k < m; ++k) root[k] = k;

  // Diagonal sign matrices act on sigma by conjugation; entries with opposite signs must vanish.
  for (const auto& d : D.elements) {
    if (!d.is_diagonal()) continue;
    for (auto k : pat.offdiagonal_parameters()) {
      const auto& p = pat.parameters[k];
      if ((d(p.row, p.row) * d(p.col, p.col)).sign() < 0) is_zero[k] = true;
    }
  }

  auto sigma_poly = [&]() {
    PolyMatrix s(n, std::vector<Polynomial>(n, Polynomial(m)));
    for (const auto& p : pat.fixed_one_diag) s[p.row][p.col] = Polynomial::constant(m, Rational(1));
    for (std::size_t k = 0; k < m; ++k)
      if (!is_zero[k]) s[pat.parameters[k].row][pat.parameters[k].col] = Polynomial::variable(m, root[k]);
    return s;
  };

  while (true) {
    PolyMatrix s = sigma_poly();
    PolyMatrix g = poly_mul(transpose(s), s, m);
    std::vector<Polynomial> eqs;
    for (const auto& d : D.elements) {
      if (d.is_diagonal()) continue;
      PolyMatrix dp = to_poly(d, m);
      PolyMatrix gd = poly_mul(poly_mul(transpose(dp), g, m), dp, m);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          Polynomial e = gd[i][j] - g[i][j];
          if (!e.is_zero()) eqs.push_back(std::move(e));
        }
    }
    if (eqs.empty()) break;

    bool progressed = false;
    for (const auto& e : eqs) {
      if (!e.is_monomial()) continue;
      std::vector<std::size_t> off;
      for (auto v : e.variables())
        if (!pat.is_diagonal_parameter(v)) off.push_back(v);
      if (off.empty()) {
        out.empty = true;
        out.note = "fixed-point equations force a positive quantity to vanish";
        return out;
      }
      if (off.size() == 1) {
        is_zero[off[0]] = true;
        progressed = true;
        break;
      }
    }
    if (progressed) continue;
    for (const auto& e : eqs) {
      if (e.terms().size() != 2) continue;
      auto it = e.terms().begin();
      const auto& [m1, c1] = *it++;
      const auto& [m2, c2] = *it;
      auto x = square_variable(m1), y = square_variable(m2);
      if (!x || !y || c1 != -c2 || !pat.is_diagonal_parameter(*x) || !pat.is_diagonal_parameter(*y)) continue;
      std::size_t keep = std::min(*x, *y), drop = std::max(*x, *y);
      for (auto& r : root)
        if (r == drop) r = keep;
      progressed = true;
      break;
    }
    if (!progressed) throw std::domain_error("fixed-point equations for " + L.name() + " are not of the supported form");
  }

  for (std::size_t k = 0; k < m; ++k) {
    if (is_zero[k])
      out.zero.push_back(k);
    else if (root[k] != k)
      out.tied[k] = root[k];
    else
      out.free.push_back(k);
  }
  return out;
}

}  // namespace nilmetriq
