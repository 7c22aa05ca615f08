#include "nilmetriq/automorphisms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nilmetriq/linalg.hpp"

namespace nilmetriq {

std::string to_string(const Position& p) {
  return "(" + std::to_string(p.row + 1) + "," + std::to_string(p.col + 1) + ")";
}

std::vector<Position> lower_triangular_positions(std::size_t n) {
  std::vector<Position> out;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c <= r; ++c) out.push_back({r, c});
  return out;
}

AutPattern aut0_pattern(const DerivationSpace& D) {
  if (!D.triangular_in_standard_basis) throw std::invalid_argument("aut0_pattern needs a lower triangular Der");
  auto pos = lower_triangular_positions(D.algebra.dim());
  AutPattern out;
  if (D.basis.empty()) {
    out.dependent_positions = pos;
    return out;
  }
  RatMatrix coords(D.dim(), pos.size());
  for (std::size_t k = 0; k < D.dim(); ++k)
    for (std::size_t p = 0; p < pos.size(); ++p) coords(k, p) = D.basis[k](pos[p].row, pos[p].col);
  auto pivots = rref(coords).pivot_columns;
  std::vector<bool> is_free(pos.size(), false);
  for (auto p : pivots) is_free[p] = true;
  for (std::size_t p = 0; p < pos.size(); ++p)
    (is_free[p] ? out.free_positions : out.dependent_positions).push_back(pos[p]);
  return out;
}

RatMatrix exp_derivation(const LieAlgebra& L, const RatMatrix& n) {
  if (!n.is_strictly_lower_triangular()) throw std::invalid_argument("exp_derivation expects a strictly lower triangular matrix");
  if (!is_derivation(L, n)) throw std::invalid_argument("matrix is not a derivation");
  RatMatrix phi = exp_nilpotent(n);
  if (!is_automorphism(L, phi)) throw std::logic_error("exponential of a derivation failed the automorphism check");
  return phi;
}

namespace {

struct DiagonalChart {
  std::vector<std::size_t> pivots;  // diagonal indices carrying free values
  RatMatrix weights;                // row r: diagonal of the Der_d element dual to pivots[r]
};

DiagonalChart diagonal_chart(const DerivationSpace& D) {
  auto split = split_nilpotent_diagonal(D);
  const std::size_t n = D.algebra.dim();
  DiagonalChart chart;
  if (split.diagonal.empty()) {
    chart.weights = RatMatrix(0, n);
    return chart;
  }
  std::vector<RatVector> diags;
  for (const auto& m : split.diagonal) diags.push_back(m.diag());
  auto r = rref(RatMatrix::from_rows(diags));
  chart.pivots = r.pivot_columns;
  chart.weights = RatMatrix(chart.pivots.size(), n);
  for (std::size_t i = 0; i < chart.pivots.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) chart.weights(i, j) = r.matrix(i, j);
  return chart;
}

}  // namespace

std::vector<std::size_t> diagonal_parameter_indices(const DerivationSpace& D) { return diagonal_chart(D).pivots; }

RatMatrix diagonal_automorphism(const DerivationSpace& D, const std::vector<Rational>& values) {
  auto chart = diagonal_chart(D);
  if (values.size() != chart.pivots.size())
    throw std::invalid_argument("expected " + std::to_string(chart.pivots.size()) + " diagonal values");
  for (const auto& v : values)
    if (v.sign() <= 0) throw std::invalid_argument("diagonal automorphism values must be positive");
  const std::size_t n = D.algebra.dim();
  std::vector<Rational> d(n, Rational(1));
  for (std::size_t r = 0; r < chart.pivots.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& w = chart.weights(r, j);
      if (w.is_zero()) continue;
      if (!w.is_integer()) throw std::domain_error("diagonal automorphism would need a fractional power");
      d[j] *= pow(values[r], static_cast<int>(w.numerator().get_si()));
    }
  RatMatrix phi = RatMatrix::diagonal(d);
  if (!is_automorphism(D.algebra, phi)) throw std::logic_error("diagonal automorphism check failed");
  return phi;
}

RatMatrix random_aut0_element(const DerivationSpace& D, Sampler& s) {
  auto split = split_nilpotent_diagonal(D);
  std::vector<Rational> vals;
  for (std::size_t i = 0; i < diagonal_parameter_indices(D).size(); ++i) vals.push_back(s.positive_rational(5, 3));
  RatMatrix n(D.algebra.dim(), D.algebra.dim());
  for (const auto& b : split.nilpotent)
    if (s.coin(0.7)) n += s.rational(3, 2) * b;
  return diagonal_automorphism(D, vals) * exp_derivation(D.algebra, n);
}

bool FiniteMatrixGroup::is_abelian() const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i] * elements[j] != elements[j] * elements[i]) return false;
  return true;
}

bool FiniteMatrixGroup::contains(const RatMatrix& m) const {
  return std::find(elements.begin(), elements.end(), m) != elements.end();
}

FiniteMatrixGroup closure(const std::vector<RatMatrix>& generators, std::size_t bound) {
  std::size_t n = generators.empty() ? 0 : generators.front().rows();
  FiniteMatrixGroup G{generators, {RatMatrix::identity(n)}};
  for (std::size_t i = 0; i < G.elements.size(); ++i)
    for (const auto& g : generators) {
      RatMatrix p = G.elements[i] * g;
      if (G.contains(p)) continue;
      G.elements.push_back(std::move(p));
      if (G.elements.size() > bound) throw std::length_error("group closure exceeds " + std::to_string(bound) + " elements");
    }
  return G;
}

FiniteMatrixGroup component_group(const LieAlgebra& L, const std::vector<RatMatrix>& generators) {
  for (const auto& g : generators)
    if (!is_automorphism(L, g)) throw std::invalid_argument("generator is not an automorphism: " + g.str());
  FiniteMatrixGroup G = generators.empty() ? FiniteMatrixGroup{{}, {RatMatrix::identity(L.dim())}} : closure(generators);
  for (const auto& e : G.elements)
    if (!is_automorphism(L, e)) throw std::logic_error("closure element is not an automorphism");
  return G;
}

GroupProfile group_profile(const FiniteMatrixGroup& G) {
  GroupProfile p;
  p.order = G.order();
  p.abelian = G.is_abelian();
  const RatMatrix& id = G.elements.front();
  for (const auto& g : G.elements) {
    std::size_t k = 1;
    RatMatrix x = g;
    while (x != id) {
      x = x * g;
      if (++k > G.order()) throw std::logic_error("element order exceeds group order");
    }
    ++p.element_orders[k];
    bool central = true;
    for (const auto& h : G.elements)
      if (g * h != h * g) {
        central = false;
        break;
      }
    p.center_size += central;
  }
  return p;
}

std::string identify_group(const FiniteMatrixGroup& G) {
  GroupProfile p = group_profile(G);
  auto count = [&](std::size_t k) { return p.element_orders.count(k) ? p.element_orders.at(k) : 0; };
  if (p.abelian && count(1) + count(2) == p.order) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < p.order) ++k;
    if ((std::size_t{1} << k) == p.order) {
      if (k == 0) return "trivial";
      if (k == 1) return "Z2";
      return "Z2^" + std::to_string(k);
    }
  }
  if (!p.abelian && p.order == 8 && count(4) == 2 && count(2) == 5) return "Dih4";
  if (!p.abelian && p.order == 16 && p.center_size == 4) {
    if (count(2) == 11 && count(4) == 4) return "Dih4xZ2";
    if (count(2) == 7 && count(4) == 8) return "G16^3";
  }
  std::ostringstream os;
  os << "unknown(order=" << p.order << ",abelian=" << (p.abelian ? 1 : 0) << ",center=" << p.center_size
     << ",orders=";
  bool first = true;
  for (auto [k, c] : p.element_orders) {
    os << (first ? "" : ";") << k << ":" << c;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace nilmetriq
