#include "nilmetriq/derivations.hpp"

#include <stdexcept>

#include "nilmetriq/linalg.hpp"

namespace nilmetriq {

RatMatrix DerivationSpace::combine(const RatVector& x) const {
  if (x.size() != basis.size()) throw std::invalid_argument("coordinate count does not match Der basis");
  const std::size_t n = algebra.dim();
  RatMatrix out(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!x[k].is_zero()) out += x[k] * basis[k];
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::NotCSLA: return "NotCSLA";
    case Classification::CSLA_NotTriangular: return "CSLA_NotTriangular";
    case Classification::CSLAT: return "CSLAT";
  }
  return "?";
}

RatMatrix derivation_system(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const std::size_t pairs = n * (n - 1) / 2;
  RatMatrix sys(pairs * n, n * n);
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++p)
      for (std::size_t m = 0; m < n; ++m) {
        std::size_t row = p * n + m;
        // (D[e_i,e_j])_m = sum_k c^k_ij D(m,k)
        for (std::size_t k = 0; k < n; ++k)
          if (!L.c(k, i, j).is_zero()) sys(row, var(m, k)) += L.c(k, i, j);
        // ([D e_i, e_j])_m = sum_l D(l,i) c^m_lj ; ([e_i, D e_j])_m = sum_l D(l,j) c^m_il
        for (std::size_t l = 0; l < n; ++l) {
          if (!L.c(m, l, j).is_zero()) sys(row, var(l, i)) -= L.c(m, l, j);
          if (!L.c(m, i, l).is_zero()) sys(row, var(l, j)) -= L.c(m, i, l);
        }
      }
  return sys;
}

namespace {

std::vector<RatMatrix> to_matrices(const std::vector<RatVector>& vs, std::size_t n) {
  std::vector<RatMatrix> out;
  for (const auto& v : vs) out.push_back(unflatten(v, n, n));
  return out;
}

}  // namespace

std::vector<RatMatrix> derivations_with(const DerivationSpace& D, const std::vector<RatVector>& constraints) {
  if (constraints.empty()) return D.basis;
  // Solve for coordinates x in the Der basis.
  RatMatrix sys(constraints.size(), D.dim());
  for (std::size_t r = 0; r < constraints.size(); ++r)
    for (std::size_t k = 0; k < D.dim(); ++k) sys(r, k) = dot(constraints[r], flatten(D.basis[k]));
  std::vector<RatMatrix> out;
  for (const auto& x : kernel_basis(sys)) out.push_back(D.combine(x));
  return out;
}

DerivationSpace derivation_space(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  DerivationSpace D{L, to_matrices(kernel_basis(derivation_system(L)), n), true, 0};
  for (const auto& b : D.basis)
    if (!b.is_lower_triangular()) D.triangular_in_standard_basis = false;
  std::vector<RatVector> offdiag;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) offdiag.push_back(unit_vector(n * n, r * n + c));
  D.diag_dim = derivations_with(D, offdiag).size();
  return D;
}

bool is_solvable(const DerivationSpace& D) {
  const std::size_t n = D.algebra.dim();
  std::vector<RatVector> current;
  for (const auto& b : D.basis) current.push_back(flatten(b));
  current = span_basis(current, n * n);
  while (!current.empty()) {
    std::vector<RatVector> next;
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        RatMatrix c = commutator(unflatten(current[a], n, n), unflatten(current[b], n, n));
        if (!c.is_zero()) next.push_back(flatten(c));
      }
    next = span_basis(next, n * n);
    if (next.size() == current.size()) return false;
    current = std::move(next);
  }
  return true;
}

Classification classify(const DerivationSpace& D) {
  if (!is_solvable(D)) return Classification::NotCSLA;
  return D.triangular_in_standard_basis ? Classification::CSLAT : Classification::CSLA_NotTriangular;
}

Classification classify(const LieAlgebra& L) { return classify(derivation_space(L)); }

DerivationSplit split_nilpotent_diagonal(const DerivationSpace& D) {
  if (!D.triangular_in_standard_basis) throw std::invalid_argument("derivation space is not lower triangular");
  const std::size_t n = D.algebra.dim();
  std::vector<RatVector> not_strict, not_diag;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (c >= r) not_strict.push_back(unit_vector(n * n, r * n + c));
      if (c != r) not_diag.push_back(unit_vector(n * n, r * n + c));
    }
  return {derivations_with(D, not_strict), derivations_with(D, not_diag)};
}

std::vector<RatMatrix> skew_derivations(const DerivationSpace& D, const RatMatrix& g) {
  const std::size_t n = D.algebra.dim();
  if (g.rows() != n || !g.is_symmetric()) throw std::invalid_argument("metric must be a symmetric matrix");
  // gD + D^T g = 0, entry (r,c): sum_m g(r,m) D(m,c) + D(m,r) g(m,c)
  std::vector<RatVector> constraints;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      RatVector row(n * n);
      for (std::size_t m = 0; m < n; ++m) {
        row[m * n + c] += g(r, m);
        row[m * n + r] += g(m, c);
      }
      constraints.push_back(std::move(row));
    }
  return derivations_with(D, constraints);
}

std::vector<RatMatrix> skew_derivations(const LieAlgebra& L, const RatMatrix& g) {
  return skew_derivations(derivation_space(L), g);
}

}  // namespace nilmetriq
