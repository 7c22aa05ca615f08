#include "nilmetriq/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nilmetriq {

RrefResult rref(const RatMatrix& m, std::span<const std::size_t> column_order) {
  const std::size_t rows = m.rows(), cols = m.cols();
  {
    std::vector<bool> seen(cols, false);
    if (column_order.size() != cols) throw std::invalid_argument("column_order is not a permutation");
    for (auto c : column_order) {
      if (c >= cols || seen[c]) throw std::invalid_argument("column_order is not a permutation");
      seen[c] = true;
    }
  }
  RrefResult out{m, {}};
  RatMatrix& a = out.matrix;
  std::size_t r = 0;
  for (std::size_t c : column_order) {
    if (r == rows) break;
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = inverse(a(r, c));
    for (std::size_t j = 0; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

RrefResult rref(const RatMatrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return rref(m, order);
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a(m);
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<Rational> leading_principal_minors(const RatMatrix& m) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RatMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    out.push_back(determinant(sub));
  }
  return out;
}

bool is_positive_definite(const RatMatrix& m) {
  if (!m.is_symmetric()) return false;
  for (const auto& d : leading_principal_minors(m))
    if (d.sign() <= 0) return false;
  return true;
}

std::size_t span_rank(const std::vector<RatVector>& vs) {
  if (vs.empty()) return 0;
  return rank(RatMatrix::from_rows(vs));
}

std::vector<RatVector> span_basis(const std::vector<RatVector>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  for (const auto& v : vs)
    if (v.size() != dim) throw std::invalid_argument("span_basis: dimension mismatch");
  auto [r, pivots] = rref(RatMatrix::from_rows(vs));
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(r.row(i));
  return out;
}

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
  if (basis.empty()) return is_zero(v);
  auto with = basis;
  with.push_back(v);
  return span_rank(with) == span_rank(basis);
}

RatMatrix exp_nilpotent(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("exp_nilpotent: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix result = RatMatrix::identity(n);
  RatMatrix term = RatMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    term = term * m;
    result += inverse(factorial(static_cast<unsigned>(k))) * term;
  }
  if (n > 0 && !(term * m).is_zero())
    throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
  return result;
}

}  // namespace nilmetriq
