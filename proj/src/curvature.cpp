#include "nilmetriq/curvature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nilmetriq/linalg.hpp"

namespace nilmetriq {

std::string to_string(RicciMode m) { return m == RicciMode::Exact ? "exact" : "approximate"; }

RicciMode parse_ricci_mode(const std::string& s) {
  if (s == "exact") return RicciMode::Exact;
  if (s == "approximate" || s == "approx") return RicciMode::Approximate;
  throw std::invalid_argument("unknown mode '" + s + "' (expected exact or approximate)");
}

double RicciResult::at(std::size_t i, std::size_t j) const {
  return mode == RicciMode::Exact ? exact(i, j).to_double() : approx[i * n + j];
}

namespace {

RicciResult ricci_exact(const LieAlgebra& L, const RatMatrix& g) {
  const std::size_t n = L.dim();
  if (!g.is_diagonal())
    throw std::invalid_argument("exact Ricci mode needs a diagonal metric; use approximate mode for this g");
  RatVector d = g.diag();
  for (const auto& x : d)
    if (x.sign() <= 0) throw std::invalid_argument("metric entries must be positive");
  // On the orthonormal frame e_i / sqrt(d_i): c_abc = C^c_ab sqrt(d_c / (d_a d_b)).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!L.c(i, i, k).is_zero()) throw std::logic_error("c_iki != 0: the basis is not adapted to a nilpotent flag");
  auto X = [&](std::size_t a, std::size_t b, std::size_t c) { return d[c] / (d[a] * d[b]); };
  // c_{a1 b1 c1} c_{a2 b2 c2} sqrt(d_j / d_h), which is always rational here.
  auto term = [&](std::size_t a1, std::size_t b1, std::size_t c1, std::size_t a2, std::size_t b2, std::size_t c2,
                  std::size_t j, std::size_t h) -> Rational {
    const Rational& k1 = L.c(c1, a1, b1);
    if (k1.is_zero()) return Rational(0);
    const Rational& k2 = L.c(c2, a2, b2);
    if (k2.is_zero()) return Rational(0);
    auto root = exact_sqrt(X(a1, b1, c1) * X(a2, b2, c2) * d[j] / d[h]);
    if (!root) throw std::logic_error("irrational Ricci entry for a diagonal metric");
    return k1 * k2 * *root;
  };
  RatMatrix M(n, n);
  const Rational half(1, 2);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t h = 0; h < n; ++h) {
      Rational s;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          s += half * term(i, k, h, i, k, j, j, h);
          s -= term(i, j, k, k, h, i, j, h);
          s -= term(i, j, k, i, h, k, j, h);
        }
      // g(Ric e~_j, e~_h) scaled to the standard basis: M(h, j) = R~_jh sqrt(d_j / d_h).
      M(h, j) = half * s;
    }
  return {RicciMode::Exact, n, M, {}, 1.0};
}

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

RicciResult ricci_approximate(const LieAlgebra& L, const RatMatrix& gr) {
  const std::size_t n = L.dim();
  if (!gr.is_symmetric() || !is_positive_definite(gr)) throw std::invalid_argument("metric must be symmetric positive definite");
  Eigen::MatrixXd g = to_eigen(gr);
  // Gram-Schmidt on e_1, ..., e_n; column i of P is the i-th orthonormal vector.
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) P.col(i) -= (P.col(k).transpose() * g * P.col(i)).value() * P.col(k);
    P.col(i) /= std::sqrt((P.col(i).transpose() * g * P.col(i)).value());
  }
  auto bracket = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        double xy = x(a) * y(b);
        if (xy == 0) continue;
        for (std::size_t k = 0; k < n; ++k) out(k) += L.c(k, a, b).to_double() * xy;
      }
    return out;
  };
  std::vector<double> c(n * n * n);
  auto C = [&](std::size_t i, std::size_t j, std::size_t k) -> double& { return c[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Eigen::VectorXd b = g * bracket(P.col(i), P.col(j));
      for (std::size_t k = 0; k < n; ++k) C(i, j, k) = P.col(k).dot(b);
    }
  Eigen::MatrixXd T(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t h = 0; h < n; ++h) {
      double s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          s += C(i, k, i) * (C(k, j, h) + C(k, h, j)) + 0.5 * C(i, k, h) * C(i, k, j) - C(i, j, k) * C(k, h, i) +
               C(i, k, i) * C(j, h, k) - C(i, j, k) * C(i, h, k);
      T(h, j) = 0.5 * s;
    }
  Eigen::MatrixXd M = P * T * P.transpose() * g;
  RicciResult out{RicciMode::Approximate, n, {}, std::vector<double>(n * n), 1.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.approx[i * n + j] = M(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  out.condition = es.eigenvalues().maxCoeff() / es.eigenvalues().minCoeff();
  return out;
}

}  // namespace

RicciResult ricci(const LieAlgebra& L, const RatMatrix& g, RicciMode mode) {
  if (g.rows() != L.dim() || g.cols() != L.dim()) throw std::invalid_argument("metric has the wrong size");
  return mode == RicciMode::Exact ? ricci_exact(L, g) : ricci_approximate(L, g);
}

NilsolitonResult nilsoliton_check(const DerivationSpace& Der, const RatMatrix& g, RicciMode mode, double tolerance) {
  const LieAlgebra& L = Der.algebra;
  const std::size_t n = L.dim();
  RicciResult ric = ricci(L, g, mode);
  std::vector<RatVector> cols{flatten(RatMatrix::identity(n))};
  for (const auto& b : Der.basis) cols.push_back(flatten(b));
  NilsolitonResult out;
  out.mode = mode;
  if (mode == RicciMode::Exact) {
    RatMatrix A = RatMatrix::from_columns(cols);
    RatVector b = flatten(ric.exact);
    if (auto x = solve(A, b)) {
      out.nilsoliton = true;
      out.c = (*x)[0];
      out.D = RatMatrix(n, n);
      for (std::size_t k = 0; k < Der.dim(); ++k) out.D += (*x)[k + 1] * Der.basis[k];
      if (!is_derivation(L, out.D) || ric.exact != out.c * RatMatrix::identity(n) + out.D)
        throw std::logic_error("nilsoliton certificate failed verification");
      out.residual = Rational(0);
      return out;
    }
    // Orthogonal projection of Ric onto span(I, Der) in the entrywise inner product.
    auto basis = span_basis(cols, n * n);
    RatMatrix B = RatMatrix::from_columns(basis);
    RatMatrix Bt = B.transpose();
    RatVector coef = *solve(Bt * B, Bt * b);
    RatVector r = b - B * coef;
    for (const auto& v : r) out.residual = std::max(out.residual, abs(v));
    return out;
  }
  Eigen::MatrixXd A(n * n, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t i = 0; i < n * n; ++i) A(i, k) = cols[k][i].to_double();
  Eigen::VectorXd b(n * n);
  for (std::size_t i = 0; i < n * n; ++i) b(i) = ric.approx[i];
  Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
  Eigen::VectorXd r = b - A * x;
  double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
  out.residual_approx = r.cwiseAbs().maxCoeff() / scale;
  out.c_approx = x(0);
  out.D_approx.assign(n * n, 0.0);
  for (std::size_t k = 1; k < cols.size(); ++k)
    for (std::size_t i = 0; i < n * n; ++i) out.D_approx[i] += x(k) * cols[k][i].to_double();
  out.nilsoliton = out.residual_approx <= tolerance;
  return out;
}

NilsolitonResult nilsoliton_check(const LieAlgebra& L, const RatMatrix& g, RicciMode mode, double tolerance) {
  return nilsoliton_check(derivation_space(L), g, mode, tolerance);
}

std::vector<std::string> nilsoliton_algebras() { return {"h9", "h10", "h21", "h22", "h28"}; }

std::variant<RatMatrix, Unsupported> nilsoliton_family(const std::string& algebra, const Rational& r) {
  if (r.sign() <= 0) return Unsupported{"r must be positive"};
  auto diag = [](std::vector<Rational> v) { return RatMatrix::diagonal(v); };
  const Rational one(1);
  if (algebra == "h9") return diag({one, one, Rational(2) * r, one, r, r * r});
  if (algebra == "h10") return diag({one, one, one, r, r / Rational(2), r * r});
  if (algebra == "h21") {
    auto a = exact_root(Rational(6) * r * r, 3);
    if (!a) return Unsupported{"h21 entries are rational only for r = 6 t^3"};
    return diag({one, one, one, *a / Rational(2), *a * *a / Rational(3), r * r});
  }
  if (algebra == "h28") {
    auto q = exact_sqrt(Rational(6) * r);
    if (!q) return Unsupported{"h28 entries are rational only for r = 6 u^2"};
    return diag({one, one, *q / Rational(3), r, *q * r / Rational(2), r * r});
  }
  if (algebra == "h22")
    return Unsupported{"h22 entries involve sqrt(6) r, irrational for rational r; use the witness diag(1,3,1,9,27,54)"};
  return Unsupported{"no nilsoliton family is listed for " + algebra};
}

RatMatrix nilsoliton_witness(const std::string& algebra) {
  if (algebra == "h22") return RatMatrix::diagonal(std::vector<Rational>{1, 3, 1, 9, 27, 54});
  Rational r = algebra == "h21" ? Rational(6) : algebra == "h28" ? Rational(24) : Rational(2);
  auto m = nilsoliton_family(algebra, r);
  if (auto* u = std::get_if<Unsupported>(&m)) throw std::invalid_argument(u->reason);
  return std::get<RatMatrix>(m);
}

}  // namespace nilmetriq
