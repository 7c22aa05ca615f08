#include "nilmetriq/surd.hpp"

#include <stdexcept>

namespace nilmetriq {

namespace {

void same_field(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.d() != y.d()) throw std::invalid_argument("surds over different fields");
}

}  // namespace

QuadraticSurd::QuadraticSurd(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d <= 1 || exact_sqrt(Rational(d))) throw std::invalid_argument("surd radicand must be a positive non-square");
}

std::string QuadraticSurd::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
  return s + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  same_field(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  same_field(x, y);
  return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  same_field(x, y);
  return {x.a_ * y.a_ + Rational(x.d_) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_};
}

SurdMatrix::SurdMatrix(std::size_t rows, std::size_t cols, long d)
    : rows_(rows), cols_(cols), d_(d), data_(rows * cols, QuadraticSurd::rational(0, d)) {}

SurdMatrix SurdMatrix::from_rational(const RatMatrix& m, long d) {
  SurdMatrix s(m.rows(), m.cols(), d);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = QuadraticSurd::rational(m(i, j), d);
  return s;
}

SurdMatrix SurdMatrix::transpose() const {
  SurdMatrix t(cols_, rows_, d_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SurdMatrix operator*(const SurdMatrix& x, const SurdMatrix& y) {
  if (x.cols_ != y.rows_ || x.d_ != y.d_) throw std::invalid_argument("surd matrix shape/field mismatch");
  SurdMatrix out(x.rows_, y.cols_, x.d_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t j = 0; j < y.cols_; ++j)
      for (std::size_t k = 0; k < x.cols_; ++k) out(i, j) = out(i, j) + x(i, k) * y(k, j);
  return out;
}

}  // namespace nilmetriq
