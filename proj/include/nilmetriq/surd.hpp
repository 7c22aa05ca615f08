#pragma once

#include <string>
#include <vector>

#include "nilmetriq/matrix.hpp"

namespace nilmetriq {

// a + b*sqrt(d) for a fixed non-square positive integer d.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational a, Rational b, long d);
  static QuadraticSurd rational(Rational a, long d) { return {std::move(a), Rational(0), d}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  std::string str() const;

  QuadraticSurd operator-() const { return {-a_, -b_, d_}; }
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_, b_;
  long d_ = 2;
};

// Small dense matrix over Q(sqrt d).
class SurdMatrix {
 public:
  SurdMatrix(std::size_t rows, std::size_t cols, long d);
  static SurdMatrix from_rational(const RatMatrix& m, long d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long d() const { return d_; }
  QuadraticSurd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QuadraticSurd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  SurdMatrix transpose() const;
  friend SurdMatrix operator*(const SurdMatrix& x, const SurdMatrix& y);
  friend bool operator==(const SurdMatrix& x, const SurdMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_, cols_;
  long d_;
  std::vector<QuadraticSurd> data_;
};

}  // namespace nilmetriq
