#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nilmetriq/rational.hpp"

namespace nilmetriq {

using RatVector = std::vector<Rational>;

RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RatVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);
std::string to_string(const RatVector& v);

// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(std::span<const Rational> d);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);
  static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& data() const { return data_; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;
  RatVector diag() const;

  RatMatrix transpose() const;
  RatMatrix operator-() const;
  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  bool is_lower_triangular() const;
  bool is_strictly_lower_triangular() const;

  std::string str() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, RatMatrix m);
RatVector operator*(const RatMatrix& m, const RatVector& v);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);
RatMatrix matrix_power(const RatMatrix& m, unsigned k);
Rational trace(const RatMatrix& m);

// Row-major flattening, used to treat spaces of matrices as vector spaces.
RatVector flatten(const RatMatrix& m);
RatMatrix unflatten(const RatVector& v, std::size_t rows, std::size_t cols);

}  // namespace nilmetriq
