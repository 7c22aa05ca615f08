#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilmetriq/rational.hpp"

namespace nilmetriq {

// Sparse multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;  // exponent per variable

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Variables that actually occur.
  std::vector<std::size_t> variables() const;
  unsigned degree_in(std::size_t var) const;

  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  Rational evaluate(const std::vector<Rational>& values) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Human-readable form with the given variable names.
  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace nilmetriq
