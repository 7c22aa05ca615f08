#include "nilmetriq/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilmetriq {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index");
  Monomial m(nvars, 0);
  m[i] = 1;
  Polynomial p(nvars);
  p.add_term(m, Rational(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<std::size_t> Polynomial::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (degree_in(v) > 0) out.push_back(v);
  return out;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  Polynomial out(nvars_);
  std::vector<Polynomial> powers{constant(nvars_, Rational(1))};
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m[var]) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[var] = 0;
    Polynomial t(nvars_);
    t.add_term(rest, c);
    out += t * powers[m[var]];
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("wrong number of values");
  Rational s;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (m[v]) t *= pow(values[v], static_cast<int>(m[v]));
    s += t;
  }
  return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m(a.nvars_);
      for (std::size_t v = 0; v < a.nvars_; ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.nvars_);
  for (const auto& [m, x] : p.terms_) out.add_term(m, c * x);
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool has_var = false;
    std::string mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (!m[v]) continue;
      if (has_var) mono += "*";
      mono += names.at(v);
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
      has_var = true;
    }
    Rational a = abs(c);
    std::string coef = (has_var && a == Rational(1)) ? "" : a.str() + (has_var ? "*" : "");
    out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    out += coef + mono;
  }
  return out;
}

}  // namespace nilmetriq
