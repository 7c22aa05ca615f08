#include "nilmetriq/lie_algebra.hpp"

#include <cctype>
#include <sstream>

#include "nilmetriq/linalg.hpp"

namespace nilmetriq {

Subspace::Subspace(std::size_t ambient_dim, const std::vector<RatVector>& spanning)
    : n_(ambient_dim), basis_(span_basis(spanning, ambient_dim)) {}

Subspace Subspace::whole(std::size_t n) {
  std::vector<RatVector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(n, i));
  return Subspace(n, b);
}

bool Subspace::contains(const RatVector& v) const { return in_span(basis_, v); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (basis_.empty() || other.basis_.empty()) return zero(n_);
  std::vector<RatVector> cols = basis_;
  for (const auto& v : other.basis_) cols.push_back(Rational(-1) * v);
  std::vector<RatVector> out;
  for (const auto& k : kernel_basis(RatMatrix::from_columns(cols))) {
    RatVector w(n_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!k[i].is_zero()) w = w + k[i] * basis_[i];
    out.push_back(w);
  }
  return Subspace(n_, out);
}

LieAlgebra::LieAlgebra(std::string name, std::size_t dim, std::vector<Rational> c)
    : name_(std::move(name)), dim_(dim), c_(std::move(c)) {
  if (c_.size() != dim_ * dim_ * dim_) throw std::invalid_argument("structure tensor has wrong size");
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (this->c(k, i, j) != -this->c(k, j, i))
          throw std::invalid_argument("structure constants are not antisymmetric");
  if (!satisfies_jacobi(*this)) throw std::invalid_argument("Jacobi identity fails");
}

RatVector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  RatVector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(k, i, j);
  return v;
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
  RatVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!c(k, i, j).is_zero()) out[k] += xy * c(k, i, j);
    }
  }
  return out;
}

RatMatrix LieAlgebra::ad(const RatVector& x) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    RatVector col = bracket(x, unit_vector(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

RatMatrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(dim_, i)); }

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy(*this);
  copy.name_ = std::move(name);
  return copy;
}

LieAlgebra LieAlgebra::change_basis(const RatMatrix& p, std::string name) const {
  auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("change of basis matrix is singular");
  std::vector<Rational> c(dim_ * dim_ * dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) {
      RatVector v = *pinv * bracket(p.col(a), p.col(b));
      for (std::size_t k = 0; k < dim_; ++k) c[(k * dim_ + a) * dim_ + b] = v[k];
    }
  return LieAlgebra(std::move(name), dim_, std::move(c));
}

RatVector jacobiator(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = L.dim();
  RatVector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
  return L.bracket(ei, L.bracket_basis(j, k)) + L.bracket(ej, L.bracket_basis(k, i)) +
         L.bracket(ek, L.bracket_basis(i, j));
}

bool satisfies_jacobi(const LieAlgebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      for (std::size_t k = j + 1; k < L.dim(); ++k)
        if (!is_zero(jacobiator(L, i, j, k))) return false;
  return true;
}

namespace {

struct Term {
  int sign;
  int i, j;  // 1-based as written
};

class TupleScanner {
 public:
  explicit TupleScanner(std::string_view s) : s_(s) {}

  std::vector<std::vector<Term>> run() {
    skip_ws();
    expect('(', 0);
    std::vector<std::vector<Term>> slots;
    while (true) {
      slots.push_back(slot(static_cast<int>(slots.size()) + 1));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')', static_cast<int>(slots.size()));
      break;
    }
    skip_ws();
    if (pos_ != s_.size()) throw TupleParseError(0, "trailing characters after ')'");
    return slots;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c, int slot) {
    if (peek() != c) throw TupleParseError(slot, std::string("expected '") + c + "'");
    ++pos_;
  }
  static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  std::vector<Term> slot(int k) {
    skip_ws();
    if (peek() == '0' && !(pos_ + 1 < s_.size() && digit(s_[pos_ + 1]))) {
      ++pos_;
      return {};
    }
    std::vector<Term> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    terms.push_back(token(k, sign));
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      skip_ws();
      terms.push_back(token(k, c == '-' ? -1 : 1));
    }
    return terms;
  }

  Term token(int k, int sign) {
    if (pos_ + 1 >= s_.size() || !digit(s_[pos_]) || !digit(s_[pos_ + 1]))
      throw TupleParseError(k, "malformed token, expected two digits");
    if (pos_ + 2 < s_.size() && digit(s_[pos_ + 2]))
      throw TupleParseError(k, "malformed token, more than two digits");
    Term t{sign, s_[pos_] - '0', s_[pos_ + 1] - '0'};
    pos_ += 2;
    if (t.i == t.j) throw TupleParseError(k, "repeated index in token");
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LieAlgebra parse_tuple(std::string_view s, std::string name) {
  auto slots = TupleScanner(s).run();
  const std::size_t n = slots.size();
  if (n > 9) throw TupleParseError(0, "at most 9 slots are supported");
  std::vector<Rational> c(n * n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : slots[k]) {
      if (t.i < 1 || t.j < 1 || t.i > static_cast<int>(n) || t.j > static_cast<int>(n))
        throw TupleParseError(static_cast<int>(k) + 1, "index out of range in token " +
                                                           std::to_string(t.i) + std::to_string(t.j));
      std::size_t i = t.i - 1, j = t.j - 1;
      c[(k * n + i) * n + j] -= Rational(t.sign);
      c[(k * n + j) * n + i] += Rational(t.sign);
    }
  try {
    return LieAlgebra(std::move(name), n, std::move(c));
  } catch (const std::invalid_argument&) {
  }
  // Jacobi failed: recompute the Jacobiator from the tokens to name the slot.
  auto cc = [&](std::size_t k, std::size_t i, std::size_t j) -> Rational {
    Rational v;
    for (const auto& t : slots[k]) {
      if (static_cast<std::size_t>(t.i - 1) == i && static_cast<std::size_t>(t.j - 1) == j) v -= Rational(t.sign);
      if (static_cast<std::size_t>(t.i - 1) == j && static_cast<std::size_t>(t.j - 1) == i) v += Rational(t.sign);
    }
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          Rational sum;
          for (std::size_t p = 0; p < n; ++p) {
            sum += cc(p, j, l) * cc(m, i, p);
            sum += cc(p, l, i) * cc(m, j, p);
            sum += cc(p, i, j) * cc(m, l, p);
          }
          if (!sum.is_zero())
            throw TupleParseError(static_cast<int>(m) + 1, "Jacobi identity fails for (e" + std::to_string(i + 1) +
                                                               ",e" + std::to_string(j + 1) + ",e" +
                                                               std::to_string(l + 1) + ")");
        }
  throw TupleParseError(0, "invalid structure constants");
}

std::string serialize(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (n > 9) throw std::invalid_argument("serialize: dimension too large for tuple notation");
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < n; ++k) {
    if (k) os << ',';
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational coef = -L.c(k, i, j);
        if (coef.is_zero()) continue;
        if (coef != Rational(1) && coef != Rational(-1))
          throw std::invalid_argument("serialize: coefficient outside {-1,0,1}");
        if (coef.sign() < 0)
          os << '-';
        else if (any)
          os << '+';
        os << (i + 1) << (j + 1);
        any = true;
      }
    if (!any) os << '0';
  }
  os << ')';
  return os.str();
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<RatVector> vs;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) {
      RatVector w = L.bracket(u, v);
      if (!is_zero(w)) vs.push_back(std::move(w));
    }
  return Subspace(L.dim(), vs);
}

LowerCentralSeries lower_central_series(const LieAlgebra& L) {
  LowerCentralSeries out{{Subspace::whole(L.dim())}, true};
  const Subspace whole = out.terms.front();
  while (out.terms.back().dim() > 0) {
    Subspace next = bracket_span(L, whole, out.terms.back());
    if (next.dim() == out.terms.back().dim()) {
      out.nilpotent = false;
      break;
    }
    out.terms.push_back(std::move(next));
  }
  return out;
}

int nilpotency_step(const LieAlgebra& L) {
  auto lcs = lower_central_series(L);
  if (!lcs.nilpotent) throw std::domain_error("Lie algebra is not nilpotent");
  return static_cast<int>(lcs.terms.size()) - 1;
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  RatMatrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatMatrix a = L.ad_basis(j);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(j * n + r, c) = a(r, c);
  }
  return Subspace(n, kernel_basis(stacked));
}

bool is_automorphism(const LieAlgebra& L, const RatMatrix& phi) {
  const std::size_t n = L.dim();
  if (phi.rows() != n || phi.cols() != n) return false;
  if (determinant(phi).is_zero()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (phi * L.bracket_basis(i, j) != L.bracket(phi.col(i), phi.col(j))) return false;
  return true;
}

bool is_derivation(const LieAlgebra& L, const RatMatrix& d) {
  const std::size_t n = L.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d * L.bracket_basis(i, j) !=
          L.bracket(d.col(i), unit_vector(n, j)) + L.bracket(unit_vector(n, i), d.col(j)))
        return false;
  return true;
}

}  // namespace nilmetriq
