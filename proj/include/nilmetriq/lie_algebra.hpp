#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nilmetriq/matrix.hpp"

namespace nilmetriq {

class TupleParseError : public std::runtime_error {
 public:
  TupleParseError(int slot, const std::string& what)
      : std::runtime_error(slot > 0 ? "slot " + std::to_string(slot) + ": " + what : what), slot_(slot) {}
  // 1-based slot index, 0 when the error is not tied to a slot.
  int slot() const { return slot_; }

 private:
  int slot_;
};

// Linear subspace of Q^n, stored as a reduced (RREF) basis so equality is structural.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, const std::vector<RatVector>& spanning);
  static Subspace whole(std::size_t n);
  static Subspace zero(std::size_t n) { return Subspace(n, {}); }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVector>& basis() const { return basis_; }
  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

 private:
  std::size_t n_;
  std::vector<RatVector> basis_;
};

// Finite-dimensional Lie algebra over Q given by structure constants
// [e_i, e_j] = sum_k c(k, i, j) e_k (0-based indices).
class LieAlgebra {
 public:
  // Validates antisymmetry and the Jacobi identity; throws std::invalid_argument.
  LieAlgebra(std::string name, std::size_t dim, std::vector<Rational> c);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Rational& c(std::size_t k, std::size_t i, std::size_t j) const { return c_[(k * dim_ + i) * dim_ + j]; }

  RatVector bracket_basis(std::size_t i, std::size_t j) const;
  RatVector bracket(const RatVector& x, const RatVector& y) const;
  // ad(x) y = [x, y]
  RatMatrix ad(const RatVector& x) const;
  RatMatrix ad_basis(std::size_t i) const;

  LieAlgebra renamed(std::string name) const;
  // Structure constants in the basis given by the columns of p (p invertible).
  LieAlgebra change_basis(const RatMatrix& p, std::string name) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<Rational> c_;
};

// Jacobiator component sums; zero vector for every triple iff Jacobi holds.
RatVector jacobiator(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k);
bool satisfies_jacobi(const LieAlgebra& L);

// Tuple notation: slot k holding token "ij" contributes [e_i, e_j] = -e_k.
LieAlgebra parse_tuple(std::string_view s, std::string name = "");
// Inverse of parse_tuple for algebras with coefficients in {-1,0,1}.
std::string serialize(const LieAlgebra& L);

struct LowerCentralSeries {
  std::vector<Subspace> terms;  // C^0 = L, C^1 = [L, L], ..., last is 0 when nilpotent
  bool nilpotent;
};

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);
LowerCentralSeries lower_central_series(const LieAlgebra& L);
// Smallest s with C^s = 0; throws std::domain_error for non-nilpotent input.
int nilpotency_step(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);

// phi[x,y] = [phi x, phi y] on all basis pairs.
bool is_automorphism(const LieAlgebra& L, const RatMatrix& phi);
// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& L, const RatMatrix& d);

}  // namespace nilmetriq
