#pragma once

#include <string>
#include <vector>

#include "nilmetriq/lie_algebra.hpp"

namespace nilmetriq {

struct DerivationSpace {
  LieAlgebra algebra;
  std::vector<RatMatrix> basis;
  bool triangular_in_standard_basis = false;
  std::size_t diag_dim = 0;  // dim (Der ∩ diagonal matrices)

  std::size_t dim() const { return basis.size(); }
  // sum_k x_k basis[k]
  RatMatrix combine(const RatVector& x) const;
};

enum class Classification { NotCSLA, CSLA_NotTriangular, CSLAT };
std::string to_string(Classification c);

// Coefficient matrix of the derivation equations: one row per (basis pair i<j,
// output coordinate), one column per entry D(r,c) in row-major order.
RatMatrix derivation_system(const LieAlgebra& L);
DerivationSpace derivation_space(const LieAlgebra& L);
bool is_solvable(const DerivationSpace& D);
Classification classify(const LieAlgebra& L);
Classification classify(const DerivationSpace& D);

struct DerivationSplit {
  std::vector<RatMatrix> nilpotent;  // Der ∩ strictly lower triangular
  std::vector<RatMatrix> diagonal;   // Der ∩ diagonal
};
// Throws std::invalid_argument for non-triangular input.
DerivationSplit split_nilpotent_diagonal(const DerivationSpace& D);

// Derivations D with gD + D^T g = 0. Throws std::invalid_argument for non-symmetric g.
std::vector<RatMatrix> skew_derivations(const LieAlgebra& L, const RatMatrix& g);
std::vector<RatMatrix> skew_derivations(const DerivationSpace& D, const RatMatrix& g);

// Elements of Der satisfying extra linear constraints on the matrix entries
// (each constraint is a row over the 36 entries, row-major).
std::vector<RatMatrix> derivations_with(const DerivationSpace& D, const std::vector<RatVector>& constraints);

}  // namespace nilmetriq
