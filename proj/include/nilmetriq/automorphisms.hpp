#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilmetriq/derivations.hpp"
#include "nilmetriq/sampling.hpp"

namespace nilmetriq {

// Matrix position, 0-based.
struct Position {
  std::size_t row, col;
  friend auto operator<=>(const Position&, const Position&) = default;
};
std::string to_string(const Position& p);  // 1-based "(r,c)"

// Lower-triangular positions of an n x n matrix in row-major order (1,1),(2,1),(2,2),(3,1),...
std::vector<Position> lower_triangular_positions(std::size_t n);

struct AutPattern {
  std::vector<Position> free_positions;
  std::vector<Position> dependent_positions;
};

// Pivot positions of the Der basis in lower-triangular coordinates.
AutPattern aut0_pattern(const DerivationSpace& D);

// exp of a strictly lower-triangular derivation, verified to be an automorphism.
RatMatrix exp_derivation(const LieAlgebra& L, const RatMatrix& nilpotent_derivation);

// Diagonal positions whose values determine a positive diagonal automorphism.
std::vector<std::size_t> diagonal_parameter_indices(const DerivationSpace& D);
// Positive diagonal automorphism with the given values at diagonal_parameter_indices(D).
RatMatrix diagonal_automorphism(const DerivationSpace& D, const std::vector<Rational>& values);

// A random element diag * exp(N) of the identity component.
RatMatrix random_aut0_element(const DerivationSpace& D, Sampler& s);

struct FiniteMatrixGroup {
  std::vector<RatMatrix> generators;
  std::vector<RatMatrix> elements;  // identity first

  std::size_t order() const { return elements.size(); }
  bool is_abelian() const;
  bool contains(const RatMatrix& m) const;
};

// Closure of the generators (each checked to be an automorphism of L). Throws
// std::invalid_argument for a non-automorphism and std::length_error past 64 elements.
FiniteMatrixGroup component_group(const LieAlgebra& L, const std::vector<RatMatrix>& generators);
FiniteMatrixGroup closure(const std::vector<RatMatrix>& generators, std::size_t bound = 64);

struct GroupProfile {
  std::size_t order = 0;
  bool abelian = true;
  std::map<std::size_t, std::size_t> element_orders;  // order -> count
  std::size_t center_size = 0;
};
GroupProfile group_profile(const FiniteMatrixGroup& G);
// "trivial", "Z2", "Z2^k", "Dih4", "Dih4xZ2", "G16^3" or "unknown(...)".
std::string identify_group(const FiniteMatrixGroup& G);

}  // namespace nilmetriq
