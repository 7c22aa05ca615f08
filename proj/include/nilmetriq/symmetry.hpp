#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "nilmetriq/moduli.hpp"

namespace nilmetriq {

struct SymmetryResult {
  std::size_t index = 0;
  std::vector<RatVector> basis;  // reduced echelon basis of s_e
  bool central = true;           // basis inside the center
  std::size_t central_intersection_dim = 0;
};

// Row (i,k), i<k, holds the coefficients of y_1..y_n in
// g([e_i,Y],e_k) + g([e_i,e_k],Y) + g([Y,e_k],e_i).
RatMatrix symmetry_system(const LieAlgebra& L, const RatMatrix& g);
SymmetryResult index_of_symmetry(const LieAlgebra& L, const RatMatrix& g);

// Left-hand side of the symmetry equation for given X, Y, Z.
Rational symmetry_form(const LieAlgebra& L, const RatMatrix& g, const RatVector& x, const RatVector& y,
                       const RatVector& z);

// The 3x3 matrix whose corank is the index of symmetry on h28.
RatMatrix h28_A_matrix(const SigmaPoint& p);

struct BranchReport {
  std::string theorem;
  std::string algebra;
  std::string branch;
  std::size_t samples = 0;
  std::size_t controls = 0;
  bool pass = true;
  std::optional<std::string> counterexample;

  nlohmann::json to_json() const;
};

// Names accepted by theorem_verifier.
std::vector<std::string> theorem_names();

// Seeded randomized check of one encoded statement, one report per branch.
// Throws std::invalid_argument for an unknown name.
std::vector<BranchReport> theorem_verifier(const std::string& theorem, std::size_t samples, std::uint64_t seed);

}  // namespace nilmetriq
