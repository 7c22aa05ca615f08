#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nilmetriq/matrix.hpp"

namespace nilmetriq {

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivot_columns;  // original column indices, in elimination order
};

// Reduced row echelon form with columns visited in column_order. Pivots are
// normalized to 1 and the nonzero rows come first, in pivot order.
RrefResult rref(const RatMatrix& m, std::span<const std::size_t> column_order);
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::vector<RatVector> kernel_basis(const RatMatrix& m);

// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
std::vector<Rational> leading_principal_minors(const RatMatrix& m);
bool is_positive_definite(const RatMatrix& m);

// Rank of the span of the given vectors (all of the same length).
std::size_t span_rank(const std::vector<RatVector>& vs);
// A basis (reduced) for the span of vs; empty when vs spans {0}.
std::vector<RatVector> span_basis(const std::vector<RatVector>& vs, std::size_t dim);
bool in_span(const std::vector<RatVector>& basis, const RatVector& v);

// sum_{k < n} m^k / k! for a square nilpotent m (m^n = 0); throws otherwise.
RatMatrix exp_nilpotent(const RatMatrix& m);

}  // namespace nilmetriq
