#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "nilmetriq/automorphisms.hpp"

namespace nilmetriq {

// Free/fixed entries of the cross-section Sigma of lower-triangular matrices.
struct SigmaPattern {
  std::string algebra;
  std::size_t n = 6;
  std::vector<Position> fixed_one_diag;
  std::vector<Position> fixed_zero_offdiag;
  std::vector<Position> free_diag;     // parameters constrained > 0
  std::vector<Position> free_offdiag;  // nd(Sigma)
  std::vector<Position> parameters;    // s_k sits at parameters[k], row-major

  std::size_t parameter_count() const { return parameters.size(); }
  static std::string parameter_name(std::size_t k) { return "s" + std::to_string(k); }
  std::optional<std::size_t> parameter_index(const std::string& name) const;
  std::optional<std::size_t> parameter_at(const Position& p) const;
  bool is_diagonal_parameter(std::size_t k) const { return parameters.at(k).row == parameters.at(k).col; }
  std::vector<std::size_t> offdiagonal_parameters() const;
};

// Throws std::invalid_argument unless L is a CSLAT.
SigmaPattern sigma_pattern(const LieAlgebra& L);
SigmaPattern sigma_pattern(const DerivationSpace& D);

// Rational point of Sigma. Diagonal parameters must be positive.
class SigmaPoint {
 public:
  SigmaPoint(SigmaPattern pattern, std::vector<Rational> values);
  // Diagonal parameters 1, off-diagonal parameters 0.
  static SigmaPoint trivial(SigmaPattern pattern);

  const SigmaPattern& pattern() const { return pattern_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t k) const { return values_.at(k); }
  const Rational& value(const std::string& name) const;
  std::map<std::string, Rational> assignments() const;

  // Copy with some parameters replaced; unknown names throw std::invalid_argument.
  SigmaPoint with(const std::map<std::string, Rational>& set, const std::vector<std::string>& zero = {}) const;

  RatMatrix sigma() const;

 private:
  SigmaPattern pattern_;
  std::vector<Rational> values_;
};

RatMatrix metric_of(const SigmaPoint& p);
// sigma^T sigma for lower triangular sigma with positive diagonal; checks positive definiteness.
RatMatrix metric_from_sigma(const RatMatrix& sigma);

struct IsotropyResult {
  FiniteMatrixGroup group;
  std::string label;
  bool continuous_isotropy = false;  // nonzero skew-symmetric derivations exist
  std::size_t skew_dim = 0;
};

// {d in D : d^T g d = g}. Throws std::invalid_argument when g is not SPD.
IsotropyResult isotropy_group(const LieAlgebra& L, const RatMatrix& g, const FiniteMatrixGroup& D);
IsotropyResult isotropy_group(const DerivationSpace& Der, const RatMatrix& g, const FiniteMatrixGroup& D);

struct SweepRow {
  std::vector<std::size_t> zeros;  // parameter indices set to 0
  std::string label;
  bool tie_break = false;
};

struct SweepResult {
  std::string algebra;
  std::size_t p = 0;
  std::uint64_t seed = 0;
  std::vector<SweepRow> rows;  // subsets in lexicographic order
  std::map<std::string, std::size_t> tally;
  std::vector<std::string> warnings;

  std::string csv() const;
  nlohmann::json tally_json() const;
};

// Every p-subset of the off-diagonal parameters set to zero, the rest generic.
// Throws std::runtime_error("non-generic sampling") if three samples all disagree.
SweepResult isotropy_sweep(const LieAlgebra& L, const FiniteMatrixGroup& D, std::size_t p, std::uint64_t seed);

// Sub-pattern of Sigma whose metrics are fixed by every element of D.
struct FixedPointSection {
  SigmaPattern pattern;
  bool empty = false;
  std::string note;
  std::vector<std::size_t> free;             // surviving parameters
  std::vector<std::size_t> zero;             // forced to 0
  std::map<std::size_t, std::size_t> tied;   // parameter -> the free parameter it equals

  // Point of Sigma_D from values of the free parameters (in order).
  SigmaPoint point(const std::vector<Rational>& free_values) const;
  // Entry strings of the lower triangular form, "0", "1" or "s<k>".
  std::vector<std::vector<std::string>> matrix_form() const;
};

FixedPointSection fixed_point_section(const LieAlgebra& L, const FiniteMatrixGroup& D);

}  // namespace nilmetriq
