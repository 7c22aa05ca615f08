#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nilmetriq/derivations.hpp"

namespace nilmetriq {

enum class RicciMode { Exact, Approximate };
std::string to_string(RicciMode m);
RicciMode parse_ricci_mode(const std::string& s);

// Ricci operator in the standard basis e_i. Exact mode fills `exact`; approximate
// mode fills `approx` (row-major) and a condition estimate of g.
struct RicciResult {
  RicciMode mode = RicciMode::Exact;
  std::size_t n = 0;
  RatMatrix exact;
  std::vector<double> approx;
  double condition = 1.0;

  double at(std::size_t i, std::size_t j) const;
};

// Exact mode needs a diagonal g with positive rational entries (std::invalid_argument
// otherwise); approximate mode accepts any SPD g.
RicciResult ricci(const LieAlgebra& L, const RatMatrix& g, RicciMode mode = RicciMode::Exact);

struct NilsolitonResult {
  bool nilsoliton = false;
  RicciMode mode = RicciMode::Exact;
  // Exact mode: Ric = c I + D, residual is the max-norm of the part of Ric outside
  // span(I, Der), so 0 exactly for a nilsoliton.
  Rational c;
  RatMatrix D;
  Rational residual;
  // Approximate mode.
  double c_approx = 0;
  std::vector<double> D_approx;
  double residual_approx = 0;
};

NilsolitonResult nilsoliton_check(const LieAlgebra& L, const RatMatrix& g, RicciMode mode = RicciMode::Exact,
                                  double tolerance = 1e-9);
NilsolitonResult nilsoliton_check(const DerivationSpace& Der, const RatMatrix& g, RicciMode mode = RicciMode::Exact,
                                  double tolerance = 1e-9);

struct Unsupported {
  std::string reason;
};

// Diagonal nilsoliton metric of the one-parameter family at r, when its entries are rational.
std::variant<RatMatrix, Unsupported> nilsoliton_family(const std::string& algebra, const Rational& r);
// The rational representative of the family listed for each of h9, h10, h21, h22, h28.
RatMatrix nilsoliton_witness(const std::string& algebra);
std::vector<std::string> nilsoliton_algebras();

}  // namespace nilmetriq
