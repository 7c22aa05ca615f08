#pragma once

#include <string>
#include <vector>

#include "nilmetriq/surd.hpp"

namespace nilmetriq {

// One-parameter isometric automorphisms phi_r of h13, h19+, h26- together with the
// sigma_r they preserve. w must satisfy w^2 = 1 - r^2.
struct ExceptionalPair {
  std::string algebra;
  SurdMatrix phi, sigma;
};

std::vector<ExceptionalPair> exceptional_pairs(const Rational& r, const QuadraticSurd& w);

}  // namespace nilmetriq
