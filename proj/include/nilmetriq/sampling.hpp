#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nilmetriq/rational.hpp"

namespace nilmetriq {

// Seeded source of small random rationals. Identical seeds give identical streams.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0);

  Rational rational(int max_num = 9, int max_den = 5);
  Rational nonzero_rational(int max_num = 9, int max_den = 5);
  Rational positive_rational(int max_num = 9, int max_den = 5);
  std::size_t index(std::size_t n);
  bool coin(double p = 0.5);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// count distinct positive rationals p/q built from distinct primes in a seeded order.
std::vector<Rational> generic_values(std::size_t count, std::mt19937_64& rng);

}  // namespace nilmetriq
