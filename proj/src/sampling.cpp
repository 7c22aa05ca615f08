#include "nilmetriq/sampling.hpp"

#include <algorithm>

namespace nilmetriq {

namespace {

std::seed_seq make_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
}

std::vector<long> primes(std::size_t count) {
  std::vector<long> ps;
  for (long n = 2; ps.size() < count; ++n)
    if (std::none_of(ps.begin(), ps.end(), [n](long p) { return n % p == 0; })) ps.push_back(n);
  return ps;
}

}  // namespace

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
  auto seq = make_seq(seed, stream);
  rng_.seed(seq);
}

Rational Sampler::rational(int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return Rational(num(rng_), den(rng_));
}

Rational Sampler::nonzero_rational(int max_num, int max_den) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den), sign(0, 1);
  int n = num(rng_);
  return Rational(sign(rng_) ? n : -n, den(rng_));
}

Rational Sampler::positive_rational(int max_num, int max_den) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
  return Rational(num(rng_), den(rng_));
}

std::size_t Sampler::index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  return d(rng_);
}

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::vector<Rational> generic_values(std::size_t count, std::mt19937_64& rng) {
  // Numerators and denominators are drawn from disjoint prime sets, so the values
  // are distinct and no two of them multiply to a coincidence of small products.
  std::vector<long> ps = primes(2 * count + 8);
  std::shuffle(ps.begin(), ps.end(), rng);
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(ps[2 * i], ps[2 * i + 1]);
  return out;
}

}  // namespace nilmetriq
