#include "shadowsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace shadowsim {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer; full-avalanche hash of the state word.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(seed * kGolden + 1) ^ mix(stream + kGolden)) {}

CounterRng CounterRng::split(std::uint64_t stream) const {
  CounterRng child(0);
  child.key_ = mix(key_ + kGolden * (stream + 1));
  return child;
}

std::uint64_t CounterRng::next_u64() { return mix(key_ + kGolden * ++ctr_); }

double CounterRng::uniform() {
  // 53 high bits -> [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

cplx CounterRng::normal_cplx() {
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  return cplx(normal() * inv_sqrt2, normal() * inv_sqrt2);
}

std::uint64_t CounterRng::binomial(std::uint64_t trials, double p) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (uniform() < p) ++hits;
  }
  return hits;
}

}  // namespace shadowsim
