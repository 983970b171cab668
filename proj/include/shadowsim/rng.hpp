#pragma once

#include <cstdint>

#include "shadowsim/types.hpp"

namespace shadowsim {

// Splittable counter-based generator: every draw is a hash of
// (key, counter), so streams derived via split() are independent and
// replay byte-identically for a fixed seed regardless of call
// interleaving elsewhere.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  // Child generator with its own key; does not advance this one.
  CounterRng split(std::uint64_t stream) const;

  std::uint64_t next_u64();
  double uniform();        // [0, 1)
  double normal();         // standard normal (Box-Muller)
  cplx normal_cplx();      // (normal + i normal)/sqrt(2)
  // Number of successes in `trials` Bernoulli(p) draws.
  std::uint64_t binomial(std::uint64_t trials, double p);

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace shadowsim
