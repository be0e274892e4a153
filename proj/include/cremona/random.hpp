#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "cremona/field.hpp"

namespace cremona {

// Seeded generator with a platform-independent output sequence: mt19937_64
// is fully specified by the standard and the reductions below avoid the
// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  Fp uniform();
  Fp nonzero();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Mixes a master seed with task tags into a reproducible sub-seed.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) noexcept;

}  // namespace cremona
