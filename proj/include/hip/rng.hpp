#pragma once

#include <cstdint>
#include <random>

#include "hip/field.hpp"

namespace hip {

/// Seeded deterministic randomness source. All randomized operations take one
/// of these so that equal seeds reproduce identical keys, messages and splits
/// across runs and platforms (bounded draws use rejection on raw 64-bit
/// output, never std::uniform_int_distribution).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform draw from [0, bound), unbiased. bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform element of the field.
  FieldElement element(const FieldCtxPtr& ctx);
  /// Uniform nonzero element of the field.
  FieldElement nonzero_element(const FieldCtxPtr& ctx);

 private:
  std::mt19937_64 eng_;
};

}  // namespace hip
