#include "hip/rng.hpp"

#include <stdexcept>

namespace hip {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty sampling range");
  if (bound == 1) return 0;
  // rejection keeps the draw unbiased and platform-independent
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return v % bound;
}

FieldElement Rng::element(const FieldCtxPtr& ctx) {
  std::vector<std::uint32_t> c(ctx->ext_degree());
  for (auto& d : c) d = static_cast<std::uint32_t>(below(ctx->prime()));
  return ctx->element(c);
}

FieldElement Rng::nonzero_element(const FieldCtxPtr& ctx) {
  while (true) {
    FieldElement e = element(ctx);
    if (!e.is_zero()) return e;
  }
}

}  // namespace hip
