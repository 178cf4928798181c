#include "oracles.hpp"

namespace hip::test {

std::vector<Poly> all_monic_polys(const FieldCtxPtr& ctx, int d) {
  const std::uint64_t q = ctx->order();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t enc = 0; enc < count; ++enc) {
    std::vector<FieldElement> cs;
    cs.reserve(d + 1);
    std::uint64_t e = enc;
    for (int i = 0; i < d; ++i) {
      cs.push_back(ctx->from_index(e % q));
      e /= q;
    }
    cs.push_back(ctx->one());
    out.emplace_back(ctx, std::move(cs));
  }
  return out;
}

bool irreducible_by_trial_division(const Poly& f) {
  const Poly fm = f.monic();
  const int d = fm.degree();
  if (d < 1) return false;
  for (int e = 1; 2 * e <= d; ++e)
    for (const Poly& g : all_monic_polys(f.ctx(), e))
      if ((fm % g).is_zero()) return false;
  return true;
}

std::vector<Poly> monic_irreducibles_naive(const FieldCtxPtr& ctx, int d) {
  std::vector<Poly> out;
  for (const Poly& f : all_monic_polys(ctx, d))
    if (irreducible_by_trial_division(f)) out.push_back(f);
  return out;
}

std::optional<std::pair<Poly, Poly>> factor_by_trial_division(const Poly& rm, int k) {
  for (const Poly& u : monic_irreducibles_naive(rm.ctx(), k)) {
    auto [v, rem] = rm.divmod(u);
    if (!rem.is_zero()) continue;
    if (v.degree() != k || !irreducible_by_trial_division(v)) continue;
    if (Poly::cmp(u, v) <= 0) return std::make_pair(u, v);
    return std::make_pair(v, u);
  }
  return std::nullopt;
}

namespace {

int mobius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::uint64_t irreducible_count_formula(std::uint64_t q, int d) {
  std::int64_t sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    sum += std::int64_t(mobius(e)) * std::int64_t(upow(q, d / e));
  }
  return static_cast<std::uint64_t>(sum / d);
}

}  // namespace hip::test
