#pragma once

// Test-side oracles, deliberately independent of the library paths they
// check: irreducibility by trial division, exhaustive enumeration, and the
// Moebius count of monic irreducibles.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hip/poly.hpp"

namespace hip::test {

/// All monic polynomials of degree d, in base-q coefficient order.
std::vector<Poly> all_monic_polys(const FieldCtxPtr& ctx, int d);

/// Irreducibility by trial division over all monic divisors of degree
/// 1..deg(f)/2. Independent of the Rabin-test implementation.
bool irreducible_by_trial_division(const Poly& f);

/// All monic irreducibles of degree d, found by the trial-division oracle.
std::vector<Poly> monic_irreducibles_naive(const FieldCtxPtr& ctx, int d);

/// Factorization oracle: scans the monic degree-k irreducibles (trial
/// division) for a divisor pair of rm (monic, degree 2k).
std::optional<std::pair<Poly, Poly>> factor_by_trial_division(const Poly& rm, int k);

/// (1/d) * sum_{e | d} mu(e) q^(d/e): the number of monic irreducibles of
/// degree d over F_q.
std::uint64_t irreducible_count_formula(std::uint64_t q, int d);

}  // namespace hip::test
