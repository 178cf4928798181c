#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hip/field.hpp"
#include "hip/rng.hpp"

namespace hip {

/// Dense univariate polynomial over F_q, little-endian coefficients
/// (coeffs()[i] multiplies x^i). Canonical form: no trailing zero
/// coefficient; the zero polynomial has an empty coefficient vector and
/// degree() == kZeroDegree.
class Poly {
 public:
  /// degree() of the zero polynomial ("negative infinity").
  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
  Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);

  /// Coefficients given as integers through FieldCtx::from_int.
  static Poly from_ints(const FieldCtxPtr& ctx, const std::vector<std::uint64_t>& coeffs);
  static Poly constant(FieldElement c);
  /// The monomial x.
  static Poly x(const FieldCtxPtr& ctx);
  /// Inverse of str(): space-separated element text forms, little-endian.
  /// Throws malformed_error on bad input.
  static Poly parse(const FieldCtxPtr& ctx, std::string_view text);

  const FieldCtxPtr& ctx() const { return ctx_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  /// Coefficient vector padded with zeros to the given length
  /// (length must be > degree()).
  std::vector<FieldElement> coeffs_padded(int length) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  /// Leading coefficient; throws std::invalid_argument on the zero polynomial.
  const FieldElement& leading() const;
  /// Coefficient of x^i (zero beyond the degree).
  FieldElement coeff(int i) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElement& s) const;
  /// Quotient and remainder with degree(rem) < degree(divisor).
  /// Throws std::invalid_argument on a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const { return divmod(o).second; }

  Poly monic() const;
  Poly derivative() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Order by degree, then by coefficients from the highest power down.
  static int cmp(const Poly& a, const Poly& b);

  /// Space-separated element text forms, little-endian ("1 1 0 1" is
  /// 1 + x + x^3 over F_2). The zero polynomial renders as "0".
  std::string str() const;
  /// Human-readable monomial form ("x^3 + x + 1"), display only.
  std::string pretty() const;

 private:
  void prune();

  std::vector<FieldElement> c_;
  FieldCtxPtr ctx_;
};

/// Monic greatest common divisor. Throws std::invalid_argument when both
/// inputs are zero.
Poly gcd(Poly a, Poly b);

/// a^e reduced mod `mod` by square-and-multiply; a^e is never materialized.
/// Throws std::invalid_argument on a constant or zero modulus.
Poly powmod(const Poly& a, std::uint64_t e, const Poly& mod);

/// a^(q^steps) mod `mod`, q the field order, via iterated exponent-p powmods.
Poly frobenius_powmod(Poly a, int steps, const Poly& mod);

/// Rabin's test: f of degree d >= 1 is irreducible over F_q iff
/// x^(q^d) == x (mod f) and gcd(x^(q^(d/l)) - x, f) = 1 for every prime l | d.
/// Throws std::invalid_argument on constant input.
bool is_irreducible(const Poly& f);

/// Uniform monic irreducible of degree exactly d, by rejection sampling.
Poly random_irreducible(int d, const FieldCtxPtr& ctx, Rng& rng);

struct FactorPair {
  Poly p;             ///< monic, degree k; FactorPair::p <= q in Poly::cmp order
  Poly q;             ///< monic, degree k
  FieldElement scale; ///< leading coefficient of the input; scale*p*q == input
};

/// Factors r = scale * p * q where p, q are degree-k irreducibles (possibly
/// equal). Repeated factors are detected through gcd(r, r') and, when the
/// derivative vanishes in characteristic 2, through square-root extraction.
/// The squarefree split is equal-degree factorization: Cantor-Zassenhaus for
/// odd q, the trace-map splitter for q = 2^m. Throws malformed_error when r
/// does not have this shape.
FactorPair factor_two_irreducibles(const Poly& r, int k, Rng& rng);
/// Same, with an internal fixed-seed generator (the result is canonical, the
/// generator only drives the probabilistic splitter).
FactorPair factor_two_irreducibles(const Poly& r, int k);

}  // namespace hip
