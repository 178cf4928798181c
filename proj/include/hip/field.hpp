#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hip {

class FieldElement;
class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Immutable description of F_q, q = p^m: the prime p, the extension degree m
/// and, for m > 1, a monic irreducible modulus of degree m over F_p
/// (little-endian coefficients, modulus[m] == 1).
///
/// Elements of two independently created contexts interoperate exactly when
/// the contexts compare equal (same p, m, modulus).
class FieldCtx {
 public:
  std::uint32_t prime() const { return p_; }
  int ext_degree() const { return m_; }
  /// q = p^m. Throws std::overflow_error if it does not fit in 64 bits.
  std::uint64_t order() const;
  /// Empty for m == 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// True when the modulus equals the deterministically generated default
  /// (the lowest monic irreducible of degree m in base-p coefficient order).
  bool default_modulus() const { return default_modulus_; }

  bool operator==(const FieldCtx& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The image of v under Z -> F_p c F_q (v reduced mod p).
  FieldElement from_int(std::uint64_t v) const;
  /// Element with the given F_p coordinates (little-endian, reduced mod p).
  /// Accepts up to m coordinates; missing ones are zero.
  FieldElement element(const std::vector<std::uint32_t>& coeffs) const;
  /// Element number `idx` in base-p coordinate order, idx < q.
  FieldElement from_index(std::uint64_t idx) const;
  /// Inverse of FieldElement::str(). Rejects out-of-range digits.
  FieldElement parse(std::string_view text) const;
  /// All q elements in index order. Only sensible for small fields.
  std::vector<FieldElement> elements() const;

 private:
  friend class FieldCtxAccess;
  FieldCtx() = default;

  FieldCtxPtr self() const { return self_.lock(); }

  std::uint32_t p_ = 0;
  int m_ = 1;
  std::vector<std::uint32_t> modulus_;  // length m+1 when m > 1
  bool default_modulus_ = true;
  mutable std::weak_ptr<const FieldCtx> self_;
};

/// Context for F_p (m == 1) or F_{p^m} with the deterministic default modulus.
/// Throws std::invalid_argument for non-prime p, p >= 2^31 or m < 1.
FieldCtxPtr make_field(std::uint32_t p, int m = 1);
/// Context with an explicit modulus (little-endian, length m+1, monic,
/// irreducible over F_p). Only meaningful for m > 1.
FieldCtxPtr make_field(std::uint32_t p, int m, const std::vector<std::uint32_t>& modulus);

/// An element of F_q as a length-m vector of F_p coordinates, reduced after
/// every operation. Pure value type; mixing elements of unequal contexts
/// throws std::invalid_argument.
class FieldElement {
 public:
  const FieldCtxPtr& ctx() const { return ctx_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws std::invalid_argument on zero.
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  /// Equal value in an equal field. Elements of different fields are unequal.
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Sum c_i p^i; the element's position in base-p coordinate order.
  std::uint64_t index() const;

  /// Text form: a base-10 integer for m == 1, colon-joined little-endian
  /// coordinates otherwise ("1:0:1" is 1 + t^2).
  std::string str() const;

  /// Total order by coordinate value, highest coordinate first (numeric order
  /// on index()). Returns <0, 0, >0.
  static int cmp(const FieldElement& a, const FieldElement& b);

 private:
  friend class FieldCtx;
  FieldElement(FieldCtxPtr ctx, std::vector<std::uint32_t> c)
      : c_(std::move(c)), ctx_(std::move(ctx)) {}

  std::vector<std::uint32_t> c_;  // length m, entries in [0, p)
  FieldCtxPtr ctx_;
};

/// Throws std::invalid_argument unless both elements live in equal fields.
void require_same_field(const FieldElement& a, const FieldElement& b);

}  // namespace hip
