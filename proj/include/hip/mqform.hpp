#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hip/field.hpp"
#include "hip/matrix.hpp"

namespace hip {

/// Identifies the monomial y_i * y_j with i from the f-side variables
/// (1 <= i <= k+1) and j from the g-side variables (k+2 <= j <= 2k+2).
/// Indices are the 1-based variable numbers.
struct IndexPair {
  int i;
  int j;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// I_m = {(i,j) | 1 <= i <= k+1, k+2 <= j <= 2k+2, i+j = m+k+2}, sorted by i.
/// Throws std::invalid_argument for m outside [1, 2k+1].
std::vector<IndexPair> index_set(int m, int k);

/// The m with pair in I_m (i + j - k - 2); the pair's coefficient-sum group.
int group_index(const IndexPair& pair, int k);

/// The product f*g of the two symbolic degree-k templates, organized as the
/// 2k+1 monomial groups I_1..I_{2k+1}: groups[m-1] collects the monomials of
/// the coefficient of x^(m-1).
struct SymbolicProduct {
  int k;
  std::vector<std::vector<IndexPair>> groups;
};

SymbolicProduct symbolic_product(int k);

/// Sparse quadratic form in the 2(k+1) variables y_1..y_{2(k+1)}, holding
/// only cross monomials y_i*y_j with i <= k+1 < j (the scheme produces no
/// others). Stored coefficients are nonzero; terms are ordered by (i, j).
class QuadForm {
 public:
  QuadForm(FieldCtxPtr ctx, int k);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int k() const { return k_; }
  int nvars() const { return 2 * (k_ + 1); }

  /// Coefficient of y_i*y_j; zero when the monomial is absent.
  FieldElement coeff(const IndexPair& p) const;
  /// Sets (or with zero, erases) a coefficient. Throws std::invalid_argument
  /// when the pair violates the cross-monomial variable split.
  void set_coeff(const IndexPair& p, FieldElement v);
  void add_coeff(const IndexPair& p, const FieldElement& v);

  const std::map<IndexPair, FieldElement>& terms() const { return terms_; }

  /// Sum of coeff * v[i-1] * v[j-1] over the stored terms; v.size() == nvars().
  FieldElement eval(std::span<const FieldElement> v) const;

  QuadForm operator+(const QuadForm& o) const;
  bool operator==(const QuadForm& o) const;
  bool operator!=(const QuadForm& o) const { return !(*this == o); }

  /// Semicolon-separated terms "i,j,c", sorted by (i, j); empty string for
  /// the zero form.
  std::string str() const;
  static QuadForm parse(const FieldCtxPtr& ctx, int k, std::string_view text);
  /// Display form "y2*y9 + y4*y9 + ...".
  std::string pretty() const;

 private:
  int k_;
  std::map<IndexPair, FieldElement> terms_;
  FieldCtxPtr ctx_;
};

/// The public polynomials of transformation T: form i collects, for every
/// group l with t_{i,l} != 0, all monomials of I_l with coefficient t_{i,l}.
/// T must be (2k+1) x (2k+1); invertibility is not required here.
std::vector<QuadForm> compose_public(const Matrix& T, int k);

}  // namespace hip
