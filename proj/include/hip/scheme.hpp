#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hip/field.hpp"
#include "hip/matrix.hpp"
#include "hip/mqform.hpp"
#include "hip/poly.hpp"
#include "hip/rng.hpp"

namespace hip {

/// Validated scheme parameters: q = p^m, the ambient extension K of degree n
/// over F_q realized through the monic irreducible h, and the message degree
/// k. Invariants: p prime, k prime, 2k < n-1, h monic irreducible of degree n.
struct Params {
  std::uint32_t p = 0;
  int m = 1;
  int n = 0;
  int k = 0;
  FieldCtxPtr ctx;  ///< F_q
  Poly h;           ///< degree n over F_q

  int dim() const { return 2 * k + 1; }
};

/// Builds Params with the deterministic default F_q context and, when h is
/// not supplied, the deterministic default h (lowest monic irreducible of
/// degree n in coefficient order). Throws std::invalid_argument on any
/// violated parameter rule.
Params validate_params(std::uint32_t p, int m, int n, int k);
Params validate_params(std::uint32_t p, int m, int n, int k, FieldCtxPtr ctx,
                       std::optional<Poly> h);

struct PublicKey {
  Params params;
  std::vector<QuadForm> forms;  ///< 2k+1 forms, forms[i-1] is p_i
};

struct PrivateKey {
  Params params;
  Matrix T;  ///< invertible (2k+1) x (2k+1)
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

/// Coefficients of the encrypted element z, degrees 0..2k. Fixed length
/// 2k+1; the embedding into K pads with n-2k-1 zeros only when rendered.
struct Ciphertext {
  std::vector<FieldElement> coeffs;
};

/// Samples an invertible T and composes the public forms from it.
KeyPair keygen(const Params& params, Rng& rng);

/// Key pair with a caller-supplied transformation matrix (must be invertible).
KeyPair key_pair_from_matrix(const Params& params, Matrix T);

/// Bob's step: both inputs must be irreducible of degree exactly k over F_q
/// (leading coefficients need not be 1). The ciphertext coefficient of
/// x^(m-1) is form m evaluated on the concatenated coefficient vector.
Ciphertext encrypt(const PublicKey& pk, const Poly& pB, const Poly& qB);

struct Decrypted {
  Poly p;             ///< monic, Poly::cmp-sorted: p <= q
  Poly q;
  FieldElement scale; ///< scale * p * q is the transformed polynomial r
};

/// Alice's step: applies T^{-1} to the ciphertext coefficients and factors
/// the resulting polynomial into its two degree-k irreducibles. Throws
/// malformed_error when the ciphertext does not decrypt to such a product.
Decrypted decrypt(const PrivateKey& sk, const Ciphertext& z);
Decrypted decrypt(const PrivateKey& sk, const Ciphertext& z, Rng& rng);

/// The length-n coefficient vector of z as an element of K (n-2k-1 zeros of
/// padding at the end).
std::vector<FieldElement> ciphertext_as_extension_vector(const Params& params,
                                                         const Ciphertext& z);

}  // namespace hip
