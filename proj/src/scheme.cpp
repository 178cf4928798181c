#include "hip/scheme.hpp"

#include <stdexcept>

#include "hip/errors.hpp"

namespace hip {

namespace {

inline constexpr std::uint64_t kDecryptSplitSeed = 0xd1ce'ca5e'5eedu;

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Lowest monic irreducible of degree n over F_q, in base-q coefficient order
// of the non-leading coefficients. Deterministic, so keys are reproducible
// from (p, m, n, k) alone.
Poly default_extension_modulus(const FieldCtxPtr& ctx, int n) {
  const std::uint64_t q = ctx->order();
  for (std::uint64_t enc = 0;; ++enc) {
    std::vector<FieldElement> cs;
    cs.reserve(n + 1);
    std::uint64_t e = enc;
    for (int i = 0; i < n; ++i) {
      cs.push_back(ctx->from_index(e % q));
      e /= q;
    }
    if (e != 0) throw std::runtime_error("no irreducible h found");  // unreachable
    cs.push_back(ctx->one());
    Poly cand(ctx, std::move(cs));
    if (is_irreducible(cand)) return cand;
  }
}

}  // namespace

Params validate_params(std::uint32_t p, int m, int n, int k) {
  return validate_params(p, m, n, k, nullptr, std::nullopt);
}

Params validate_params(std::uint32_t p, int m, int n, int k, FieldCtxPtr ctx,
                       std::optional<Poly> h) {
  if (!ctx) ctx = make_field(p, m);  // rejects non-prime p, m < 1
  if (ctx->prime() != p || ctx->ext_degree() != m)
    throw std::invalid_argument("field context does not match (p, m)");
  if (!is_prime_int(k)) throw std::invalid_argument("k must be prime");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (2 * k >= n - 1) throw std::invalid_argument("parameters must satisfy 2k < n-1");
  Poly hh = h ? std::move(*h) : default_extension_modulus(ctx, n);
  if (!(*hh.ctx() == *ctx)) throw std::invalid_argument("h belongs to a different field");
  if (hh.degree() != n) throw std::invalid_argument("h must have degree exactly n");
  if (!hh.is_monic()) throw std::invalid_argument("h must be monic");
  if (!is_irreducible(hh)) throw std::invalid_argument("h must be irreducible over F_q");
  return Params{p, m, n, k, std::move(ctx), std::move(hh)};
}

KeyPair keygen(const Params& params, Rng& rng) {
  Matrix T = random_invertible(params.dim(), params.ctx, rng);
  return key_pair_from_matrix(params, std::move(T));
}

KeyPair key_pair_from_matrix(const Params& params, Matrix T) {
  if (T.rows() != params.dim() || T.cols() != params.dim())
    throw std::invalid_argument("transformation matrix has the wrong shape");
  if (!(*T.ctx() == *params.ctx))
    throw std::invalid_argument("transformation matrix over the wrong field");
  if (!T.invertible()) throw std::invalid_argument("transformation matrix is singular");
  std::vector<QuadForm> forms = compose_public(T, params.k);
  return KeyPair{PublicKey{params, std::move(forms)}, PrivateKey{params, std::move(T)}};
}

Ciphertext encrypt(const PublicKey& pk, const Poly& pB, const Poly& qB) {
  const Params& pr = pk.params;
  if (!(*pB.ctx() == *pr.ctx) || !(*qB.ctx() == *pr.ctx))
    throw std::invalid_argument("message polynomial over the wrong field");
  if (pB.degree() != pr.k || qB.degree() != pr.k)
    throw std::invalid_argument("message polynomials must have degree exactly k");
  if (!is_irreducible(pB) || !is_irreducible(qB))
    throw std::invalid_argument("message polynomials must be irreducible");
  std::vector<FieldElement> v = pB.coeffs_padded(pr.k + 1);
  std::vector<FieldElement> vq = qB.coeffs_padded(pr.k + 1);
  v.insert(v.end(), vq.begin(), vq.end());
  std::vector<FieldElement> z;
  z.reserve(pr.dim());
  for (const QuadForm& f : pk.forms) z.push_back(f.eval(v));
  return Ciphertext{std::move(z)};
}

Decrypted decrypt(const PrivateKey& sk, const Ciphertext& z) {
  Rng rng(kDecryptSplitSeed);
  return decrypt(sk, z, rng);
}

Decrypted decrypt(const PrivateKey& sk, const Ciphertext& z, Rng& rng) {
  const Params& pr = sk.params;
  if (static_cast<int>(z.coeffs.size()) != pr.dim())
    throw std::invalid_argument("ciphertext has the wrong length");
  std::vector<FieldElement> rc = sk.T.inverse().apply(z.coeffs);
  Poly r(pr.ctx, std::move(rc));
  FactorPair f = factor_two_irreducibles(r, pr.k, rng);
  return Decrypted{std::move(f.p), std::move(f.q), std::move(f.scale)};
}

std::vector<FieldElement> ciphertext_as_extension_vector(const Params& params,
                                                         const Ciphertext& z) {
  if (static_cast<int>(z.coeffs.size()) != params.dim())
    throw std::invalid_argument("ciphertext has the wrong length");
  std::vector<FieldElement> out = z.coeffs;
  out.resize(params.n, params.ctx->zero());
  return out;
}

}  // namespace hip
