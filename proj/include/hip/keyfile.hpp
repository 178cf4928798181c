#pragma once

#include <string>
#include <string_view>

#include "hip/attack.hpp"
#include "hip/scheme.hpp"

namespace hip {

// Line-oriented text formats. Key files start with the header
// "HIP p=<int> m=<int> n=<int> k=<int>" followed by "h: <poly>" and either
// "T:" plus 2k+1 matrix rows (private keys) or "P:" plus 2k+1 form lines
// (public keys). Ciphertext files are a single line of 2k+1 element text
// forms. Lines starting with '#' are comments and ignored by the readers.
// Writers are deterministic: equal keys serialize to identical bytes.

std::string write_public(const PublicKey& pk);
std::string write_private(const PrivateKey& sk);
/// Private-key format prefixed with "# recovered-by: readoff|linear".
std::string write_recovered(const Params& params, const RecoveredKey& rec);
std::string write_ciphertext(const Ciphertext& z);

/// Readers validate every documented invariant (header syntax, parameter
/// rules, h irreducible, counts, T invertible, cross-monomial structure) and
/// throw malformed_error on any violation. The F_q context is reconstructed
/// from (p, m) with the deterministic default modulus.
PublicKey read_public(std::string_view text);
/// Accepts recovered-key files as well (their comment line is skipped).
PrivateKey read_private(std::string_view text);
Ciphertext read_ciphertext(const Params& params, std::string_view text);

}  // namespace hip
