#pragma once

#include <stdexcept>
#include <string>

namespace hip {

// Serialized data or received protocol data that violates the documented
// formats and invariants: truncated or corrupt key files, ciphertexts whose
// transformed polynomial is not a product of two degree-k irreducibles, etc.
class malformed_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hip
