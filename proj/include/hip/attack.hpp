#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hip/matrix.hpp"
#include "hip/scheme.hpp"

namespace hip {

enum class AttackMethod { readoff, linear };

std::string to_string(AttackMethod m);

/// One (form i, group l) agreement fact: whether all monomials of I_l carry
/// the same coefficient in form i. Indices are 1-based.
struct ConsistencyRecord {
  int form = 0;
  int group = 0;
  bool agreed = true;
};

/// A transformation matrix reconstructed from the public key alone, plus the
/// per-(form, group) coefficient-agreement report (one record for every pair,
/// (2k+1)^2 in total).
struct RecoveredKey {
  Matrix T;
  AttackMethod method;
  std::vector<ConsistencyRecord> report;

  bool consistent() const;
  std::vector<ConsistencyRecord> flagged() const;
};

/// Reads T entry-wise off the public forms: t_{i,l} is the coefficient of
/// the first monomial of I_l in form i (zero when absent). Disagreeing
/// coefficients inside one group are flagged in the report, never raised;
/// the first-member read-off is returned regardless.
RecoveredKey attack_readoff(const PublicKey& pk);

/// Solves T * A = B where A is the 0/1 incidence matrix of the monomial
/// groups and B the coefficient matrix of the public forms, both over the
/// shared (i, j)-sorted monomial ordering with (k+1)^2 columns. Throws
/// std::invalid_argument when the system is inconsistent or underdetermined
/// (the input is then not a well-formed public key).
RecoveredKey attack_linear(const PublicKey& pk);

struct BreakCheck {
  bool forms_match = false;
  /// (form, group) pairs where the recomposed public key deviates, 1-based.
  std::vector<std::pair<int, int>> form_mismatches;
  bool roundtrip_ok = false;
  int roundtrip_trials = 0;
  int roundtrip_failures = 0;

  bool ok() const { return forms_match && roundtrip_ok; }
};

inline constexpr std::uint64_t kVerifyBreakSeed = 0x42b2'5ec0'dab1'e5u;

/// Confirms a recovered matrix breaks the key: (a) recomposing the public
/// forms from T reproduces pk exactly, and (b) fresh random message pairs
/// encrypted under pk decrypt correctly with T as the private key. Failures
/// (including a singular T) are reported, not raised.
BreakCheck verify_break(const PublicKey& pk, const Matrix& T, int trials = 10,
                        std::uint64_t seed = kVerifyBreakSeed);
BreakCheck verify_break(const PublicKey& pk, const RecoveredKey& rec, int trials = 10,
                        std::uint64_t seed = kVerifyBreakSeed);

}  // namespace hip
