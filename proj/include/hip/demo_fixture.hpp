#pragma once

#include <array>
#include <vector>

#include "hip/matrix.hpp"
#include "hip/mqform.hpp"
#include "hip/scheme.hpp"

namespace hip::demo {

inline constexpr int kK = 7;
inline constexpr int kN = 16;
inline constexpr int kDim = 15;

/// Parameters of the built-in worked example: q = 2, k = 7, n = 16 (the
/// smallest n with 2k < n-1), default h.
Params params();

/// The fixed 15x15 transformation matrix over F_2 of the worked example.
Matrix matrix();

/// Expected monomial sets of public forms 1, 2, 14 and 15 for the fixture
/// matrix (all coefficients are 1 over F_2). Indexed by the form number.
const std::vector<IndexPair>& golden_form_monomials(int form);
/// The form numbers golden data exists for: 1, 2, 14, 15.
const std::array<int, 4>& golden_form_numbers();

/// Row 14 of the fixture matrix, the read-off target.
const std::array<int, kDim>& golden_row14();

/// The fixed sample message pair x^7+x+1, x^7+x^3+1 used by the demo.
Poly sample_message_p();
Poly sample_message_q();

}  // namespace hip::demo
