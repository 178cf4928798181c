#include "hip/demo_fixture.hpp"

#include <stdexcept>

namespace hip::demo {

namespace {

// clang-format off
constexpr int kMatrix[kDim][kDim] = {
    {0,1,0,1,0,0,0,1,0,1,1,1,1,1,1},
    {1,1,1,1,1,0,0,1,1,1,1,0,0,1,0},
    {1,1,1,0,1,1,1,1,1,0,1,1,1,1,1},
    {1,1,0,1,0,0,1,0,1,1,1,0,0,0,1},
    {1,0,0,1,1,1,0,0,1,1,0,0,1,1,1},
    {1,1,0,1,0,1,0,0,1,0,0,1,1,0,0},
    {1,0,0,0,1,0,1,0,1,1,0,0,0,0,1},
    {1,0,0,0,0,0,1,1,1,1,0,0,0,1,1},
    {0,1,0,1,1,1,1,1,0,1,1,0,1,0,1},
    {0,0,0,0,1,0,0,0,1,1,1,1,1,0,0},
    {1,0,1,0,1,1,0,0,0,1,1,0,0,0,1},
    {1,1,0,1,1,0,0,1,1,0,1,1,1,1,0},
    {1,0,0,1,1,1,0,0,1,1,1,1,0,0,1},
    {1,0,0,1,0,1,0,1,0,1,1,0,0,1,1},
    {1,1,0,1,1,1,1,0,0,1,0,1,0,1,0},
};
// clang-format on

const std::vector<IndexPair> kForm1 = {
    {2, 9},  {4, 9},  {8, 9},
    {1, 10}, {3, 10}, {7, 10},
    {2, 11}, {6, 11}, {8, 11},
    {1, 12}, {5, 12}, {7, 12}, {8, 12},
    {4, 13}, {6, 13}, {7, 13}, {8, 13},
    {3, 14}, {5, 14}, {6, 14}, {7, 14}, {8, 14},
    {2, 15}, {4, 15}, {5, 15}, {6, 15}, {7, 15}, {8, 15},
    {1, 16}, {3, 16}, {4, 16}, {5, 16}, {6, 16}, {7, 16}, {8, 16},
};

const std::vector<IndexPair> kForm2 = {
    {1, 9},  {2, 9},  {3, 9},  {4, 9},  {5, 9},  {8, 9},
    {1, 10}, {2, 10}, {3, 10}, {4, 10}, {7, 10}, {8, 10},
    {1, 11}, {2, 11}, {3, 11}, {6, 11}, {7, 11}, {8, 11},
    {1, 12}, {2, 12}, {5, 12}, {6, 12}, {7, 12}, {8, 12},
    {1, 13}, {4, 13}, {5, 13}, {6, 13}, {7, 13},
    {3, 14}, {4, 14}, {5, 14}, {6, 14},
    {2, 15}, {3, 15}, {4, 15}, {5, 15}, {8, 15},
    {1, 16}, {2, 16}, {3, 16}, {4, 16}, {7, 16},
};

const std::vector<IndexPair> kForm14 = {
    {1, 9},  {4, 9},  {6, 9},  {8, 9},
    {3, 10}, {5, 10}, {7, 10},
    {2, 11}, {4, 11}, {6, 11}, {8, 11},
    {1, 12}, {3, 12}, {5, 12}, {7, 12}, {8, 12},
    {2, 13}, {4, 13}, {6, 13}, {7, 13},
    {1, 14}, {3, 14}, {5, 14}, {6, 14},
    {2, 15}, {4, 15}, {5, 15}, {8, 15},
    {1, 16}, {3, 16}, {4, 16}, {7, 16}, {8, 16},
};

const std::vector<IndexPair> kForm15 = {
    {1, 9},  {2, 9},  {4, 9},  {5, 9},  {6, 9},  {7, 9},
    {1, 10}, {3, 10}, {4, 10}, {5, 10}, {6, 10},
    {2, 11}, {3, 11}, {4, 11}, {5, 11}, {8, 11},
    {1, 12}, {2, 12}, {3, 12}, {4, 12}, {7, 12},
    {1, 13}, {2, 13}, {3, 13}, {6, 13}, {8, 13},
    {1, 14}, {2, 14}, {5, 14}, {7, 14},
    {1, 15}, {4, 15}, {6, 15}, {8, 15},
    {3, 16}, {5, 16}, {7, 16},
};

constexpr std::array<int, kDim> kRow14 = {1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1};

}  // namespace

Params params() { return validate_params(2, 1, kN, kK); }

Matrix matrix() {
  auto ctx = make_field(2, 1);
  Matrix T(ctx, kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) T.set(i, j, ctx->from_int(kMatrix[i][j]));
  return T;
}

const std::vector<IndexPair>& golden_form_monomials(int form) {
  switch (form) {
    case 1: return kForm1;
    case 2: return kForm2;
    case 14: return kForm14;
    case 15: return kForm15;
    default: throw std::invalid_argument("no golden data for this form");
  }
}

const std::array<int, 4>& golden_form_numbers() {
  static const std::array<int, 4> nums = {1, 2, 14, 15};
  return nums;
}

const std::array<int, kDim>& golden_row14() { return kRow14; }

Poly sample_message_p() {
  return Poly::from_ints(make_field(2, 1), {1, 1, 0, 0, 0, 0, 0, 1});  // x^7 + x + 1
}

Poly sample_message_q() {
  return Poly::from_ints(make_field(2, 1), {1, 0, 0, 1, 0, 0, 0, 1});  // x^7 + x^3 + 1
}

}  // namespace hip::demo
