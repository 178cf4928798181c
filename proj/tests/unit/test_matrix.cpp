#include <stdexcept>

#include "doctest.h"
#include "hip/matrix.hpp"

using namespace hip;

namespace {

Matrix from_ints(const FieldCtxPtr& ctx, int rows, int cols,
                 const std::vector<std::uint64_t>& vals) {
  std::vector<FieldElement> entries;
  entries.reserve(vals.size());
  for (auto v : vals) entries.push_back(ctx->from_int(v));
  return Matrix(ctx, rows, cols, std::move(entries));
}

}  // namespace

TEST_CASE("multiplication") {
  auto f2 = make_field(2, 1);
  Matrix a = from_ints(f2, 2, 2, {1, 1, 0, 1});
  Matrix b = from_ints(f2, 2, 2, {1, 0, 1, 1});
  CHECK(a * b == from_ints(f2, 2, 2, {0, 1, 1, 1}));
  CHECK(a * Matrix::identity(f2, 2) == a);
  Matrix zero(f2, 2, 2);
  CHECK(zero * b == zero);
  CHECK_THROWS_AS(a * Matrix(f2, 3, 2), std::invalid_argument);
}

TEST_CASE("inverse") {
  auto f2 = make_field(2, 1);
  CHECK(Matrix::identity(f2, 3).inverse() == Matrix::identity(f2, 3));
  Matrix a = from_ints(f2, 2, 2, {1, 1, 0, 1});
  Matrix ai = a.inverse();
  CHECK(ai == a);  // self-inverse over F_2
  CHECK(a * ai == Matrix::identity(f2, 2));
  CHECK_THROWS_AS(from_ints(f2, 2, 2, {1, 1, 0, 0}).inverse(), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(f2, 2, 3).inverse(), std::invalid_argument);
}

TEST_CASE("solve_right") {
  auto f2 = make_field(2, 1);
  Matrix b = from_ints(f2, 2, 2, {0, 1, 1, 1});
  CHECK(solve_right(Matrix::identity(f2, 2), b) == b);

  Matrix a = from_ints(f2, 2, 2, {1, 0, 1, 1});
  Matrix x = solve_right(a, b);
  CHECK(x == from_ints(f2, 2, 2, {1, 1, 0, 1}));
  CHECK(x * a == b);

  // A with a zero row cannot determine X
  Matrix rank_deficient = from_ints(f2, 2, 2, {1, 1, 0, 0});
  CHECK_THROWS_AS(solve_right(rank_deficient, b), std::invalid_argument);

  // wide A of full row rank: solvable iff B lies in the row space
  Matrix wide = from_ints(f2, 1, 2, {1, 0});
  CHECK(solve_right(wide, from_ints(f2, 1, 2, {1, 0})) == from_ints(f2, 1, 1, {1}));
  CHECK_THROWS_AS(solve_right(wide, from_ints(f2, 1, 2, {1, 1})), std::invalid_argument);

  // rectangular full-row-rank A recovers a left factor exactly
  auto f3 = make_field(3, 1);
  Rng rng(2025);
  for (int it = 0; it < 20; ++it) {
    const int rows = 3, cols = 7;
    Matrix a(f3, rows, cols);
    for (int i = 0; i < rows; ++i) {
      a.set(i, i, f3->one());  // leading identity block guarantees full row rank
      for (int j = rows; j < cols; ++j) a.set(i, j, rng.element(f3));
    }
    Matrix t = random_invertible(rows, f3, rng);
    CHECK(solve_right(a, t * a) == t);
  }
}

TEST_CASE("random invertible matrices invert cleanly") {
  Rng rng(1234);
  int done = 0;
  for (auto q : {2u, 3u, 4u}) {
    auto ctx = q == 4 ? make_field(2, 2) : make_field(q, 1);
    for (int dim = 3; dim <= 31; dim += 4) {
      for (int it = 0; it < 5 && done < 100; ++it, ++done) {
        Matrix a = random_invertible(dim, ctx, rng);
        CHECK(a * a.inverse() == Matrix::identity(ctx, dim));
        // right-solving recovers a left factor exactly
        Matrix t = random_invertible(dim, ctx, rng);
        CHECK(solve_right(a, t * a) == t);
      }
    }
  }
  CHECK(done == 100);
}

TEST_CASE("random_invertible edge cases") {
  auto f2 = make_field(2, 1);
  Rng rng(9);
  Matrix one = random_invertible(1, f2, rng);
  CHECK(one == from_ints(f2, 1, 1, {1}));  // the only invertible 1x1 over F_2
  Rng r1(77), r2(77);
  CHECK(random_invertible(5, f2, r1) == random_invertible(5, f2, r2));
  CHECK_THROWS_AS(random_invertible(0, f2, rng), std::invalid_argument);
}

TEST_CASE("rank and apply") {
  auto f3 = make_field(3, 1);
  Matrix a = from_ints(f3, 3, 3, {1, 2, 0, 2, 4, 0, 0, 0, 1});  // row2 = 2*row1
  CHECK(a.rank() == 2);
  CHECK_FALSE(a.invertible());
  std::vector<FieldElement> v{f3->from_int(1), f3->from_int(1), f3->from_int(2)};
  auto av = a.apply(v);
  CHECK(av[0] == f3->from_int(0));
  CHECK(av[1] == f3->from_int(0));
  CHECK(av[2] == f3->from_int(2));
  CHECK_THROWS_AS(a.apply({f3->one()}), std::invalid_argument);
}

TEST_CASE("matrix text form") {
  auto f4 = make_field(2, 2);
  Rng rng(55);
  Matrix a = random_invertible(4, f4, rng);
  CHECK(Matrix::parse(f4, 4, 4, a.str()) == a);
  auto f2 = make_field(2, 1);
  Matrix b = from_ints(f2, 2, 2, {1, 0, 1, 1});
  CHECK(b.str() == "1 0\n1 1\n");
}
