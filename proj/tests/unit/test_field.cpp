#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hip/field.hpp"
#include "hip/rng.hpp"
#include "oracles.hpp"

using namespace hip;

TEST_CASE("make_field validates its inputs") {
  CHECK(make_field(2, 1)->order() == 2);
  CHECK(make_field(2, 2, {1, 1, 1})->order() == 4);
  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);   // 4 is not prime
  CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 2, {1, 0, 1}), std::invalid_argument);  // (t+1)^2
  CHECK_THROWS_AS(make_field(2, 2, {1, 1}), std::invalid_argument);     // wrong size
  CHECK_THROWS_AS(make_field(2, 2, {1, 1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_field(3, 2, {1, 1, 2}), std::invalid_argument);  // not monic
}

TEST_CASE("default modulus is the lowest irreducible in coefficient order") {
  for (auto [p, m] : {std::pair{2u, 2}, {2u, 3}, {2u, 4}, {3u, 2}, {5u, 2}}) {
    auto ctx = make_field(p, m);
    auto base = make_field(p, 1);
    // oracle: scan monic degree-m polynomials in the same encoding order
    std::vector<std::uint32_t> expected;
    for (const Poly& cand : test::all_monic_polys(base, m)) {
      if (!test::irreducible_by_trial_division(cand)) continue;
      for (const auto& c : cand.coeffs()) expected.push_back(c.coeffs()[0]);
      break;
    }
    CAPTURE(p);
    CAPTURE(m);
    CHECK(ctx->modulus() == expected);
    CHECK(ctx->default_modulus());
  }
  CHECK(make_field(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(make_field(2, 2, {1, 1, 1})->default_modulus());
}

TEST_CASE("multiplication in small fields") {
  auto f2 = make_field(2, 1);
  CHECK(f2->one() * f2->one() == f2->one());

  auto f4 = make_field(2, 2, {1, 1, 1});
  auto t = f4->element({0, 1});
  CHECK(t * t == f4->element({1, 1}));  // t^2 = t + 1 mod t^2+t+1

  auto f3 = make_field(3, 1);
  CHECK(f3->from_int(2) * f3->from_int(2) == f3->one());
}

TEST_CASE("inverses against exhaustive search") {
  auto f2 = make_field(2, 1);
  CHECK(f2->one().inv() == f2->one());

  auto check_inv = [](const FieldCtxPtr& ctx, const FieldElement& a) {
    // oracle: scan the whole field for the inverse
    for (const FieldElement& b : ctx->elements()) {
      if ((a * b).is_one()) {
        CHECK(a.inv() == b);
        return;
      }
    }
    FAIL("no inverse found");
  };
  auto f4 = make_field(2, 2, {1, 1, 1});
  check_inv(f4, f4->element({0, 1}));
  CHECK(f4->element({0, 1}).inv() == f4->element({1, 1}));

  auto f5 = make_field(5, 1);
  check_inv(f5, f5->from_int(2));
  CHECK(f5->from_int(2).inv() == f5->from_int(3));

  CHECK_THROWS_AS(f5->zero().inv(), std::invalid_argument);
}

TEST_CASE("field axioms hold for random elements") {
  Rng rng(2024);
  for (auto [p, m] : {std::pair{2u, 1}, {2u, 2}, {2u, 3}, {3u, 1}, {3u, 2}, {5u, 1}, {7u, 1},
                      {31u, 1}, {2u, 5}, {65521u, 1}}) {
    auto ctx = make_field(p, m);
    for (int it = 0; it < 40; ++it) {
      FieldElement a = rng.element(ctx), b = rng.element(ctx), c = rng.element(ctx);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }
}

TEST_CASE("Frobenius fixes every element: a^(p^m) == a") {
  for (auto [p, m] : {std::pair{2u, 1}, {2u, 2}, {2u, 3}, {2u, 4}, {3u, 1}, {3u, 2}, {5u, 1},
                      {7u, 1}, {11u, 1}, {13u, 1}}) {
    auto ctx = make_field(p, m);
    for (const FieldElement& a : ctx->elements()) CHECK(a.pow(ctx->order()) == a);
  }
  // larger fields: randomized
  Rng rng(99);
  for (auto [p, m] : {std::pair{2u, 6}, {3u, 3}, {101u, 1}}) {
    auto ctx = make_field(p, m);
    for (int it = 0; it < 25; ++it) {
      FieldElement a = rng.element(ctx);
      CHECK(a.pow(ctx->order()) == a);
    }
  }
}

TEST_CASE("element text form roundtrips") {
  for (auto [p, m] : {std::pair{2u, 1}, {2u, 2}, {2u, 3}, {2u, 4}, {3u, 1}, {3u, 2}, {5u, 1},
                      {7u, 1}, {11u, 1}, {13u, 1}}) {
    auto ctx = make_field(p, m);
    for (const FieldElement& a : ctx->elements()) CHECK(ctx->parse(a.str()) == a);
  }
  auto f4 = make_field(2, 2);
  CHECK(f4->element({1, 0}).str() == "1:0");
  CHECK(f4->parse("1:1") == f4->element({1, 1}));
  CHECK_THROWS_AS(f4->parse("2:0"), std::invalid_argument);  // digit out of range
  CHECK_THROWS_AS(f4->parse("1"), std::invalid_argument);    // wrong coordinate count
  CHECK_THROWS_AS(f4->parse("1:x"), std::invalid_argument);
  auto f13 = make_field(13, 1);
  CHECK(f13->from_int(12).str() == "12");
}

TEST_CASE("elements interoperate exactly when their contexts are equal") {
  auto f2 = make_field(2, 1);
  auto f3 = make_field(3, 1);
  CHECK_THROWS_AS(f2->one() + f3->one(), std::invalid_argument);
  CHECK_THROWS_AS(f2->one() * f3->one(), std::invalid_argument);
  // equal-by-value contexts from independent calls
  auto a = make_field(2, 2)->element({0, 1});
  auto b = make_field(2, 2, {1, 1, 1})->element({1, 1});
  CHECK(a * b == make_field(2, 2)->one());
  // same (p, m) but different modulus is a different field
  auto f8a = make_field(2, 3, {1, 1, 0, 1});
  auto f8b = make_field(2, 3, {1, 0, 1, 1});
  CHECK_THROWS_AS(f8a->one() + f8b->one(), std::invalid_argument);
}

TEST_CASE("index order enumerates the field") {
  auto f9 = make_field(3, 2);
  auto all = f9->elements();
  CHECK(all.size() == 9);
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].index() == i);
    CHECK(f9->from_index(i) == all[i]);
  }
  CHECK_THROWS_AS(f9->from_index(9), std::invalid_argument);
}
