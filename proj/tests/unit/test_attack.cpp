#include <stdexcept>

#include "doctest.h"
#include "hip/attack.hpp"
#include "hip/demo_fixture.hpp"
#include "hip/keyfile.hpp"

using namespace hip;

namespace {

const std::vector<std::tuple<std::uint32_t, int, int, int>> kGrid = {
    {2, 1, 16, 7}, {2, 1, 20, 3}, {3, 1, 12, 5}, {2, 2, 8, 3}, {5, 1, 8, 3}};

PublicKey public_only(const Params& pr, const Matrix& T) {
  return PublicKey{pr, compose_public(T, pr.k)};
}

}  // namespace

TEST_CASE("read-off recovers the fixture matrix") {
  KeyPair kp = key_pair_from_matrix(demo::params(), demo::matrix());
  RecoveredKey rec = attack_readoff(kp.pub);
  CHECK(rec.T == kp.priv.T);
  CHECK(rec.method == AttackMethod::readoff);
  CHECK(rec.consistent());
  CHECK(rec.report.size() == 225);
  // row 14 of the recovered matrix is the golden read-off vector
  for (int l = 0; l < demo::kDim; ++l)
    CHECK(rec.T.at(13, l) == kp.pub.params.ctx->from_int(demo::golden_row14()[l]));
}

TEST_CASE("both attacks recover the identity key") {
  Params pr = validate_params(2, 1, 8, 3);
  PublicKey pk = public_only(pr, Matrix::identity(pr.ctx, pr.dim()));
  CHECK(attack_readoff(pk).T == Matrix::identity(pr.ctx, pr.dim()));
  CHECK(attack_linear(pk).T == Matrix::identity(pr.ctx, pr.dim()));
}

TEST_CASE("linear attack matches keygen's stored matrix") {
  Params pr = validate_params(3, 1, 12, 5);
  Rng rng(500);
  KeyPair kp = keygen(pr, rng);
  RecoveredKey rec = attack_linear(kp.pub);
  CHECK(rec.T == kp.priv.T);
  CHECK(rec.method == AttackMethod::linear);
}

TEST_CASE("exact recovery and agreement across the grid") {
  Rng rng(8080);
  for (const auto& [p, m, n, k] : kGrid) {
    Params pr = validate_params(p, m, n, k);
    for (int it = 0; it < 4; ++it) {
      KeyPair kp = keygen(pr, rng);
      RecoveredKey a = attack_readoff(kp.pub);
      RecoveredKey b = attack_linear(kp.pub);
      CHECK(a.T == kp.priv.T);
      CHECK(b.T == kp.priv.T);
      CHECK(a.T == b.T);
      CHECK(a.consistent());
    }
  }
}

TEST_CASE("attacks agree on adversarially structured matrices") {
  Params pr = validate_params(2, 1, 12, 5);
  const int dim = pr.dim();
  std::vector<Matrix> cases;
  cases.push_back(Matrix::identity(pr.ctx, dim));
  // cyclic permutation
  Matrix perm(pr.ctx, dim, dim);
  for (int i = 0; i < dim; ++i) perm.set(i, (i + 1) % dim, pr.ctx->one());
  cases.push_back(perm);
  // a single entry; singular, but composition and the attacks do not care
  Matrix single(pr.ctx, dim, dim);
  single.set(0, 0, pr.ctx->one());
  cases.push_back(single);
  cases.push_back(Matrix(pr.ctx, dim, dim));  // zero
  Rng rng(321);
  cases.push_back(random_invertible(dim, pr.ctx, rng));

  for (const Matrix& t : cases) {
    PublicKey pk = public_only(pr, t);
    RecoveredKey a = attack_readoff(pk);
    RecoveredKey b = attack_linear(pk);
    CHECK(a.T == t);
    CHECK(b.T == t);
    CHECK(a.consistent());
  }
}

TEST_CASE("consistency report pinpoints a mutated coefficient") {
  Params pr = validate_params(2, 1, 8, 3);
  Rng rng(64);
  KeyPair kp = keygen(pr, rng);
  // all-clear on the honest key
  CHECK(attack_readoff(kp.pub).flagged().empty());

  // flip one monomial inside a group with several members: I_2 = {(1,6),(2,5)}
  PublicKey mutated = kp.pub;
  IndexPair target{2, 5};
  FieldElement cur = mutated.forms[2].coeff(target);
  mutated.forms[2].set_coeff(target, cur + pr.ctx->one());
  RecoveredKey rec = attack_readoff(mutated);
  auto flagged = rec.flagged();
  REQUIRE(flagged.size() == 1);
  CHECK(flagged[0].form == 3);
  CHECK(flagged[0].group == 2);
  // the read-off still returns the first member's coefficient, here the
  // untouched (1,6), so the recovered entry matches the true matrix
  CHECK(rec.T.at(2, 1) == kp.priv.T.at(2, 1));
  CHECK(rec.T == kp.priv.T);

  // the linear attack has no consistent solution on such a key
  CHECK_THROWS_AS(attack_linear(mutated), std::invalid_argument);
}

TEST_CASE("verify_break") {
  Params pr = validate_params(2, 2, 8, 3);
  Rng rng(99);
  KeyPair kp = keygen(pr, rng);

  SUBCASE("accepts the true private matrix") {
    BreakCheck chk = verify_break(kp.pub, kp.priv.T);
    CHECK(chk.ok());
    CHECK(chk.forms_match);
    CHECK(chk.roundtrip_ok);
    CHECK(chk.roundtrip_trials == 10);
    CHECK(chk.roundtrip_failures == 0);
  }
  SUBCASE("accepts the recovered matrix") {
    CHECK(verify_break(kp.pub, attack_readoff(kp.pub)).ok());
    CHECK(verify_break(kp.pub, attack_linear(kp.pub)).ok());
  }
  SUBCASE("pinpoints a single flipped entry") {
    Matrix bad = kp.priv.T;
    bad.set(4, 2, bad.at(4, 2) + pr.ctx->one());
    BreakCheck chk = verify_break(kp.pub, bad);
    CHECK_FALSE(chk.forms_match);
    REQUIRE(chk.form_mismatches.size() == 1);
    CHECK(chk.form_mismatches[0] == std::pair<int, int>{5, 3});
    CHECK_FALSE(chk.ok());
  }
  SUBCASE("reports rather than raises on a singular candidate") {
    Matrix zero(pr.ctx, pr.dim(), pr.dim());
    BreakCheck chk = verify_break(kp.pub, zero);
    CHECK_FALSE(chk.ok());
    CHECK(chk.roundtrip_failures == chk.roundtrip_trials);
  }
}

TEST_CASE("recovered keys serialize in the private-key format") {
  KeyPair kp = key_pair_from_matrix(demo::params(), demo::matrix());
  RecoveredKey rec = attack_readoff(kp.pub);
  std::string text = write_recovered(kp.pub.params, rec);
  CHECK(text.rfind("# recovered-by: readoff\n", 0) == 0);
  PrivateKey back = read_private(text);
  CHECK(back.T == kp.priv.T);
}
