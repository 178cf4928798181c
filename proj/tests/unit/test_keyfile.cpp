#include "doctest.h"
#include "hip/errors.hpp"
#include "hip/keyfile.hpp"

using namespace hip;

TEST_CASE("key files roundtrip byte-for-byte") {
  Params pr = validate_params(3, 1, 12, 5);
  Rng rng(4711);
  KeyPair kp = keygen(pr, rng);

  std::string pub = write_public(kp.pub);
  std::string priv = write_private(kp.priv);
  CHECK(pub.rfind("HIP p=3 m=1 n=12 k=5\n", 0) == 0);

  PublicKey pk = read_public(pub);
  PrivateKey sk = read_private(priv);
  CHECK(pk.forms == kp.pub.forms);
  CHECK(sk.T == kp.priv.T);
  CHECK(pk.params.h == pr.h);
  // writers are deterministic
  CHECK(write_public(pk) == pub);
  CHECK(write_private(sk) == priv);
}

TEST_CASE("extension-field keys roundtrip") {
  Params pr = validate_params(2, 2, 8, 3);
  Rng rng(8);
  KeyPair kp = keygen(pr, rng);
  CHECK(read_public(write_public(kp.pub)).forms == kp.pub.forms);
  CHECK(read_private(write_private(kp.priv)).T == kp.priv.T);
}

TEST_CASE("comments and blank lines are tolerated") {
  Params pr = validate_params(2, 1, 8, 3);
  Rng rng(15);
  KeyPair kp = keygen(pr, rng);
  std::string priv = "# a comment\n\n" + write_private(kp.priv) + "# trailing\n";
  CHECK(read_private(priv).T == kp.priv.T);
}

TEST_CASE("malformed key files are rejected") {
  Params pr = validate_params(2, 1, 8, 3);
  Rng rng(16);
  KeyPair kp = keygen(pr, rng);
  std::string pub = write_public(kp.pub);
  std::string priv = write_private(kp.priv);

  // truncated: drop the last line
  CHECK_THROWS_AS(read_public(pub.substr(0, pub.rfind('\n', pub.size() - 2) + 1)),
                  malformed_error);
  CHECK_THROWS_AS(read_private(priv.substr(0, priv.rfind('\n', priv.size() - 2) + 1)),
                  malformed_error);
  CHECK_THROWS_AS(read_public(""), malformed_error);
  CHECK_THROWS_AS(read_public("garbage\n"), malformed_error);
  CHECK_THROWS_AS(read_public("HIP p=2 m=1 n=8\nh: 1\nP:\n"), malformed_error);
  // header violating the parameter rules
  CHECK_THROWS_AS(read_public("HIP p=4 m=1 n=8 k=3\n" + pub.substr(pub.find('\n') + 1)),
                  malformed_error);
  CHECK_THROWS_AS(read_public("HIP p=2 m=1 n=7 k=3\n" + pub.substr(pub.find('\n') + 1)),
                  malformed_error);
  // wrong section marker
  CHECK_THROWS_AS(read_private(pub), malformed_error);
  CHECK_THROWS_AS(read_public(priv), malformed_error);
  // parameters beyond the supported range are rejected before any field work
  CHECK_THROWS_AS(read_public("HIP p=2 m=9999999 n=8 k=3\nh: 1\nP:\n"), malformed_error);
  CHECK_THROWS_AS(read_public("HIP p=2 m=1 n=100000 k=3\nh: 1\nP:\n"), malformed_error);
  CHECK_THROWS_AS(read_public("HIP p=2 m=1 n=8 k=3000\nh: 1\nP:\n"), malformed_error);
  // singular matrix
  std::string zero_row = priv;
  size_t t_pos = zero_row.find("T:\n") + 3;
  size_t row_end = zero_row.find('\n', t_pos);
  zero_row.replace(t_pos, row_end - t_pos, "0 0 0 0 0 0 0");
  CHECK_THROWS_AS(read_private(zero_row), malformed_error);
  // trailing junk
  CHECK_THROWS_AS(read_public(pub + "1,5,1\n"), malformed_error);
}

TEST_CASE("ciphertext files") {
  Params pr = validate_params(5, 1, 8, 3);
  Rng rng(17);
  KeyPair kp = keygen(pr, rng);
  Ciphertext z = encrypt(kp.pub, random_irreducible(3, pr.ctx, rng),
                         random_irreducible(3, pr.ctx, rng));
  std::string text = write_ciphertext(z);
  Ciphertext back = read_ciphertext(pr, text);
  CHECK(back.coeffs == z.coeffs);
  CHECK_THROWS_AS(read_ciphertext(pr, "1 2 3\n"), malformed_error);
  CHECK_THROWS_AS(read_ciphertext(pr, ""), malformed_error);
  CHECK_THROWS_AS(read_ciphertext(pr, "1 2 3 4 5 6 7 8\n"), malformed_error);
  CHECK_THROWS_AS(read_ciphertext(pr, "1 2 3 4 5 6 9\n"), malformed_error);  // 9 >= p
}

TEST_CASE("custom field modulus cannot be serialized") {
  // the format reconstructs F_q from (p, m) with the default modulus
  auto f8 = make_field(2, 3, {1, 0, 1, 1});  // not the default x^3+x+1
  Params pr = validate_params(2, 3, 8, 3, f8, std::nullopt);
  Rng rng(18);
  KeyPair kp = keygen(pr, rng);
  CHECK_THROWS_AS(write_private(kp.priv), std::invalid_argument);
  CHECK_THROWS_AS(write_public(kp.pub), std::invalid_argument);
}
