// hip: key lifecycle, encryption, decryption and key-recovery attacks for
// the Hidden Irreducible Polynomials scheme.
//
// Exit codes: 0 success, 2 argument error, 3 file error, 4 malformed
// key/ciphertext data, 5 failed verification, 1 internal error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hip/attack.hpp"
#include "hip/demo_fixture.hpp"
#include "hip/errors.hpp"
#include "hip/keyfile.hpp"
#include "hip/scheme.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitArgs = 2;
constexpr int kExitFile = 3;
constexpr int kExitMalformed = 4;
constexpr int kExitVerify = 5;

constexpr std::uint64_t kDefaultSeed = 1;

struct file_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw file_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw file_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw file_error("write to '" + path + "' failed");
}

// "Y2 + Y4 + ..." rendering of one public form via its read-off row
std::string coefficient_sum_line(const hip::Matrix& t, int row) {
  std::string out;
  for (int l = 0; l < t.cols(); ++l) {
    const auto& c = t.at(row, l);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += "(" + c.str() + ")*";
    out += "Y" + std::to_string(l + 1);
  }
  return out.empty() ? "0" : out;
}

std::string row_str(const hip::Matrix& t, int row) {
  std::string out;
  for (int l = 0; l < t.cols(); ++l) {
    if (l) out += ' ';
    out += t.at(row, l).str();
  }
  return out;
}

int cmd_keygen(std::uint32_t p, int m, int n, int k, std::uint64_t seed,
               const std::string& out_pub, const std::string& out_priv) {
  hip::Params params = hip::validate_params(p, m, n, k);
  hip::Rng rng(seed);
  hip::KeyPair kp = hip::keygen(params, rng);
  write_file(out_pub, hip::write_public(kp.pub));
  write_file(out_priv, hip::write_private(kp.priv));
  std::cout << "wrote public key to " << out_pub << " and private key to " << out_priv
            << " (q=" << params.ctx->order() << ", n=" << n << ", k=" << k << ", seed=" << seed
            << ")\n";
  return kExitOk;
}

int cmd_encrypt(const std::string& pub_path, const std::optional<std::string>& p_poly,
                const std::optional<std::string>& q_poly, bool random, std::uint64_t seed,
                const std::string& out_path) {
  hip::PublicKey pk = hip::read_public(read_file(pub_path));
  hip::Poly pB(pk.params.ctx), qB(pk.params.ctx);
  if (random) {
    hip::Rng rng(seed);
    pB = hip::random_irreducible(pk.params.k, pk.params.ctx, rng);
    qB = hip::random_irreducible(pk.params.k, pk.params.ctx, rng);
  } else {
    if (!p_poly || !q_poly)
      throw CLI::ValidationError("encrypt", "provide --p-poly and --q-poly, or --random");
    pB = hip::Poly::parse(pk.params.ctx, *p_poly);
    qB = hip::Poly::parse(pk.params.ctx, *q_poly);
  }
  hip::Ciphertext z = hip::encrypt(pk, pB, qB);
  write_file(out_path, hip::write_ciphertext(z));
  std::cout << "p: " << pB.str() << "\n";
  std::cout << "q: " << qB.str() << "\n";
  std::cout << "wrote ciphertext to " << out_path << "\n";
  return kExitOk;
}

int cmd_decrypt(const std::string& priv_path, const std::string& ct_path) {
  hip::PrivateKey sk = hip::read_private(read_file(priv_path));
  hip::Ciphertext z = hip::read_ciphertext(sk.params, read_file(ct_path));
  hip::Decrypted dec = hip::decrypt(sk, z);
  std::cout << "p: " << dec.p.str() << "\n";
  std::cout << "q: " << dec.q.str() << "\n";
  std::cout << "scalar: " << dec.scale.str() << "\n";
  return kExitOk;
}

int cmd_attack(const std::string& pub_path, const std::string& method,
               const std::string& out_path) {
  hip::PublicKey pk = hip::read_public(read_file(pub_path));
  const auto t0 = std::chrono::steady_clock::now();
  hip::RecoveredKey rec = method == "linear" ? hip::attack_linear(pk) : hip::attack_readoff(pk);
  const auto t1 = std::chrono::steady_clock::now();
  write_file(out_path, hip::write_recovered(pk.params, rec));
  const auto flagged = rec.flagged();
  std::cout << "method: " << hip::to_string(rec.method) << "\n";
  std::cout << "consistency: " << (rec.report.size() - flagged.size()) << "/"
            << rec.report.size() << " (form, group) pairs agree\n";
  for (const auto& r : flagged)
    std::cout << "  disagreement in form " << r.form << ", coefficient sum Y" << r.group << "\n";
  std::cout << "recovered transformation matrix written to " << out_path << "\n";
  std::cout << "elapsed: "
            << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0
            << " ms\n";
  return rec.consistent() ? kExitOk : kExitVerify;
}

int cmd_verify(const std::string& pub_path, const std::string& key_path) {
  hip::PublicKey pk = hip::read_public(read_file(pub_path));
  hip::PrivateKey key = hip::read_private(read_file(key_path));
  hip::BreakCheck chk = hip::verify_break(pk, key.T);
  std::cout << "forms match: " << (chk.forms_match ? "yes" : "no") << "\n";
  for (const auto& [form, group] : chk.form_mismatches)
    std::cout << "  mismatch in form " << form << ", coefficient sum Y" << group << "\n";
  std::cout << "roundtrips: " << (chk.roundtrip_trials - chk.roundtrip_failures) << "/"
            << chk.roundtrip_trials << " random message pairs recovered\n";
  std::cout << "verified: " << (chk.ok() ? "true" : "false") << "\n";
  return chk.ok() ? kExitOk : kExitVerify;
}

int cmd_demo() {
  hip::Params params = hip::demo::params();
  hip::Matrix T = hip::demo::matrix();
  hip::KeyPair kp = hip::key_pair_from_matrix(params, T);

  std::cout << "HIP worked example: q=2 (p=2, m=1), k=7, n=16\n";
  std::cout << "h: " << params.h.str() << "\n";
  std::cout << "note: the attacks read only the public quadratic forms; n and h play no role\n";
  std::cout << "note: coefficient sums are 1-based here (Y_m multiplies x^(m-1));\n";
  std::cout << "      zero-based listings shift every Y label down by one\n\n";
  std::cout << "private transformation matrix T (15x15):\n" << T.str() << "\n";

  std::cout << "public key: 15 quadratic polynomials in y1..y16; forms 1, 2, 14, 15:\n";
  for (int num : hip::demo::golden_form_numbers()) {
    std::cout << "p" << num << " = " << kp.pub.forms[num - 1].pretty() << "\n";
    std::cout << "p" << num << " as coefficient sums = " << coefficient_sum_line(T, num - 1)
              << "\n";
  }

  hip::RecoveredKey readoff = hip::attack_readoff(kp.pub);
  hip::RecoveredKey linear = hip::attack_linear(kp.pub);
  std::cout << "\nread-off of form 14 -> row 14 of T: " << row_str(readoff.T, 13) << "\n";
  const auto flagged = readoff.flagged();
  std::cout << "consistency: " << (readoff.report.size() - flagged.size()) << "/"
            << readoff.report.size() << " (form, group) pairs agree\n";
  std::cout << "\nrecovered T (read-off attack):\n" << readoff.T.str();
  bool recovered = readoff.T == T && linear.T == T;
  std::cout << "RECOVERED == PRIVATE: " << (recovered ? "true" : "false")
            << " (read-off and linear-algebra attacks)\n";

  hip::Poly pB = hip::demo::sample_message_p();
  hip::Poly qB = hip::demo::sample_message_q();
  std::cout << "\nsample encryption: p = " << pB.pretty() << ", q = " << qB.pretty() << "\n";
  hip::Ciphertext z = hip::encrypt(kp.pub, pB, qB);
  std::cout << "ciphertext: " << hip::write_ciphertext(z);
  std::string embedded;
  for (const auto& c : hip::ciphertext_as_extension_vector(params, z))
    embedded += (embedded.empty() ? "" : " ") + c.str();
  std::cout << "ciphertext as an element of K (n-2k-1 zeros of padding): " << embedded << "\n";
  hip::Decrypted dec =
      hip::decrypt(hip::PrivateKey{params, readoff.T}, z);  // attacker's copy of T
  std::cout << "decrypted with the recovered key: p = " << dec.p.pretty()
            << ", q = " << dec.q.pretty() << ", scalar = " << dec.scale.str() << "\n";
  bool roundtrip = (dec.p == pB && dec.q == qB) || (dec.p == qB && dec.q == pB);
  std::cout << "plaintexts recovered: " << (roundtrip ? "true" : "false") << "\n";

  return recovered && roundtrip && readoff.consistent() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hidden Irreducible Polynomials scheme: key lifecycle and key-recovery attacks"};
  app.require_subcommand(1);

  // keygen
  auto* keygen = app.add_subcommand("keygen", "generate a key pair");
  std::uint32_t p = 2;
  int m = 1, n = 0, k = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string out_pub, out_priv;
  keygen->add_option("--p", p, "characteristic (prime)")->required();
  keygen->add_option("--m", m, "extension degree of F_q over F_p")->required();
  keygen->add_option("--n", n, "extension degree of K over F_q")->required();
  keygen->add_option("--k", k, "message polynomial degree (prime)")->required();
  keygen->add_option("--seed", seed, "RNG seed (default 1)");
  keygen->add_option("--out-pub", out_pub, "public key output path")->required();
  keygen->add_option("--out-priv", out_priv, "private key output path")->required();

  // encrypt
  auto* encrypt = app.add_subcommand("encrypt", "encrypt two irreducible polynomials");
  std::string pub_path, out_ct;
  std::optional<std::string> p_poly, q_poly;
  bool random = false;
  std::uint64_t enc_seed = kDefaultSeed;
  encrypt->add_option("--pub", pub_path, "public key file")->required();
  auto* p_opt =
      encrypt->add_option("--p-poly", p_poly, "first message polynomial (little-endian text form)");
  auto* q_opt = encrypt->add_option("--q-poly", q_poly, "second message polynomial");
  encrypt->add_flag("--random", random, "sample the two message polynomials")
      ->excludes(p_opt)
      ->excludes(q_opt);
  encrypt->add_option("--seed", enc_seed, "RNG seed for --random (default 1)");
  encrypt->add_option("--out", out_ct, "ciphertext output path")->required();

  // decrypt
  auto* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext with a private key");
  std::string priv_path, ct_path;
  decrypt->add_option("--priv", priv_path, "private (or recovered) key file")->required();
  decrypt->add_option("--ct", ct_path, "ciphertext file")->required();

  // attack
  auto* attack = app.add_subcommand("attack", "recover the private matrix from a public key");
  std::string atk_pub, method = "readoff", atk_out;
  attack->add_option("--pub", atk_pub, "public key file")->required();
  attack->add_option("--method", method, "readoff|linear (default readoff)")
      ->check(CLI::IsMember({"readoff", "linear"}));
  attack->add_option("--out", atk_out, "recovered key output path")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check a (recovered) key against a public key");
  std::string ver_pub, ver_key;
  verify->add_option("--pub", ver_pub, "public key file")->required();
  verify->add_option("--key", ver_key, "private or recovered key file")->required();

  // demo-paper
  app.add_subcommand("demo-paper",
                     "run the built-in q=2, k=7 worked example and both attacks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitArgs;
  }

  try {
    if (app.got_subcommand("keygen")) return cmd_keygen(p, m, n, k, seed, out_pub, out_priv);
    if (app.got_subcommand("encrypt"))
      return cmd_encrypt(pub_path, p_poly, q_poly, random, enc_seed, out_ct);
    if (app.got_subcommand("decrypt")) return cmd_decrypt(priv_path, ct_path);
    if (app.got_subcommand("attack")) return cmd_attack(atk_pub, method, atk_out);
    if (app.got_subcommand("verify")) return cmd_verify(ver_pub, ver_key);
    if (app.got_subcommand("demo-paper")) return cmd_demo();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const file_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const hip::malformed_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;  // unreachable: a subcommand is required
}
