#include "hip/attack.hpp"

#include <algorithm>
#include <stdexcept>

#include "hip/mqform.hpp"

namespace hip {

namespace {

// Per-(form, group) coefficient agreement. A property of the public key; it
// is all-clear for every honestly composed key (the groups are disjoint, so
// every monomial of I_l carries the same t_{i,l}).
std::vector<ConsistencyRecord> consistency_report(const PublicKey& pk) {
  const int k = pk.params.k;
  const int dim = pk.params.dim();
  const SymbolicProduct sp = symbolic_product(k);
  std::vector<ConsistencyRecord> report;
  report.reserve(static_cast<size_t>(dim) * dim);
  for (int i = 1; i <= dim; ++i) {
    const QuadForm& form = pk.forms[i - 1];
    for (int l = 1; l <= dim; ++l) {
      const auto& members = sp.groups[l - 1];
      FieldElement first = form.coeff(members.front());
      bool agreed = true;
      for (size_t t = 1; t < members.size(); ++t)
        if (form.coeff(members[t]) != first) {
          agreed = false;
          break;
        }
      report.push_back(ConsistencyRecord{i, l, agreed});
    }
  }
  return report;
}

void check_shape(const PublicKey& pk) {
  if (static_cast<int>(pk.forms.size()) != pk.params.dim())
    throw std::invalid_argument("public key must carry 2k+1 forms");
  for (const QuadForm& f : pk.forms)
    if (f.k() != pk.params.k) throw std::invalid_argument("form arity does not match k");
}

// All (k+1)^2 cross monomials in (i, j) order: the column ordering shared by
// the incidence and coefficient matrices of the linear-algebra attack.
std::vector<IndexPair> monomial_order(int k) {
  std::vector<IndexPair> out;
  out.reserve((k + 1) * (k + 1));
  for (int i = 1; i <= k + 1; ++i)
    for (int j = k + 2; j <= 2 * k + 2; ++j) out.push_back(IndexPair{i, j});
  return out;
}

}  // namespace

std::string to_string(AttackMethod m) {
  return m == AttackMethod::readoff ? "readoff" : "linear";
}

bool RecoveredKey::consistent() const {
  return std::all_of(report.begin(), report.end(),
                     [](const ConsistencyRecord& r) { return r.agreed; });
}

std::vector<ConsistencyRecord> RecoveredKey::flagged() const {
  std::vector<ConsistencyRecord> out;
  for (const auto& r : report)
    if (!r.agreed) out.push_back(r);
  return out;
}

RecoveredKey attack_readoff(const PublicKey& pk) {
  check_shape(pk);
  const int k = pk.params.k;
  const int dim = pk.params.dim();
  const SymbolicProduct sp = symbolic_product(k);
  Matrix T(pk.params.ctx, dim, dim);
  for (int i = 1; i <= dim; ++i)
    for (int l = 1; l <= dim; ++l)
      T.set(i - 1, l - 1, pk.forms[i - 1].coeff(sp.groups[l - 1].front()));
  return RecoveredKey{std::move(T), AttackMethod::readoff, consistency_report(pk)};
}

RecoveredKey attack_linear(const PublicKey& pk) {
  check_shape(pk);
  const int k = pk.params.k;
  const int dim = pk.params.dim();
  const auto& ctx = pk.params.ctx;
  const std::vector<IndexPair> cols = monomial_order(k);
  Matrix A(ctx, dim, static_cast<int>(cols.size()));
  Matrix B(ctx, dim, static_cast<int>(cols.size()));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    A.set(group_index(cols[c], k) - 1, c, ctx->one());
    for (int i = 0; i < dim; ++i) B.set(i, c, pk.forms[i].coeff(cols[c]));
  }
  Matrix T = solve_right(A, B);
  return RecoveredKey{std::move(T), AttackMethod::linear, consistency_report(pk)};
}

BreakCheck verify_break(const PublicKey& pk, const Matrix& T, int trials, std::uint64_t seed) {
  check_shape(pk);
  const int k = pk.params.k;
  BreakCheck out;
  // (a) the forms composed from T must reproduce the public key exactly
  if (T.rows() == pk.params.dim() && T.cols() == pk.params.dim()) {
    std::vector<QuadForm> composed = compose_public(T, k);
    for (int i = 1; i <= pk.params.dim(); ++i) {
      if (composed[i - 1] == pk.forms[i - 1]) continue;
      std::vector<int> groups;
      for (const IndexPair& pair : monomial_order(k)) {
        if (composed[i - 1].coeff(pair) != pk.forms[i - 1].coeff(pair)) {
          int l = group_index(pair, k);
          if (std::find(groups.begin(), groups.end(), l) == groups.end()) groups.push_back(l);
        }
      }
      for (int l : groups) out.form_mismatches.emplace_back(i, l);
    }
    out.forms_match = out.form_mismatches.empty();
  }
  // (b) fresh random message pairs must decrypt with T as the private key
  Rng rng(seed);
  PrivateKey candidate{pk.params, T};
  out.roundtrip_trials = trials;
  for (int t = 0; t < trials; ++t) {
    Poly pB = random_irreducible(k, pk.params.ctx, rng);
    Poly qB = random_irreducible(k, pk.params.ctx, rng);
    bool ok = false;
    try {
      Ciphertext z = encrypt(pk, pB, qB);
      Decrypted dec = decrypt(candidate, z, rng);
      ok = (dec.p == pB && dec.q == qB) || (dec.p == qB && dec.q == pB);
    } catch (const std::exception&) {
      ok = false;  // singular T, failed factorization, ...: a reported failure
    }
    if (!ok) ++out.roundtrip_failures;
  }
  out.roundtrip_ok = out.roundtrip_failures == 0;
  return out;
}

BreakCheck verify_break(const PublicKey& pk, const RecoveredKey& rec, int trials,
                        std::uint64_t seed) {
  return verify_break(pk, rec.T, trials, seed);
}

}  // namespace hip
