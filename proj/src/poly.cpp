#include "hip/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hip/errors.hpp"

namespace hip {

namespace {

void require_same_ctx(const Poly& a, const Poly& b) {
  if (a.ctx().get() == b.ctx().get()) return;
  if (!(*a.ctx() == *b.ctx())) throw std::invalid_argument("field context mismatch");
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// square root in characteristic 2: a^(2^(m-1)), by iterated squaring
FieldElement sqrt_char2(const FieldElement& a) {
  FieldElement r = a;
  for (int i = 1; i < a.ctx()->ext_degree(); ++i) r = r * r;
  return r;
}

inline constexpr std::uint64_t kFactorSeed = 0x9e3779b97f4a7c15u;

}  // namespace

Poly::Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs)
    : c_(std::move(coeffs)), ctx_(std::move(ctx)) {
  for (const auto& c : c_)
    if (!(*c.ctx() == *ctx_)) throw std::invalid_argument("coefficient from a different field");
  prune();
}

void Poly::prune() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_ints(const FieldCtxPtr& ctx, const std::vector<std::uint64_t>& coeffs) {
  std::vector<FieldElement> cs;
  cs.reserve(coeffs.size());
  for (auto v : coeffs) cs.push_back(ctx->from_int(v));
  return Poly(ctx, std::move(cs));
}

Poly Poly::constant(FieldElement c) {
  auto ctx = c.ctx();
  return Poly(ctx, std::vector<FieldElement>{std::move(c)});
}

Poly Poly::x(const FieldCtxPtr& ctx) {
  return Poly(ctx, std::vector<FieldElement>{ctx->zero(), ctx->one()});
}

Poly Poly::parse(const FieldCtxPtr& ctx, std::string_view text) {
  std::vector<FieldElement> cs;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    try {
      cs.push_back(ctx->parse(tok));
    } catch (const std::invalid_argument& e) {
      throw malformed_error(std::string("bad polynomial: ") + e.what());
    }
  }
  if (cs.empty()) throw malformed_error("empty polynomial text");
  return Poly(ctx, std::move(cs));
}

std::vector<FieldElement> Poly::coeffs_padded(int length) const {
  if (length <= degree()) throw std::invalid_argument("padding length below degree");
  std::vector<FieldElement> out = c_;
  out.resize(length, ctx_->zero());
  return out;
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

const FieldElement& Poly::leading() const {
  if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return c_.back();
}

FieldElement Poly::coeff(int i) const {
  if (i < 0) throw std::invalid_argument("negative coefficient index");
  if (i >= static_cast<int>(c_.size())) return ctx_->zero();
  return c_[i];
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ctx(*this, o);
  std::vector<FieldElement> out(std::max(c_.size(), o.c_.size()), ctx_->zero());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Poly(ctx_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  require_same_ctx(*this, o);
  std::vector<FieldElement> out(std::max(c_.size(), o.c_.size()), ctx_->zero());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return Poly(ctx_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  require_same_ctx(*this, o);
  if (is_zero() || o.is_zero()) return Poly(ctx_);
  std::vector<FieldElement> out(c_.size() + o.c_.size() - 1, ctx_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return Poly(ctx_, std::move(out));
}

Poly Poly::operator*(const FieldElement& s) const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c * s);
  return Poly(ctx_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  require_same_ctx(*this, divisor);
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const int db = divisor.degree();
  Poly rem = *this;
  if (degree() < db) return {Poly(ctx_), rem};
  FieldElement lead_inv = divisor.leading().inv();
  std::vector<FieldElement> q(degree() - db + 1, ctx_->zero());
  while (rem.degree() >= db) {
    int shift = rem.degree() - db;
    FieldElement c = rem.leading() * lead_inv;
    q[shift] = c;
    // rem -= c * x^shift * divisor
    std::vector<FieldElement> rc = rem.c_;
    for (int j = 0; j <= db; ++j) rc[shift + j] -= c * divisor.c_[j];
    rem = Poly(ctx_, std::move(rc));
  }
  return {Poly(ctx_, std::move(q)), rem};
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * leading().inv();
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(ctx_);
  std::vector<FieldElement> out;
  out.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * ctx_->from_int(i));
  return Poly(ctx_, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  if (!(*ctx_ == *o.ctx_)) return false;
  return c_ == o.c_;
}

int Poly::cmp(const Poly& a, const Poly& b) {
  require_same_ctx(a, b);
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = FieldElement::cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out = c_[0].str();
  for (size_t i = 1; i < c_.size(); ++i) {
    out += ' ';
    out += c_[i].str();
  }
  return out;
}

std::string Poly::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = c_[i].str();
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (!c_[i].is_one()) {
      if (ctx_->ext_degree() > 1) out += "(" + coeff + ")*";
      else out += coeff + "*";
    }
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  require_same_ctx(a, b);
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& mod) {
  if (mod.degree() < 1) throw std::invalid_argument("powmod modulus must be nonconstant");
  Poly base = a % mod;
  Poly r = Poly::constant(a.ctx()->one()) % mod;
  while (e) {
    if (e & 1) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

Poly frobenius_powmod(Poly a, int steps, const Poly& mod) {
  const std::uint32_t p = a.ctx()->prime();
  const int m = a.ctx()->ext_degree();
  for (int s = 0; s < steps; ++s)
    for (int i = 0; i < m; ++i) a = powmod(a, p, mod);
  return a;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("irreducibility of a constant polynomial");
  const Poly fm = f.monic();
  const int d = fm.degree();
  if (d == 1) return true;
  const Poly x = Poly::x(f.ctx());
  // checkpoints: q^(d/l) for each prime l | d, and q^d at the end
  std::vector<int> checks;
  for (int l : prime_factors(d)) checks.push_back(d / l);
  std::sort(checks.begin(), checks.end());
  Poly u = x % fm;
  size_t next = 0;
  for (int j = 1; j <= d; ++j) {
    u = frobenius_powmod(u, 1, fm);
    while (next < checks.size() && checks[next] == j) {
      Poly g = gcd(u - x, fm);
      if (g.degree() != 0) return false;
      ++next;
    }
  }
  return u == x % fm;
}

Poly random_irreducible(int d, const FieldCtxPtr& ctx, Rng& rng) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  while (true) {
    std::vector<FieldElement> cs;
    cs.reserve(d + 1);
    for (int i = 0; i < d; ++i) cs.push_back(rng.element(ctx));
    cs.push_back(ctx->one());
    Poly cand(ctx, std::move(cs));
    if (is_irreducible(cand)) return cand;
  }
}

namespace {

// Proper monic factor of the squarefree rm (a product of two distinct
// degree-k monic irreducibles), by equal-degree splitting.
Poly split_squarefree(const Poly& rm, int k, Rng& rng) {
  const auto& ctx = rm.ctx();
  const std::uint32_t p = ctx->prime();
  const int m = ctx->ext_degree();
  const int deg = rm.degree();
  constexpr int kMaxTries = 128;
  for (int tries = 0; tries < kMaxTries; ++tries) {
    std::vector<FieldElement> wc;
    wc.reserve(deg);
    for (int i = 0; i < deg; ++i) wc.push_back(rng.element(ctx));
    Poly w(ctx, std::move(wc));
    if (w.degree() < 1) continue;
    Poly g = gcd(w, rm);
    if (g.degree() == 0 || g.degree() == deg) {
      if (p == 2) {
        // trace map over F_2: sum of w^(2^i), i < m*k
        Poly t = w % rm;
        Poly s = t;
        for (int i = 1; i < m * k; ++i) {
          t = (t * t) % rm;
          s = s + t;
        }
        g = s.is_zero() ? Poly(ctx) : gcd(s, rm);
      } else {
        // w^((q^k-1)/2) = (prod of the k Frobenius conjugates)^((q-1)/2)
        const std::uint64_t q = ctx->order();
        Poly v = w % rm;
        Poly s = v;
        for (int i = 1; i < k; ++i) {
          v = frobenius_powmod(v, 1, rm);
          s = (s * v) % rm;
        }
        Poly t = powmod(s, (q - 1) / 2, rm) - Poly::constant(ctx->one());
        g = t.is_zero() ? Poly(ctx) : gcd(t, rm);
      }
    }
    if (g.degree() > 0 && g.degree() < deg) return g;
  }
  throw std::runtime_error("equal-degree splitting did not converge");
}

}  // namespace

FactorPair factor_two_irreducibles(const Poly& r, int k, Rng& rng) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto& ctx = r.ctx();
  if (r.degree() != 2 * k)
    throw malformed_error("polynomial degree is not 2k");
  FieldElement scale = r.leading();
  const Poly rm = r.monic();

  auto finish = [&](Poly a, Poly b) {
    if (a.degree() != k || b.degree() != k || !is_irreducible(a) || !is_irreducible(b))
      throw malformed_error("polynomial is not a product of two degree-k irreducibles");
    if (Poly::cmp(b, a) < 0) std::swap(a, b);
    return FactorPair{std::move(a), std::move(b), std::move(scale)};
  };

  const Poly deriv = rm.derivative();
  if (deriv.is_zero()) {
    // all exponents divisible by the characteristic: a perfect square iff p = 2
    if (ctx->prime() != 2)
      throw malformed_error("polynomial is not a product of two degree-k irreducibles");
    std::vector<FieldElement> wc;
    wc.reserve(k + 1);
    for (int i = 0; i <= 2 * k; i += 2) wc.push_back(sqrt_char2(rm.coeff(i)));
    Poly w(ctx, std::move(wc));
    if (w * w != rm)
      throw malformed_error("polynomial is not a product of two degree-k irreducibles");
    Poly w2 = w;
    return finish(std::move(w), std::move(w2));
  }

  Poly g = gcd(rm, deriv);
  if (g.degree() == k) {
    // repeated factor in odd characteristic: rm = g^2
    if (g * g != rm)
      throw malformed_error("polynomial is not a product of two degree-k irreducibles");
    Poly g2 = g;
    return finish(std::move(g), std::move(g2));
  }
  if (g.degree() != 0)
    throw malformed_error("polynomial is not a product of two degree-k irreducibles");

  if (is_irreducible(rm))
    throw malformed_error("polynomial is irreducible, not a product of two factors");

  Poly u = split_squarefree(rm, k, rng);
  auto [v, rem] = rm.divmod(u);
  if (!rem.is_zero()) throw std::runtime_error("split does not divide its input");
  return finish(std::move(u), std::move(v));
}

FactorPair factor_two_irreducibles(const Poly& r, int k) {
  Rng rng(kFactorSeed);
  return factor_two_irreducibles(r, k, rng);
}

}  // namespace hip
