#include "hip/field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hip/poly.hpp"

namespace hip {

namespace {

constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t addp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t subp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(a + std::uint64_t(p) - b);
}

std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
}

std::uint32_t invp(std::uint32_t a, std::uint32_t p) {
  // extended Euclid over Z
  std::int64_t t0 = 0, t1 = 1, r0 = p, r1 = a;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
  }
  if (r0 != 1) throw std::invalid_argument("element not invertible mod p");
  if (t0 < 0) t0 += p;
  return static_cast<std::uint32_t>(t0);
}

// Little-endian F_p[t] helpers for the extension arithmetic. Vectors may
// carry trailing zeros; degp treats them as absent.
int degp(const std::vector<std::uint32_t>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// a -= c * b * t^shift  (mod p)
void submul(std::vector<std::uint32_t>& a, std::uint32_t c, const std::vector<std::uint32_t>& b,
            int shift, std::uint32_t p) {
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    size_t k = i + shift;
    if (k >= a.size()) a.resize(k + 1, 0);
    a[k] = subp(a[k], mulp(c, b[i], p), p);
  }
}

std::vector<std::uint32_t> divmodp(std::vector<std::uint32_t> a,
                                   const std::vector<std::uint32_t>& b, std::uint32_t p,
                                   std::vector<std::uint32_t>* quot) {
  int db = degp(b);
  std::uint32_t lead_inv = invp(b[db], p);
  std::vector<std::uint32_t> q;
  int da = degp(a);
  if (da >= db) q.assign(da - db + 1, 0);
  while ((da = degp(a)) >= db) {
    std::uint32_t c = mulp(a[da], lead_inv, p);
    q[da - db] = c;
    submul(a, c, b, da - db, p);
  }
  if (quot) *quot = std::move(q);
  return a;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad field element literal: '" + std::string(s) + "'");
  return v;
}

}  // namespace

class FieldCtxAccess {
 public:
  static FieldCtxPtr make(std::uint32_t p, int m, std::vector<std::uint32_t> modulus,
                          bool is_default) {
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;
    ctx->modulus_ = std::move(modulus);
    ctx->default_modulus_ = is_default;
    ctx->self_ = ctx;
    return ctx;
  }
};

namespace {

FieldCtxPtr make_ctx(std::uint32_t p, int m, std::vector<std::uint32_t> modulus,
                     bool is_default) {
  return FieldCtxAccess::make(p, m, std::move(modulus), is_default);
}

// Lowest monic irreducible of degree m over F_p, in base-p coefficient order
// of the non-leading coefficients.
std::vector<std::uint32_t> default_modulus_for(std::uint32_t p, int m) {
  auto base = make_ctx(p, 1, {}, true);
  for (std::uint64_t enc = 0;; ++enc) {
    std::vector<std::uint32_t> cand(m + 1, 0);
    std::uint64_t e = enc;
    for (int i = 0; i < m; ++i) {
      cand[i] = static_cast<std::uint32_t>(e % p);
      e /= p;
    }
    if (e != 0) throw std::runtime_error("no irreducible modulus found");  // unreachable
    cand[m] = 1;
    std::vector<FieldElement> cs;
    cs.reserve(cand.size());
    for (auto c : cand) cs.push_back(base->from_int(c));
    if (is_irreducible(Poly(base, std::move(cs)))) return cand;
  }
}

}  // namespace

FieldCtxPtr make_field(std::uint32_t p, int m) {
  if (p > kMaxPrime) throw std::invalid_argument("p must be < 2^31");
  if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime");
  if (m < 1) throw std::invalid_argument("extension degree m must be >= 1");
  if (m == 1) return make_ctx(p, 1, {}, true);
  return make_ctx(p, m, default_modulus_for(p, m), true);
}

FieldCtxPtr make_field(std::uint32_t p, int m, const std::vector<std::uint32_t>& modulus) {
  if (p > kMaxPrime) throw std::invalid_argument("p must be < 2^31");
  if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime");
  if (m < 1) throw std::invalid_argument("extension degree m must be >= 1");
  if (m == 1) return make_ctx(p, 1, {}, true);  // modulus ignored for the prime field
  if (static_cast<int>(modulus.size()) != m + 1)
    throw std::invalid_argument("modulus must have degree exactly m");
  std::vector<std::uint32_t> mod(modulus);
  for (auto& c : mod) c %= p;
  if (mod[m] != 1) throw std::invalid_argument("modulus must be monic");
  auto base = make_ctx(p, 1, {}, true);
  std::vector<FieldElement> cs;
  cs.reserve(mod.size());
  for (auto c : mod) cs.push_back(base->from_int(c));
  if (!is_irreducible(Poly(base, std::move(cs))))
    throw std::invalid_argument("modulus is reducible over F_p");
  bool is_default = (mod == default_modulus_for(p, m));
  return make_ctx(p, m, std::move(mod), is_default);
}

std::uint64_t FieldCtx::order() const {
  std::uint64_t q = 1;
  for (int i = 0; i < m_; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p_)
      throw std::overflow_error("field order does not fit in 64 bits");
    q *= p_;
  }
  return q;
}

bool FieldCtx::operator==(const FieldCtx& other) const {
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

FieldElement FieldCtx::zero() const { return FieldElement(self(), std::vector<std::uint32_t>(m_, 0)); }

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(std::uint64_t v) const {
  std::vector<std::uint32_t> c(m_, 0);
  c[0] = static_cast<std::uint32_t>(v % p_);
  return FieldElement(self(), std::move(c));
}

FieldElement FieldCtx::element(const std::vector<std::uint32_t>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > m_)
    throw std::invalid_argument("element has more coordinates than the extension degree");
  std::vector<std::uint32_t> c(m_, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % p_;
  return FieldElement(self(), std::move(c));
}

FieldElement FieldCtx::from_index(std::uint64_t idx) const {
  std::vector<std::uint32_t> c(m_, 0);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<std::uint32_t>(idx % p_);
    idx /= p_;
  }
  if (idx != 0) throw std::invalid_argument("element index out of range");
  return FieldElement(self(), std::move(c));
}

FieldElement FieldCtx::parse(std::string_view text) const {
  std::vector<std::uint32_t> c;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(':', start);
    std::string_view tok = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    std::uint64_t v = parse_u64(tok);
    if (v >= p_) throw std::invalid_argument("field element coordinate out of range");
    c.push_back(static_cast<std::uint32_t>(v));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (static_cast<int>(c.size()) != m_)
    throw std::invalid_argument("field element has wrong number of coordinates");
  return FieldElement(self(), std::move(c));
}

std::vector<FieldElement> FieldCtx::elements() const {
  std::uint64_t q = order();
  std::vector<FieldElement> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(from_index(i));
  return out;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.ctx().get() == b.ctx().get()) return;
  if (!a.ctx() || !b.ctx() || !(*a.ctx() == *b.ctx()))
    throw std::invalid_argument("field context mismatch");
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

FieldElement FieldElement::operator-() const {
  const std::uint32_t p = ctx_->prime();
  std::vector<std::uint32_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] == 0 ? 0 : p - c_[i];
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(*this, o);
  const std::uint32_t p = ctx_->prime();
  std::vector<std::uint32_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = addp(c_[i], o.c_[i], p);
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(*this, o);
  const std::uint32_t p = ctx_->prime();
  std::vector<std::uint32_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = subp(c_[i], o.c_[i], p);
  return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(*this, o);
  const std::uint32_t p = ctx_->prime();
  const int m = ctx_->ext_degree();
  if (m == 1) return FieldElement(ctx_, {mulp(c_[0], o.c_[0], p)});
  // convolution, then reduction by the monic modulus
  std::vector<std::uint32_t> t(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < m; ++j)
      t[i + j] = addp(t[i + j], mulp(c_[i], o.c_[j], p), p);
  }
  const auto& mod = ctx_->modulus();
  for (int i = 2 * m - 2; i >= m; --i) {
    std::uint32_t c = t[i];
    if (c == 0) continue;
    t[i] = 0;
    for (int j = 0; j < m; ++j)
      t[i - m + j] = subp(t[i - m + j], mulp(c, mod[j], p), p);
  }
  t.resize(m);
  return FieldElement(ctx_, std::move(t));
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero field element");
  const std::uint32_t p = ctx_->prime();
  const int m = ctx_->ext_degree();
  if (m == 1) return FieldElement(ctx_, {invp(c_[0], p)});
  // extended Euclid in F_p[t] against the irreducible modulus
  std::vector<std::uint32_t> r0 = ctx_->modulus(), r1 = c_;
  std::vector<std::uint32_t> t0{}, t1{1};
  while (degp(r1) >= 0) {
    std::vector<std::uint32_t> q;
    std::vector<std::uint32_t> r2 = divmodp(r0, r1, p, &q);
    r0 = std::move(r1);
    r1 = std::move(r2);
    std::vector<std::uint32_t> t2 = t0;
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0) submul(t2, q[i], t1, static_cast<int>(i), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  int d0 = degp(r0);
  if (d0 != 0) throw std::invalid_argument("element not invertible (modulus not irreducible?)");
  std::uint32_t scale = invp(r0[0], p);
  std::vector<std::uint32_t> out(m, 0);
  for (size_t i = 0; i < t0.size() && i < out.size(); ++i) out[i] = mulp(t0[i], scale, p);
  return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement r = ctx_->one();
  FieldElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (ctx_.get() != o.ctx_.get() && !(*ctx_ == *o.ctx_)) return false;
  return c_ == o.c_;
}

std::uint64_t FieldElement::index() const {
  std::uint64_t v = 0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) v = v * ctx_->prime() + c_[i];
  return v;
}

std::string FieldElement::str() const {
  std::string out = std::to_string(c_[0]);
  for (size_t i = 1; i < c_.size(); ++i) {
    out += ':';
    out += std::to_string(c_[i]);
  }
  return out;
}

int FieldElement::cmp(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  for (int i = static_cast<int>(a.c_.size()) - 1; i >= 0; --i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace hip
