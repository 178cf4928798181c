#include "hip/mqform.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "hip/errors.hpp"

namespace hip {

namespace {

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw malformed_error("bad integer in quadratic form: '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<IndexPair> index_set(int m, int k) {
  check_k(k);
  if (m < 1 || m > 2 * k + 1) throw std::invalid_argument("coefficient-sum index out of range");
  std::vector<IndexPair> out;
  const int lo = std::max(1, m - k);
  const int hi = std::min(k + 1, m);
  out.reserve(hi - lo + 1);
  for (int i = lo; i <= hi; ++i) out.push_back(IndexPair{i, m + k + 2 - i});
  return out;
}

int group_index(const IndexPair& pair, int k) { return pair.i + pair.j - k - 2; }

SymbolicProduct symbolic_product(int k) {
  check_k(k);
  SymbolicProduct out;
  out.k = k;
  out.groups.reserve(2 * k + 1);
  for (int m = 1; m <= 2 * k + 1; ++m) out.groups.push_back(index_set(m, k));
  return out;
}

QuadForm::QuadForm(FieldCtxPtr ctx, int k) : k_(k), ctx_(std::move(ctx)) { check_k(k); }

FieldElement QuadForm::coeff(const IndexPair& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? ctx_->zero() : it->second;
}

void QuadForm::set_coeff(const IndexPair& p, FieldElement v) {
  if (p.i < 1 || p.i > k_ + 1 || p.j < k_ + 2 || p.j > 2 * k_ + 2)
    throw std::invalid_argument("monomial outside the cross-variable split");
  if (!(*v.ctx() == *ctx_)) throw std::invalid_argument("coefficient from a different field");
  if (v.is_zero())
    terms_.erase(p);
  else
    terms_.insert_or_assign(p, std::move(v));
}

void QuadForm::add_coeff(const IndexPair& p, const FieldElement& v) {
  set_coeff(p, coeff(p) + v);
}

FieldElement QuadForm::eval(std::span<const FieldElement> v) const {
  if (static_cast<int>(v.size()) != nvars())
    throw std::invalid_argument("evaluation vector has wrong length");
  FieldElement acc = ctx_->zero();
  for (const auto& [pair, c] : terms_) acc += c * v[pair.i - 1] * v[pair.j - 1];
  return acc;
}

QuadForm QuadForm::operator+(const QuadForm& o) const {
  if (k_ != o.k_ || !(*ctx_ == *o.ctx_))
    throw std::invalid_argument("quadratic form mismatch");
  QuadForm out = *this;
  for (const auto& [pair, c] : o.terms_) out.add_coeff(pair, c);
  return out;
}

bool QuadForm::operator==(const QuadForm& o) const {
  return k_ == o.k_ && *ctx_ == *o.ctx_ && terms_ == o.terms_;
}

std::string QuadForm::str() const {
  std::string out;
  for (const auto& [pair, c] : terms_) {
    if (!out.empty()) out += ';';
    out += std::to_string(pair.i) + ',' + std::to_string(pair.j) + ',' + c.str();
  }
  return out;
}

QuadForm QuadForm::parse(const FieldCtxPtr& ctx, int k, std::string_view text) {
  QuadForm out(ctx, k);
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(';', start);
    std::string_view term = text.substr(start, end == std::string_view::npos ? end : end - start);
    size_t c1 = term.find(',');
    size_t c2 = c1 == std::string_view::npos ? c1 : term.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
      throw malformed_error("bad quadratic form term: '" + std::string(term) + "'");
    IndexPair pair{parse_int(term.substr(0, c1)), parse_int(term.substr(c1 + 1, c2 - c1 - 1))};
    FieldElement c = ctx->zero();
    try {
      c = ctx->parse(term.substr(c2 + 1));
    } catch (const std::invalid_argument& e) {
      throw malformed_error(std::string("bad quadratic form coefficient: ") + e.what());
    }
    if (c.is_zero()) throw malformed_error("zero coefficient stored in quadratic form");
    if (out.terms_.count(pair)) throw malformed_error("duplicate monomial in quadratic form");
    try {
      out.set_coeff(pair, std::move(c));
    } catch (const std::invalid_argument& e) {
      throw malformed_error(e.what());
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string QuadForm::pretty() const {
  if (terms_.empty()) return "0";
  // display in (j, i) order: ascending g-side variable, a natural reading
  // of the convolution
  std::vector<std::pair<IndexPair, FieldElement>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.j, a.first.i) < std::pair(b.first.j, b.first.i);
  });
  std::string out;
  for (const auto& [pair, c] : sorted) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += "(" + c.str() + ")*";
    out += "y" + std::to_string(pair.i) + "*y" + std::to_string(pair.j);
  }
  return out;
}

std::vector<QuadForm> compose_public(const Matrix& T, int k) {
  check_k(k);
  const int dim = 2 * k + 1;
  if (T.rows() != dim || T.cols() != dim)
    throw std::invalid_argument("transformation matrix must be (2k+1) x (2k+1)");
  const SymbolicProduct sp = symbolic_product(k);
  std::vector<QuadForm> forms;
  forms.reserve(dim);
  for (int i = 1; i <= dim; ++i) {
    QuadForm f(T.ctx(), k);
    for (int l = 1; l <= dim; ++l) {
      const FieldElement& t = T.at(i - 1, l - 1);
      if (t.is_zero()) continue;
      // the I_l are pairwise disjoint, so this never overwrites a term
      for (const IndexPair& pair : sp.groups[l - 1]) f.set_coeff(pair, t);
    }
    forms.push_back(std::move(f));
  }
  return forms;
}

}  // namespace hip
