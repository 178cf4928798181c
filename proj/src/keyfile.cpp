#include "hip/keyfile.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "hip/errors.hpp"

namespace hip {

namespace {

std::string header_line(const Params& pr) {
  return "HIP p=" + std::to_string(pr.p) + " m=" + std::to_string(pr.m) +
         " n=" + std::to_string(pr.n) + " k=" + std::to_string(pr.k);
}

void require_serializable(const Params& pr) {
  // the file format reconstructs F_q from (p, m); a custom modulus would be lost
  if (!pr.ctx->default_modulus())
    throw std::invalid_argument(
        "key files carry only (p, m); contexts with a custom F_q modulus are not serializable");
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    lines.push_back(line);
  }
  // trailing blank lines are noise; interior ones are significant (zero forms)
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::uint64_t parse_field_u64(std::string_view line, std::string_view key, size_t& pos) {
  size_t at = line.find(key, pos);
  if (at == std::string_view::npos)
    throw malformed_error("key header missing '" + std::string(key) + "'");
  at += key.size();
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(line.data() + at, line.data() + line.size(), v);
  if (ec != std::errc() || ptr == line.data() + at) throw malformed_error("bad key header number");
  pos = ptr - line.data();
  return v;
}

struct ParsedHeader {
  Params params;
  size_t next_line;  // index of the section marker line
};

// caps keep parsing cheap; far beyond anything the scheme is used at
constexpr std::uint64_t kMaxM = 64;
constexpr std::uint64_t kMaxN = 512;
constexpr std::uint64_t kMaxK = 128;

ParsedHeader parse_header(const std::vector<std::string>& lines) {
  size_t idx = 0;
  while (idx < lines.size() && lines[idx].empty()) ++idx;
  if (idx >= lines.size() || lines[idx].rfind("HIP ", 0) != 0)
    throw malformed_error("missing HIP key header");
  const std::string& hdr = lines[idx];
  size_t pos = 0;
  std::uint64_t p = parse_field_u64(hdr, "p=", pos);
  std::uint64_t m = parse_field_u64(hdr, "m=", pos);
  std::uint64_t n = parse_field_u64(hdr, "n=", pos);
  std::uint64_t k = parse_field_u64(hdr, "k=", pos);
  if (p >= (1u << 31) || m < 1 || m > kMaxM || n > kMaxN || k > kMaxK)
    throw malformed_error("key header parameters out of the supported range");
  ++idx;
  while (idx < lines.size() && lines[idx].empty()) ++idx;
  if (idx >= lines.size() || lines[idx].rfind("h: ", 0) != 0)
    throw malformed_error("missing h line");
  try {
    FieldCtxPtr ctx = make_field(static_cast<std::uint32_t>(p), static_cast<int>(m));
    Poly h = Poly::parse(ctx, std::string_view(lines[idx]).substr(3));
    Params params = validate_params(static_cast<std::uint32_t>(p), static_cast<int>(m),
                                    static_cast<int>(n), static_cast<int>(k), ctx, std::move(h));
    return ParsedHeader{std::move(params), idx + 1};
  } catch (const std::invalid_argument& e) {
    throw malformed_error(std::string("invalid key parameters: ") + e.what());
  } catch (const std::overflow_error& e) {
    throw malformed_error(std::string("invalid key parameters: ") + e.what());
  }
}

size_t find_section(const std::vector<std::string>& lines, size_t idx, const char* marker) {
  while (idx < lines.size() && lines[idx].empty()) ++idx;
  if (idx >= lines.size() || lines[idx] != marker)
    throw malformed_error(std::string("missing '") + marker + "' section");
  return idx + 1;
}

}  // namespace

std::string write_public(const PublicKey& pk) {
  require_serializable(pk.params);
  std::string out = header_line(pk.params) + "\nh: " + pk.params.h.str() + "\nP:\n";
  for (const QuadForm& f : pk.forms) out += f.str() + "\n";
  return out;
}

std::string write_private(const PrivateKey& sk) {
  require_serializable(sk.params);
  return header_line(sk.params) + "\nh: " + sk.params.h.str() + "\nT:\n" + sk.T.str();
}

std::string write_recovered(const Params& params, const RecoveredKey& rec) {
  return "# recovered-by: " + to_string(rec.method) + "\n" +
         write_private(PrivateKey{params, rec.T});
}

std::string write_ciphertext(const Ciphertext& z) {
  std::string out;
  for (const auto& c : z.coeffs) {
    if (!out.empty()) out += ' ';
    out += c.str();
  }
  return out + "\n";
}

PublicKey read_public(std::string_view text) {
  const auto lines = content_lines(text);
  auto [params, idx] = parse_header(lines);
  idx = find_section(lines, idx, "P:");
  const int dim = params.dim();
  if (lines.size() - idx < static_cast<size_t>(dim))
    throw malformed_error("public key is truncated");
  if (lines.size() - idx > static_cast<size_t>(dim))
    throw malformed_error("trailing data after the public forms");
  std::vector<QuadForm> forms;
  forms.reserve(dim);
  for (int i = 0; i < dim; ++i)
    forms.push_back(QuadForm::parse(params.ctx, params.k, lines[idx + i]));
  return PublicKey{std::move(params), std::move(forms)};
}

PrivateKey read_private(std::string_view text) {
  const auto lines = content_lines(text);
  auto [params, idx] = parse_header(lines);
  idx = find_section(lines, idx, "T:");
  const int dim = params.dim();
  if (lines.size() - idx < static_cast<size_t>(dim))
    throw malformed_error("private key is truncated");
  if (lines.size() - idx > static_cast<size_t>(dim))
    throw malformed_error("trailing data after the matrix rows");
  std::string block;
  for (int i = 0; i < dim; ++i) block += lines[idx + i] + "\n";
  Matrix T = Matrix::parse(params.ctx, dim, dim, block);
  if (!T.invertible()) throw malformed_error("private transformation matrix is singular");
  return PrivateKey{std::move(params), std::move(T)};
}

Ciphertext read_ciphertext(const Params& params, std::string_view text) {
  const auto lines = content_lines(text);
  std::string joined;
  for (const auto& l : lines)
    if (!l.empty()) joined += l + " ";
  std::istringstream in(joined);
  std::vector<FieldElement> coeffs;
  std::string tok;
  while (in >> tok) {
    try {
      coeffs.push_back(params.ctx->parse(tok));
    } catch (const std::invalid_argument& e) {
      throw malformed_error(std::string("bad ciphertext element: ") + e.what());
    }
  }
  if (static_cast<int>(coeffs.size()) != params.dim())
    throw malformed_error("ciphertext must carry exactly 2k+1 elements");
  return Ciphertext{std::move(coeffs)};
}

}  // namespace hip
