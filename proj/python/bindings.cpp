// hipbreak: Python bindings for the HIP scheme implementation and its
// key-recovery attacks.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "hip/attack.hpp"
#include "hip/demo_fixture.hpp"
#include "hip/errors.hpp"
#include "hip/keyfile.hpp"
#include "hip/scheme.hpp"

namespace py = pybind11;
using namespace hip;

namespace {

// FieldCtxPtr is a shared_ptr-to-const; wrap it so pybind11 sees a plain
// copyable value type.
struct PyField {
  FieldCtxPtr ctx;
};

IndexPair to_pair(const std::pair<int, int>& p) { return IndexPair{p.first, p.second}; }
std::pair<int, int> from_pair(const IndexPair& p) { return {p.i, p.j}; }

Matrix matrix_from_rows(const PyField& f, const std::vector<std::vector<std::uint64_t>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows[0].size());
  std::vector<FieldElement> entries;
  entries.reserve(static_cast<size_t>(r) * c);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw std::invalid_argument("rows must all have the same length");
    for (auto v : row) entries.push_back(f.ctx->from_int(v));
  }
  return Matrix(f.ctx, r, c, std::move(entries));
}

}  // namespace

PYBIND11_MODULE(hipbreak, mod) {
  mod.doc() =
      "Hidden Irreducible Polynomials scheme over F_q: exact finite-field and "
      "polynomial arithmetic, the encryption protocol, and the two key-recovery "
      "attacks that break it";

  py::register_exception<malformed_error>(mod, "MalformedError", PyExc_ValueError);

  py::class_<Rng>(mod, "Rng", "seeded deterministic randomness source")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("below", &Rng::below, py::arg("bound"));

  py::class_<PyField>(mod, "Field")
      .def_property_readonly("p", [](const PyField& f) { return f.ctx->prime(); })
      .def_property_readonly("m", [](const PyField& f) { return f.ctx->ext_degree(); })
      .def_property_readonly("order", [](const PyField& f) { return f.ctx->order(); })
      .def_property_readonly("modulus", [](const PyField& f) { return f.ctx->modulus(); })
      .def("zero", [](const PyField& f) { return f.ctx->zero(); })
      .def("one", [](const PyField& f) { return f.ctx->one(); })
      .def("from_int", [](const PyField& f, std::uint64_t v) { return f.ctx->from_int(v); })
      .def("element",
           [](const PyField& f, const std::vector<std::uint32_t>& c) { return f.ctx->element(c); })
      .def("parse", [](const PyField& f, const std::string& s) { return f.ctx->parse(s); })
      .def("elements", [](const PyField& f) { return f.ctx->elements(); })
      .def("__eq__", [](const PyField& a, const PyField& b) { return *a.ctx == *b.ctx; })
      .def("__repr__", [](const PyField& f) {
        return "Field(p=" + std::to_string(f.ctx->prime()) +
               ", m=" + std::to_string(f.ctx->ext_degree()) + ")";
      });

  mod.def(
      "make_field",
      [](std::uint32_t p, int m, const std::optional<std::vector<std::uint32_t>>& modulus) {
        return PyField{modulus ? make_field(p, m, *modulus) : make_field(p, m)};
      },
      py::arg("p"), py::arg("m") = 1, py::arg("modulus") = py::none());

  py::class_<FieldElement>(mod, "FieldElement")
      .def_property_readonly("coeffs", &FieldElement::coeffs)
      .def_property_readonly("index", &FieldElement::index)
      .def("is_zero", &FieldElement::is_zero)
      .def("is_one", &FieldElement::is_one)
      .def("inv", &FieldElement::inv)
      .def("pow", &FieldElement::pow, py::arg("e"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &FieldElement::str)
      .def("__repr__", [](const FieldElement& e) { return "FieldElement(" + e.str() + ")"; });

  py::class_<Poly>(mod, "Poly")
      .def(py::init([](const PyField& f, const std::vector<std::uint64_t>& coeffs) {
             return Poly::from_ints(f.ctx, coeffs);
           }),
           py::arg("field"), py::arg("coeffs"),
           "dense little-endian integer coefficients, reduced into the field")
      .def_static(
          "parse", [](const PyField& f, const std::string& s) { return Poly::parse(f.ctx, s); },
          py::arg("field"), py::arg("text"))
      .def_property_readonly("degree", &Poly::degree)
      .def_property_readonly("coeffs", [](const Poly& p) { return p.coeffs(); })
      .def("coeff", &Poly::coeff, py::arg("i"))
      .def("is_zero", &Poly::is_zero)
      .def("is_monic", &Poly::is_monic)
      .def("monic", &Poly::monic)
      .def("derivative", &Poly::derivative)
      .def("divmod", &Poly::divmod, py::arg("divisor"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self % py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &Poly::str)
      .def("pretty", &Poly::pretty)
      .def("__repr__", [](const Poly& p) { return "Poly(" + p.str() + ")"; });

  mod.def("gcd", &gcd, py::arg("a"), py::arg("b"));
  mod.def("powmod", &powmod, py::arg("a"), py::arg("e"), py::arg("mod"));
  mod.def("is_irreducible", &is_irreducible, py::arg("f"));
  mod.def(
      "random_irreducible",
      [](int d, const PyField& f, Rng& rng) { return random_irreducible(d, f.ctx, rng); },
      py::arg("degree"), py::arg("field"), py::arg("rng"));
  mod.def(
      "factor_two_irreducibles",
      [](const Poly& r, int k, std::optional<std::uint64_t> seed) {
        FactorPair fp = seed ? [&] {
          Rng rng(*seed);
          return factor_two_irreducibles(r, k, rng);
        }()
                             : factor_two_irreducibles(r, k);
        return py::make_tuple(fp.p, fp.q, fp.scale);
      },
      py::arg("r"), py::arg("k"), py::arg("seed") = py::none(),
      "returns (p, q, scale) with p <= q monic and scale*p*q == r");

  py::class_<Matrix>(mod, "Matrix")
      .def(py::init([](const PyField& f, int rows, int cols) {
             return Matrix(f.ctx, rows, cols);
           }),
           py::arg("field"), py::arg("rows"), py::arg("cols"))
      .def_static("from_rows", &matrix_from_rows, py::arg("field"), py::arg("rows"))
      .def_static(
          "identity", [](const PyField& f, int n) { return Matrix::identity(f.ctx, n); },
          py::arg("field"), py::arg("n"))
      .def_property_readonly("rows", &Matrix::rows)
      .def_property_readonly("cols", &Matrix::cols)
      .def("at", &Matrix::at, py::arg("r"), py::arg("c"))
      .def("set", &Matrix::set, py::arg("r"), py::arg("c"), py::arg("v"))
      .def("apply", &Matrix::apply, py::arg("v"))
      .def("transpose", &Matrix::transpose)
      .def("inverse", &Matrix::inverse)
      .def("invertible", &Matrix::invertible)
      .def("rank", &Matrix::rank)
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &Matrix::str)
      .def("__repr__", [](const Matrix& m) {
        return "Matrix(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")";
      });

  mod.def("solve_right", &solve_right, py::arg("A"), py::arg("B"),
          "the unique X with X*A = B");
  mod.def(
      "random_invertible",
      [](int dim, const PyField& f, Rng& rng) { return random_invertible(dim, f.ctx, rng); },
      py::arg("dim"), py::arg("field"), py::arg("rng"));

  mod.def(
      "index_set",
      [](int m, int k) {
        std::vector<std::pair<int, int>> out;
        for (const IndexPair& p : index_set(m, k)) out.push_back(from_pair(p));
        return out;
      },
      py::arg("m"), py::arg("k"),
      "the monomial group I_m: pairs (i, j) with i+j = m+k+2");
  mod.def(
      "symbolic_product",
      [](int k) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& g : symbolic_product(k).groups) {
          std::vector<std::pair<int, int>> grp;
          for (const IndexPair& p : g) grp.push_back(from_pair(p));
          out.push_back(std::move(grp));
        }
        return out;
      },
      py::arg("k"));

  py::class_<QuadForm>(mod, "QuadForm")
      .def(py::init([](const PyField& f, int k) { return QuadForm(f.ctx, k); }),
           py::arg("field"), py::arg("k"))
      .def_property_readonly("k", &QuadForm::k)
      .def_property_readonly("nvars", &QuadForm::nvars)
      .def("coeff",
           [](const QuadForm& f, const std::pair<int, int>& p) { return f.coeff(to_pair(p)); })
      .def("set_coeff", [](QuadForm& f, const std::pair<int, int>& p,
                           const FieldElement& v) { f.set_coeff(to_pair(p), v); })
      .def("terms",
           [](const QuadForm& f) {
             std::map<std::pair<int, int>, FieldElement> out;
             for (const auto& [pair, c] : f.terms()) out.emplace(from_pair(pair), c);
             return out;
           })
      .def("eval",
           [](const QuadForm& f, const std::vector<FieldElement>& v) {
             return f.eval(std::span<const FieldElement>(v.data(), v.size()));
           })
      .def_static(
          "parse",
          [](const PyField& f, int k, const std::string& s) {
            return QuadForm::parse(f.ctx, k, s);
          },
          py::arg("field"), py::arg("k"), py::arg("text"))
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &QuadForm::str)
      .def("pretty", &QuadForm::pretty)
      .def("__repr__", [](const QuadForm& f) { return "QuadForm(" + f.str() + ")"; });

  mod.def("compose_public", &compose_public, py::arg("T"), py::arg("k"));

  py::class_<Params>(mod, "Params")
      .def_readonly("p", &Params::p)
      .def_readonly("m", &Params::m)
      .def_readonly("n", &Params::n)
      .def_readonly("k", &Params::k)
      .def_property_readonly("field", [](const Params& pr) { return PyField{pr.ctx}; })
      .def_readonly("h", &Params::h)
      .def_property_readonly("dim", &Params::dim)
      .def("__repr__", [](const Params& pr) {
        return "Params(p=" + std::to_string(pr.p) + ", m=" + std::to_string(pr.m) +
               ", n=" + std::to_string(pr.n) + ", k=" + std::to_string(pr.k) + ")";
      });

  mod.def(
      "validate_params",
      [](std::uint32_t p, int m, int n, int k) { return validate_params(p, m, n, k); },
      py::arg("p"), py::arg("m"), py::arg("n"), py::arg("k"));

  py::class_<PublicKey>(mod, "PublicKey")
      .def_readonly("params", &PublicKey::params)
      .def_readonly("forms", &PublicKey::forms);
  py::class_<PrivateKey>(mod, "PrivateKey")
      .def(py::init<Params, Matrix>(), py::arg("params"), py::arg("T"))
      .def_readonly("params", &PrivateKey::params)
      .def_readonly("T", &PrivateKey::T);
  py::class_<KeyPair>(mod, "KeyPair")
      .def_readonly("pub", &KeyPair::pub)
      .def_readonly("priv", &KeyPair::priv);
  py::class_<Ciphertext>(mod, "Ciphertext")
      .def_readonly("coeffs", &Ciphertext::coeffs)
      .def("__str__", [](const Ciphertext& z) { return write_ciphertext(z); });

  mod.def("keygen", &keygen, py::arg("params"), py::arg("rng"));
  mod.def("key_pair_from_matrix", &key_pair_from_matrix, py::arg("params"), py::arg("T"));
  mod.def("encrypt", &encrypt, py::arg("pub"), py::arg("p"), py::arg("q"));
  mod.def(
      "decrypt",
      [](const PrivateKey& sk, const Ciphertext& z) {
        Decrypted d = decrypt(sk, z);
        return py::make_tuple(d.p, d.q, d.scale);
      },
      py::arg("priv"), py::arg("ct"), "returns (p, q, scale), p <= q monic");

  py::enum_<AttackMethod>(mod, "AttackMethod")
      .value("readoff", AttackMethod::readoff)
      .value("linear", AttackMethod::linear);

  py::class_<ConsistencyRecord>(mod, "ConsistencyRecord")
      .def_readonly("form", &ConsistencyRecord::form)
      .def_readonly("group", &ConsistencyRecord::group)
      .def_readonly("agreed", &ConsistencyRecord::agreed);

  py::class_<RecoveredKey>(mod, "RecoveredKey")
      .def_readonly("T", &RecoveredKey::T)
      .def_readonly("method", &RecoveredKey::method)
      .def_readonly("report", &RecoveredKey::report)
      .def("consistent", &RecoveredKey::consistent)
      .def("flagged", &RecoveredKey::flagged);

  py::class_<BreakCheck>(mod, "BreakCheck")
      .def_readonly("forms_match", &BreakCheck::forms_match)
      .def_readonly("form_mismatches", &BreakCheck::form_mismatches)
      .def_readonly("roundtrip_ok", &BreakCheck::roundtrip_ok)
      .def_readonly("roundtrip_trials", &BreakCheck::roundtrip_trials)
      .def_readonly("roundtrip_failures", &BreakCheck::roundtrip_failures)
      .def("ok", &BreakCheck::ok);

  mod.def("attack_readoff", &attack_readoff, py::arg("pub"));
  mod.def("attack_linear", &attack_linear, py::arg("pub"));
  mod.def(
      "verify_break",
      [](const PublicKey& pk, const Matrix& T, int trials) {
        return verify_break(pk, T, trials);
      },
      py::arg("pub"), py::arg("T"), py::arg("trials") = 10);

  mod.def("write_public", &write_public, py::arg("pub"));
  mod.def("write_private", &write_private, py::arg("priv"));
  mod.def("write_recovered", &write_recovered, py::arg("params"), py::arg("rec"));
  mod.def("write_ciphertext", &write_ciphertext, py::arg("ct"));
  mod.def("read_public", [](const std::string& s) { return read_public(s); }, py::arg("text"));
  mod.def("read_private", [](const std::string& s) { return read_private(s); }, py::arg("text"));
  mod.def(
      "read_ciphertext",
      [](const Params& pr, const std::string& s) { return read_ciphertext(pr, s); },
      py::arg("params"), py::arg("text"));

  auto demo = mod.def_submodule("demo", "the built-in q=2, k=7 worked example");
  demo.def("params", &hip::demo::params);
  demo.def("matrix", &hip::demo::matrix);
  demo.def("golden_row14", [] {
    return std::vector<int>(hip::demo::golden_row14().begin(), hip::demo::golden_row14().end());
  });
  demo.def("sample_message_p", &hip::demo::sample_message_p);
  demo.def("sample_message_q", &hip::demo::sample_message_q);
}
