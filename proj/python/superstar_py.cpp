#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "superstar/cli.hpp"
#include "superstar/errors.hpp"
#include "superstar/expression.hpp"
#include "superstar/formal_geometry.hpp"
#include "superstar/poisson.hpp"
#include "superstar/star_product.hpp"
#include "superstar/symplectic_linear.hpp"
#include "superstar/weyl_clifford.hpp"

namespace py = pybind11;

namespace superstar {
namespace {

// Python-side handle; the C++ signature is shared and immutable.
struct PySignature {
  SignaturePtr ptr;
};

PySignature make_py_signature(int n, int a, int b, std::optional<std::vector<int>> eps, int aux) {
  if (!eps) return {make_signature(Signature::standard(n, a, b, aux))};
  Signature sig = Signature::with_epsilons(n, *eps, aux);
  if (sig.a != a || sig.b != b) throw MathError("eps layout does not match a and b");
  return {make_signature(std::move(sig))};
}

std::vector<Variable> parse_letters(const SignaturePtr& sig, const std::string& text) {
  std::vector<Variable> letters;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '*', ' ');
  std::istringstream in(normalized);
  std::string token;
  while (in >> token) {
    const auto expr = parse_syntax(token);
    const auto* var = std::get_if<Expression::Var>(&expr.node);
    if (var == nullptr || var->var.kind == VarKind::kAux || !variable_in_range(*sig, var->var)) {
      throw ParseError("unknown generator " + token, 0);
    }
    letters.push_back(var->var);
  }
  return letters;
}

}  // namespace
}  // namespace superstar

PYBIND11_MODULE(_superstar, m) {
  using namespace superstar;
  m.doc() = "Exact super-Moyal star products and Poisson brackets on formal super-disks";

  py::register_exception<MathError>(m, "MathError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PySignature>(m, "Signature")
      .def(py::init(&make_py_signature), py::arg("n"), py::arg("a") = 0, py::arg("b") = 0,
           py::arg("eps") = py::none(), py::arg("aux") = 0)
      .def_property_readonly("n", [](const PySignature& s) { return s.ptr->n; })
      .def_property_readonly("a", [](const PySignature& s) { return s.ptr->a; })
      .def_property_readonly("b", [](const PySignature& s) { return s.ptr->b; })
      .def_property_readonly("eps", [](const PySignature& s) { return s.ptr->epsilons; })
      .def_property_readonly("aux", [](const PySignature& s) { return s.ptr->aux; })
      .def("parse", [](const PySignature& s, const std::string& text) {
        return parse_expression(text, s.ptr);
      })
      .def("__eq__", [](const PySignature& x, const PySignature& y) { return *x.ptr == *y.ptr; })
      .def("__repr__", [](const PySignature& s) {
        std::string eps;
        for (int e : s.ptr->epsilons) eps += e > 0 ? '+' : '-';
        return "Signature(" + std::to_string(2 * s.ptr->n) + "|" + std::to_string(s.ptr->a) + "," +
               std::to_string(s.ptr->b) + ", eps=" + eps + ")";
      });

  py::class_<SuperPolynomial>(m, "SuperPolynomial")
      .def_property_readonly("signature",
                             [](const SuperPolynomial& f) { return PySignature{f.signature()}; })
      .def("is_zero", &SuperPolynomial::is_zero)
      .def_property_readonly("parity", &SuperPolynomial::parity)
      .def_property_readonly("max_hbar", &SuperPolynomial::max_hbar)
      .def("hbar_coefficient", &SuperPolynomial::hbar_coefficient, py::arg("k"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const SuperPolynomial& f) { return format_expression(f); })
      .def("__repr__", [](const SuperPolynomial& f) {
        return "SuperPolynomial('" + format_expression(f) + "')";
      });

  m.def("parse", [](const std::string& text, const PySignature& s) {
    return parse_expression(text, s.ptr);
  }, py::arg("text"), py::arg("signature"));
  m.def("format", [](const SuperPolynomial& f) { return format_expression(f); });

  m.def("star", [](const SuperPolynomial& f, const SuperPolynomial& g) {
    return star(StarContext(f.signature()), f, g);
  });
  m.def("commutator", [](const SuperPolynomial& f, const SuperPolynomial& g) {
    return star_commutator(StarContext(f.signature()), f, g);
  });
  m.def("bracket", [](const SuperPolynomial& f, const SuperPolynomial& g) {
    return poisson_bracket(PoissonContext(f.signature()), f, g);
  });
  m.def("bd1_defect", [](const SuperPolynomial& f, const SuperPolynomial& g) {
    return bd1_defect(StarContext(f.signature()), f, g);
  });
  m.def("classical_limit", &classical_limit);

  m.def("normal_order",
        [](const PySignature& s, const std::string& word, bool star_basis) {
          const auto nf = normal_order(s.ptr, GeneratorWord{parse_letters(s.ptr, word), 0, 1});
          return star_basis ? to_star_basis(nf) : nf.pbw;
        },
        py::arg("signature"), py::arg("word"), py::arg("star_basis") = false);
  m.def("iso_check",
        [](const PySignature& s, std::size_t max_length) {
          const auto report = iso_check(StarContext(s.ptr), all_words(*s.ptr, max_length));
          std::vector<std::string> bad;
          for (const auto& mismatch : report.mismatches) bad.push_back(to_string(mismatch.word));
          return py::make_tuple(report.checked, bad);
        },
        py::arg("signature"), py::arg("max_length"));

  m.def("is_sp_member",
        [](const PySignature& s, const std::string& matrix_json, bool lie) {
          const auto matrix = cli::parse_matrix_json(matrix_json, s.ptr);
          PoissonContext ctx(s.ptr);
          return lie ? is_sp_lie_member(ctx, matrix) : is_sp_member(ctx, matrix);
        },
        py::arg("signature"), py::arg("matrix_json"), py::arg("lie") = false);

  m.def("taylor_jet",
        [](const SuperPolynomial& f, std::optional<int> order) {
          return taylor_jet(f, order.value_or(f.max_degree())).poly;
        },
        py::arg("f"), py::arg("order") = py::none());
  m.def("jet_flatness_defect",
        [](const SuperPolynomial& f, std::optional<int> order) {
          std::vector<SuperPolynomial> out;
          for (auto& d : jet_flatness_defect(taylor_jet(f, order.value_or(f.max_degree())))) {
            out.push_back(std::move(d.poly));
          }
          return out;
        },
        py::arg("f"), py::arg("order") = py::none());

  m.def("run_command", [](const std::vector<std::string>& args) {
    const auto r = cli::run_command(args);
    return py::make_tuple(r.exit_code, r.out, r.err);
  });
}
