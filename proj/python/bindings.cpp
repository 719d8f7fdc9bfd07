#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "etaforms/bqf.hpp"
#include "etaforms/cli.hpp"
#include "etaforms/formulas.hpp"
#include "etaforms/hecke.hpp"
#include "etaforms/verify.hpp"

namespace py = pybind11;
using namespace etaforms;

namespace {

// Arbitrary-size integers cross the boundary as Python ints via their decimal text.
py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list integer_coeffs(const QSeries& s) {
  py::list out;
  for (int i = 0; i <= s.order(); ++i) out.append(to_py(s[i].as_integer()));
  return out;
}

py::tuple form_tuple(const Form& F) { return py::make_tuple(F.a, F.b, F.c); }

EtaQuotientSpec spec_from(int j, const std::vector<std::pair<int, int>>& factors) {
  std::vector<EtaFactor> f;
  for (auto [s, r] : factors) f.push_back({s, r});
  auto spec = EtaQuotientSpec::merged(j, f);
  spec.validate();
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-series for eta-quotients and theta series of binary quadratic forms";

  m.def("eta_quotient",
        [](int j, const std::vector<std::pair<int, int>>& factors, int order) {
          return to_py(eta_quotient_coefficients(spec_from(j, factors), order));
        },
        py::arg("j"), py::arg("factors"), py::arg("order"),
        "Coefficients of q^j prod E(q^s)^r for factors [(s, r), ...] up to q^order.");
  m.def("theta_form", [](i64 a, i64 b, i64 c, int order) { return theta_form_counts({a, b, c}, order); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("order"));
  m.def("theta_f", [](int u, int v, int order) { return integer_coeffs(theta_f(u, v, order)); }, py::arg("u"),
        py::arg("v"), py::arg("order"));
  m.def("hecke_theta",
        [](i64 a, i64 b, i64 c, i64 p, int order) {
          const Form F{a, b, c};
          return integer_coeffs(apply_Tp(theta_form(F, order), F.discriminant(), p));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p"), py::arg("order"),
        "T_p applied to the theta series of (a,b,c), to order floor(order/p).");

  m.def("class_group", [](i64 d) {
    const auto G = enumerate_class_group(d);
    py::list classes;
    for (int i = 0; i < G.size(); ++i) classes.append(py::make_tuple(form_tuple(G.classes[i]), G.element_order(i)));
    py::dict out;
    out["discriminant"] = d;
    out["structure"] = G.structure_string();
    out["classes"] = classes;
    return out;
  });
  m.def("classify", [](i64 d, i64 p) {
    const auto c = classify_prime(d, p);
    py::dict out;
    out["verdict"] = to_string(c.verdict);
    out["form"] = c.form ? py::object(form_tuple(*c.form)) : py::none();
    out["set"] = c.set_label;
    out["method"] = c.method;
    return out;
  });

  m.def("levels", &formula_levels);
  m.def("a47", [](i64 n) { return to_py(a47(n)); });
  m.def("a71", [](i64 n) { return to_py(a71(n)); });
  m.def("coefficient", [](int level, i64 n) { return cli::formula_coefficient(level, n).to_string(); },
        "Closed-form coefficient as text; level 1024 values live in Q(sqrt2).");
  m.def("oracle_coefficient", [](int level, i64 n) { return cli::oracle_coefficient(level, n).to_string(); });

  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& suite, int order, int jobs) {
          std::vector<std::pair<std::string, bool>> out;
          py::gil_scoped_release release;
          for (const auto& r : run_suite(suite, order, jobs)) out.emplace_back(r.line(), r.pass);
          return out;
        },
        py::arg("suite"), py::arg("order") = 0, py::arg("jobs") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

  // Library errors map onto the matching Python exceptions: invalid_argument and
  // domain_error become ValueError, out_of_range becomes IndexError (pybind11 defaults).
}
