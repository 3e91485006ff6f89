#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtpieri/identities.hpp"
#include "qtpieri/render.hpp"

namespace py = pybind11;
using namespace qtpieri;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::tuple to_tuple(const Partition& p) { return py::cast(p.parts()); }

PieriKind kind_arg(const std::string& name) {
  const auto kind = parse_kind(name);
  if (!kind) throw py::value_error("unknown kind '" + name + "'");
  return *kind;
}

SymFunc expansion(const std::string& op, const std::vector<int>& lambda, const std::vector<int>& mu, int r,
                  std::optional<int> cap, bool q_zero) {
  const Partition l = to_partition(lambda);
  const Partition m = to_partition(mu);
  int degree = l.size();
  if (op == "skew") {
    degree -= m.size();
  } else if (op == "g") {
    degree = r;
  }
  const int c = cap.value_or(degree);
  SymFunc f(Basis::kM, c);
  if (op == "P") {
    f = macdonald_P(l, c);
  } else if (op == "Q") {
    f = macdonald_Q(l, c);
  } else if (op == "skew") {
    f = skew_Q(l, m, c);
  } else if (op == "g") {
    f = g_row(r, c);
  } else {
    throw py::value_error("op must be one of P, Q, skew, g");
  }
  if (q_zero) f = substitute(f, {{kQ, RatFun(0)}});
  return f;
}

py::dict report_dict(const CheckReport& r) {
  py::dict params;
  for (const auto& p : r.params) {
    std::visit(
        [&](const auto& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, Partition>) {
            params[py::str(p.name)] = to_tuple(v);
          } else {
            params[py::str(p.name)] = v;
          }
        },
        p.value);
  }
  py::dict d;
  d["identity"] = std::string(identity_name(r.id));
  d["params"] = params;
  d["status"] = r.pass ? "pass" : "fail";
  if (r.witness) {
    py::dict w;
    w["part"] = r.witness->part;
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    d["witness"] = w;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(qtpieri, m) {
  m.doc() = "Exact Pieri coefficients for Hall-Littlewood and Macdonald polynomials";

  py::class_<RatFun>(m, "RatFun")
      .def(py::init<long>(), py::arg("constant") = 0)
      .def("__str__", [](const RatFun& r) { return to_text(r); })
      .def("__repr__", [](const RatFun& r) { return "RatFun('" + to_text(r) + "')"; })
      .def("latex", [](const RatFun& r) { return to_latex(r); })
      .def("is_zero", &RatFun::is_zero)
      .def("at_q_zero", [](const RatFun& r) { return substitute(r, {{kQ, RatFun(0)}}); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self + long())
      .def(py::self - long())
      .def(py::self * long())
      .def(py::self / long())
      .def(long() + py::self)
      .def(long() - py::self)
      .def(long() * py::self)
      .def(long() / py::self)
      .def(py::self == long())
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", [](const RatFun& r, int k) { return r.pow(k); });

  py::implicitly_convertible<long, RatFun>();

  m.attr("q") = RatFun::var(kQ);
  m.attr("t") = RatFun::var(kT);
  m.attr("a") = RatFun::var(kA);
  m.attr("b") = RatFun::var(kB);
  m.attr("c") = RatFun::var(kC);

  m.attr("kinds") = py::make_tuple("vs", "hs", "sk", "hat_sk", "ks");
  py::list names;
  for (IdentityId id : kAllIdentities) names.append(std::string(identity_name(id)));
  m.attr("identities") = py::tuple(names);

  m.def(
      "pieri_coeff",
      [](const std::string& kind, const std::vector<int>& lambda, const std::vector<int>& mu, bool q_zero) {
        return pieri_coeff(kind_arg(kind), to_partition(lambda), to_partition(mu), q_zero);
      },
      py::arg("kind"), py::arg("lam"), py::arg("mu"), py::arg("q_zero") = false,
      "Q_{lam/mu} at the kind's alphabet, signed for vs.");

  m.def(
      "factored",
      [](const std::string& kind, const std::vector<int>& lambda, const std::vector<int>& mu) {
        const PieriKind k = kind_arg(kind);
        if (k == PieriKind::kHatSk) return factored_hat_sk(to_partition(lambda), to_partition(mu));
        if (k == PieriKind::kKs) throw py::value_error("ks has no product formula");
        return factored_hl(k, to_partition(lambda), to_partition(mu));
      },
      py::arg("kind"), py::arg("lam"), py::arg("mu"),
      "Product formula: one-parameter for vs, hs, sk; (q,t) for hat_sk.");

  m.def(
      "expand",
      [](const std::string& op, const std::vector<int>& lambda, const std::vector<int>& mu, int r,
         std::optional<int> cap, bool q_zero) {
        const SymFunc f = expansion(op, lambda, mu, r, cap, q_zero);
        py::dict out;
        for (const auto& [nu, c] : f.coeffs()) out[to_tuple(nu)] = c;
        return out;
      },
      py::arg("op"), py::arg("lam") = std::vector<int>{}, py::arg("mu") = std::vector<int>{}, py::arg("r") = 1,
      py::arg("cap") = py::none(), py::arg("q_zero") = false,
      "Monomial expansion of P, Q, skew Q or g_r as {partition: coefficient}.");

  m.def(
      "run_suite",
      [](std::optional<std::vector<std::string>> selection, int max_size, int cap, int max_r, int jobs) {
        SuiteOptions options;
        options.max_size = max_size;
        options.cap = cap;
        options.max_r = max_r;
        options.jobs = jobs;
        if (selection) {
          for (const auto& name : *selection) {
            const auto id = parse_identity(name);
            if (!id) throw py::value_error("unknown identity '" + name + "'");
            options.selection.push_back(*id);
          }
        } else {
          options.selection.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
        }
        std::vector<CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_suite(options);
        }
        py::list out;
        for (const auto& r : reports) out.append(report_dict(r));
        return out;
      },
      py::arg("selection") = py::none(), py::arg("max_size") = 3, py::arg("cap") = 5, py::arg("max_r") = 3,
      py::arg("jobs") = 1, "Run identity checks; one dict per parameter tuple, in a fixed order.");
}
