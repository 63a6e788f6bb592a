#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dbs/verify.hpp"

namespace py = pybind11;
using namespace dbs;

namespace {

// The core hands out shared_ptr<const ShuffleSetup>, which pybind11 cannot hold directly.
struct SetupHandle {
  SetupPtr ptr;
};

// Rationals cross the boundary as strings; the Python layer wraps them in Fraction.
std::vector<Rational> to_rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Filter make_filter(const std::string& name) {
  if (name == "all") return Filter::all();
  if (name == "positive") return Filter::positive();
  if (name == "distinguished") return Filter::distinguished();
  throw InvalidInput("filter must be all, positive or distinguished");
}

py::dict profile_dict(const Subexpression& g) {
  CellProfile p = profile(g);
  py::dict d;
  d["mask"] = g.to_string();
  d["J"] = p.J;
  d["I"] = p.I;
  d["K"] = p.K;
  d["dim"] = p.dim;
  d["positive"] = p.is_positive;
  d["distinguished"] = p.is_distinguished;
  d["w"] = reduced_word(p.w);
  return d;
}

py::dict monomial_dict(const Subexpression& g, int samples, std::uint64_t seed) {
  MonomialReport rep = verify_monomial(g, samples, seed);
  py::dict d;
  d["gamma_mask"] = rep.mask;
  d["index_set"] = rep.M.indices;
  d["M"] = rep.M.entries;
  d["L"] = rep.L.entries;
  d["verified_samples"] = static_cast<int>(rep.samples.size()) - rep.exact_failures;
  d["failures"] = rep.exact_failures;
  d["resampled"] = rep.resampled;
  if (g.setup().v_word().empty()) {
    py::list mm;
    for (const auto& x : closed_form_compare(g))
      mm.append(py::make_tuple(x.j, x.k, x.closed_form, x.inverse_entry));
    d["closed_form_mismatches"] = mm;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cells of double Bott-Samelson varieties";

  // Translators run newest first, so the base class goes in first.
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<LimitExceeded>(m, "LimitExceeded", base.ptr());
  py::register_exception<FactorizationFailed>(m, "FactorizationFailed", base.ptr());

  py::class_<SetupHandle>(m, "Setup")
      .def(py::init([](py::object cartan, std::vector<int> u, std::vector<int> v, std::vector<int> eps) {
             SetupSpec spec;
             if (py::isinstance<py::str>(cartan))
               spec.cartan_type = cartan.cast<std::string>();
             else
               spec.cartan_matrix = cartan.cast<std::vector<std::vector<int>>>();
             spec.u = std::move(u);
             spec.v = std::move(v);
             spec.eps = std::move(eps);
             return SetupHandle{build_setup(spec)};
           }),
           py::arg("cartan"), py::arg("u"), py::arg("v"), py::arg("eps"))
      .def_property_readonly("n", [](const SetupHandle& s) { return s.ptr->n(); })
      .def_property_readonly("u", [](const SetupHandle& s) { return s.ptr->u_word(); })
      .def_property_readonly("v", [](const SetupHandle& s) { return s.ptr->v_word(); })
      .def_property_readonly("eps", [](const SetupHandle& s) { return s.ptr->eps(); })
      .def_property_readonly("sigma_word", [](const SetupHandle& s) { return sigma_word(*s.ptr); });

  m.def("profile", [](const SetupHandle& h, const std::string& mask) {
    return profile_dict(Subexpression::from_string(h.ptr, mask));
  });
  m.def("enumerate", [](const SetupHandle& h, const std::string& filter) {
    py::list out;
    enumerate(h.ptr, make_filter(filter), [&](const Subexpression& g) { out.append(profile_dict(g)); });
    return out;
  }, py::arg("setup"), py::arg("filter") = "all");
  m.def("psi", [](const SetupHandle& h, const std::string& mask) {
    PsiFamily f = psi_family(Subexpression::from_string(h.ptr, mask));
    std::vector<std::string> out;
    for (const auto& p : f.psi) out.push_back(to_string(p));
    return out;
  });
  m.def("cell_test", [](const SetupHandle& h, const std::string& mask, const std::vector<std::string>& point) {
    auto g = Subexpression::from_string(h.ptr, mask);
    return cell_test_psi(psi_family(g), to_rationals(point));
  });
  m.def("factorize_to_z", [](const SetupHandle& h, const std::string& mask, const std::vector<std::string>& xi) {
    return to_strings(factorize_to_z(Subexpression::from_string(h.ptr, mask), to_rationals(xi)));
  });
  m.def("monomial", [](const SetupHandle& h, const std::string& mask, int samples, std::uint64_t seed) {
    return monomial_dict(Subexpression::from_string(h.ptr, mask), samples, seed);
  }, py::arg("setup"), py::arg("mask"), py::arg("samples") = 10, py::arg("seed") = 20240601);
  m.def("convert_wy", [](const SetupHandle& h, const std::string& mask) {
    WyRecord w = wy_convert(Subexpression::from_string(h.ptr, mask));
    py::dict d;
    d["J0"] = w.J0;
    d["Jplus"] = w.Jplus;
    d["Jminus"] = w.Jminus;
    d["double_distinguished"] = w.double_distinguished;
    d["positive"] = w.positive;
    return d;
  });
  m.def("run_criterion", [](int id, std::uint64_t seed) {
    VerifyOptions opts;
    opts.seed = seed;
    CriterionResult r = run_criterion(id, opts);
    py::dict d;
    d["id"] = r.id;
    d["title"] = r.title;
    d["passed"] = r.passed;
    d["known_issue"] = r.known_issue;
    d["detail"] = r.detail;
    d["seconds"] = r.seconds;
    return d;
  }, py::arg("id"), py::arg("seed") = 20240601);
  m.attr("criterion_count") = kCriterionCount;
}
