#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitlab/heights.hpp"
#include "orbitlab/numtheory.hpp"
#include "orbitlab/report.hpp"
#include "orbitlab/verify.hpp"

namespace py = pybind11;
using namespace orbitlab;

namespace {

std::string rat(const BigRational& q) { return to_string(q); }

Budget make_budget(std::optional<std::string> degree_budget, std::optional<std::uint64_t> tau_budget) {
    Budget b;
    if (degree_budget) b.degree_budget = from_decimal(*degree_budget);
    if (tau_budget) b.tau_budget = *tau_budget;
    return b;
}

// Python-side handle for a shared immutable field.
struct PyField {
    FieldPtr ptr;
};

std::string check_status(CheckResult::Status s) { return status_name(s); }

}  // namespace

PYBIND11_MODULE(_orbitlab, m) {
    m.doc() = "Exact orbit computations for polynomial dynamics over F_q(t)";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result(
        [&]() { return py::exception<Error>(m, "OrbitlabError", PyExc_ValueError); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const py::tuple args = py::make_tuple(py::str(e.what()), py::str(error_kind_name(e.kind())));
            PyErr_SetObject(error_type.get_stored().ptr(), args.ptr());
        }
    });

    py::class_<PyField>(m, "Field")
        .def_static("parse", [](const std::string& spec) { return PyField{parse_field_spec(spec)}; }, py::arg("spec"))
        .def_property_readonly("characteristic", [](const PyField& f) { return f.ptr->characteristic(); })
        .def_property_readonly("order", [](const PyField& f) { return f.ptr->order(); })
        .def_property_readonly("degree", [](const PyField& f) { return f.ptr->degree(); })
        .def("__str__", [](const PyField& f) { return f.ptr->spec_string(); })
        .def("__repr__", [](const PyField& f) { return "Field('" + f.ptr->spec_string() + "')"; });

    py::class_<RatFunc>(m, "Element")
        .def(py::init([](const std::string& text, const PyField& field) { return parse_element(text, field.ptr); }),
             py::arg("text"), py::arg("field"))
        .def_property_readonly("height", [](const RatFunc& a) { return a.height().str(); })
        .def("__add__", [](const RatFunc& a, const RatFunc& b) { return a + b; })
        .def("__sub__", [](const RatFunc& a, const RatFunc& b) { return a - b; })
        .def("__mul__", [](const RatFunc& a, const RatFunc& b) { return a * b; })
        .def("__truediv__", [](const RatFunc& a, const RatFunc& b) { return a / b; })
        .def("__eq__", [](const RatFunc& a, const RatFunc& b) { return a == b; })
        .def("__hash__", [](const RatFunc& a) { return py::hash(py::str(a.key())); })
        .def("__str__", &RatFunc::str)
        .def("__repr__", [](const RatFunc& a) { return "Element('" + a.str() + "')"; });

    py::class_<KDynPoly>(m, "Map")
        .def(py::init([](const std::string& text, const PyField& field) { return parse_dynpoly(text, field.ptr); }),
             py::arg("text"), py::arg("field"))
        .def_property_readonly("degree", [](const KDynPoly& f) { return f.degree().str(); })
        .def("__call__", [](const KDynPoly& f, const RatFunc& a) { return f.evaluate(a); })
        .def("__eq__", [](const KDynPoly& a, const KDynPoly& b) { return a == b; })
        .def("__str__", &KDynPoly::str)
        .def("__repr__", [](const KDynPoly& f) { return "Map('" + f.str() + "')"; })
        .def("compose", [](const KDynPoly& f, const KDynPoly& g) { return compose(f, g); })
        .def("iterate", [](const KDynPoly& f, std::uint64_t n) { return iterate(f, n); }, py::arg("n"))
        .def("orbit", [](const KDynPoly& f, const RatFunc& a, std::uint64_t n) {
                std::vector<RatFunc> out{a};
                for (std::uint64_t i = 0; i < n; ++i) out.push_back(f.evaluate(out.back()));
                return out;
            }, py::arg("point"), py::arg("steps"))
        .def("is_additive", [](const KDynPoly& f) { return is_additive(f); });

    py::class_<KTwisted>(m, "Twisted")
        .def(py::init([](const std::string& text, const PyField& field) { return parse_twisted(text, field.ptr); }),
             py::arg("text"), py::arg("field"))
        .def("__mul__", [](const KTwisted& a, const KTwisted& b) { return twisted_mul(a, b); })
        .def("__pow__", [](const KTwisted& a, const std::string& n) { return twisted_pow(a, from_decimal(n)); })
        .def("__pow__", [](const KTwisted& a, std::uint64_t n) { return twisted_pow(a, BigInt(n)); })
        .def("__eq__", [](const KTwisted& a, const KTwisted& b) { return a == b; })
        .def("__call__", [](const KTwisted& a, const RatFunc& x) { return twisted_eval(a, x); })
        .def("to_map", [](const KTwisted& a) { return to_dynpoly(a); })
        .def_static("from_map", [](const KDynPoly& f) { return from_dynpoly(f); })
        .def("__str__", &KTwisted::str);

    m.def("intersect_orbits",
          [](const KDynPoly& f, const RatFunc& alpha, const KDynPoly& g, const RatFunc& beta, std::uint64_t cap_m,
             std::uint64_t cap_n) { return intersect_orbits(f, alpha, g, beta, cap_m, cap_n).pairs; },
          py::arg("f"), py::arg("alpha"), py::arg("g"), py::arg("beta"), py::arg("cap_m") = 64, py::arg("cap_n") = 64,
          "Pairs (m, n) within the caps with f^m(alpha) = g^n(beta).");
    m.def("synchronized_collisions",
          [](const KDynPoly& f, const RatFunc& alpha, const KDynPoly& g, const RatFunc& beta, std::uint64_t r,
             std::uint64_t s, std::uint64_t a, std::uint64_t b, std::uint64_t cap_n) {
              return synchronized_collisions(f, alpha, g, beta, r, s, a, b, cap_n);
          },
          py::arg("f"), py::arg("alpha"), py::arg("g"), py::arg("beta"), py::arg("r") = 1, py::arg("s") = 1,
          py::arg("a") = 0, py::arg("b") = 0, py::arg("cap_n") = 64);
    m.def("common_iterate",
          [](const KDynPoly& f, const KDynPoly& g, std::uint64_t cap_m, std::uint64_t cap_n,
             std::optional<std::string> degree_budget) {
              return common_iterate(f, g, cap_m, cap_n, make_budget(degree_budget, std::nullopt));
          },
          py::arg("f"), py::arg("g"), py::arg("cap_m") = 6, py::arg("cap_n") = 6, py::arg("degree_budget") = py::none());
    m.def("multiplicative_dependence", &multiplicative_dependence, py::arg("d"), py::arg("e"));
    m.def("canonical_height",
          [](const KDynPoly& f, const RatFunc& gamma, std::uint64_t denominator_bound) {
              const BigInt D(denominator_bound);
              const auto est = canonical_height(f, gamma, BigRational(1) / BigRational(4 * D * D));
              const auto exact = rationalize(est, D);
              py::dict out;
              out["estimate"] = rat(est.value);
              out["error_bound"] = rat(est.error_bound);
              out["iterations"] = est.iterations;
              out["rationalized"] = exact ? py::object(py::str(rat(*exact))) : py::object(py::none());
              return out;
          },
          py::arg("f"), py::arg("gamma"), py::arg("denominator_bound") = 8,
          "Canonical height estimate with proven error bound; rationalized when unique.");
    m.def("binom_mod", [](const std::string& m, const std::string& i, std::uint64_t p) {
        return binom_mod(from_decimal(m), from_decimal(i), p);
    });

    m.def("_run_scenario_json",
          [](const std::string& text, const std::string& source, bool timing) {
              const Report r = run_scenario_text(text, source);
              return py::make_tuple(emit_report(r, Format::Json, timing), r.exit_code);
          },
          py::arg("text"), py::arg("source") = "<python>", py::arg("timing") = false);
    m.def("verify_all",
          [](std::uint64_t pmax) {
              VerifyOptions opts;
              opts.pmax = pmax;
              py::list out;
              for (const auto& c : orbitlab::verify_all(opts)) {
                  py::dict d;
                  d["name"] = c.name;
                  d["status"] = check_status(c.status);
                  d["detail"] = c.detail;
                  d["lhs"] = c.lhs;
                  d["rhs"] = c.rhs;
                  out.append(d);
              }
              return out;
          },
          py::arg("pmax") = 5);
}
