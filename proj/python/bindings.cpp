#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locring/hensel.hpp"
#include "locring/lift.hpp"
#include "locring/parse.hpp"
#include "locring/serialize.hpp"
#include "locring/survey.hpp"
#include "locring/verify.hpp"

namespace py = pybind11;
using namespace locring;

namespace {

std::vector<std::string> strings(const std::vector<Element>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(e.to_string());
    return out;
}

std::vector<std::string> strings(const std::vector<QuotientElement>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(e.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_locring, m) {
    m.doc() = "Exact arithmetic in the local rings K[X]/(P^n)";

    // instances carry the error kind as `.kind`
    static py::handle error_type = py::exception<Error>(m, "LocringError").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
            inst.attr("kind") = to_string(e.kind());
            PyErr_SetObject(error_type.ptr(), inst.ptr());
        }
    });

    py::class_<Field>(m, "Field")
        .def(py::init([](const std::string& text) { return parse_field(text); }), py::arg("descriptor"))
        .def_property_readonly("name", &Field::name)
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("is_finite", &Field::is_finite)
        .def_property_readonly("size", &Field::size)
        .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
        .def("__hash__", [](const Field& f) { return std::hash<const void*>()(f.data()); })
        .def("__str__", &Field::name)
        .def("__repr__", [](const Field& f) { return "Field('" + f.name() + "')"; });

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const Field& k, const std::string& text) { return parse_poly(k, text); }), py::arg("field"),
             py::arg("text"))
        .def_property_readonly("field", &Poly::field)
        .def_property_readonly("degree", &Poly::degree)
        .def_property_readonly("coefficients", [](const Poly& p) { return strings(p.coefficients()); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const Poly& p, unsigned e) { return pow(p, e); })
        .def("__divmod__", [](const Poly& a, const Poly& b) {
            auto [q, r] = divmod(a, b);
            return py::make_tuple(q, r);
        })
        .def("__mod__", [](const Poly& a, const Poly& b) { return rem(a, b); })
        .def("derivative", [](const Poly& p) { return derivative(p); })
        .def("compose", [](const Poly& p, const Poly& q) { return compose(p, q); })
        .def("__str__", [](const Poly& p) { return p.to_string(); })
        .def("__repr__", [](const Poly& p) { return "Poly('" + p.to_string() + "')"; });

    m.def("gcd", [](const Poly& a, const Poly& b) { return gcd(a, b); });
    m.def("is_irreducible", &is_irreducible_fq);
    m.def("enumerate_irreducibles", &enumerate_irreducibles, py::arg("field"), py::arg("degree"));

    py::class_<QuotientRing>(m, "QuotientRing")
        .def(py::init([](const Poly& p, int n) { return QuotientRing::make(p, n); }), py::arg("p"), py::arg("n"))
        .def_property_readonly("base_poly", &QuotientRing::base_poly)
        .def_property_readonly("power", &QuotientRing::power)
        .def_property_readonly("dimension", &QuotientRing::dimension)
        .def_property_readonly("size", &QuotientRing::size)
        .def("element", [](const QuotientRing& r, const std::string& text) { return r.element(parse_poly(r.field(), text)); })
        .def("x", &QuotientRing::x)
        .def(py::self == py::self)
        .def("__str__", &QuotientRing::to_string);

    py::class_<QuotientElement>(m, "QuotientElement")
        .def_property_readonly("ring", &QuotientElement::ring)
        .def_property_readonly("rep", &QuotientElement::rep)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const QuotientElement& a, unsigned e) { return a.pow(e); })
        .def("is_unit", [](const QuotientElement& a) { return is_unit(a); })
        .def("inverse", [](const QuotientElement& a) { return invert(a); })
        .def("__str__", &QuotientElement::to_string);

    py::class_<StabilizingMorphism>(m, "Morphism")
        .def_property_readonly("source", &StabilizingMorphism::source)
        .def_property_readonly("target", &StabilizingMorphism::target)
        .def_property_readonly("sigma", [](const StabilizingMorphism& f) { return f.sigma().to_string(); })
        .def_property_readonly("q_image", &StabilizingMorphism::q_image)
        .def_property_readonly("s_cert", &StabilizingMorphism::s_cert)
        .def("__call__", &StabilizingMorphism::operator())
        .def("to_json", [](const StabilizingMorphism& f) { return morphism_to_json_text(f, -1); })
        .def_static("from_json", &morphism_from_json_text)
        .def(py::self == py::self);

    py::class_<RootSeries>(m, "RootSeries")
        .def_readonly("u", &RootSeries::u)
        .def_readonly("corrections", &RootSeries::corrections)
        .def_readonly("cofactor", &RootSeries::cofactor)
        .def("certificate_holds", &RootSeries::certificate_holds);

    m.def("hensel_root_series", &hensel_root_series, py::arg("p"), py::arg("k"));
    m.def("embed_residue_field", &embed_residue_field, py::arg("p"), py::arg("k"));
    m.def("to_digits", [](const QuotientElement& a) { return strings(to_digits(a).digits); });
    m.def("structure_isomorphism_check", [](const Poly& p, int k) { return structure_isomorphism_check(p, k).passed; });

    py::class_<LiftReport>(m, "LiftReport")
        .def_readonly("q_f", &LiftReport::q_f)
        .def_readonly("s_f", &LiftReport::s_f)
        .def_readonly("n", &LiftReport::n)
        .def_readonly("q_f_derivative_nonzero", &LiftReport::q_f_derivative_nonzero)
        .def_readonly("gcd_sf_p2_is_one", &LiftReport::gcd_sf_p2_is_one)
        .def_readonly("verdict", &LiftReport::verdict)
        .def_readonly("multiplicity", &LiftReport::multiplicity);

    auto sigma_of = [](const std::string& s) { return FieldAutomorphism::parse(s); };
    m.def(
        "residue_morphism_from_q",
        [=](const Poly& p1, const Poly& p2, const Poly& q, const std::string& sigma) {
            return residue_morphism_from_q(p1, p2, sigma_of(sigma), q);
        },
        py::arg("p1"), py::arg("p2"), py::arg("q"), py::arg("sigma") = "id");
    m.def(
        "find_residue_isomorphisms",
        [=](const Poly& p1, const Poly& p2, const std::string& sigma) {
            return find_residue_isomorphisms(p1, p2, sigma_of(sigma));
        },
        py::arg("p1"), py::arg("p2"), py::arg("sigma") = "id");
    m.def("lift_morphism", &lift_morphism, py::arg("f"), py::arg("n"));
    m.def("lift_is_isomorphism", &lift_is_isomorphism, py::arg("f"), py::arg("n"));
    m.def("kernel_witness", &kernel_witness, py::arg("f"), py::arg("n"));
    m.def("induced_residue_morphism", &induced_residue_morphism);
    m.def("roots_bijection_check", [](const StabilizingMorphism& f) { return roots_bijection_check(f).passed; });
    m.def(
        "rings_isomorphic_separable",
        [](const Poly& p1, const Poly& p2, int n) { return rings_isomorphic_separable(p1, p2, n); }, py::arg("p1"),
        py::arg("p2"), py::arg("n"));

    m.def("certify_isomorphism", &certify_isomorphism);
    m.def("kernel_dimension", [](const StabilizingMorphism& f) { return kernel_basis(morphism_matrix(f)).size(); });
    m.def("morphism_matrix", [](const StabilizingMorphism& f) {
        const Matrix mat = morphism_matrix(f);
        std::vector<std::vector<std::string>> rows(mat.rows());
        for (std::size_t r = 0; r < mat.rows(); ++r)
            for (std::size_t c = 0; c < mat.cols(); ++c) rows[r].push_back(mat.at(r, c).to_string());
        return rows;
    });
    m.def("exhaustive_morphism_check", [](const StabilizingMorphism& f) { return exhaustive_morphism_check(f).ok; });

    m.def(
        "survey",
        [=](const Field& k, int max_degree, int max_power, std::optional<std::string> sigma) {
            SurveyOptions opts{max_degree, max_power, std::nullopt};
            if (sigma) opts.sigma = sigma_of(*sigma);
            py::list out;
            for (const auto& r : run_survey(k, opts)) {
                py::dict d;
                d["field"] = r.field;
                d["sigma"] = r.sigma;
                d["p1"] = r.p1;
                d["p2"] = r.p2;
                d["degree"] = r.degree;
                d["n"] = r.n;
                d["q_f"] = r.q_f;
                d["s_f"] = r.s_f;
                d["verdict"] = r.verdict;
                d["kernel_dim"] = r.kernel_dim;
                out.append(d);
            }
            return out;
        },
        py::arg("field"), py::arg("max_degree"), py::arg("max_power"), py::arg("sigma") = py::none());
}
