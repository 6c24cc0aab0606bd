// Python bindings. The boundary is JSON text in the same schemas the CLI
// reads and writes, so python callers interoperate with files produced by
// either side without a parallel object model.
#include "factcat/factorize.hpp"
#include "factcat/fixtures.hpp"
#include "factcat/io.hpp"
#include "factcat/poly.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace factcat;
using io::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw io::MalformedInput("not valid JSON");
    return j;
}

CatPtr cat_in(const std::string& text) { return io::category_from_json(parse(text)); }
FinFunctor fun_in(const std::string& text) { return io::functor_from_json(parse(text)); }
std::string cat_out(const CatPtr& c) { return io::canonical_dump(io::category_to_json(*c)); }

std::string tri(gpd::TriBool v) {
    switch (v) {
        case gpd::TriBool::Yes: return "yes";
        case gpd::TriBool::No: return "no";
        default: return "unknown";
    }
}

py::dict factorization_out(const factorize::Factorization& f) {
    py::dict d;
    d["status"] = "ok";
    d["left"] = io::canonical_dump(io::functor_to_json(f.left));
    d["mid"] = cat_out(f.mid);
    d["right"] = io::canonical_dump(io::functor_to_json(f.right));
    d["comparison"] = io::canonical_dump(io::nat_to_json(f.comparison));
    return d;
}

}   // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-category factorization toolkit";

    py::register_exception<io::MalformedInput>(m, "MalformedInput", PyExc_ValueError);
    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

    m.def("fixture", [](const std::string& name) -> std::string {
        namespace fx = fixtures;
        static const std::map<std::string, CatPtr (*)()> table = {
            {"empty", fx::empty_cat},   {"one", fx::terminal},
            {"disc2", fx::discrete2},   {"a2", fx::walking_arrow},
            {"iso", fx::walking_iso},   {"bc2", fx::bc2},
            {"bc3", fx::bc3},           {"p4", fx::pseudocircle},
            {"chain3", fx::chain3},     {"parallel_pair", fx::parallel_pair},
        };
        auto it = table.find(name);
        if (it == table.end()) throw py::value_error("unknown fixture: " + name);
        return cat_out(it->second());
    }, py::arg("name"), "Bundled example category as canonical JSON text.");

    m.def("validate", [](const std::string& text) -> std::vector<std::string> {
        json j = parse(text);
        std::string kind = j.value("kind", "");
        if (kind == "category") return validate_category(*io::category_from_json(j));
        if (kind == "functor") return validate_functor(io::functor_from_json(j));
        if (kind == "pseudofunctor") return validate_pseudofunctor(io::pseudofunctor_from_json(j));
        if (kind == "polynomial") return poly::validate_polynomial(io::polynomial_from_json(j));
        throw io::MalformedInput("unknown kind: " + kind);
    }, py::arg("text"), "Validation errors for a serialized document; empty means valid.");

    m.def("canonical", [](const std::string& text) { return io::canonical_dump(parse(text)); },
          py::arg("text"), "Canonical text form: sorted keys, two-space indent, trailing LF.");

    m.def("to_dot", [](const std::string& cat_text) { return io::to_dot(*cat_in(cat_text)); },
          py::arg("category"), "Graphviz rendering; invertibles drawn with dir=both.");

    m.def("check", [](const std::string& what, const std::string& functor_text,
                      std::size_t bound) -> std::string {
        auto f = fun_in(functor_text);
        if (what == "gfib") return fib::is_groupoid_fibration(f).verdict ? "true" : "false";
        if (what == "dfib") return fib::is_discrete_fibration(f).verdict ? "true" : "false";
        if (what == "opfib") return fib::is_opfibration_gfib(f).verdict ? "true" : "false";
        if (what == "final") return fib::is_final(f).verdict ? "true" : "false";
        if (what == "equiv") return is_equivalence(f) ? "true" : "false";
        if (what == "radj") return compute_left_adjoint(f) ? "true" : "false";
        if (what == "ladj") return compute_right_adjoint(f) ? "true" : "false";
        if (what == "ultimate") return tri(fib::is_ultimate(f, bound).value);
        throw py::value_error("unknown check: " + what);
    }, py::arg("what"), py::arg("functor"), py::arg("bound") = 10000,
       "Verdict of a functor property: true/false, or yes/no/unknown for 'ultimate'.");

    m.def("factorize", [](const std::string& system, const std::string& functor_text,
                          std::size_t bound) -> py::dict {
        auto f = fun_in(functor_text);
        if (system == "comprehensive")
            return factorization_out(factorize::comprehensive_factorize(f));
        if (system != "ultimate") throw py::value_error("unknown system: " + system);
        auto out = factorize::ultimate_factorize(f, bound);
        if (auto* fact = std::get_if<factorize::Factorization>(&out))
            return factorization_out(*fact);
        const auto& n = std::get<factorize::BoundExceeded>(out).normalization;
        py::dict d;
        d["status"] = n.status == gpd::NormalizationResult::Status::InfiniteDetected
                          ? "infinite"
                          : "unknown";
        d["note"] = n.note;
        return d;
    }, py::arg("system"), py::arg("functor"), py::arg("bound") = 10000,
       "Factor a functor; returns left/mid/right/comparison JSON on success.");

    m.def("pi1", [](const std::string& cat_text, std::size_t bound) -> py::dict {
        auto n = gpd::normalize(gpd::pi1(cat_in(cat_text)), bound);
        py::dict d;
        if (n.status == gpd::NormalizationResult::Status::Finite) {
            d["status"] = "finite";
            d["category"] = cat_out(n.category);
        } else {
            d["status"] = n.status == gpd::NormalizationResult::Status::InfiniteDetected
                              ? "infinite"
                              : "unknown";
            d["note"] = n.note;
        }
        return d;
    }, py::arg("category"), py::arg("bound") = 10000,
       "Fundamental groupoid, when it is finite within the effort bound.");

    m.def("fs1", [](const std::string& left_text, const std::string& right_text,
                    std::size_t guard) {
        return factorize::check_fs1(fun_in(left_text), fun_in(right_text), guard);
    }, py::arg("left"), py::arg("right"), py::arg("guard") = 20000,
       "Bipullback orthogonality of a candidate (left, right) pair.");

    m.def("poly_detect", [](const std::string& functor_text, std::size_t bound) {
        auto r = poly::is_abstract_polynomial_functor(fun_in(functor_text), bound);
        return py::make_tuple(tri(r.value), r.note);
    }, py::arg("functor"), py::arg("bound") = 10000,
       "(verdict, note): does the functor carry a polynomial structure?");

    m.def("poly_of", [](const std::string& functor_text, std::size_t bound) {
        return io::canonical_dump(
            io::polynomial_to_json(poly::polynomial_of(fun_in(functor_text), bound)));
    }, py::arg("functor"), py::arg("bound") = 10000,
       "The polynomial carried by a functor with a yes detection verdict.");

    m.def("poly_compose", [](const std::string& p1_text, const std::string& p2_text,
                             std::size_t guard) {
        auto p1 = io::polynomial_from_json(parse(p1_text));
        auto p2 = io::polynomial_from_json(parse(p2_text));
        return io::canonical_dump(io::polynomial_to_json(poly::compose_polynomials(p1, p2, guard)));
    }, py::arg("first"), py::arg("second"), py::arg("guard") = 20000,
       "Span composition of two polynomials (first's target = second's source).");

    m.def("poly_eval", [](const std::string& poly_text) {
        return io::canonical_dump(
            io::functor_to_json(poly::eval_polynomial(io::polynomial_from_json(parse(poly_text)))));
    }, py::arg("polynomial"), "The functor a polynomial evaluates to.");

    m.def("comma", [](const std::string& f_text, const std::string& g_text) {
        return cat_out(comma(fun_in(f_text), fun_in(g_text)).apex);
    }, py::arg("f"), py::arg("g"), "Apex of the comma of two functors into a common target.");

    m.def("pseudopullback", [](const std::string& f_text, const std::string& g_text) {
        return cat_out(pseudopullback(fun_in(f_text), fun_in(g_text)).apex);
    }, py::arg("f"), py::arg("g"), "Apex of the isocomma of two functors into a common target.");

    m.def("core", [](const std::string& cat_text) {
        return cat_out(core(cat_in(cat_text)).core);
    }, py::arg("category"), "Wide subcategory of invertible morphisms.");

    m.def("arrow", [](const std::string& cat_text) {
        return cat_out(arrow_category(cat_in(cat_text)).apex);
    }, py::arg("category"), "Arrow category.");

    m.def("groth", [](const std::string& pseudofunctor_text) {
        auto g = groth(io::pseudofunctor_from_json(parse(pseudofunctor_text)));
        py::dict d;
        d["total"] = cat_out(g.total);
        d["projection"] = io::canonical_dump(io::functor_to_json(g.projection));
        return d;
    }, py::arg("pseudofunctor"),
       "Grothendieck construction: total category and the fibration projection.");
}
