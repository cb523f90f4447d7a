// Python bindings: a thin string-based facade over the C++ entry points.
// Elements travel as canonical strings (the same grammar the CLI uses) and
// verification reports travel as JSON strings; the pure-Python wrapper in
// python/ennil decodes them into dicts.
#include <pybind11/pybind11.h>

#include "json.hpp"

#include "ennil/expr.hpp"
#include "ennil/suite.hpp"

#include <algorithm>

namespace py = pybind11;
using namespace ennil;
using nlohmann::json;

namespace {

std::string report_json(Report rep) {
    std::stable_sort(rep.checks.begin(), rep.checks.end(),
                     [](const Check &a, const Check &b) { return a.name < b.name; });
    json checks = json::array();
    for (auto &c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"equal", c.equal},
                          {"detail", c.detail}});
    return json{{"command", rep.command},
                {"status", rep.status()},
                {"checks", checks},
                {"timing_ms", rep.timing_ms}}
        .dump();
}

Derivation<Int> pick_op(const std::string &op, int n) {
    if (op == "dn") return dn_derivation<Int>(n);
    if (op == "e") return sl2_e<Int>(n);
    if (op == "f") return sl2_f<Int>(n);
    if (op == "h") return sl2_h<Int>(n);
    if (op.rfind("partial:", 0) == 0)
        return partial_derivation<Int>(n, std::stoi(op.substr(8)));
    if (op.rfind("witt:", 0) == 0)
        return witt_derivation<Int>(n, std::stoi(op.substr(5)));
    throw std::invalid_argument("unknown operator: " + op);
}

} // namespace

PYBIND11_MODULE(_ennil, mod) {
    mod.doc() = "enhanced nilHecke algebra toolkit (string facade)";

    py::register_exception<SyntaxError>(mod, "ExprSyntaxError");
    py::register_exception<IndexOutOfRange>(mod, "IndexOutOfRange");
    py::register_exception<ContextError>(mod, "ContextError");

    mod.def("normalize_ring",
            [](const std::string &src, int n) { return poly_str(parse_ring(src, n)); },
            py::arg("src"), py::arg("n"),
            "Parse a ring expression and return its canonical form.");
    mod.def("normalize_algebra",
            [](const std::string &src, int n) { return an_str(parse_algebra(src, n)); },
            py::arg("src"), py::arg("n"),
            "Parse an algebra expression and return its left normal form.");
    mod.def("mul",
            [](const std::string &a, const std::string &b, int n) {
                return an_str(an_mul(parse_algebra(a, n), parse_algebra(b, n)));
            },
            py::arg("lhs"), py::arg("rhs"), py::arg("n"),
            "Product of two A_n elements, in left normal form.");
    mod.def("apply",
            [](const std::string &op, const std::string &src, int n) {
                return poly_str(pick_op(op, n).apply(parse_ring(src, n)));
            },
            py::arg("op"), py::arg("expr"), py::arg("n"),
            "Apply dn | partial:r | witt:k | e | f | h to a ring element.");
    mod.def("epsilon",
            [](int n) { return an_str(epsilon<Int>(n)); }, py::arg("n"),
            "Left normal form of the idempotent epsilon_n.");
    mod.def("k0_eval",
            [](const std::string &src, long p) { return k0val_str(parse_k0(src, p)); },
            py::arg("src"), py::arg("p"),
            "Evaluate a K0 expression over O_p and return its canonical form.");

    mod.def("relations",
            [](int n, long D) { return report_json(verify_relations<Int>(n, D)); },
            py::arg("n"), py::arg("degree") = 12);
    mod.def("nilpotency",
            [](long p, int n) {
                Report r;
                r.command = "nilpotency";
                r.merge(nilpotency_check(p, n), "ring");
                r.merge(an_nilpotency_check(p, n), "algebra");
                return report_json(std::move(r));
            },
            py::arg("p"), py::arg("n"));
    mod.def("uqsl2",
            [](long p, const std::string &model) { return report_json(verify_uqsl2(p, model)); },
            py::arg("p"), py::arg("model"));
    mod.def("iso", [](long p) { return report_json(verify_iso(p)); }, py::arg("p"));
    mod.def("e_class",
            [](long n, long p) { return report_json(categorified_E_class(n, p).second); },
            py::arg("n"), py::arg("p"));
    mod.def("filtration",
            [](int n, int m, long D) {
                Report r;
                r.command = "filtration";
                if (n >= 2) r.merge(filtration_check<Int>(n, m, D), "ring");
                r.merge(an_filtration_check<Int>(n, m, D), "algebra");
                return report_json(std::move(r));
            },
            py::arg("n"), py::arg("m"), py::arg("degree") = 10);
    mod.def("conjecture",
            [](int n, int mmax) { return report_json(conjecture_scan(n, mmax)); },
            py::arg("n"), py::arg("mmax"));
    mod.def("pcomplex_blocks",
            [](const std::string &desc) {
                json j = json::parse(desc);
                if (j.value("field", "Fp") == std::string("Q"))
                    return report_json(pcomplex_report(pcomplex_from_json<Rat>(j)));
                return report_json(pcomplex_report(pcomplex_from_json<Fp>(j)));
            },
            py::arg("json_desc"),
            "Jordan blocks and K0 symbol of a p-complex given as JSON.");
}
