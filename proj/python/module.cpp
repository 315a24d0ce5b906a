#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dsolid/report.hpp"

namespace py = pybind11;
using namespace dsolid;

namespace {

py::object json_to_py(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

std::vector<Int> to_ints(const std::vector<long long>& v) {
    std::vector<Int> d;
    d.reserve(v.size());
    for (long long x : v) d.emplace_back(x);
    return d;
}

}  // namespace

PYBIND11_MODULE(_dsolid, mod) {
    mod.doc() = "Exact invariants of anti-canonical cycle blow-ups of a quadric: "
                "divisor tables, twist invariants, bitangents, branch-quartic models";

    mod.def(
        "tables",
        [](int n, int bound) { return json_to_py(render_tables(n, ReportFormat::Json, bound)); },
        py::arg("n"), py::arg("bound") = kDefaultEnumBound);

    mod.def(
        "analyze",
        [](const std::vector<long long>& d, bool ridge1, bool ridge_k) {
            AnalyzeRequest req;
            req.d = to_ints(d);
            req.rc.ridge1 = ridge1;
            req.rc.ridge_k = ridge_k;
            return json_to_py(render_analyze(req, ReportFormat::Json));
        },
        py::arg("d"), py::arg("ridge1") = true, py::arg("ridge_k") = true);

    mod.def(
        "fibonacci",
        [](int n_max) { return json_to_py(render_fibonacci(n_max, ReportFormat::Json)); },
        py::arg("n_max") = 10);

    mod.def(
        "bitangents",
        [](const std::string& type) {
            return json_to_py(render_bitangents(cycle_type_from_string(type), ReportFormat::Json));
        },
        py::arg("type"));

    mod.def(
        "quartic",
        [](const std::string& type, int m, std::uint64_t seed, int planes) {
            return json_to_py(
                render_quartic(cycle_type_from_string(type), m, seed, planes, ReportFormat::Json));
        },
        py::arg("type"), py::arg("m") = 2, py::arg("seed") = 1, py::arg("planes") = 5);

    mod.def(
        "enumerate_count",
        [](int n, const std::string& type, int bound) {
            return enumerate_configs(n, cycle_type_from_string(type), bound).size();
        },
        py::arg("n"), py::arg("type"), py::arg("bound") = kDefaultEnumBound);

    mod.def(
        "intersect",
        [](const std::vector<long long>& a, const std::vector<long long>& b) {
            if (a.size() != b.size() || a.size() < 4 || a.size() % 2 != 0)
                throw validation_error("coefficient vectors must share an even length >= 4");
            const LatticeBasis basis(static_cast<int>(a.size() / 2) - 1);
            const Int v = intersect(CurveClass(basis, to_ints(a)), CurveClass(basis, to_ints(b)));
            return py::module_::import("builtins").attr("int")(v.str());
        },
        py::arg("a"), py::arg("b"));

    mod.def(
        "conjugate",
        [](const std::vector<long long>& a) {
            const LatticeBasis basis(static_cast<int>(a.size() / 2) - 1);
            const CurveClass c = conjugate(CurveClass(basis, to_ints(a)));
            std::vector<long long> out;
            for (const auto& v : c.coeffs()) out.push_back(static_cast<long long>(v));
            return out;
        },
        py::arg("a"));

    mod.def("h0", [](long long m, long long l) {
        return py::module_::import("builtins").attr("int")(h0_formula(Int(m), Int(l)).str());
    });
    mod.def("riemann_roch", [](long long n, long long l) {
        return py::module_::import("builtins").attr("int")(riemann_roch(Int(n), Int(l)).str());
    });
}
