#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccr/analyze.hpp"
#include "ccr/code.hpp"
#include "ccr/gray.hpp"
#include "ccr/parse.hpp"
#include "ccr/rankdist.hpp"

namespace py = pybind11;

namespace {

std::vector<ccr::RingPoly> parse_gens(const ccr::RingParams& rp, int n, const std::vector<std::string>& gens) {
    std::vector<ccr::RingPoly> out;
    for (const auto& g : gens) out.push_back(ccr::parse_poly_expr(g, rp, n));
    return out;
}

ccr::SpanBasis make_code(int p, int k, int n, const std::vector<std::string>& gens) {
    ccr::RingParams rp(p, k);
    return ccr::span_closure(rp, n, parse_gens(rp, n, gens));
}

}  // namespace

PYBIND11_MODULE(_ccr, m) {
    m.doc() = "cyclic codes over F_p[u,v]/<u^k, v^2, uv-vu>";

    m.def(
        "analyze_json",
        [](int p, int k, int n, const std::vector<std::string>& gens, std::uint64_t budget) {
            ccr::RingParams rp(p, k);
            return ccr::analyze_code(rp, n, parse_gens(rp, n, gens), budget).dump();
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("gens"), py::arg("budget") = ccr::kDefaultBudget,
        "full analysis report as a JSON string");

    m.def(
        "dimension_fp",
        [](int p, int k, int n, const std::vector<std::string>& gens) {
            return make_code(p, k, n, gens).dimension();
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("gens"));

    m.def(
        "rank",
        [](int p, int k, int n, const std::vector<std::string>& gens) {
            return ccr::rank(make_code(p, k, n, gens)).rank;
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("gens"));

    m.def(
        "is_free",
        [](int p, int k, int n, const std::vector<std::string>& gens) {
            return ccr::is_free(make_code(p, k, n, gens)).first;
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("gens"));

    m.def(
        "distance",
        [](int p, int k, int n, const std::vector<std::string>& gens, std::uint64_t budget) {
            ccr::DistanceReport D = ccr::distance_torsion(make_code(p, k, n, gens), budget);
            return py::make_tuple(D.d, D.certificate.to_string());
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("gens"), py::arg("budget") = ccr::kDefaultBudget,
        "minimum Hamming distance with a minimum-weight certificate");

    m.def(
        "gray_params",
        [](int p, int k, int n, const std::vector<std::string>& gens, std::uint64_t budget) {
            ccr::GrayImage img = ccr::gray_image(make_code(p, k, n, gens), budget);
            return py::make_tuple(img.length, img.dimension,
                                  img.d ? py::object(py::int_(*img.d)) : py::object(py::none()));
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("gens"), py::arg("budget") = ccr::kDefaultBudget,
        "Gray image [length, dimension, min distance]");

    m.def("phi", &ccr::phi, py::arg("a"), py::arg("p"), "Gray map on the v-free part");

    m.def(
        "tower_degrees",
        [](int p, int k, int n, const std::vector<std::string>& gens) {
            return ccr::tower(make_code(p, k, n, gens)).t;
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("gens"));

    m.def(
        "canonical_generators",
        [](int p, int k, int n, const std::vector<std::string>& gens) {
            ccr::GeneratorSet G = ccr::canonical_generators(make_code(p, k, n, gens));
            std::vector<std::string> out;
            for (const auto& a : G.A) out.push_back(a.to_string());
            return out;
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("gens"));

    m.def(
        "verify_structure",
        [](int p, int k, int n, const std::vector<std::string>& gens) {
            return ccr::verify_structure(ccr::canonical_generators(make_code(p, k, n, gens))).all_pass();
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("gens"));

    m.def(
        "poly_to_string",
        [](int p, int k, int n, const std::string& expr) {
            return ccr::parse_poly_expr(expr, ccr::RingParams(p, k), n).to_string();
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("expr"),
        "parse an expression and print it in canonical form");

    m.def(
        "tables_json", [](int max_exponent) {
            ccr::TablesReport rep = ccr::run_tables(max_exponent);
            nlohmann::json diffs = nlohmann::json::array();
            for (const auto& mm : rep.mismatches)
                diffs.push_back({{"table", mm.table}, {"row", mm.row}, {"note", mm.note}});
            nlohmann::json j = {{"checked", rep.checked}, {"pass", rep.pass()}, {"mismatches", diffs}};
            return j.dump();
        },
        py::arg("max_exponent") = 6);

    m.def(
        "enumerate_json",
        [](int p, int k, int n, std::uint64_t cap) {
            auto list = ccr::run_enumerate(ccr::RingParams(p, k), n, cap);
            nlohmann::json j = nlohmann::json::array();
            for (auto& e : list) j.push_back(std::move(e));
            return j.dump();
        },
        py::arg("p"), py::arg("k"), py::arg("n"), py::arg("cap") = std::uint64_t(1) << 20);
}
