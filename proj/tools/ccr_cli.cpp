#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccr/analyze.hpp"
#include "ccr/code.hpp"
#include "ccr/gray.hpp"
#include "ccr/parse.hpp"
#include "ccr/rankdist.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitMismatch = 4;

struct Job {
    std::string ring;  // "p,k"
    int n = 0;
    std::vector<std::string> gens;
    std::string file;
    std::uint64_t budget = ccr::kDefaultBudget;
    std::string format = "json";
};

void add_code_options(CLI::App* cmd, Job& job) {
    cmd->add_option("--ring", job.ring, "ring parameters as p,k");
    cmd->add_option("--n", job.n, "code length");
    cmd->add_option("--gen", job.gens, "generator expression (repeatable)");
    cmd->add_option("--file", job.file, "code description file");
    cmd->add_option("--budget", job.budget, "enumeration budget (codeword count)");
    cmd->add_option("--format", job.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
}

ccr::CodeDescription resolve_code(const Job& job) {
    if (!job.file.empty()) return ccr::load_code_description(job.file);
    int p = 0, k = 0;
    if (std::sscanf(job.ring.c_str(), "%d,%d", &p, &k) != 2)
        throw ccr::ParseError("--ring expects p,k", 0);
    if (job.n < 1) throw ccr::ParseError("--n must be >= 1", 0);
    ccr::CodeDescription d{ccr::RingParams(p, k), job.n, {}, {}};
    for (const auto& g : job.gens) {
        d.gen_exprs.push_back(g);
        d.gens.push_back(ccr::parse_poly_expr(g, d.rp, d.n));
    }
    return d;
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // flat text rendering, one `key = value` line per top-level field
    for (auto it = j.begin(); it != j.end(); ++it)
        std::cout << it.key() << " = " << it.value().dump() << "\n";
}

int run_analyze_cmd(const Job& job) {
    auto d = resolve_code(job);
    emit(ccr::analyze_code(d.rp, d.n, d.gens, job.budget), job.format);
    return kExitOk;
}

int run_distance_cmd(const Job& job, const std::string& method) {
    auto desc = resolve_code(job);
    ccr::SpanBasis C = ccr::span_closure(desc.rp, desc.n, desc.gens);
    ccr::DistanceReport D;
    if (method == "closed_form") {
        ccr::TowerProfile tp = ccr::tower(C);
        int l = 0;
        long long m = 1;
        while (m < desc.n) {
            m *= desc.rp.p;
            ++l;
        }
        D = ccr::distance_closed_form(tp, desc.rp, m == desc.n ? l : 0);
    } else if (method == "torsion") {
        D = ccr::distance_torsion(C, job.budget);
    } else if (method == "bruteforce") {
        D = ccr::distance_bruteforce(C, job.budget);
    } else {
        try {
            ccr::TowerProfile tp = ccr::tower(C);
            int l = 0;
            long long m = 1;
            while (m < desc.n) {
                m *= desc.rp.p;
                ++l;
            }
            if (m != desc.n) throw std::domain_error("not a p-power length");
            D = ccr::distance_closed_form(tp, desc.rp, l);
        } catch (const std::domain_error&) {
            D = ccr::distance_torsion(C, job.budget);
        }
    }
    const char* name = D.method == ccr::DistanceMethod::ClosedForm          ? "closed_form"
                       : D.method == ccr::DistanceMethod::TorsionBruteforce ? "torsion_bruteforce"
                                                                            : "full_bruteforce";
    json j = {{"schema", 1},
              {"d", D.d},
              {"method", name},
              {"certificate", D.certificate.to_string()},
              {"certificate_weight", ccr::hamming_weight(D.certificate, desc.n)}};
    emit(j, job.format);
    return kExitOk;
}

int run_gray_cmd(const Job& job) {
    auto desc = resolve_code(job);
    ccr::SpanBasis C = ccr::span_closure(desc.rp, desc.n, desc.gens);
    ccr::GrayImage img = ccr::gray_image(C, job.budget);
    json j = {{"schema", 1},
              {"length", img.length},
              {"dimension", img.dimension},
              {"d", img.d ? json(*img.d) : json(nullptr)},
              {"basis", img.basis}};
    emit(j, job.format);
    return kExitOk;
}

int run_verify_cmd(const Job& job) {
    auto desc = resolve_code(job);
    ccr::SpanBasis C = ccr::span_closure(desc.rp, desc.n, desc.gens);
    ccr::GeneratorSet G = ccr::canonical_generators(C);
    ccr::StructureReport R = ccr::verify_structure(G);
    json conds = json::array();
    for (const auto& r : R.results)
        conds.push_back({{"condition", r.condition}, {"what", r.what}, {"pass", r.pass}});
    bool closed = C.is_closed();
    json j = {{"schema", 1}, {"closed", closed}, {"all_pass", R.all_pass() && closed}, {"conditions", conds}};
    emit(j, job.format);
    return (R.all_pass() && closed) ? kExitOk : kExitMismatch;
}

int run_enumerate_cmd(const Job& job, std::uint64_t cap) {
    auto desc = resolve_code(job);
    auto list = ccr::run_enumerate(desc.rp, desc.n, cap);
    json j = {{"schema", 1}, {"count", list.size()}, {"codes", list}};
    emit(j, job.format);
    return kExitOk;
}

int run_tables_cmd(const Job& job, int max_exponent) {
    ccr::TablesReport rep = ccr::run_tables(max_exponent);
    json diffs = json::array();
    for (const auto& m : rep.mismatches)
        diffs.push_back({{"table", m.table},
                         {"row", m.row},
                         {"constants", m.constants},
                         {"rank", m.got_rank},
                         {"expected_rank", m.expected_rank},
                         {"d", m.got_d},
                         {"expected_d", m.expected_d},
                         {"note", m.note}});
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"table", r.table}, {"row", r.row}, {"members", r.members}, {"skipped", r.skipped}});
    json j = {{"schema", 1}, {"checked", rep.checked}, {"pass", rep.pass()}, {"rows", rows}, {"mismatches", diffs}};
    emit(j, job.format);
    return rep.pass() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic codes over F_p[u,v]/<u^k, v^2, uv-vu>"};
    app.require_subcommand(1);

    Job job;
    std::string method = "auto";
    std::uint64_t cap = 1 << 20;
    int max_exponent = 6;

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one code");
    add_code_options(analyze, job);
    CLI::App* distance = app.add_subcommand("distance", "minimum Hamming distance");
    add_code_options(distance, job);
    distance->add_option("--method", method, "auto, closed_form, torsion, bruteforce")
        ->check(CLI::IsMember({"auto", "closed_form", "torsion", "bruteforce"}));
    CLI::App* gray = app.add_subcommand("gray", "Gray image parameters");
    add_code_options(gray, job);
    CLI::App* verify = app.add_subcommand("verify", "structure checks for one code");
    add_code_options(verify, job);
    CLI::App* enumerate = app.add_subcommand("enumerate", "all cyclic codes at tiny parameters");
    add_code_options(enumerate, job);
    enumerate->add_option("--cap", cap, "maximum number of codes to report");
    CLI::App* tables = app.add_subcommand("tables", "reproduce the length-4 example tables");
    add_code_options(tables, job);
    tables->add_option("--max-exponent", max_exponent,
                       "per-row cap of p^e constant assignments; negative = all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze_cmd(job);
        if (distance->parsed()) return run_distance_cmd(job, method);
        if (gray->parsed()) return run_gray_cmd(job);
        if (verify->parsed()) return run_verify_cmd(job);
        if (enumerate->parsed()) return run_enumerate_cmd(job, cap);
        if (tables->parsed()) return run_tables_cmd(job, max_exponent);
    } catch (const ccr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        if (msg.find("budget") != std::string::npos || msg.find("infeasible") != std::string::npos)
            return kExitInfeasible;
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
