#ifndef CCR_ANALYZE_HPP
#define CCR_ANALYZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccr/code.hpp"
#include "ccr/gray.hpp"
#include "ccr/parse.hpp"
#include "ccr/rankdist.hpp"

namespace ccr {

// full report: tower, canonical generators, structure verification, free
// flag, rank, distance (closed form when applicable, else torsion), Gray
// parameters
nlohmann::json analyze_code(const RingParams& rp, int n, const std::vector<RingPoly>& gens,
                            std::uint64_t budget = kDefaultBudget);

nlohmann::json fp_poly_json(const FpPoly& f);
nlohmann::json ring_poly_json(const RingPoly& f);

struct TableOutcome {
    int table = 0;
    int row = 0;  // 1-based
    std::vector<int> constants;
    int got_rank = 0;
    int got_d = -1;       // -1 when the table has no distance column
    int expected_rank = 0;
    int expected_d = -1;
    bool pass = true;
    std::string note;
};

struct TableRowStats {
    int table = 0;
    int row = 0;
    long long members = 0;  // assignments whose polynomials are the canonical generators
    long long skipped = 0;  // assignments generating a code with a different canonical form
};

struct TablesReport {
    long long checked = 0;
    std::vector<TableRowStats> rows;
    std::vector<TableOutcome> mismatches;
    bool pass() const {
        if (!mismatches.empty()) return false;
        for (const auto& r : rows)
            if (r.members == 0) return false;
        return true;
    }
};

// Reproduces the three length-4 example tables. Rows with free constants are
// families; at most p^max_exponent assignments are tried per row
// (max_exponent < 0 = all). table selects one table (1..3); 0 runs all.
// An assignment belongs to a row's family only when the instantiated
// polynomials are the canonical generators of the code they generate;
// other assignments produce a code of a different shape (often with a
// different rank and distance) and are counted as skipped.
TablesReport run_tables(int max_exponent = 6, int table = 0);

// All ideals of R[x]/<x^n-1> at tiny parameters, found by closure-completion
// over seed vectors. Each summary carries tower degrees, rank, distance and
// the canonicalization/structure checks.
std::vector<nlohmann::json> run_enumerate(const RingParams& rp, int n, std::uint64_t cap);

// feasibility gate for run_enumerate: 2kn * log2(p) <= 24
bool enumerate_feasible(const RingParams& rp, int n);

}  // namespace ccr

#endif
