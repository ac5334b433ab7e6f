#ifndef CCR_RANKDIST_HPP
#define CCR_RANKDIST_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccr/code.hpp"

namespace ccr {

struct RankReport {
    int free_rank = 0;
    int rank = 0;
    bool coprime_path = false;
    // (generator index 1..2k, shift exponent); on the coprime path the two
    // generators of the two-generator form are indexed 1 and 2
    std::vector<std::pair<int, int>> spanning_set;
    TowerProfile formula_inputs;
};

enum class DistanceMethod { ClosedForm, TorsionBruteforce, FullBruteforce };

struct DistanceReport {
    int d = 0;
    DistanceMethod method = DistanceMethod::FullBruteforce;
    RingPoly certificate;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 24;

// Hamming weight over R^n: a coordinate counts once if any slot is nonzero.
int hamming_weight(const RingPoly& f, int n);

RankReport rank(const SpanBasis& C);

// layer-count formula regardless of gcd(n, p); for coprime lengths this can
// give a larger (but always R-spanning) set than the coprime-path rank
RankReport rank_generic(const SpanBasis& C);

// the R-span of B (constant multiples of the listed shifts) equals C
bool spanning_set_verify(const SpanBasis& C, const RankReport& R);
// no element of B lies in the R-span of the others
bool spanning_set_minimal(const SpanBasis& C, const RankReport& R);

DistanceReport distance_bruteforce(const SpanBasis& C, std::uint64_t budget = kDefaultBudget);

DistanceReport distance_torsion(const SpanBasis& C, std::uint64_t budget = kDefaultBudget);

// closed form for n = p^l with all g_i = (x-1)^{t_i} and strict tower degrees
DistanceReport distance_closed_form(const TowerProfile& tp, const RingParams& rp, int l);

// min weight of the F_p cyclic code generated by g (g | x^n-1), by enumeration
std::pair<int, FpPoly> fp_cyclic_min_weight(const FpPoly& g, int n, std::uint64_t budget = kDefaultBudget);

// walks all nonzero F_p combinations of the given basis rows in a minimal
// change order and reports the minimum weight under `weigh`
template <typename Weigh>
std::pair<int, std::vector<int>> min_weight_enumerate(const std::vector<std::vector<int>>& rows, int p,
                                                      Weigh weigh) {
    int dim = static_cast<int>(rows.size());
    size_t len = rows.empty() ? 0 : rows[0].size();
    std::vector<int> cur(len, 0), best;
    int bestw = -1;
    std::vector<int> digit(dim, 0), dir(dim, 1);
    // mixed-radix Gray walk: each step changes one digit by +-1
    for (;;) {
        int i = 0;
        while (i < dim) {
            int next = digit[i] + dir[i];
            if (next >= 0 && next < p) break;
            dir[i] = -dir[i];
            ++i;
        }
        if (i == dim) break;
        digit[i] += dir[i];
        int sgn = dir[i] > 0 ? 1 : p - 1;
        for (size_t a = 0; a < len; ++a) cur[a] = fp::add(cur[a], fp::mul(sgn, rows[i][a], p), p);
        int w = weigh(cur);
        if (bestw < 0 || w < bestw) {
            bestw = w;
            best = cur;
        }
    }
    return {bestw, best};
}

}  // namespace ccr

#endif
