#ifndef CCR_GRAY_HPP
#define CCR_GRAY_HPP

#include <optional>
#include <vector>

#include "ccr/code.hpp"
#include "ccr/rankdist.hpp"

namespace ccr {

struct GrayImage {
    int length = 0;      // 2kn
    int dimension = 0;   // l = dim_Fp C
    std::vector<std::vector<int>> basis;
    std::optional<int> d;  // min Hamming weight; unset when over budget
};

// window sums of the v-free part: input a_1..a_k (coefficient of u^{i-1}),
// output k entries, windows shrinking alternately from the left and right
std::vector<int> phi(const std::vector<int>& a, int p);

// full Gray map on one ring element: (phi(a+b), phi(b)) for r = a + vb
std::vector<int> phi_L(const RingElement& r);

int lee_weight(const RingElement& r);
int lee_weight(const RingPoly& f, int n);

// the 2k x 2k matrix of phi_L over F_p (column j = image of the j-th slot)
std::vector<std::vector<int>> phi_L_matrix(const RingParams& rp);

GrayImage gray_image(const SpanBasis& C, std::uint64_t budget = kDefaultBudget);

}  // namespace ccr

#endif
