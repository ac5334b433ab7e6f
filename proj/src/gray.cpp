#include "ccr/gray.hpp"

#include <stdexcept>

namespace ccr {

std::vector<int> phi(const std::vector<int>& a, int p) {
    int k = static_cast<int>(a.size());
    std::vector<int> out(k, 0);
    for (int t = 0; t < k; ++t) {
        int lo = 1 + (t + 1) / 2;  // 1, 2, 2, 3, 3, ...
        int hi = k - t / 2;        // k, k, k-1, k-1, ...
        int s = 0;
        for (int i = lo; i <= hi; ++i) s = fp::add(s, a[i - 1], p);
        out[t] = s;
    }
    return out;
}

std::vector<int> phi_L(const RingElement& r) {
    const RingParams& rp = r.params();
    std::vector<int> apb(rp.k), b(rp.k);
    for (int i = 0; i < rp.k; ++i) {
        b[i] = r.at(i, 1);
        apb[i] = fp::add(r.at(i, 0), b[i], rp.p);
    }
    std::vector<int> out = phi(apb, rp.p);
    std::vector<int> tail = phi(b, rp.p);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

int lee_weight(const RingElement& r) {
    int w = 0;
    for (int a : phi_L(r))
        if (a != 0) ++w;
    return w;
}

int lee_weight(const RingPoly& f, int n) {
    RingPoly g = rp_mod_xn1(f, n);
    int w = 0;
    for (const auto& c : g.coeffs()) w += lee_weight(c);
    return w;
}

std::vector<std::vector<int>> phi_L_matrix(const RingParams& rp) {
    int s = rp.slots();
    std::vector<std::vector<int>> M(s, std::vector<int>(s, 0));
    for (int j = 0; j < s; ++j) {
        RingElement e = RingElement::monomial(rp, j % rp.k, j / rp.k);
        std::vector<int> col = phi_L(e);
        for (int i = 0; i < s; ++i) M[i][j] = col[i];
    }
    return M;
}

GrayImage gray_image(const SpanBasis& C, std::uint64_t budget) {
    const RingParams& rp = C.params();
    const int s = rp.slots(), n = C.n();
    GrayImage img;
    img.length = s * n;
    RrefBasis span(rp.p, img.length);
    for (const auto& row : C.basis().rows()) {
        std::vector<int> im(img.length, 0);
        for (int c = 0; c < n; ++c) {
            std::vector<int> e(row.begin() + c * s, row.begin() + (c + 1) * s);
            std::vector<int> g = phi_L(RingElement(rp, std::move(e)));
            for (int j = 0; j < s; ++j) im[c * s + j] = g[j];
        }
        span.insert(std::move(im));
    }
    img.dimension = span.rank();
    if (img.dimension != C.dimension())
        throw std::logic_error("gray_image: dimension not preserved");
    img.basis = span.rows();
    if (img.dimension > 0) {
        std::uint64_t count = 1;
        bool feasible = true;
        for (int i = 0; i < img.dimension && feasible; ++i) {
            if (count > budget / rp.p) feasible = false;
            count *= rp.p;
        }
        if (feasible) {
            auto weigh = [](const std::vector<int>& v) {
                int w = 0;
                for (int a : v)
                    if (a != 0) ++w;
                return w;
            };
            img.d = min_weight_enumerate(img.basis, rp.p, weigh).first;
        }
    }
    return img;
}

}  // namespace ccr
