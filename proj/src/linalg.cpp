#include "ccr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccr {

std::vector<int> RrefBasis::reduce(std::vector<int> v) const {
    if (static_cast<int>(v.size()) != ncols_) throw std::invalid_argument("RrefBasis: bad vector length");
    for (size_t r = 0; r < rows_.size(); ++r) {
        int c = v[pivots_[r]];
        if (c == 0) continue;
        for (int j = pivots_[r]; j < ncols_; ++j)
            v[j] = fp::sub(v[j], fp::mul(c, rows_[r][j], p_), p_);
    }
    return v;
}

bool RrefBasis::contains(const std::vector<int>& v) const {
    std::vector<int> r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](int a) { return a == 0; });
}

bool RrefBasis::insert(std::vector<int> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < ncols_; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    int inv = fp::inv(v[piv], p_);
    for (int j = piv; j < ncols_; ++j) v[j] = fp::mul(v[j], inv, p_);
    // clear the new pivot column from existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        int c = rows_[r][piv];
        if (c == 0) continue;
        for (int j = piv; j < ncols_; ++j)
            rows_[r][j] = fp::sub(rows_[r][j], fp::mul(c, v[j], p_), p_);
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

std::optional<std::vector<int>> solve_linear(const std::vector<std::vector<int>>& A,
                                             const std::vector<int>& b, int p) {
    size_t m = A.size();
    size_t n = m == 0 ? 0 : A[0].size();
    if (b.size() != m) throw std::invalid_argument("solve_linear: size mismatch");
    // augmented elimination
    std::vector<std::vector<int>> M(m);
    for (size_t i = 0; i < m; ++i) {
        M[i] = A[i];
        M[i].push_back(b[i]);
    }
    std::vector<int> pivcol;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t sel = row;
        while (sel < m && M[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(M[row], M[sel]);
        int inv = fp::inv(M[row][col], p);
        for (size_t j = col; j <= n; ++j) M[row][j] = fp::mul(M[row][j], inv, p);
        for (size_t i = 0; i < m; ++i) {
            if (i == row || M[i][col] == 0) continue;
            int c = M[i][col];
            for (size_t j = col; j <= n; ++j)
                M[i][j] = fp::sub(M[i][j], fp::mul(c, M[row][j], p), p);
        }
        pivcol.push_back(static_cast<int>(col));
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (M[i][n] != 0) return std::nullopt;
    std::vector<int> x(n, 0);
    for (size_t r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = M[r][n];
    return x;
}

std::vector<std::vector<int>> nullspace(const std::vector<std::vector<int>>& A, int n, int p) {
    RrefBasis basis(p, n);
    for (const auto& row : A) basis.insert(row);
    std::vector<bool> is_pivot(n, false);
    for (int c : basis.pivots()) is_pivot[c] = true;
    std::vector<std::vector<int>> out;
    for (int freecol = 0; freecol < n; ++freecol) {
        if (is_pivot[freecol]) continue;
        std::vector<int> v(n, 0);
        v[freecol] = 1;
        for (int r = 0; r < basis.rank(); ++r)
            v[basis.pivots()[r]] = fp::neg(basis.rows()[r][freecol], p);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace ccr
