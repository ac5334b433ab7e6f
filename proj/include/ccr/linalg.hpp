#ifndef CCR_LINALG_HPP
#define CCR_LINALG_HPP

#include <optional>
#include <vector>

#include "ccr/fp.hpp"

namespace ccr {

// Row space over F_p kept in reduced row echelon form. Rows are inserted one
// at a time; each insert reduces against the current rows and, when a new
// pivot appears, back-substitutes so the basis stays fully reduced.
class RrefBasis {
   public:
    RrefBasis(int p, int ncols) : p_(p), ncols_(ncols) {}

    int p() const { return p_; }
    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // residual of v against the row space (zero iff v is in the span)
    std::vector<int> reduce(std::vector<int> v) const;
    bool contains(const std::vector<int>& v) const;
    // insert v; returns true if the rank grew
    bool insert(std::vector<int> v);

    bool operator==(const RrefBasis&) const = default;

   private:
    int p_;
    int ncols_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> pivots_;
};

// Solve A x = b over F_p (A is m x n, row-major). Returns one solution or
// nullopt if the system is inconsistent.
std::optional<std::vector<int>> solve_linear(const std::vector<std::vector<int>>& A,
                                             const std::vector<int>& b, int p);

// Basis of the right nullspace of A (m x n, row-major) over F_p.
std::vector<std::vector<int>> nullspace(const std::vector<std::vector<int>>& A, int n, int p);

}  // namespace ccr

#endif
