#ifndef CCR_PARSE_HPP
#define CCR_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ccr/poly.hpp"

namespace ccr {

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    size_t pos() const { return pos_; }

   private:
    size_t pos_;
};

// Evaluates an expression over the tokens 0-9, u, v, x, + - * ^ and
// parentheses in R[x]/<x^n - 1>. Juxtaposition multiplies.
RingPoly parse_poly_expr(const std::string& src, const RingParams& rp, int n);

// ring-element literal (no x allowed)
RingElement parse_ring_expr(const std::string& src, const RingParams& rp);

// A code description file: a `ring p=<p> k=<k> n=<n>` header, then one
// generator expression per line. Blank lines and lines starting with '#'
// are skipped.
struct CodeDescription {
    RingParams rp;
    int n = 1;
    std::vector<std::string> gen_exprs;
    std::vector<RingPoly> gens;
};

CodeDescription parse_code_description(const std::string& text);
CodeDescription load_code_description(const std::string& path);

}  // namespace ccr

#endif
