#include "ccr/parse.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ccr {

namespace {

constexpr long long kMaxExponent = 1 << 20;

class ExprParser {
   public:
    ExprParser(const std::string& src, const RingParams& rp, int n) : src_(src), rp_(rp), n_(n) {}

    RingPoly parse() {
        RingPoly r = expr();
        skip_ws();
        if (pos_ < src_.size()) throw ParseError("unexpected character", pos_);
        return r;
    }

   private:
    const std::string& src_;
    RingParams rp_;
    int n_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        char c = src_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'u' || c == 'v' || c == 'x' || c == '(';
    }

    RingPoly expr() {
        skip_ws();
        bool neg = false;
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
            neg = src_[pos_] == '-';
            ++pos_;
        }
        RingPoly r = term();
        if (neg) r = rp_neg(r);
        for (;;) {
            skip_ws();
            if (pos_ >= src_.size() || (src_[pos_] != '+' && src_[pos_] != '-')) break;
            bool sub = src_[pos_] == '-';
            ++pos_;
            RingPoly t = term();
            r = sub ? rp_sub(r, t) : rp_add(r, t);
        }
        return rp_mod_xn1(r, n_);
    }

    RingPoly term() {
        RingPoly r = factor();
        for (;;) {
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '*') {
                ++pos_;
                r = rp_mod_xn1(rp_mul(r, factor()), n_);
            } else if (at_atom_start()) {
                r = rp_mod_xn1(rp_mul(r, factor()), n_);
            } else {
                break;
            }
        }
        return r;
    }

    RingPoly factor() {
        RingPoly base = atom();
        skip_ws();
        while (pos_ < src_.size() && src_[pos_] == '^') {
            ++pos_;
            long long e = number();
            RingPoly r = RingPoly::one(rp_);
            RingPoly b = base;
            while (e > 0) {
                if (e & 1) r = rp_mod_xn1(rp_mul(r, b), n_);
                b = rp_mod_xn1(rp_mul(b, b), n_);
                e >>= 1;
            }
            base = r;
            skip_ws();
        }
        return base;
    }

    long long number() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("expected a number", pos_);
        long long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > kMaxExponent) throw ParseError("number too large", pos_);
            ++pos_;
        }
        return v;
    }

    RingPoly atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '-') {
            ++pos_;
            return rp_neg(factor());
        }
        if (c == '(') {
            ++pos_;
            RingPoly r = expr();
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return r;
        }
        if (c == 'u') {
            ++pos_;
            return RingPoly(rp_, {RingElement::monomial(rp_, std::min(1, rp_.k - 1), 0, rp_.k > 1 ? 1 : 0)});
        }
        if (c == 'v') {
            ++pos_;
            return RingPoly(rp_, {RingElement::monomial(rp_, 0, 1)});
        }
        if (c == 'x') {
            ++pos_;
            return rp_mod_xn1(RingPoly::lift(rp_, FpPoly::monomial(rp_.p, 1)), n_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = number();
            return RingPoly(rp_, {RingElement::scalar(rp_, static_cast<int>(v % rp_.p))});
        }
        throw ParseError("unexpected character", pos_);
    }
};

}  // namespace

RingPoly parse_poly_expr(const std::string& src, const RingParams& rp, int n) {
    return ExprParser(src, rp, n).parse();
}

RingElement parse_ring_expr(const std::string& src, const RingParams& rp) {
    if (src.find('x') != std::string::npos)
        throw ParseError("x is not allowed in a ring-element literal", src.find('x'));
    RingPoly r = parse_poly_expr(src, rp, 1);
    return r.is_zero() ? RingElement::zero(rp) : r.coeffs()[0];
}

CodeDescription parse_code_description(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty code description", 0);
    int p = 0, k = 0, n = 0;
    if (std::sscanf(lines[0].c_str(), "ring p=%d k=%d n=%d", &p, &k, &n) != 3)
        throw ParseError("expected header 'ring p=<p> k=<k> n=<n>'", 0);
    if (n < 1) throw ParseError("n must be >= 1", 0);
    CodeDescription d{RingParams(p, k), n, {}, {}};
    for (size_t i = 1; i < lines.size(); ++i) {
        d.gen_exprs.push_back(lines[i]);
        d.gens.push_back(parse_poly_expr(lines[i], d.rp, n));
    }
    return d;
}

CodeDescription load_code_description(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_code_description(ss.str());
}

}  // namespace ccr
