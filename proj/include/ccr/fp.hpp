#ifndef CCR_FP_HPP
#define CCR_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace ccr {

// Arithmetic on canonical residues in [0, p). Inputs are assumed reduced.
namespace fp {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int add(int a, int b, int p) {
    int s = a + b;
    return s >= p ? s - p : s;
}

inline int sub(int a, int b, int p) {
    int s = a - b;
    return s < 0 ? s + p : s;
}

inline int neg(int a, int p) { return a == 0 ? 0 : p - a; }

inline int mul(int a, int b, int p) {
    return static_cast<int>(static_cast<long long>(a) * b % p);
}

inline int pow(int a, long long e, int p) {
    int r = 1 % p;
    while (e > 0) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline int inv(int a, int p) {
    if (a % p == 0) throw std::domain_error("fp::inv: zero is not invertible");
    return pow(a, p - 2, p);
}

}  // namespace fp
}  // namespace ccr

#endif
