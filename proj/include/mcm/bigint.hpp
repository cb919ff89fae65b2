#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mcm {

// Exact arithmetic everywhere: intermediate entries in normal-form
// computations can grow far past 64 bits, and silent overflow would
// invalidate every downstream invariant.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_abs(const Int& a) { return a >= 0 ? a : Int(-a); }

// Floor division (gmp's fdiv), so that a - q*b lies in [0, |b|).
inline Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Exact square root of a perfect square (asserted by the callers).
inline Int int_sqrt_exact(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int vec_sum(const IntVec& v) {
    Int s = 0;
    for (const auto& x : v) s += x;
    return s;
}

// Componentwise order helpers for vectors in N^k.
inline bool vec_leq(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool vec_lt(const IntVec& a, const IntVec& b) {
    return vec_leq(a, b) && a != b;
}

inline bool vec_is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Canonical ordering used for all emitted sets of lattice vectors:
// ascending total (coordinate sum), ties broken lexicographically.
inline bool graded_lex_less(const IntVec& a, const IntVec& b) {
    Int sa = vec_sum(a), sb = vec_sum(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

inline std::string vec_to_string(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    s += ")";
    return s;
}

}  // namespace mcm
