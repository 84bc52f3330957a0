#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eigenone/rational.hpp"

namespace eigenone {

struct BoundResult {
    bool passes = false;
    std::vector<std::pair<std::string, Int>> data;
    std::string inequality;  // human-readable rendering of the comparison
};

inline Int int_pow(Int base, long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Exceptional-group bound for q = 3^f: squared comparison
/// q^12 > (2f - 1)^2 q^7 of dim(V) = q^6 > (|alpha| - 1) q^(7/2) with the
/// worst case |alpha| = 2f and centralizer order at most q^7.
inline BoundResult example4_g2_bound(long f) {
    if (f < 1) throw std::invalid_argument("f must be a positive integer");
    Int q = int_pow(3, f);
    Int lhs = int_pow(q, 12);
    Int alpha = 2 * (Int)f;
    Int rhs = (alpha - 1) * (alpha - 1) * int_pow(q, 7);
    Int order = int_pow(q, 6) * (q * q - 1) * (int_pow(q, 6) - 1);
    BoundResult r;
    r.passes = lhs > rhs;
    r.inequality = "q^12 > (2f-1)^2 q^7";
    r.data = {{"f", f},
              {"q", q},
              {"dim_V", int_pow(q, 6)},
              {"group_order", order},
              {"alpha_max", alpha},
              {"lhs", lhs},
              {"rhs", rhs}};
    return r;
}

/// Unitary-family degree bounds over q = 2^f.
/// Case a (d >= 5, q > 4): chi1 > q^2 q^(d(d+1)/4), squared as
///   chi1^2 > q^4 q^(d(d+1)/2); proof-level sufficient comparison
///   chi1^2 > (2f(q+1) - 1)^2 q^(d(d+1)/2).
/// Case b (q > 16): chi1 > q^27; proof-level chi1^2 > (6f - 1)^2 q^52.
inline BoundResult prop5_bounds(char which, long d, long f, const Int& chi1) {
    if (f < 1) throw std::invalid_argument("f must be a positive integer");
    Int q = int_pow(2, f);
    BoundResult r;
    if (which == 'a') {
        if (d < 5) throw std::invalid_argument("case a requires d >= 5");
        if (!(q > 4)) throw std::invalid_argument("case a requires q > 4");
        Int lhs = chi1 * chi1;
        Int stated_rhs = int_pow(q, 4) * int_pow(q, d * (d + 1) / 2);
        Int alpha = 2 * (Int)f * (q + 1);
        Int proof_rhs = (alpha - 1) * (alpha - 1) * int_pow(q, d * (d + 1) / 2);
        r.passes = lhs > stated_rhs;
        r.inequality = "chi1^2 > q^4 q^(d(d+1)/2)";
        r.data = {{"d", d},         {"f", f},
                  {"q", q},         {"chi1", chi1},
                  {"lhs", lhs},     {"stated_rhs", stated_rhs},
                  {"alpha_max", alpha}, {"proof_rhs", proof_rhs},
                  {"proof_passes", lhs > proof_rhs ? 1 : 0}};
    } else if (which == 'b') {
        if (!(q > 16)) throw std::invalid_argument("case b requires q > 16");
        Int stated_rhs = int_pow(q, 27);
        Int alpha = 6 * (Int)f;
        Int proof_rhs = (alpha - 1) * (alpha - 1) * int_pow(q, 52);
        r.passes = chi1 > stated_rhs;
        r.inequality = "chi1 > q q^26";
        r.data = {{"f", f},
                  {"q", q},
                  {"chi1", chi1},
                  {"stated_rhs", stated_rhs},
                  {"alpha_max", alpha},
                  {"proof_rhs", proof_rhs},
                  {"proof_passes", chi1 * chi1 > proof_rhs ? 1 : 0}};
    } else {
        throw std::invalid_argument("case must be 'a' or 'b'");
    }
    return r;
}

}  // namespace eigenone
